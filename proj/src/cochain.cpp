#include "reslie/cochain.hpp"

#include <bit>
#include <stdexcept>

namespace reslie {

std::string to_string(ComplexKind kind) { return kind == ComplexKind::star2 ? "star2" : "reslieder"; }

// ---------------------------------------------------------------------------
// Subsets and shapes

namespace {

constexpr std::size_t kMaxAlgebraDim = 16;

void enumerate_subsets(std::size_t n, std::size_t k, std::size_t start, std::uint32_t mask,
                       std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(mask);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) enumerate_subsets(n, k - 1, i + 1, mask | (1U << i), out);
}

}  // namespace

SubsetIndex::SubsetIndex(std::size_t n) : n_(n), by_size_(n + 1), rank_(std::size_t{1} << n, 0) {
  if (n > kMaxAlgebraDim) throw std::invalid_argument("algebra dimension too large for cochain enumeration");
  for (std::size_t k = 0; k <= n; ++k) {
    enumerate_subsets(n, k, 0, 0, by_size_[k]);
    for (std::size_t r = 0; r < by_size_[k].size(); ++r) rank_[by_size_[k][r]] = static_cast<std::uint32_t>(r);
  }
}

std::size_t SubsetIndex::count(std::size_t k) const { return k > n_ ? 0 : by_size_[k].size(); }

const std::vector<std::uint32_t>& SubsetIndex::subsets(std::size_t k) const {
  static const std::vector<std::uint32_t> empty;
  return k > n_ ? empty : by_size_[k];
}

std::vector<std::size_t> mask_to_tuple(std::uint32_t mask) {
  std::vector<std::size_t> t;
  for (; mask != 0; mask &= mask - 1) t.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return t;
}

std::uint32_t tuple_to_mask(const std::vector<std::size_t>& tuple) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0 && tuple[i] <= tuple[i - 1]) throw std::invalid_argument("index tuple must be strictly increasing");
    if (tuple[i] >= 32) throw std::invalid_argument("index out of range");
    mask |= 1U << tuple[i];
  }
  return mask;
}

CochainShape::CochainShape(std::shared_ptr<const SubsetIndex> subsets, std::size_t module_dim, std::size_t degree)
    : subsets_(std::move(subsets)), m_(module_dim), degree_(degree) {}

std::size_t CochainShape::phi_count() const { return m_ * subsets_->count(degree_); }

std::size_t CochainShape::omega_count() const {
  if (degree_ < 2) return 0;
  return m_ * algebra_dim() * subsets_->count(degree_ - 2);
}

std::size_t CochainShape::omega_index(std::size_t a, std::uint32_t mask, std::size_t m) const {
  return phi_count() + (a * subsets_->count(degree_ - 2) + subsets_->rank(mask)) * m_ + m;
}

SparseVec to_sparse(std::span<const Scalar> v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) s.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Context

namespace {

void require_valid(const ValidationReport& rep, const char* what) {
  if (!rep.valid()) throw std::invalid_argument(std::string(what) + ": axiom '" + rep.failures.front().axiom + "' fails");
}

}  // namespace

ComplexContext::ComplexContext(ResLieDerPair pair, RestrictedRepresentation rep, ComplexKind kind)
    : pair_(std::move(pair)), rep_(std::move(rep)), kind_(kind) {
  require_valid(validate_algebra(pair_.algebra, 0), "invalid algebra");
  require_valid(validate_pair(pair_), "invalid pair");
  require_valid(validate_representation(pair_, rep_), "invalid representation");
  const std::size_t n = pair_.dim();
  subsets_ = std::make_shared<const SubsetIndex>(n);
  bracket_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) bracket_[a * n + b] = to_sparse(pair_.algebra.bracket(a, b));
  for (std::size_t a = 0; a < n; ++a) dcol_.push_back(to_sparse(pair_.derivation.column(a)));
}

ComplexContext ComplexContext::with_kind(ComplexKind kind) const {
  ComplexContext c = *this;
  c.kind_ = kind;
  return c;
}

SparseVec ComplexContext::bracket(const SparseVec& x, const SparseVec& y) const {
  const Field& f = field();
  Vec acc(pair_.dim(), 0);
  for (auto [a, xa] : x)
    for (auto [b, yb] : y)
      for (auto [c, v] : bracket(a, b)) acc[c] ^= f.mul(f.mul(xa, yb), v);
  return to_sparse(acc);
}

SparseVec ComplexContext::square(const SparseVec& x) const {
  Vec dense(pair_.dim(), 0);
  for (auto [a, xa] : x) dense[a] = xa;
  return to_sparse(pair_.algebra.two_map_eval(dense));
}

SparseVec ComplexContext::derive(const SparseVec& x) const {
  const Field& f = field();
  Vec acc(pair_.dim(), 0);
  for (auto [a, xa] : x)
    for (auto [c, v] : dcol_[a]) acc[c] ^= f.mul(xa, v);
  return to_sparse(acc);
}

// ---------------------------------------------------------------------------
// Evaluators.  The differential formulas are written once against an
// evaluator E that supplies the values of the input cochain on basis
// arguments.  ConcreteEval reads them from a coordinate vector; FormEval
// returns them as linear forms in the input coordinates, which is how the
// matrices are assembled.

namespace {

class ConcreteEval {
 public:
  using Value = Vec;

  ConcreteEval(const ComplexContext& ctx, const Cochain& c) : ctx_(ctx), shape_(ctx.shape(c.degree)), c_(c) {
    if (c.coords.size() != shape_.size()) throw std::invalid_argument("cochain has the wrong number of coordinates");
  }

  const ComplexContext& ctx() const { return ctx_; }
  std::size_t degree() const { return shape_.degree(); }
  Value zero() const { return Vec(shape_.module_dim(), 0); }
  Value phi_basis(std::uint32_t mask) const {
    const std::size_t i = shape_.phi_index(mask, 0);
    return Vec(c_.coords.begin() + i, c_.coords.begin() + i + shape_.module_dim());
  }
  Value omega_basis(std::size_t a, std::uint32_t mask) const {
    const std::size_t i = shape_.omega_index(a, mask, 0);
    return Vec(c_.coords.begin() + i, c_.coords.begin() + i + shape_.module_dim());
  }
  void add_scaled(Value& acc, Scalar s, const Value& v) const { axpy(ctx_.field(), acc, s, v); }
  Value act(const Matrix& op, const Value& v) const { return op.apply(v); }

 private:
  const ComplexContext& ctx_;
  CochainShape shape_;
  const Cochain& c_;
};

struct FormTerm {
  std::uint32_t m;    // V-coordinate of the value
  std::uint32_t col;  // input coordinate
  Scalar coef;
};

class FormEval {
 public:
  using Value = std::vector<FormTerm>;

  FormEval(const ComplexContext& ctx, std::size_t degree) : ctx_(ctx), shape_(ctx.shape(degree)) {}

  const ComplexContext& ctx() const { return ctx_; }
  std::size_t degree() const { return shape_.degree(); }
  Value zero() const { return {}; }
  Value phi_basis(std::uint32_t mask) const { return block(shape_.phi_index(mask, 0)); }
  Value omega_basis(std::size_t a, std::uint32_t mask) const { return block(shape_.omega_index(a, mask, 0)); }
  void add_scaled(Value& acc, Scalar s, const Value& v) const {
    if (s == 0) return;
    for (const FormTerm& t : v) acc.push_back({t.m, t.col, ctx_.field().mul(s, t.coef)});
  }
  Value act(const Matrix& op, const Value& v) const {
    Value out;
    for (const FormTerm& t : v)
      for (std::size_t r = 0; r < op.rows(); ++r) {
        const Scalar e = op(r, t.m);
        if (e != 0) out.push_back({static_cast<std::uint32_t>(r), t.col, ctx_.field().mul(e, t.coef)});
      }
    return out;
  }

 private:
  Value block(std::size_t first) const {
    Value v;
    for (std::size_t m = 0; m < shape_.module_dim(); ++m)
      v.push_back({static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(first + m), 1});
    return v;
  }

  const ComplexContext& ctx_;
  CochainShape shape_;
};

// phi(args) with every argument expanded in the basis.  In characteristic 2
// an alternating map is symmetric, so a product of basis arguments only
// depends on the set of indices; a repeated index gives 0.
template <class E>
void phi_expand(const E& e, const std::vector<const SparseVec*>& args, std::size_t pos, std::uint32_t mask, Scalar coef,
                typename E::Value& acc) {
  if (pos == args.size()) {
    e.add_scaled(acc, coef, e.phi_basis(mask));
    return;
  }
  for (auto [i, c] : *args[pos]) {
    if (mask & (1U << i)) continue;
    phi_expand(e, args, pos + 1, mask | (1U << i), e.ctx().field().mul(coef, c), acc);
  }
}

template <class E>
typename E::Value phi_eval(const E& e, const std::vector<const SparseVec*>& args) {
  if (args.size() != e.degree()) throw std::invalid_argument("phi: wrong number of arguments");
  typename E::Value acc = e.zero();
  phi_expand(e, args, 0, 0, 1, acc);
  return acc;
}

template <class E>
void omega_z_expand(const E& e, std::size_t a, const std::vector<const SparseVec*>& zs, std::size_t pos,
                    std::uint32_t mask, Scalar coef, typename E::Value& acc) {
  if (pos == zs.size()) {
    e.add_scaled(acc, coef, e.omega_basis(a, mask));
    return;
  }
  for (auto [i, c] : *zs[pos]) {
    if (mask & (1U << i)) continue;
    omega_z_expand(e, a, zs, pos + 1, mask | (1U << i), e.ctx().field().mul(coef, c), acc);
  }
}

template <class E>
typename E::Value omega_eval(const E& e, const SparseVec& x, const std::vector<const SparseVec*>& zs) {
  if (e.degree() < 2 || zs.size() + 2 != e.degree()) throw std::invalid_argument("omega: wrong number of arguments");
  const Field& f = e.ctx().field();
  typename E::Value acc = e.zero();
  for (auto [a, xa] : x) {
    typename E::Value part = e.zero();
    omega_z_expand(e, a, zs, 0, 0, 1, part);
    e.add_scaled(acc, f.square(xa), part);
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const SparseVec ea{{x[i].first, 1}};
      const SparseVec eb{{x[j].first, 1}};
      std::vector<const SparseVec*> args{&ea, &eb};
      args.insert(args.end(), zs.begin(), zs.end());
      e.add_scaled(acc, f.mul(x[i].second, x[j].second), phi_eval(e, args));
    }
  return acc;
}

// rho(z) v = sum_a z_a rho(e_a) v
template <class E>
typename E::Value act_rho(const E& e, const SparseVec& z, const typename E::Value& v) {
  typename E::Value acc = e.zero();
  for (auto [a, za] : z) e.add_scaled(acc, za, e.act(e.ctx().rep().rho[a], v));
  return acc;
}

template <class T>
std::vector<T> without(const std::vector<T>& v, std::size_t i, std::size_t j = SIZE_MAX) {
  std::vector<T> out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (k != i && k != j) out.push_back(v[k]);
  return out;
}

template <class T>
std::vector<T> prepend(std::vector<T> tail, std::initializer_list<T> head) {
  tail.insert(tail.begin(), head);
  return tail;
}

// d phi on z_1..z_{n+1}, where e has degree n.
template <class E>
typename E::Value d_phi_formula(const E& e, const std::vector<const SparseVec*>& z) {
  const ComplexContext& ctx = e.ctx();
  typename E::Value acc = e.zero();
  for (std::size_t i = 0; i < z.size(); ++i) e.add_scaled(acc, 1, act_rho(e, *z[i], phi_eval(e, without(z, i))));
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const SparseVec br = ctx.bracket(*z[i], *z[j]);
      e.add_scaled(acc, 1, phi_eval(e, prepend(without(z, i, j), {&br})));
    }
  return acc;
}

// d omega on (x; z_1..z_{n-1}), where e has degree n >= 1.  At n = 1 this is
// omega_{phi_1}(x) = phi_1(x^[2]) + rho(x) phi_1(x).
template <class E>
typename E::Value d_omega_formula(const E& e, const SparseVec& x, const std::vector<const SparseVec*>& z) {
  const ComplexContext& ctx = e.ctx();
  typename E::Value acc = e.zero();
  e.add_scaled(acc, 1, act_rho(e, x, phi_eval(e, prepend(z, {&x}))));
  const SparseVec sq = ctx.square(x);
  e.add_scaled(acc, 1, phi_eval(e, prepend(z, {&sq})));
  for (std::size_t i = 0; i < z.size(); ++i) {
    const SparseVec br = ctx.bracket(x, *z[i]);
    e.add_scaled(acc, 1, phi_eval(e, prepend(without(z, i), {&br, &x})));
  }
  if (e.degree() >= 2) {
    for (std::size_t i = 0; i < z.size(); ++i) e.add_scaled(acc, 1, act_rho(e, *z[i], omega_eval(e, x, without(z, i))));
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = i + 1; j < z.size(); ++j) {
        const SparseVec br = ctx.bracket(*z[i], *z[j]);
        e.add_scaled(acc, 1, omega_eval(e, x, prepend(without(z, i, j), {&br})));
      }
  }
  return acc;
}

template <class E>
typename E::Value delta_phi_formula(const E& e, const std::vector<const SparseVec*>& z) {
  const ComplexContext& ctx = e.ctx();
  typename E::Value acc = e.act(ctx.rep().eta, phi_eval(e, z));
  for (std::size_t i = 0; i < z.size(); ++i) {
    const SparseVec dz = ctx.derive(*z[i]);
    std::vector<const SparseVec*> args = z;
    args[i] = &dz;
    e.add_scaled(acc, 1, phi_eval(e, args));
  }
  return acc;
}

template <class E>
typename E::Value delta_omega_formula(const E& e, const SparseVec& x, const std::vector<const SparseVec*>& z) {
  const ComplexContext& ctx = e.ctx();
  typename E::Value acc = e.act(ctx.rep().eta, omega_eval(e, x, z));
  for (std::size_t i = 0; i < z.size(); ++i) {
    const SparseVec dz = ctx.derive(*z[i]);
    std::vector<const SparseVec*> args = z;
    args[i] = &dz;
    e.add_scaled(acc, 1, omega_eval(e, x, args));
  }
  const SparseVec dx = ctx.derive(x);
  e.add_scaled(acc, 1, phi_eval(e, prepend(z, {&x, &dx})));
  return acc;
}

std::vector<SparseVec> basis_elements(std::size_t n) {
  std::vector<SparseVec> b;
  for (std::size_t i = 0; i < n; ++i) b.push_back({{static_cast<std::uint32_t>(i), 1}});
  return b;
}

std::vector<const SparseVec*> basis_args(const std::vector<SparseVec>& basis, std::uint32_t mask) {
  std::vector<const SparseVec*> out;
  for (std::size_t i : mask_to_tuple(mask)) out.push_back(&basis[i]);
  return out;
}

void scatter(Matrix& out, std::size_t row_base, const FormEval::Value& v) {
  const Field& f = out.field();
  for (const FormTerm& t : v) out(row_base + t.m, t.col) = f.add(out(row_base + t.m, t.col), t.coef);
}

// Builds the matrix of an operator C_{*2}^n -> C_{*2}^{out_degree} whose phi
// and omega outputs are given by the two formula callbacks.
template <class PhiF, class OmegaF>
Matrix assemble(const ComplexContext& ctx, std::size_t n, std::size_t out_degree, PhiF phi_f, OmegaF omega_f) {
  const FormEval e(ctx, n);
  const CochainShape in = ctx.shape(n);
  const CochainShape out = ctx.shape(out_degree);
  const std::vector<SparseVec> basis = basis_elements(ctx.algebra_dim());
  Matrix m(ctx.field(), out.size(), in.size());
  for (std::uint32_t mask : out.subsets().subsets(out_degree))
    scatter(m, out.phi_index(mask, 0), phi_f(e, basis_args(basis, mask)));
  if (out_degree >= 2)
    for (std::size_t a = 0; a < ctx.algebra_dim(); ++a)
      for (std::uint32_t mask : out.subsets().subsets(out_degree - 2))
        scatter(m, out.omega_index(a, mask, 0), omega_f(e, basis[a], basis_args(basis, mask)));
  return m;
}

std::vector<SparseVec> sparse_all(const std::vector<Vec>& v) {
  std::vector<SparseVec> out;
  for (const Vec& x : v) out.push_back(to_sparse(x));
  return out;
}

std::vector<const SparseVec*> pointers(const std::vector<SparseVec>& v) {
  std::vector<const SparseVec*> out;
  for (const SparseVec& x : v) out.push_back(&x);
  return out;
}

void check_args(const ComplexContext& ctx, const std::vector<Vec>& args) {
  for (const Vec& a : args)
    if (a.size() != ctx.algebra_dim()) throw std::invalid_argument("argument has the wrong dimension");
}

}  // namespace

// ---------------------------------------------------------------------------
// Cochain access

Cochain zero_cochain(const ComplexContext& ctx, std::size_t degree) {
  return {degree, Vec(ctx.shape(degree).size(), 0)};
}

Scalar phi_coord(const ComplexContext& ctx, const Cochain& c, const std::vector<std::size_t>& tuple, std::size_t m) {
  if (tuple.size() != c.degree) throw std::invalid_argument("phi: wrong tuple length");
  return c.coords.at(ctx.shape(c.degree).phi_index(tuple_to_mask(tuple), m));
}

Scalar omega_coord(const ComplexContext& ctx, const Cochain& c, std::size_t a, const std::vector<std::size_t>& tuple,
                   std::size_t m) {
  if (c.degree < 2 || tuple.size() + 2 != c.degree) throw std::invalid_argument("omega: wrong tuple length");
  return c.coords.at(ctx.shape(c.degree).omega_index(a, tuple_to_mask(tuple), m));
}

void set_phi(const ComplexContext& ctx, Cochain& c, const std::vector<std::size_t>& tuple, std::size_t m, Scalar s) {
  if (tuple.size() != c.degree) throw std::invalid_argument("phi: wrong tuple length");
  c.coords.at(ctx.shape(c.degree).phi_index(tuple_to_mask(tuple), m)) = s;
}

void set_omega(const ComplexContext& ctx, Cochain& c, std::size_t a, const std::vector<std::size_t>& tuple,
               std::size_t m, Scalar s) {
  if (c.degree < 2 || tuple.size() + 2 != c.degree) throw std::invalid_argument("omega: wrong tuple length");
  c.coords.at(ctx.shape(c.degree).omega_index(a, tuple_to_mask(tuple), m)) = s;
}

Vec PairCochain::coords() const {
  Vec v = top.coords;
  v.insert(v.end(), low.coords.begin(), low.coords.end());
  return v;
}

PairCochain split_pair(const ComplexContext& ctx, std::size_t n, std::span<const Scalar> coords) {
  if (n == 0) throw std::invalid_argument("ResLD cochains start in degree 1");
  const std::size_t top = star2_dim(ctx, n);
  const std::size_t low = n >= 2 ? star2_dim(ctx, n - 1) : 0;
  if (coords.size() != top + low) throw std::invalid_argument("pair cochain has the wrong number of coordinates");
  PairCochain p;
  p.top = {n, Vec(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(top))};
  p.low = {n - 1, Vec(coords.begin() + static_cast<std::ptrdiff_t>(top), coords.end())};
  return p;
}

std::size_t star2_dim(const ComplexContext& ctx, std::size_t n) { return ctx.shape(n).size(); }

std::size_t space_dim(const ComplexContext& ctx, std::size_t n) {
  if (ctx.kind() == ComplexKind::star2) return star2_dim(ctx, n);
  if (n == 0) return 0;
  if (n == 1) return star2_dim(ctx, 1);
  return star2_dim(ctx, n) + star2_dim(ctx, n - 1);
}

Vec eval_phi(const ComplexContext& ctx, const Cochain& c, const std::vector<Vec>& args) {
  check_args(ctx, args);
  const ConcreteEval e(ctx, c);
  const std::vector<SparseVec> s = sparse_all(args);
  return phi_eval(e, pointers(s));
}

Vec eval_omega(const ComplexContext& ctx, const Cochain& c, const Vec& x, const std::vector<Vec>& zs) {
  check_args(ctx, zs);
  check_args(ctx, {x});
  const ConcreteEval e(ctx, c);
  const std::vector<SparseVec> s = sparse_all(zs);
  return omega_eval(e, to_sparse(x), pointers(s));
}

Vec apply_d_phi(const ComplexContext& ctx, const Cochain& c, const std::vector<Vec>& zs) {
  if (zs.size() != c.degree + 1) throw std::invalid_argument("d phi: wrong number of arguments");
  check_args(ctx, zs);
  const ConcreteEval e(ctx, c);
  const std::vector<SparseVec> s = sparse_all(zs);
  return d_phi_formula(e, pointers(s));
}

Vec apply_d_omega(const ComplexContext& ctx, const Cochain& c, const Vec& x, const std::vector<Vec>& zs) {
  if (c.degree < 1 || zs.size() + 1 != c.degree) throw std::invalid_argument("d omega: wrong number of arguments");
  check_args(ctx, zs);
  check_args(ctx, {x});
  const ConcreteEval e(ctx, c);
  const std::vector<SparseVec> s = sparse_all(zs);
  return d_omega_formula(e, to_sparse(x), pointers(s));
}

Matrix diff_star2(const ComplexContext& ctx, std::size_t n) {
  return assemble(
      ctx, n, n + 1, [](const FormEval& e, const auto& z) { return d_phi_formula(e, z); },
      [](const FormEval& e, const SparseVec& x, const auto& z) { return d_omega_formula(e, x, z); });
}

Matrix delta_op(const ComplexContext& ctx, std::size_t n) {
  if (n == 0) throw std::invalid_argument("delta is defined from degree 1");
  return assemble(
      ctx, n, n, [](const FormEval& e, const auto& z) { return delta_phi_formula(e, z); },
      [](const FormEval& e, const SparseVec& x, const auto& z) { return delta_omega_formula(e, x, z); });
}

Matrix diff_reslieder(const ComplexContext& ctx, std::size_t n) {
  if (n == 0) throw std::invalid_argument("vartheta is defined from degree 1");
  const Matrix d_top = diff_star2(ctx, n);
  const Matrix delta = delta_op(ctx, n);
  if (n == 1) {
    Matrix m(ctx.field(), d_top.rows() + delta.rows(), d_top.cols());
    m.place(0, 0, d_top);
    m.place(d_top.rows(), 0, delta);
    return m;
  }
  const Matrix d_low = diff_star2(ctx, n - 1);
  Matrix m(ctx.field(), d_top.rows() + d_low.rows(), d_top.cols() + d_low.cols());
  m.place(0, 0, d_top);
  m.place(d_top.rows(), 0, delta);
  m.place(d_top.rows(), d_top.cols(), d_low);
  return m;
}

Matrix differential(const ComplexContext& ctx, std::size_t n) {
  return ctx.kind() == ComplexKind::star2 ? diff_star2(ctx, n) : diff_reslieder(ctx, n);
}

std::size_t min_degree(const ComplexContext& ctx) { return ctx.kind() == ComplexKind::star2 ? 0 : 1; }

CohomologyResult cohomology(const ComplexContext& ctx, std::size_t n) {
  if (n < min_degree(ctx)) throw std::invalid_argument("ResLD cohomology starts in degree 1");
  CohomologyResult r;
  r.degree = n;
  r.kind = ctx.kind();
  r.cochain_dim = space_dim(ctx, n);
  r.cocycles = nullspace(differential(ctx, n));
  r.coboundaries = n > min_degree(ctx) ? column_space(differential(ctx, n - 1))
                                       : SubspaceData::zero(ctx.field(), r.cochain_dim);
  r.cocycle_dim = r.cocycles.dim();
  r.coboundary_dim = r.coboundaries.dim();
  r.betti = quotient_dim(r.cocycles, r.coboundaries);
  return r;
}

bool is_cocycle(const ComplexContext& ctx, std::size_t n, std::span<const Scalar> coords) {
  if (coords.size() != space_dim(ctx, n)) throw std::invalid_argument("cochain has the wrong number of coordinates");
  return is_zero(differential(ctx, n).apply(coords));
}

std::optional<Vec> coboundary_witness(const ComplexContext& ctx, std::size_t n, std::span<const Scalar> coords) {
  if (coords.size() != space_dim(ctx, n)) throw std::invalid_argument("cochain has the wrong number of coordinates");
  if (n <= min_degree(ctx)) return is_zero(coords) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve_linear(differential(ctx, n - 1), coords);
}

}  // namespace reslie
