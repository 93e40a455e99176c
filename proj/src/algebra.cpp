#include "reslie/algebra.hpp"

#include <stdexcept>
#include <string>

namespace reslie {

RestrictedLieAlgebra::RestrictedLieAlgebra(Field field, std::size_t dim)
    : field_(std::move(field)), dim_(dim), bracket_(dim * dim, Vec(dim, 0)), square_(dim, Vec(dim, 0)) {}

void RestrictedLieAlgebra::check_vec(std::span<const Scalar> v) const {
  if (v.size() != dim_)
    throw std::invalid_argument("expected a vector of length " + std::to_string(dim_) + ", got " +
                                std::to_string(v.size()));
  for (Scalar s : v)
    if (!field_.contains(s)) throw std::invalid_argument("scalar " + std::to_string(s) + " outside the field");
}

void RestrictedLieAlgebra::set_bracket(std::size_t a, std::size_t b, Vec value) {
  check_vec(value);
  if (a >= dim_ || b >= dim_) throw std::out_of_range("bracket index out of range");
  bracket_[b * dim_ + a] = value;
  bracket_[a * dim_ + b] = std::move(value);
}

void RestrictedLieAlgebra::set_bracket_entry(std::size_t a, std::size_t b, Vec value) {
  check_vec(value);
  if (a >= dim_ || b >= dim_) throw std::out_of_range("bracket index out of range");
  bracket_[a * dim_ + b] = std::move(value);
}

void RestrictedLieAlgebra::set_square(std::size_t a, Vec value) {
  check_vec(value);
  if (a >= dim_) throw std::out_of_range("square index out of range");
  square_[a] = std::move(value);
}

Vec RestrictedLieAlgebra::bracket_eval(std::span<const Scalar> x, std::span<const Scalar> y) const {
  check_vec(x);
  check_vec(y);
  Vec out(dim_, 0);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < dim_; ++b)
      if (y[b] != 0) axpy(field_, out, field_.mul(x[a], y[b]), bracket(a, b));
  }
  return out;
}

Vec RestrictedLieAlgebra::two_map_eval(std::span<const Scalar> x) const {
  check_vec(x);
  Vec out(dim_, 0);
  for (std::size_t a = 0; a < dim_; ++a) {
    if (x[a] == 0) continue;
    axpy(field_, out, field_.square(x[a]), square_[a]);
    for (std::size_t b = a + 1; b < dim_; ++b)
      if (x[b] != 0) axpy(field_, out, field_.mul(x[a], x[b]), bracket(a, b));
  }
  return out;
}

Matrix RestrictedLieAlgebra::ad(std::size_t a) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b) m.set_column(b, bracket(a, b));
  return m;
}

Matrix RestrictedLieAlgebra::ad(std::span<const Scalar> x) const {
  check_vec(x);
  Matrix m(field_, dim_, dim_);
  for (std::size_t b = 0; b < dim_; ++b) {
    Vec col(dim_, 0);
    for (std::size_t a = 0; a < dim_; ++a)
      if (x[a] != 0) axpy(field_, col, x[a], bracket(a, b));
    m.set_column(b, col);
  }
  return m;
}

ResLieDerPair with_zero_derivation(RestrictedLieAlgebra algebra) {
  const std::size_t n = algebra.dim();
  Matrix d(algebra.field(), n, n);
  return {std::move(algebra), std::move(d)};
}

Matrix RestrictedRepresentation::action(std::span<const Scalar> x) const {
  if (x.size() != rho.size()) throw std::invalid_argument("action: dimension mismatch");
  Matrix m(eta.field(), dim, dim);
  for (std::size_t a = 0; a < rho.size(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t r = 0; r < dim; ++r) axpy(eta.field(), m.row(r), x[a], rho[a].row(r));
  }
  return m;
}

RestrictedRepresentation trivial_representation(const Field& field, std::size_t algebra_dim,
                                                std::size_t dim, const Matrix* eta) {
  RestrictedRepresentation r;
  r.dim = dim;
  r.rho.assign(algebra_dim, Matrix(field, dim, dim));
  if (eta) {
    if (eta->rows() != dim || eta->cols() != dim)
      throw std::invalid_argument("trivial_representation: eta has the wrong shape");
    r.eta = *eta;
  } else {
    r.eta = Matrix(field, dim, dim);
  }
  return r;
}

void ValidationReport::merge(const ValidationReport& other) {
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

// Sweeps stop recording past this many failures; a malformed tensor would
// otherwise fail on nearly every pair of elements.
constexpr std::size_t kMaxSweepFailures = 32;

void fail(ValidationReport& rep, std::string axiom, std::vector<std::size_t> witness, Vec lhs, Vec rhs) {
  if (rep.failures.size() >= kMaxSweepFailures && axiom.starts_with("sweep-")) return;
  rep.failures.push_back({std::move(axiom), std::move(witness), std::move(lhs), std::move(rhs)});
}

bool square_shape(const Matrix& m, std::size_t n) { return m.rows() == n && m.cols() == n; }

}  // namespace

ValidationReport validate_algebra(const RestrictedLieAlgebra& a, std::uint64_t exhaustive_limit) {
  ValidationReport rep;
  const std::size_t n = a.dim();
  const Vec zero(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero(a.bracket(i, i))) fail(rep, "alternating", {i, i}, a.bracket(i, i), zero);
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.bracket(i, j) != a.bracket(j, i)) fail(rep, "symmetric", {i, j}, a.bracket(i, j), a.bracket(j, i));
  }
  if (!rep.valid()) return rep;  // the remaining checks assume the tensor shape

  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = a.bracket_eval(basis[i], a.bracket(j, k));
        const Vec t = a.bracket_eval(basis[j], a.bracket(k, i));
        const Vec u = a.bracket_eval(basis[k], a.bracket(i, j));
        s = added(added(s, t), u);
        if (!is_zero(s)) fail(rep, "jacobi", {i, j, k}, s, zero);
      }

  for (std::size_t i = 0; i < n; ++i) {
    const Matrix adi = a.ad(i);
    const Matrix lhs = a.ad(a.square(i));
    const Matrix rhs = adi * adi;
    if (!(lhs == rhs)) fail(rep, "two-map", {i}, lhs.data(), rhs.data());
  }

  if (rep.valid() && sweep_feasible(a.field(), n, exhaustive_limit)) rep.merge(sweep_algebra(a, exhaustive_limit));
  return rep;
}

ValidationReport validate_pair(const ResLieDerPair& p) {
  ValidationReport rep;
  const RestrictedLieAlgebra& g = p.algebra;
  const std::size_t n = g.dim();
  if (!square_shape(p.derivation, n)) {
    fail(rep, "derivation-shape", {p.derivation.rows(), p.derivation.cols()}, {}, {});
    return rep;
  }
  std::vector<Vec> dcol(n);
  for (std::size_t a = 0; a < n; ++a) dcol[a] = p.derivation.column(a);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vec lhs = p.derivation.apply(g.bracket(a, b));
      const Vec rhs = added(g.bracket_eval(dcol[a], unit_vector(n, b)), g.bracket_eval(unit_vector(n, a), dcol[b]));
      if (lhs != rhs) fail(rep, "derivation", {a, b}, lhs, rhs);
    }
  for (std::size_t a = 0; a < n; ++a) {
    const Vec lhs = p.derivation.apply(g.square(a));
    const Vec rhs = g.bracket_eval(unit_vector(n, a), dcol[a]);
    if (lhs != rhs) fail(rep, "restricted-derivation", {a}, lhs, rhs);
  }
  return rep;
}

ValidationReport validate_representation(const ResLieDerPair& p, const RestrictedRepresentation& r) {
  ValidationReport rep;
  const std::size_t n = p.dim();
  bool shape_ok = r.rho.size() == n && square_shape(r.eta, r.dim);
  for (const Matrix& m : r.rho) shape_ok = shape_ok && square_shape(m, r.dim);
  if (!shape_ok) {
    fail(rep, "representation-shape", {r.rho.size(), r.dim}, {}, {});
    return rep;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Matrix lhs = r.action(p.algebra.bracket(a, b));
      const Matrix rhs = r.rho[a] * r.rho[b] + r.rho[b] * r.rho[a];
      if (!(lhs == rhs)) fail(rep, "rep-bracket", {a, b}, lhs.data(), rhs.data());
    }
  for (std::size_t a = 0; a < n; ++a) {
    const Matrix lhs = r.action(p.algebra.square(a));
    const Matrix rhs = r.rho[a] * r.rho[a];
    if (!(lhs == rhs)) fail(rep, "rep-square", {a}, lhs.data(), rhs.data());
  }
  for (std::size_t a = 0; a < n; ++a) {
    const Matrix lhs = r.eta * r.rho[a];
    const Matrix rhs = r.action(p.derivation.column(a)) + r.rho[a] * r.eta;
    if (!(lhs == rhs)) fail(rep, "rep-eta", {a}, lhs.data(), rhs.data());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Element sweeps.  An element is packed into an integer with k bits per
// coordinate (coordinate a in bits [k*a, k*a + k)), so that vector addition
// is XOR of the packed words and elements are enumerated by 0..|F|^N - 1.

namespace {

class Packing {
 public:
  Packing(const Field& f, std::size_t n) : f_(f), n_(n), k_(f.degree()) {}

  std::uint64_t count() const { return std::uint64_t{1} << (k_ * n_); }

  std::uint64_t pack(std::span<const Scalar> v) const {
    std::uint64_t p = 0;
    for (std::size_t a = 0; a < n_; ++a) p |= static_cast<std::uint64_t>(v[a]) << (k_ * a);
    return p;
  }
  Scalar coord(std::uint64_t p, std::size_t a) const {
    return static_cast<Scalar>((p >> (k_ * a)) & ((std::uint64_t{1} << k_) - 1));
  }
  Vec unpack(std::uint64_t p) const {
    Vec v(n_);
    for (std::size_t a = 0; a < n_; ++a) v[a] = coord(p, a);
    return v;
  }
  std::uint64_t scale(Scalar s, std::uint64_t p) const {
    if (s == 0) return 0;
    if (s == 1) return p;
    std::uint64_t out = 0;
    for (std::size_t a = 0; a < n_; ++a) out |= static_cast<std::uint64_t>(f_.mul(s, coord(p, a))) << (k_ * a);
    return out;
  }
  /// sum_b y_b * cols[b]
  std::uint64_t combine(std::uint64_t y, const std::uint64_t* cols) const {
    std::uint64_t out = 0;
    for (std::size_t b = 0; b < n_; ++b) out ^= scale(coord(y, b), cols[b]);
    return out;
  }

 private:
  const Field& f_;
  std::size_t n_;
  std::size_t k_;
};

// sq[x] = x^[2] and br[x * N + b] = [x, e_b] for every element x.
struct ElementTables {
  std::vector<std::uint64_t> sq;
  std::vector<std::uint64_t> br;
};

ElementTables element_tables(const RestrictedLieAlgebra& g, const Packing& pk) {
  const std::size_t n = g.dim();
  ElementTables t;
  t.sq.resize(pk.count());
  t.br.resize(pk.count() * n);
  std::vector<std::uint64_t> basis_br(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) basis_br[a * n + b] = pk.pack(g.bracket(a, b));
  for (std::uint64_t x = 0; x < pk.count(); ++x) {
    t.sq[x] = pk.pack(g.two_map_eval(pk.unpack(x)));
    for (std::size_t b = 0; b < n; ++b) {
      std::uint64_t v = 0;
      for (std::size_t a = 0; a < n; ++a) v ^= pk.scale(pk.coord(x, a), basis_br[a * n + b]);
      t.br[x * n + b] = v;
    }
  }
  return t;
}

}  // namespace

bool sweep_feasible(const Field& field, std::size_t dim, std::uint64_t limit) {
  const std::size_t bits = static_cast<std::size_t>(field.degree()) * dim;
  if (bits > 62) return false;
  return (std::uint64_t{1} << bits) <= limit;
}

ValidationReport sweep_algebra(const RestrictedLieAlgebra& g, std::uint64_t limit) {
  ValidationReport rep;
  const std::size_t n = g.dim();
  if (!sweep_feasible(g.field(), n, limit)) return rep;
  const Packing pk(g.field(), n);
  const ElementTables t = element_tables(g, pk);
  for (std::uint64_t x = 0; x < pk.count(); ++x) {
    const std::uint64_t* adx = &t.br[x * n];
    const std::uint64_t* adsq = &t.br[t.sq[x] * n];
    for (std::size_t b = 0; b < n; ++b) {
      const std::uint64_t rhs = pk.combine(adx[b], adx);
      if (adsq[b] != rhs) {
        fail(rep, "sweep-two-map", {static_cast<std::size_t>(x), b}, pk.unpack(adsq[b]), pk.unpack(rhs));
        break;
      }
    }
    for (std::uint64_t y = 0; y < pk.count(); ++y) {
      const std::uint64_t xy = pk.combine(y, adx);
      const std::uint64_t lhs = t.sq[x ^ y];
      const std::uint64_t rhs = t.sq[x] ^ t.sq[y] ^ xy;
      if (lhs != rhs)
        fail(rep, "sweep-polarization", {static_cast<std::size_t>(x), static_cast<std::size_t>(y)}, pk.unpack(lhs),
             pk.unpack(rhs));
    }
  }
  return rep;
}

ValidationReport sweep_pair(const ResLieDerPair& p, std::uint64_t limit) {
  ValidationReport rep;
  const RestrictedLieAlgebra& g = p.algebra;
  const std::size_t n = g.dim();
  if (!sweep_feasible(g.field(), n, limit)) return rep;
  const Packing pk(g.field(), n);
  const ElementTables t = element_tables(g, pk);
  std::vector<std::uint64_t> d(pk.count());
  for (std::uint64_t x = 0; x < pk.count(); ++x) d[x] = pk.pack(p.derivation.apply(pk.unpack(x)));

  for (std::uint64_t x = 0; x < pk.count(); ++x) {
    const std::uint64_t* adx = &t.br[x * n];
    const std::uint64_t lhs = d[t.sq[x]];
    const std::uint64_t rhs = pk.combine(d[x], adx);
    if (lhs != rhs) fail(rep, "sweep-restricted-derivation", {static_cast<std::size_t>(x)}, pk.unpack(lhs), pk.unpack(rhs));
    for (std::uint64_t y = x + 1; y < pk.count(); ++y) {
      const std::uint64_t l = d[pk.combine(y, adx)];
      const std::uint64_t r = pk.combine(y, &t.br[d[x] * n]) ^ pk.combine(d[y], adx);
      if (l != r)
        fail(rep, "sweep-derivation", {static_cast<std::size_t>(x), static_cast<std::size_t>(y)}, pk.unpack(l),
             pk.unpack(r));
    }
  }
  return rep;
}

// rho(x^[2]) = rho(x)^2 for every x already contains the Lie-morphism
// condition: expanding at x + y leaves rho([x,y]) = rho(x)rho(y) + rho(y)rho(x).
ValidationReport sweep_representation(const ResLieDerPair& p, const RestrictedRepresentation& r,
                                      std::uint64_t limit) {
  ValidationReport rep;
  const RestrictedLieAlgebra& g = p.algebra;
  if (!sweep_feasible(g.field(), g.dim(), limit)) return rep;
  const Packing pk(g.field(), g.dim());
  for (std::uint64_t x = 0; x < pk.count(); ++x) {
    const Vec xv = pk.unpack(x);
    const Matrix rx = r.action(xv);
    const Matrix sq_lhs = r.action(g.two_map_eval(xv));
    const Matrix sq_rhs = rx * rx;
    if (!(sq_lhs == sq_rhs)) fail(rep, "sweep-rep-square", {static_cast<std::size_t>(x)}, sq_lhs.data(), sq_rhs.data());
    const Matrix eta_lhs = r.eta * rx;
    const Matrix eta_rhs = r.action(p.derivation.apply(xv)) + rx * r.eta;
    if (!(eta_lhs == eta_rhs))
      fail(rep, "sweep-rep-eta", {static_cast<std::size_t>(x)}, eta_lhs.data(), eta_rhs.data());
  }
  return rep;
}

namespace {

void require_valid(const ValidationReport& rep, const std::string& what) {
  if (!rep.valid()) throw std::invalid_argument(what + ": axiom '" + rep.failures.front().axiom + "' fails");
}

}  // namespace

RestrictedRepresentation adjoint_rep(const ResLieDerPair& p) {
  require_valid(validate_algebra(p.algebra, 0), "adjoint_rep: invalid algebra");
  require_valid(validate_pair(p), "adjoint_rep: invalid pair");
  RestrictedRepresentation r;
  r.dim = p.dim();
  for (std::size_t a = 0; a < p.dim(); ++a) r.rho.push_back(p.algebra.ad(a));
  r.eta = p.derivation;
  return r;
}

ResLieDerPair semidirect_product(const ResLieDerPair& p, const RestrictedRepresentation& r) {
  require_valid(validate_algebra(p.algebra, 0), "semidirect_product: invalid algebra");
  require_valid(validate_pair(p), "semidirect_product: invalid pair");
  require_valid(validate_representation(p, r), "semidirect_product: invalid representation");
  const std::size_t n = p.dim();
  const std::size_t m = r.dim;
  const Field& f = p.field();
  RestrictedLieAlgebra out(f, n + m);
  auto embed_g = [&](const Vec& x) {
    Vec v(n + m, 0);
    std::copy(x.begin(), x.end(), v.begin());
    return v;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) out.set_bracket(a, b, embed_g(p.algebra.bracket(a, b)));
    for (std::size_t j = 0; j < m; ++j) {
      Vec v(n + m, 0);
      for (std::size_t i = 0; i < m; ++i) v[n + i] = r.rho[a](i, j);
      out.set_bracket(a, n + j, std::move(v));
    }
    out.set_square(a, embed_g(p.algebra.square(a)));
  }
  Matrix d(f, n + m, n + m);
  d.place(0, 0, p.derivation);
  d.place(n, n, r.eta);
  return {std::move(out), std::move(d)};
}

bool is_strongly_abelian(const RestrictedLieAlgebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!is_zero(a.square(i))) return false;
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (!is_zero(a.bracket(i, j))) return false;
  }
  return true;
}

// Unknown D(m, a) sits at index m * N + a.  Rows: one block of N per basis
// pair a < b for the derivation identity, one block of N per a for
// D(e_a^[2]) = [e_a, D e_a].
DerivationSpace restricted_derivations(const RestrictedLieAlgebra& g) {
  const std::size_t n = g.dim();
  const Field& f = g.field();
  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  Matrix sys(f, (pairs + n) * n, n * n);
  std::size_t row = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b, row += n) {
      const Vec& cab = g.bracket(a, b);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t m = 0; m < n; ++m) {
          // D [e_a, e_b]
          sys(row + r, r * n + m) ^= cab[m];
          // [D e_a, e_b] + [e_a, D e_b]
          sys(row + r, m * n + a) ^= g.bracket(m, b)[r];
          sys(row + r, m * n + b) ^= g.bracket(a, m)[r];
        }
    }
  for (std::size_t a = 0; a < n; ++a, row += n) {
    const Vec& qa = g.square(a);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t m = 0; m < n; ++m) {
        sys(row + r, r * n + m) ^= qa[m];
        sys(row + r, m * n + a) ^= g.bracket(a, m)[r];
      }
  }

  const SubspaceData ker = nullspace(sys);
  DerivationSpace out;
  out.dimension = ker.dim();
  for (std::size_t i = 0; i < ker.dim(); ++i) {
    const Vec v = ker.vector(i);
    Matrix d(f, n, n);
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t a = 0; a < n; ++a) d(m, a) = v[m * n + a];
    out.basis.push_back(std::move(d));
  }
  const std::size_t bits = static_cast<std::size_t>(f.degree()) * out.dimension;
  if (bits < 64) out.count = std::uint64_t{1} << bits;
  return out;
}

}  // namespace reslie
