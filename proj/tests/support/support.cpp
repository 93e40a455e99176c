#include "support.hpp"

#include <stdexcept>

#include "reslie/catalog.hpp"

namespace testing_support {

std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
  std::vector<Vec> out{Vec(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const Vec& v : out)
      for (Scalar s = 0; s < f.order(); ++s) {
        Vec w = v;
        w[i] = s;
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Matrix> all_matrices_gf2(std::size_t rows, std::size_t cols) {
  const std::size_t bits = rows * cols;
  if (bits > 20) throw std::invalid_argument("too many matrices");
  std::vector<Matrix> out;
  for (std::uint32_t code = 0; code < (1U << bits); ++code) {
    Matrix m(Field(), rows, cols);
    for (std::size_t i = 0; i < bits; ++i) m(i / cols, i % cols) = (code >> i) & 1U;
    out.push_back(m);
  }
  return out;
}

Vec vsum(const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<Scalar>(a[i] ^ b[i]);
  return out;
}

Vec oracle_bracket(const RestrictedLieAlgebra& g, const Vec& x, const Vec& y) {
  const Field& f = g.field();
  const std::size_t n = g.dim();
  Vec out(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) out[c] ^= f.mul(f.mul(x[a], y[b]), g.bracket(a, b)[c]);
  return out;
}

// Builds x^[2] by adding one coordinate at a time with
// (u + t e_a)^[2] = u^[2] + t^2 e_a^[2] + t [u, e_a].
Vec oracle_square(const RestrictedLieAlgebra& g, const Vec& x) {
  const Field& f = g.field();
  const std::size_t n = g.dim();
  Vec u(n, 0);
  Vec sq(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a] == 0) continue;
    Vec ea(n, 0);
    ea[a] = x[a];
    const Vec cross = oracle_bracket(g, u, ea);
    for (std::size_t c = 0; c < n; ++c) sq[c] ^= f.mul(f.square(x[a]), g.square(a)[c]) ^ cross[c];
    u[a] = x[a];
  }
  return sq;
}

Vec oracle_apply(const Matrix& m, const Vec& x) {
  const Field& f = m.field();
  Vec out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] ^= f.mul(m(r, c), x[c]);
  return out;
}

namespace {

// Every element with its position in all_vectors order, and the bracket and
// square of all elements as index tables.
struct ElementTable {
  std::vector<Vec> all;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> br;
  std::vector<std::uint32_t> sq;

  explicit ElementTable(const RestrictedLieAlgebra& g) : all(all_vectors(g.field(), g.dim())), q(g.field().order()) {
    const std::size_t e = all.size();
    br.resize(e * e);
    sq.resize(e);
    for (std::size_t x = 0; x < e; ++x) {
      sq[x] = index(oracle_square(g, all[x]));
      for (std::size_t y = 0; y < e; ++y) br[x * e + y] = index(oracle_bracket(g, all[x], all[y]));
    }
  }
  std::uint32_t index(const Vec& v) const {
    std::uint32_t code = 0;
    for (Scalar s : v) code = code * q + s;
    return code;
  }
  std::uint32_t bracket(std::uint32_t x, std::uint32_t y) const { return br[x * all.size() + y]; }
  std::uint32_t sum(std::uint32_t x, std::uint32_t y) const { return index(vsum(all[x], all[y])); }
};

bool table_derivation(const ElementTable& t, const Matrix& d) {
  const std::uint32_t e = static_cast<std::uint32_t>(t.all.size());
  std::vector<std::uint32_t> dx(e);
  for (std::uint32_t x = 0; x < e; ++x) dx[x] = t.index(oracle_apply(d, t.all[x]));
  for (std::uint32_t x = 0; x < e; ++x) {
    if (dx[t.sq[x]] != t.bracket(x, dx[x])) return false;
    for (std::uint32_t y = 0; y < e; ++y)
      if (dx[t.bracket(x, y)] != t.sum(t.bracket(dx[x], y), t.bracket(x, dx[y]))) return false;
  }
  return true;
}

}  // namespace

bool oracle_derivation(const RestrictedLieAlgebra& g, const Matrix& d) { return table_derivation(ElementTable(g), d); }

std::vector<bool> oracle_derivations(const RestrictedLieAlgebra& g, const std::vector<Matrix>& ds) {
  const ElementTable t(g);
  std::vector<bool> out;
  for (const Matrix& d : ds) out.push_back(table_derivation(t, d));
  return out;
}

bool oracle_pair_valid(const ResLieDerPair& p) {
  const RestrictedLieAlgebra& g = p.algebra;
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (g.bracket(a, b) != g.bracket(b, a) || (a == b && !reslie::is_zero(g.bracket(a, a)))) return false;
  const ElementTable t(g);
  const std::uint32_t e = static_cast<std::uint32_t>(t.all.size());
  for (std::uint32_t x = 0; x < e; ++x)
    for (std::uint32_t y = 0; y < e; ++y) {
      if (t.bracket(t.sq[x], y) != t.bracket(x, t.bracket(x, y))) return false;
      if (t.sq[t.sum(x, y)] != t.sum(t.sum(t.sq[x], t.sq[y]), t.bracket(x, y))) return false;
      for (std::uint32_t z = 0; z < e; ++z) {
        const std::uint32_t j =
            t.sum(t.sum(t.bracket(x, t.bracket(y, z)), t.bracket(y, t.bracket(z, x))), t.bracket(z, t.bracket(x, y)));
        if (j != 0) return false;
      }
    }
  return table_derivation(t, p.derivation);
}

Scalar random_scalar(const Field& f, Rng& rng) { return static_cast<Scalar>(rng() % f.order()); }

Vec random_vec(const Field& f, std::size_t n, Rng& rng) {
  Vec v(n);
  for (auto& s : v) s = random_scalar(f, rng);
  return v;
}

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

Matrix random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng);
    if (reslie::rank(m) == n) return m;
  }
}

ResLieDerPair change_basis(const ResLieDerPair& pair, const Matrix& p) {
  const RestrictedLieAlgebra& g = pair.algebra;
  const std::size_t n = g.dim();
  const Matrix pinv = *reslie::inverse(p);
  RestrictedLieAlgebra h(g.field(), n);
  for (std::size_t a = 0; a < n; ++a) {
    const Vec pa = p.column(a);
    h.set_square(a, pinv.apply(g.two_map_eval(pa)));
    for (std::size_t b = a + 1; b < n; ++b) h.set_bracket(a, b, pinv.apply(g.bracket_eval(pa, p.column(b))));
  }
  return {std::move(h), pinv * pair.derivation * p};
}

Matrix random_restricted_derivation(const RestrictedLieAlgebra& g, Rng& rng) {
  const reslie::DerivationSpace space = reslie::restricted_derivations(g);
  Matrix d(g.field(), g.dim(), g.dim());
  for (const Matrix& b : space.basis) {
    const Scalar s = random_scalar(g.field(), rng);
    for (std::size_t r = 0; r < g.dim(); ++r) reslie::axpy(g.field(), d.row(r), s, b.row(r));
  }
  return d;
}

RestrictedLieAlgebra random_abelian(const Field& f, std::size_t n, Rng& rng) {
  RestrictedLieAlgebra g(f, n);
  for (std::size_t a = 0; a < n; ++a) g.set_square(a, random_vec(f, n, rng));
  return g;
}

namespace {

ResLieDerPair with_random_derivation(RestrictedLieAlgebra g, Rng& rng) {
  Matrix d = random_restricted_derivation(g, rng);
  return {std::move(g), std::move(d)};
}

ResLieDerPair random_base(const Field& f, std::size_t max_dim, Rng& rng) {
  std::vector<std::string> names;
  for (const char* n : {"abelian1", "nonabelian2", "heisenberg3_zero", "heisenberg3_sq"})
    if (reslie::catalog(n, f).dim() <= max_dim) names.push_back(n);
  if (rng() % 3 == 0) {
    const std::size_t n = 1 + rng() % max_dim;
    return with_random_derivation(random_abelian(f, n, rng), rng);
  }
  const ResLieDerPair base = reslie::catalog(names[rng() % names.size()], f);
  const ResLieDerPair moved = change_basis(base, random_invertible(f, base.dim(), rng));
  return with_random_derivation(moved.algebra, rng);
}

}  // namespace

RestrictedRepresentation random_valid_rep(const ResLieDerPair& p, Rng& rng) {
  if (rng() % 2 == 0) return reslie::adjoint_rep(p);
  const std::size_t m = 1 + rng() % 2;
  const Matrix eta = random_matrix(p.field(), m, m, rng);
  return reslie::trivial_representation(p.field(), p.dim(), m, &eta);
}

ResLieDerPair random_valid_pair(const Field& f, std::size_t max_dim, Rng& rng) {
  ResLieDerPair p = random_base(f, max_dim, rng);
  const std::size_t room = max_dim - p.dim();
  if (room >= 1 && rng() % 2 == 0) {
    // semidirect with a trivial module or, when it fits, the adjoint module
    RestrictedRepresentation r;
    if (room >= p.dim() && rng() % 2 == 0) {
      r = reslie::adjoint_rep(p);
    } else {
      const std::size_t m = 1 + rng() % room;
      const Matrix eta = random_matrix(f, m, m, rng);
      r = reslie::trivial_representation(f, p.dim(), m, &eta);
    }
    p = reslie::semidirect_product(p, r);
    p = change_basis(p, random_invertible(f, p.dim(), rng));
    p = with_random_derivation(p.algebra, rng);
  }
  return p;
}

ResLieDerPair mutate(const ResLieDerPair& p, Rng& rng) {
  ResLieDerPair q = p;
  const Field& f = p.field();
  const std::size_t n = p.dim();
  const Scalar delta = static_cast<Scalar>(1 + rng() % (f.order() - 1));
  switch (rng() % 3) {
    case 0: {
      const std::size_t a = rng() % n;
      Vec v = q.algebra.square(a);
      v[rng() % n] ^= delta;
      q.algebra.set_square(a, v);
      break;
    }
    case 1: {
      if (n < 2) break;
      const std::size_t a = rng() % n;
      std::size_t b = rng() % n;
      if (b == a) b = (a + 1) % n;
      Vec v = q.algebra.bracket(a, b);
      v[rng() % n] ^= delta;
      q.algebra.set_bracket(a, b, v);
      break;
    }
    default:
      q.derivation(rng() % n, rng() % n) ^= delta;
  }
  return q;
}

ResLieDerPair torus_line() {
  RestrictedLieAlgebra g(Field(), 1);
  g.set_square(0, {1});
  return reslie::with_zero_derivation(g);
}

std::vector<ResLieDerPair> small_pairs_gf2() {
  using reslie::catalog;
  std::vector<ResLieDerPair> out{catalog("abelian1"), torus_line(), catalog("nonabelian2"), catalog("abelian_2")};
  ResLieDerPair a1 = catalog("abelian1");
  a1.derivation(0, 0) = 1;
  out.push_back(a1);
  RestrictedLieAlgebra g(Field(), 2);
  g.set_square(0, {0, 1});
  ResLieDerPair nil = reslie::with_zero_derivation(g);
  out.push_back(nil);
  nil.derivation(1, 0) = 1;
  out.push_back(nil);
  ResLieDerPair na = catalog("nonabelian2");
  na.derivation(1, 1) = 1;
  out.push_back(na);
  return out;
}

}  // namespace testing_support
