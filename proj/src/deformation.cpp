#include "reslie/deformation.hpp"

#include <stdexcept>

namespace reslie {

namespace {

void check_term_shape(const Field& f, std::size_t n, const DeformationTerm& t) {
  const auto bad = [](const char* what) { throw std::invalid_argument(std::string("deformation term: ") + what); };
  if (t.mu.size() != n * n || t.sigma.size() != n) bad("wrong number of entries");
  if (t.D.rows() != n || t.D.cols() != n) bad("D has the wrong shape");
  if (!(t.D.field() == f)) bad("field mismatch");
  const auto in_range = [&](const Vec& v) {
    if (v.size() != n) bad("value has the wrong dimension");
    for (Scalar s : v)
      if (!f.contains(s)) bad("scalar outside the field");
  };
  for (const Vec& v : t.mu) in_range(v);
  for (const Vec& v : t.sigma) in_range(v);
  for (std::size_t a = 0; a < n; ++a) {
    if (!is_zero(t.mu[a * n + a])) bad("mu is not alternating");
    for (std::size_t b = a + 1; b < n; ++b)
      if (t.mu[a * n + b] != t.mu[b * n + a]) bad("mu is not alternating");
  }
}

void check_shapes(const ResLieDerPair& p, const TruncatedDeformation& d) {
  if (d.terms.empty()) throw std::invalid_argument("deformation has no terms");
  for (const DeformationTerm& t : d.terms) check_term_shape(p.field(), p.dim(), t);
  if (!(d.terms[0] == base_term(p))) throw std::invalid_argument("deformation term 0 does not match the pair");
}

void require_deformation(const ResLieDerPair& p, const TruncatedDeformation& d) {
  const DeformationReport r = check_deformation(p, d);
  if (!r.valid())
    throw std::invalid_argument("not a valid deformation: '" + r.failures[0].equation + "' fails at order " +
                                std::to_string(r.failures[0].order));
}

void add_into(Vec& acc, const Vec& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= v[i];
}

}  // namespace

DeformationTerm zero_term(const Field& field, std::size_t dim) {
  DeformationTerm t;
  t.mu.assign(dim * dim, Vec(dim, 0));
  t.sigma.assign(dim, Vec(dim, 0));
  t.D = Matrix(field, dim, dim);
  return t;
}

DeformationTerm base_term(const ResLieDerPair& p) {
  const std::size_t n = p.dim();
  DeformationTerm t = zero_term(p.field(), n);
  for (std::size_t a = 0; a < n; ++a) {
    t.sigma[a] = p.algebra.square(a);
    for (std::size_t b = 0; b < n; ++b) t.mu[a * n + b] = p.algebra.bracket(a, b);
  }
  t.D = p.derivation;
  return t;
}

bool is_zero(const DeformationTerm& t) {
  for (const Vec& v : t.mu)
    if (!is_zero(v)) return false;
  for (const Vec& v : t.sigma)
    if (!is_zero(v)) return false;
  return t.D.is_zero();
}

TruncatedDeformation trivial_deformation(const ResLieDerPair& p, std::size_t order) {
  TruncatedDeformation d;
  d.terms.push_back(base_term(p));
  for (std::size_t i = 0; i < order; ++i) d.terms.push_back(zero_term(p.field(), p.dim()));
  return d;
}

Vec mu_eval(const Field& f, const DeformationTerm& t, const Vec& x, const Vec& y) {
  const std::size_t n = t.sigma.size();
  Vec acc(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < n; ++b)
      if (y[b] != 0 && a != b) axpy(f, acc, f.mul(x[a], y[b]), t.mu[a * n + b]);
  }
  return acc;
}

Vec sigma_eval(const Field& f, const DeformationTerm& t, const Vec& x) {
  const std::size_t n = t.sigma.size();
  Vec acc(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (x[a] == 0) continue;
    axpy(f, acc, f.square(x[a]), t.sigma[a]);
    for (std::size_t b = a + 1; b < n; ++b)
      if (x[b] != 0) axpy(f, acc, f.mul(x[a], x[b]), t.mu[a * n + b]);
  }
  return acc;
}

ComplexContext deformation_context(const ResLieDerPair& p) {
  return ComplexContext(p, adjoint_rep(p), ComplexKind::reslieder);
}

Vec endomorphism_coords(const Matrix& m) {
  const std::size_t n = m.cols();
  Vec v(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < n; ++r) v[a * n + r] = m(r, a);
  return v;
}

Matrix endomorphism_from_coords(const Field& f, std::size_t n, std::span<const Scalar> coords) {
  if (coords.size() != n * n) throw std::invalid_argument("1-cochain has the wrong number of coordinates");
  Matrix m(f, n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t r = 0; r < n; ++r) m(r, a) = coords[a * n + r];
  return m;
}

PairCochain term_to_cochain(const ComplexContext& ctx, const DeformationTerm& t) {
  const std::size_t n = ctx.algebra_dim();
  check_term_shape(ctx.field(), n, t);
  const CochainShape s2 = ctx.shape(2);
  PairCochain c{zero_cochain(ctx, 2), zero_cochain(ctx, 1)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t m = 0; m < n; ++m) c.top.coords[s2.omega_index(a, 0, m)] = t.sigma[a][m];
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::uint32_t mask = (1U << a) | (1U << b);
      for (std::size_t m = 0; m < n; ++m) c.top.coords[s2.phi_index(mask, m)] = t.mu[a * n + b][m];
    }
  }
  c.low.coords = endomorphism_coords(t.D);
  return c;
}

DeformationTerm cochain_to_term(const ComplexContext& ctx, const PairCochain& c) {
  const std::size_t n = ctx.algebra_dim();
  const CochainShape s2 = ctx.shape(2);
  if (c.top.degree != 2 || c.top.coords.size() != s2.size() || c.low.coords.size() != n * n)
    throw std::invalid_argument("expected a degree-2 ResLD cochain");
  DeformationTerm t = zero_term(ctx.field(), n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t m = 0; m < n; ++m) t.sigma[a][m] = c.top.coords[s2.omega_index(a, 0, m)];
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::uint32_t mask = (1U << a) | (1U << b);
      for (std::size_t m = 0; m < n; ++m) t.mu[a * n + b][m] = t.mu[b * n + a][m] = c.top.coords[s2.phi_index(mask, m)];
    }
  }
  t.D = endomorphism_from_coords(ctx.field(), n, c.low.coords);
  return t;
}

DeformationReport check_deformation(const ResLieDerPair& p, const TruncatedDeformation& d) {
  check_shapes(p, d);
  const Field& f = p.field();
  const std::size_t n = p.dim();
  const auto& T = d.terms;
  std::vector<Vec> e;
  for (std::size_t a = 0; a < n; ++a) e.push_back(unit_vector(n, a));

  // x ranges over basis vectors and pairwise sums.
  std::vector<std::pair<Vec, std::vector<std::size_t>>> xs;
  for (std::size_t a = 0; a < n; ++a) xs.push_back({e[a], {a}});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) xs.push_back({added(e[a], e[b]), {a, b}});

  DeformationReport report;
  const auto record = [&](const char* eq, std::size_t k, std::vector<std::size_t> w, const Vec& v) {
    if (!is_zero(v)) report.failures.push_back({eq, k, std::move(w), v});
  };

  for (std::size_t k = 0; k <= d.order(); ++k) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          Vec acc(n, 0);
          for (std::size_t i = 0; i <= k; ++i) {
            const DeformationTerm& ti = T[i];
            const DeformationTerm& tj = T[k - i];
            add_into(acc, mu_eval(f, ti, e[a], mu_eval(f, tj, e[b], e[c])));
            add_into(acc, mu_eval(f, ti, e[b], mu_eval(f, tj, e[c], e[a])));
            add_into(acc, mu_eval(f, ti, e[c], mu_eval(f, tj, e[a], e[b])));
          }
          record("jacobi", k, {a, b, c}, acc);
        }

    for (const auto& [x, idx] : xs)
      for (std::size_t y = 0; y < n; ++y) {
        Vec acc(n, 0);
        for (std::size_t i = 0; i <= k; ++i) {
          const DeformationTerm& ti = T[i];
          const DeformationTerm& tj = T[k - i];
          add_into(acc, mu_eval(f, ti, sigma_eval(f, tj, x), e[y]));
          add_into(acc, mu_eval(f, ti, x, mu_eval(f, tj, x, e[y])));
        }
        std::vector<std::size_t> w = idx;
        w.push_back(y);
        record("two-map-compat", k, std::move(w), acc);
      }

    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        Vec acc(n, 0);
        for (std::size_t i = 0; i <= k; ++i) {
          const DeformationTerm& ti = T[i];
          const DeformationTerm& tj = T[k - i];
          add_into(acc, ti.D.apply(mu_eval(f, tj, e[a], e[b])));
          add_into(acc, mu_eval(f, tj, e[a], ti.D.column(b)));
          add_into(acc, mu_eval(f, tj, e[b], ti.D.column(a)));
        }
        record("derivation", k, {a, b}, acc);
      }

    for (const auto& [x, idx] : xs) {
      Vec acc(n, 0);
      for (std::size_t i = 0; i <= k; ++i) {
        const DeformationTerm& ti = T[i];
        const DeformationTerm& tj = T[k - i];
        add_into(acc, ti.D.apply(sigma_eval(f, tj, x)));
        add_into(acc, mu_eval(f, tj, x, ti.D.apply(x)));
      }
      record("restricted-der", k, idx, acc);
    }
  }
  return report;
}

Infinitesimal infinitesimal(const ResLieDerPair& p, const TruncatedDeformation& d) {
  check_shapes(p, d);
  if (d.order() < 1) throw std::invalid_argument("infinitesimal needs a deformation of order at least 1");
  const ComplexContext ctx = deformation_context(p);
  Infinitesimal r;
  r.cochain = term_to_cochain(ctx, d.terms[1]);
  r.cocycle = is_cocycle(ctx, 2, r.cochain.coords());
  return r;
}

ObstructionResult obstruction(const ResLieDerPair& p, const TruncatedDeformation& d) {
  require_deformation(p, d);
  const Field& f = p.field();
  const std::size_t n = p.dim();
  const std::size_t ord = d.order();
  const auto& T = d.terms;
  const ComplexContext ctx = deformation_context(p);
  const CochainShape s3 = ctx.shape(3);
  const CochainShape s2 = ctx.shape(2);
  std::vector<Vec> e;
  for (std::size_t a = 0; a < n; ++a) e.push_back(unit_vector(n, a));

  // Sums over i + j = ord + 1 with i, j > 0.
  const auto sum_ij = [&](auto&& body) {
    Vec acc(n, 0);
    for (std::size_t i = 1; i <= ord; ++i) body(acc, T[i], T[ord + 1 - i]);
    return acc;
  };
  const auto put = [n](Vec& coords, std::size_t first, const Vec& v) {
    for (std::size_t m = 0; m < n; ++m) coords[first + m] = v[m];
  };

  ObstructionResult r;
  r.cochain = {zero_cochain(ctx, 3), zero_cochain(ctx, 2)};
  Vec& top = r.cochain.top.coords;
  Vec& low = r.cochain.low.coords;

  for (std::uint32_t mask : s3.subsets().subsets(3)) {
    const auto t = mask_to_tuple(mask);
    const Vec& x = e[t[0]];
    const Vec& y = e[t[1]];
    const Vec& z = e[t[2]];
    put(top, s3.phi_index(mask, 0), sum_ij([&](Vec& acc, const DeformationTerm& ti, const DeformationTerm& tj) {
          add_into(acc, mu_eval(f, ti, x, mu_eval(f, tj, y, z)));
          add_into(acc, mu_eval(f, ti, y, mu_eval(f, tj, z, x)));
          add_into(acc, mu_eval(f, ti, z, mu_eval(f, tj, x, y)));
        }));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      put(top, s3.omega_index(a, 1U << b, 0), sum_ij([&](Vec& acc, const DeformationTerm& ti, const DeformationTerm& tj) {
            add_into(acc, mu_eval(f, ti, sigma_eval(f, tj, e[a]), e[b]));
            add_into(acc, mu_eval(f, ti, e[a], mu_eval(f, tj, e[a], e[b])));
          }));

  for (std::uint32_t mask : s2.subsets().subsets(2)) {
    const auto t = mask_to_tuple(mask);
    const Vec& x = e[t[0]];
    const Vec& y = e[t[1]];
    put(low, s2.phi_index(mask, 0), sum_ij([&](Vec& acc, const DeformationTerm& ti, const DeformationTerm& tj) {
          add_into(acc, ti.D.apply(mu_eval(f, tj, x, y)));
          add_into(acc, mu_eval(f, tj, x, ti.D.apply(y)));
          add_into(acc, mu_eval(f, tj, y, ti.D.apply(x)));
        }));
  }
  for (std::size_t a = 0; a < n; ++a)
    put(low, s2.omega_index(a, 0, 0), sum_ij([&](Vec& acc, const DeformationTerm& ti, const DeformationTerm& tj) {
          add_into(acc, ti.D.apply(sigma_eval(f, tj, e[a])));
          add_into(acc, mu_eval(f, tj, e[a], ti.D.column(a)));
        }));

  const Vec coords = r.cochain.coords();
  r.is_cocycle = is_cocycle(ctx, 3, coords);
  if (auto w = coboundary_witness(ctx, 3, coords)) {
    r.trivial = true;
    r.witness = split_pair(ctx, 2, *w);
  }
  return r;
}

std::optional<TruncatedDeformation> extend_deformation(const ResLieDerPair& p, const TruncatedDeformation& d) {
  const ObstructionResult ob = obstruction(p, d);
  if (!ob.trivial) return std::nullopt;
  TruncatedDeformation out = d;
  out.terms.push_back(cochain_to_term(deformation_context(p), *ob.witness));
  if (!check_deformation(p, out).valid()) throw std::logic_error("extension by the obstruction witness is not a deformation");
  return out;
}

TruncatedDeformation apply_formal_isomorphism(const TruncatedDeformation& d,
                                              const std::vector<std::pair<std::size_t, Matrix>>& steps) {
  if (d.terms.empty()) throw std::invalid_argument("deformation has no terms");
  const Field f = d.terms[0].D.field();
  const std::size_t n = d.terms[0].sigma.size();
  const std::size_t ord = d.order();
  for (const DeformationTerm& t : d.terms) check_term_shape(f, n, t);

  std::vector<Matrix> P(ord + 1, Matrix(f, n, n));
  P[0] = Matrix::identity(f, n);
  for (const auto& [k, pk] : steps) {
    if (k == 0) throw std::invalid_argument("formal isomorphism: order-0 part is the identity");
    if (pk.rows() != n || pk.cols() != n) throw std::invalid_argument("formal isomorphism: wrong matrix shape");
    if (k <= ord) P[k] += pk;
  }
  // pi^{-1} = sum_i (Id - pi)^i, expanded order by order.
  std::vector<Matrix> Q(ord + 1, Matrix(f, n, n));
  Q[0] = Matrix::identity(f, n);
  for (std::size_t m = 1; m <= ord; ++m)
    for (std::size_t j = 1; j <= m; ++j) Q[m] += P[j] * Q[m - j];

  // col[c][a] = pi_c e_a
  std::vector<std::vector<Vec>> col(ord + 1);
  for (std::size_t c = 0; c <= ord; ++c)
    for (std::size_t a = 0; a < n; ++a) col[c].push_back(P[c].column(a));

  const auto& T = d.terms;
  // Order-l coefficients of mu_t(pi_t e_a, pi_t e_b), sigma_t(pi_t e_a) and D_t pi_t.
  std::vector<std::vector<Vec>> mu_l(ord + 1, std::vector<Vec>(n * n, Vec(n, 0)));
  std::vector<std::vector<Vec>> sigma_l(ord + 1, std::vector<Vec>(n, Vec(n, 0)));
  std::vector<Matrix> D_l(ord + 1, Matrix(f, n, n));
  for (std::size_t i = 0; i <= ord; ++i)
    for (std::size_t r = 0; i + r <= ord; ++r) {
      D_l[i + r] += T[i].D * P[r];
      for (std::size_t s = 0; i + r + s <= ord; ++s)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = a + 1; b < n; ++b)
            add_into(mu_l[i + r + s][a * n + b], mu_eval(f, T[i], col[r][a], col[s][b]));
      // sigma_i(sum_c t^c v_c) = sum_c t^{2c} sigma_i(v_c) + sum_{c<c'} t^{c+c'} mu_i(v_c, v_c')
      if (i + 2 * r <= ord)
        for (std::size_t a = 0; a < n; ++a) add_into(sigma_l[i + 2 * r][a], sigma_eval(f, T[i], col[r][a]));
      for (std::size_t s = r + 1; i + r + s <= ord; ++s)
        for (std::size_t a = 0; a < n; ++a) add_into(sigma_l[i + r + s][a], mu_eval(f, T[i], col[r][a], col[s][a]));
    }

  TruncatedDeformation out;
  for (std::size_t m = 0; m <= ord; ++m) {
    DeformationTerm t = zero_term(f, n);
    for (std::size_t q = 0; q <= m; ++q) {
      const Matrix& Qq = Q[q];
      const std::size_t l = m - q;
      for (std::size_t a = 0; a < n; ++a) {
        add_into(t.sigma[a], Qq.apply(sigma_l[l][a]));
        for (std::size_t b = a + 1; b < n; ++b) add_into(t.mu[a * n + b], Qq.apply(mu_l[l][a * n + b]));
      }
      t.D += Qq * D_l[l];
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) t.mu[b * n + a] = t.mu[a * n + b];
    out.terms.push_back(std::move(t));
  }
  return out;
}

EquivalenceTranscript trivialize(const ResLieDerPair& p, const TruncatedDeformation& d) {
  require_deformation(p, d);
  const ComplexContext ctx = deformation_context(p);
  const CohomologyResult h2 = cohomology(ctx, 2);
  const SubspaceData reps = extend_to_basis(h2.coboundaries, h2.cocycles);

  EquivalenceTranscript tr;
  tr.result = d;
  for (std::size_t k = 1; k <= d.order(); ++k) {
    const DeformationTerm& t = tr.result.terms[k];
    if (is_zero(t)) continue;
    const Vec c = term_to_cochain(ctx, t).coords();
    const auto w = coboundary_witness(ctx, 2, c);
    if (!w) {
      const auto x = solve_linear(Matrix::hconcat(reps.basis(), h2.coboundaries.basis()), c);
      if (!x) throw std::logic_error("lowest nonzero deformation term is not a 2-cocycle");
      tr.blocked_at = EquivalenceTranscript::Blocked{k, Vec(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(reps.dim()))};
      break;
    }
    Matrix pi = endomorphism_from_coords(p.field(), p.dim(), *w);
    tr.result = apply_formal_isomorphism(tr.result, {{k, pi}});
    if (!is_zero(tr.result.terms[k])) throw std::logic_error("formal isomorphism did not clear the term");
    tr.steps.emplace_back(k, std::move(pi));
  }
  return tr;
}

RigidityCertificate rigidity_certificate(const ResLieDerPair& p) {
  RigidityCertificate r;
  r.h2 = cohomology(deformation_context(p), 2).betti;
  r.rigid_certified = r.h2 == 0;
  return r;
}

}  // namespace reslie
