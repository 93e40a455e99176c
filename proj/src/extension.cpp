#include "reslie/extension.hpp"

#include <stdexcept>
#include <string>

namespace reslie {

namespace {

Vec add(const Vec& a, const Vec& b) {
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] ^= b[i];
  return r;
}

bool all_zero(std::span<const Scalar> v) {
  for (Scalar s : v)
    if (s != 0) return false;
  return true;
}

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_derivation(const RestrictedLieAlgebra& a, const Matrix& d, const char* what) {
  require_shape(d, a.dim(), a.dim(), what);
  if (!(d.field() == a.field())) throw std::invalid_argument(std::string(what) + ": field mismatch");
  const ValidationReport r = validate_pair(ResLieDerPair{a, d});
  if (!r.valid())
    throw std::invalid_argument(std::string(what) + " is not a restricted derivation (" + r.failures.front().axiom +
                                ")");
}

void require_base(const ResLieDerPair& g, const ResLieDerPair& h) {
  if (!(g.field() == h.field())) throw std::invalid_argument("g and h are over different fields");
  if (!is_strongly_abelian(h)) throw std::invalid_argument("h is not strongly abelian");
}

// Coordinates of v in the image of i, or nullopt.
std::optional<Vec> pull_back(const Matrix& inclusion, const Vec& v) { return solve_linear(inclusion, v); }

Vec pull_back_or_throw(const Matrix& inclusion, const Vec& v, const std::string& what) {
  auto r = pull_back(inclusion, v);
  if (!r) throw std::invalid_argument("section does not define a cocycle: " + what + " has a component outside h");
  return *r;
}

// Star2 2-cochain (psi, sigma) of `section` on ghat.
Cochain extract_star2(const ComplexContext& ctx, const BuiltExtension& ext, const Matrix& s) {
  const RestrictedLieAlgebra& g = ext.g.algebra;
  const RestrictedLieAlgebra& gh = ext.ghat.algebra;
  const std::size_t n = g.dim();
  Cochain c = zero_cochain(ctx, 2);
  for (std::size_t a = 0; a < n; ++a) {
    const Vec sa = s.column(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vec v = add(gh.bracket_eval(sa, s.column(b)), s.apply(g.bracket(a, b)));
      const Vec hv = pull_back_or_throw(ext.inclusion, v, "psi(e" + std::to_string(a) + ", e" + std::to_string(b) + ")");
      for (std::size_t m = 0; m < hv.size(); ++m) set_phi(ctx, c, {a, b}, m, hv[m]);
    }
    const Vec v = add(gh.two_map_eval(sa), s.apply(g.square(a)));
    const Vec hv = pull_back_or_throw(ext.inclusion, v, "sigma(e" + std::to_string(a) + ")");
    for (std::size_t m = 0; m < hv.size(); ++m) set_omega(ctx, c, a, {}, m, hv[m]);
  }
  return c;
}

void check_section(const BuiltExtension& ext, const Matrix& s) {
  const std::size_t n = ext.g.dim(), h = ext.h.dim();
  require_shape(s, n + h, n, "section");
  if (!(ext.projection * s == Matrix::identity(ext.g.field(), n)))
    throw std::invalid_argument("section is not a right inverse of the projection");
}

}  // namespace

ComplexContext extension_context(const ResLieDerPair& g, const ResLieDerPair& h) {
  require_base(g, h);
  return ComplexContext(g, trivial_representation(g.field(), g.dim(), h.dim(), &h.derivation), ComplexKind::reslieder);
}

ComplexContext algebra_extension_context(const RestrictedLieAlgebra& g, std::size_t h_dim) {
  return ComplexContext(with_zero_derivation(g), trivial_representation(g.field(), g.dim(), h_dim), ComplexKind::star2);
}

Vec map_coords(const Matrix& m) {
  Vec v(m.rows() * m.cols());
  for (std::size_t a = 0; a < m.cols(); ++a)
    for (std::size_t r = 0; r < m.rows(); ++r) v[a * m.rows() + r] = m(r, a);
  return v;
}

Matrix map_from_coords(const Field& f, std::size_t h_dim, std::size_t g_dim, std::span<const Scalar> coords) {
  if (coords.size() != h_dim * g_dim) throw std::invalid_argument("map coordinates have the wrong length");
  Matrix m(f, h_dim, g_dim);
  for (std::size_t a = 0; a < g_dim; ++a)
    for (std::size_t r = 0; r < h_dim; ++r) m(r, a) = coords[a * h_dim + r];
  return m;
}

namespace {

BuiltExtension assemble(const ResLieDerPair& g, const ResLieDerPair& h, const ComplexContext& ctx,
                        const Cochain& star2, const Cochain* tau) {
  const Field& f = g.field();
  const std::size_t n = g.dim(), hd = h.dim(), t = n + hd;
  RestrictedLieAlgebra gh(f, t);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec v(t, 0);
      for (std::size_t i = 0; i < n; ++i) v[i] = g.algebra.bracket(a, b)[i];
      for (std::size_t m = 0; m < hd; ++m) v[n + m] = phi_coord(ctx, star2, {a, b}, m);
      gh.set_bracket(a, b, std::move(v));
    }
    Vec q(t, 0);
    for (std::size_t i = 0; i < n; ++i) q[i] = g.algebra.square(a)[i];
    for (std::size_t m = 0; m < hd; ++m) q[n + m] = omega_coord(ctx, star2, a, {}, m);
    gh.set_square(a, std::move(q));
  }
  Matrix d(f, t, t);
  d.place(0, 0, g.derivation);
  d.place(n, n, h.derivation);
  if (tau != nullptr)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t m = 0; m < hd; ++m) d(n + m, a) = tau->coords[a * hd + m];

  BuiltExtension ext;
  ext.g = g;
  ext.h = h;
  ext.ghat = ResLieDerPair{std::move(gh), std::move(d)};
  ext.inclusion = Matrix(f, t, hd);
  ext.inclusion.place(n, 0, Matrix::identity(f, hd));
  ext.projection = Matrix(f, n, t);
  ext.projection.place(0, 0, Matrix::identity(f, n));
  ext.canonical_section = ext.projection.transpose();
  return ext;
}

}  // namespace

BuiltExtension build_central_extension(const CentralExtensionSpec& spec) {
  const ComplexContext ctx = extension_context(spec.g, spec.h);
  const PairCochain& c = spec.cocycle;
  if (c.top.degree != 2 || c.low.degree != 1 || c.top.coords.size() != star2_dim(ctx, 2) ||
      c.low.coords.size() != star2_dim(ctx, 1))
    throw std::invalid_argument("cocycle has the wrong shape for C^2(g; h)");

  const Vec image = differential(ctx, 2).apply(c.coords());
  const PairCochain d = split_pair(ctx, 3, image);
  const CochainShape top = ctx.shape(3), low = ctx.shape(2);
  const auto block_zero = [](const Vec& v, std::size_t from, std::size_t to) {
    return all_zero(std::span<const Scalar>(v).subspan(from, to - from));
  };
  const char* failing = nullptr;
  if (!block_zero(d.top.coords, 0, top.phi_count())) failing = "jacobi";
  else if (!block_zero(d.top.coords, top.phi_count(), top.size())) failing = "two-map";
  else if (!block_zero(d.low.coords, 0, low.phi_count())) failing = "derivation";
  else if (!block_zero(d.low.coords, low.phi_count(), low.size())) failing = "restricted-derivation";
  if (failing != nullptr) throw std::invalid_argument(std::string("not a 2-cocycle: ") + failing + " identity fails");

  BuiltExtension ext = assemble(spec.g, spec.h, ctx, c.top, &c.low);
  if (!validate_algebra(ext.ghat.algebra, 0).valid() || !validate_pair(ext.ghat).valid())
    throw std::logic_error("extension of a 2-cocycle is not a ResLieDer pair");
  return ext;
}

BuiltExtension build_algebra_extension(const RestrictedLieAlgebra& g, const RestrictedLieAlgebra& h,
                                       const Cochain& cocycle) {
  if (!(g.field() == h.field())) throw std::invalid_argument("g and h are over different fields");
  if (!is_strongly_abelian(h)) throw std::invalid_argument("h is not strongly abelian");
  const ComplexContext ctx = algebra_extension_context(g, h.dim());
  if (cocycle.degree != 2 || cocycle.coords.size() != star2_dim(ctx, 2))
    throw std::invalid_argument("cocycle has the wrong shape for C^2_{*2}(g; h)");
  if (!is_cocycle(ctx, 2, cocycle.coords)) throw std::invalid_argument("not a 2-cocycle");
  BuiltExtension ext = assemble(with_zero_derivation(g), with_zero_derivation(h), ctx, cocycle, nullptr);
  if (!validate_algebra(ext.ghat.algebra, 0).valid())
    throw std::logic_error("extension of a 2-cocycle is not a restricted Lie algebra");
  return ext;
}

PairCochain extract_cocycle(const BuiltExtension& ext, const Matrix& section) {
  check_section(ext, section);
  const ComplexContext ctx = extension_context(ext.g, ext.h);
  PairCochain c;
  c.top = extract_star2(ctx, ext, section);
  c.low = zero_cochain(ctx, 1);
  const std::size_t hd = ext.h.dim();
  for (std::size_t a = 0; a < ext.g.dim(); ++a) {
    const Vec v = add(ext.ghat.derivation.apply(section.column(a)), section.apply(ext.g.derivation.column(a)));
    const Vec hv = pull_back_or_throw(ext.inclusion, v, "tau(e" + std::to_string(a) + ")");
    for (std::size_t m = 0; m < hd; ++m) c.low.coords[a * hd + m] = hv[m];
  }
  return c;
}

bool is_extension_morphism(const BuiltExtension& e1, const BuiltExtension& e2, const Matrix& m) {
  const RestrictedLieAlgebra& a1 = e1.ghat.algebra;
  const RestrictedLieAlgebra& a2 = e2.ghat.algebra;
  const std::size_t t = a1.dim();
  if (a2.dim() != t || m.rows() != t || m.cols() != t) return false;
  if (!(m * e1.inclusion == e2.inclusion) || !(e2.projection * m == e1.projection)) return false;
  if (!(m * e1.ghat.derivation == e2.ghat.derivation * m)) return false;
  for (std::size_t a = 0; a < t; ++a) {
    const Vec ma = m.column(a);
    if (m.apply(a1.square(a)) != a2.two_map_eval(ma)) return false;
    for (std::size_t b = a + 1; b < t; ++b)
      if (m.apply(a1.bracket(a, b)) != a2.bracket_eval(ma, m.column(b))) return false;
  }
  return true;
}

std::optional<ExtensionIsomorphism> extensions_isomorphic(const PairCochain& c1, const PairCochain& c2,
                                                          const ResLieDerPair& g, const ResLieDerPair& h) {
  const ComplexContext ctx = extension_context(g, h);
  const BuiltExtension e1 = build_central_extension({g, h, c1});
  const BuiltExtension e2 = build_central_extension({g, h, c2});
  const auto w = coboundary_witness(ctx, 2, add(c1.coords(), c2.coords()));
  if (!w) return std::nullopt;

  const Field& f = g.field();
  const std::size_t n = g.dim(), hd = h.dim();
  ExtensionIsomorphism r;
  r.nu = map_from_coords(f, hd, n, *w);
  r.iso = Matrix::identity(f, n + hd);
  r.iso.place(n, 0, r.nu);
  if (!is_extension_morphism(e1, e2, r.iso))
    throw std::logic_error("coboundary witness does not give an isomorphism of extensions");
  return r;
}

Cochain phi_formula(const ComplexContext& ctx, const Matrix& d_h, const Matrix& d_g, const Cochain& c) {
  const std::size_t n = ctx.algebra_dim(), hd = ctx.module_dim();
  require_shape(d_h, hd, hd, "D_h");
  require_shape(d_g, n, n, "D_g");
  if (c.degree != 2 || c.coords.size() != ctx.shape(2).size())
    throw std::invalid_argument("expected a star2 2-cochain");
  Cochain r = zero_cochain(ctx, 2);
  for (std::size_t a = 0; a < n; ++a) {
    const Vec ea = unit(n, a), dea = d_g.column(a);
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vec eb = unit(n, b);
      Vec v = d_h.apply(eval_phi(ctx, c, {ea, eb}));
      v = add(v, eval_phi(ctx, c, {dea, eb}));
      v = add(v, eval_phi(ctx, c, {ea, d_g.column(b)}));
      for (std::size_t m = 0; m < hd; ++m) set_phi(ctx, r, {a, b}, m, v[m]);
    }
    const Vec v = add(d_h.apply(eval_omega(ctx, c, ea, {})), eval_phi(ctx, c, {ea, dea}));
    for (std::size_t m = 0; m < hd; ++m) set_omega(ctx, r, a, {}, m, v[m]);
  }
  return r;
}

DerivationObstruction derivation_obstruction(const BuiltExtension& ext, const Matrix& d_h, const Matrix& d_g,
                                             const Matrix& section) {
  require_derivation(ext.g.algebra, d_g, "D_g");
  require_derivation(ext.h.algebra, d_h, "D_h");
  check_section(ext, section);
  const ComplexContext ctx = algebra_extension_context(ext.g.algebra, ext.h.dim());
  const Cochain c = extract_star2(ctx, ext, section);

  DerivationObstruction r;
  r.cochain = phi_formula(ctx, d_h, d_g, c);
  r.is_cocycle = is_cocycle(ctx, 2, r.cochain.coords);
  if (const auto w = coboundary_witness(ctx, 2, r.cochain.coords)) {
    r.trivial = true;
    r.witness = map_from_coords(ctx.field(), ext.h.dim(), ext.g.dim(), *w);
  }
  return r;
}

std::optional<Matrix> lift_derivation_pair(const BuiltExtension& ext, const Matrix& d_h, const Matrix& d_g) {
  const Matrix& s = ext.canonical_section;
  const DerivationObstruction ob = derivation_obstruction(ext, d_h, d_g, s);
  if (!ob.trivial) return std::nullopt;

  // D(s x + i h) = s D_g x + i gamma x + i D_h h, written in the basis [s | i].
  const Matrix basis = Matrix::hconcat(s, ext.inclusion);
  const auto basis_inv = inverse(basis);
  if (!basis_inv) throw std::invalid_argument("section and inclusion do not span ghat");
  const Matrix images = Matrix::hconcat(s * d_g + ext.inclusion * *ob.witness, ext.inclusion * d_h);
  Matrix lift = images * *basis_inv;

  if (!validate_pair(ResLieDerPair{ext.ghat.algebra, lift}).valid() ||
      !(ext.projection * lift == d_g * ext.projection) || !(lift * ext.inclusion == ext.inclusion * d_h))
    throw std::logic_error("lifted derivation fails verification");
  return lift;
}

PhiAction phi_action(const RestrictedLieAlgebra& g, const RestrictedLieAlgebra& h, const Matrix& d_h,
                     const Matrix& d_g) {
  if (!is_strongly_abelian(h)) throw std::invalid_argument("h is not strongly abelian");
  require_derivation(g, d_g, "D_g");
  require_derivation(h, d_h, "D_h");
  const ComplexContext ctx = algebra_extension_context(g, h.dim());
  const CohomologyResult h2 = cohomology(ctx, 2);

  for (std::size_t i = 0; i < h2.coboundaries.dim(); ++i) {
    const Cochain img = phi_formula(ctx, d_h, d_g, Cochain{2, h2.coboundaries.vector(i)});
    if (!solve_linear(h2.coboundaries.basis(), img.coords) && !all_zero(img.coords))
      throw std::domain_error("Phi not well-defined: coboundary " + std::to_string(i) +
                              " maps outside the coboundaries");
  }

  PhiAction r;
  r.representatives = extend_to_basis(h2.coboundaries, h2.cocycles);
  const std::size_t k = r.representatives.dim();
  r.matrix = Matrix(ctx.field(), k, k);
  const Matrix full = Matrix::hconcat(r.representatives.basis(), h2.coboundaries.basis());
  for (std::size_t i = 0; i < k; ++i) {
    const Cochain img = phi_formula(ctx, d_h, d_g, Cochain{2, r.representatives.vector(i)});
    const auto x = solve_linear(full, img.coords);
    if (!x) throw std::domain_error("Phi not well-defined: image of class " + std::to_string(i) + " is not a cocycle");
    for (std::size_t j = 0; j < k; ++j) r.matrix(j, i) = (*x)[j];
  }
  r.is_zero = r.matrix.is_zero();
  return r;
}

}  // namespace reslie
