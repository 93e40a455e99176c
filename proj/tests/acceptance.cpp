// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "reslie/catalog.hpp"
#include "reslie/cochain.hpp"
#include "reslie/deformation.hpp"
#include "reslie/extension.hpp"
#include "reslie/io.hpp"
#include "support/oracle_cohomology.hpp"
#include "support/oracle_deformation.hpp"
#include "support/oracle_extension.hpp"
#include "support/support.hpp"

using namespace reslie;
using namespace testing_support;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_++ == 0) first_ = what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  bool passed() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (!notes_.empty()) os << ", " << notes_;
    if (failures_) os << "; " << failures_ << " failed, first: " << first_;
    return os.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
  std::string notes_;
};

const std::vector<const char*> kCatalog = {"abelian1", "nonabelian2", "heisenberg3_zero", "heisenberg3_sq", "abelian_2",
                                           "abelian_3"};

std::string tag(const char* name, int k, BundledRep rep, std::size_t n) {
  std::ostringstream os;
  os << name << " GF(" << (1 << k) << ") " << (rep == BundledRep::trivial ? "trivial" : "adjoint") << " n=" << n;
  return os.str();
}

OracleComplex oracle_kind(ComplexKind k) {
  return k == ComplexKind::star2 ? OracleComplex::star2 : OracleComplex::reslieder;
}

TruncatedDeformation with_term(const ResLieDerPair& p, const DeformationTerm& t) {
  TruncatedDeformation d = trivial_deformation(p, 0);
  d.terms.push_back(t);
  return d;
}

std::vector<Vec> cocycles_of(const ComplexContext& ctx, std::size_t n) {
  std::vector<Vec> out;
  for (const Vec& v : all_vectors(ctx.field(), space_dim(ctx, n)))
    if (is_cocycle(ctx, n, v)) out.push_back(v);
  return out;
}

std::vector<Matrix> all_derivations_gf2(const RestrictedLieAlgebra& g) {
  const DerivationSpace ds = restricted_derivations(g);
  std::vector<Matrix> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << ds.dimension); ++bits) {
    Matrix d(Field(), g.dim(), g.dim());
    for (std::size_t i = 0; i < ds.dimension; ++i)
      if ((bits >> i) & 1) d += ds.basis[i];
    out.push_back(d);
  }
  return out;
}

std::vector<RestrictedLieAlgebra> small_algebras_gf2() {
  std::vector<RestrictedLieAlgebra> out;
  for (const ResLieDerPair& p : small_pairs_gf2()) {
    bool seen = false;
    for (const RestrictedLieAlgebra& a : out) seen = seen || a == p.algebra;
    if (!seen) out.push_back(p.algebra);
  }
  return out;
}

Matrix shifted_section(const BuiltExtension& ext, const Matrix& kappa) {
  return ext.canonical_section + ext.inclusion * kappa;
}

// ---------------------------------------------------------------------------

bool criterion1(Tally& t) {
  const auto t0 = Clock::now();
  for (int k : {1, 2})
    for (const char* name : kCatalog)
      for (BundledRep rep : {BundledRep::trivial, BundledRep::adjoint}) {
        const ResLieDerPair p = catalog(name, Field(k));
        const ComplexContext ctx(p, bundled_representation(p, rep), ComplexKind::reslieder);
        for (std::size_t n = 1; n <= 4; ++n) {
          t.expect((diff_star2(ctx, n + 1) * diff_star2(ctx, n)).is_zero(), "d d != 0 at " + tag(name, k, rep, n));
          t.expect((diff_reslieder(ctx, n + 1) * diff_reslieder(ctx, n)).is_zero(),
                   "theta theta != 0 at " + tag(name, k, rep, n));
        }
      }
  const double s = seconds_since(t0);
  t.expect(s < 10.0, "sweep took longer than 10 s");
  t.note(std::to_string(s).substr(0, 5) + " s");
  return t.passed();
}

bool criterion2(Tally& t) {
  for (int k : {1, 2})
    for (const char* name : kCatalog)
      for (BundledRep rep : {BundledRep::trivial, BundledRep::adjoint}) {
        const ResLieDerPair p = catalog(name, Field(k));
        const ComplexContext ctx(p, bundled_representation(p, rep), ComplexKind::reslieder);
        for (std::size_t n = 1; n <= 4; ++n) {
          const Matrix lhs = delta_op(ctx, n + 1) * diff_star2(ctx, n);
          const Matrix rhs = diff_star2(ctx, n) * delta_op(ctx, n);
          t.expect(lhs == rhs, "delta d != d delta at " + tag(name, k, rep, n));
          if (n == 1) {
            // omega rows of the degree-2 image: delta of omega_{phi_1} against omega of delta phi_1
            const CochainShape s2 = ctx.shape(2);
            bool ok = true;
            for (std::size_t r = s2.phi_count(); r < s2.size(); ++r)
              for (std::size_t c = 0; c < lhs.cols(); ++c) ok = ok && lhs(r, c) == rhs(r, c);
            t.expect(ok, "omega part at n=1 differs at " + tag(name, k, rep, n));
          }
        }
      }
  return t.passed();
}

bool criterion3(Tally& t) {
  struct Row {
    const char* name;
    BundledRep rep;
    ComplexKind kind;
    std::vector<std::size_t> betti;  // lowest degree up to 3
  };
  using enum BundledRep;
  using enum ComplexKind;
  const std::vector<Row> rows = {
      {"abelian1", trivial, star2, {1, 1, 1, 1}},
      {"abelian1", trivial, reslieder, {1, 2, 2}},
      {"nonabelian2", trivial, star2, {1, 0, 1, 2}},
      {"nonabelian2", trivial, reslieder, {0, 1, 3}},
      {"nonabelian2", adjoint, star2, {0, 0, 0, 0}},
      {"nonabelian2", adjoint, reslieder, {2, 2, 0}},
      {"heisenberg3_zero", trivial, star2, {1, 2, 3, 5}},
      {"heisenberg3_zero", trivial, reslieder, {2, 5, 8}},
      {"heisenberg3_zero", adjoint, star2, {1, 2, 3, 9}},
      {"heisenberg3_zero", adjoint, reslieder, {4, 7, 12}},
      {"heisenberg3_sq", trivial, star2, {1, 2, 3, 5}},
      {"heisenberg3_sq", trivial, reslieder, {2, 5, 8}},
      {"heisenberg3_sq", adjoint, star2, {1, 2, 3, 9}},
      {"heisenberg3_sq", adjoint, reslieder, {4, 7, 12}},
  };
  for (const Row& r : rows) {
    const ResLieDerPair p = catalog(r.name);
    const ComplexContext ctx(p, bundled_representation(p, r.rep), r.kind);
    const std::size_t lo = min_degree(ctx);
    for (std::size_t i = 0; i < r.betti.size(); ++i) {
      const std::size_t n = lo + i;
      const std::string where = std::string(r.name) + " " + to_string(r.kind) + " H^" + std::to_string(n);
      const CohomologyResult h = cohomology(ctx, n);
      t.expect(h.betti == r.betti[i], where + " differs from the frozen value");
      t.expect(h.betti == oracle_betti(p, ctx.rep(), oracle_kind(r.kind), n), where + " differs from the oracle");
    }
  }
  return t.passed();
}

bool criterion4(Tally& t) {
  Rng rng(2024);
  const std::uint64_t limit = 4096;
  std::size_t swept = 0, mutated_valid = 0, mutated_invalid = 0;
  for (int it = 0; it < 200; ++it) {
    const ResLieDerPair p = random_valid_pair(Field(), 4, rng);
    const RestrictedRepresentation r = random_valid_rep(p, rng);
    const std::string where = "input " + std::to_string(it);
    t.expect(validate_algebra(p.algebra, limit).valid() && validate_pair(p).valid(), where + " pair invalid");
    t.expect(validate_representation(p, r).valid(), where + " representation invalid");

    const ResLieDerPair sd = semidirect_product(p, r);
    t.expect(validate_algebra(sd.algebra, limit).valid() && validate_pair(sd).valid(),
             where + " semidirect product invalid");
    const RestrictedRepresentation ad = adjoint_rep(p);
    t.expect(validate_representation(p, ad).valid(), where + " adjoint invalid");

    // basis-level and element-level verdicts must agree
    for (const ResLieDerPair* q : {&p, &sd}) {
      if (!sweep_feasible(q->field(), q->dim(), limit)) continue;
      ++swept;
      const bool basis = validate_algebra(q->algebra, 0).valid() && validate_pair(*q).valid();
      const bool sweep = sweep_algebra(q->algebra, limit).valid() && sweep_pair(*q, limit).valid();
      t.expect(basis == sweep, where + " sweep disagrees with basis validation");
    }
    for (const RestrictedRepresentation* rr : {&r, &ad}) {
      const bool basis = validate_representation(p, *rr).valid();
      const bool sweep = sweep_representation(p, *rr, limit).valid();
      t.expect(basis == sweep, where + " representation sweep disagrees");
    }

    const ResLieDerPair m = mutate(p, rng);
    const bool basis = validate_algebra(m.algebra, 0).valid() && validate_pair(m).valid();
    t.expect(basis == oracle_pair_valid(m), where + " mutated pair verdict disagrees with the element oracle");
    (basis ? mutated_valid : mutated_invalid) += 1;
  }
  t.note(std::to_string(swept) + " swept");
  t.note(std::to_string(mutated_invalid) + " broken mutants caught");
  return t.passed();
}

bool criterion5(Tally& t) {
  // (a) exhaustive order-1 terms on the small pairs, then random deformations
  std::size_t infinitesimals = 0;
  for (const ResLieDerPair& p : small_pairs_gf2())
    for (const DeformationTerm& term : all_terms_gf2(p.dim())) {
      const TruncatedDeformation d = with_term(p, term);
      if (!oracle_deformation_valid(p, d)) continue;
      ++infinitesimals;
      t.expect(check_deformation(p, d).valid(), "oracle-valid order-1 deformation rejected");
      t.expect(infinitesimal(p, d).cocycle, "infinitesimal is not a cocycle");
    }
  Rng rng(505);
  for (int it = 0; it < 100; ++it) {
    const Field f = it % 3 == 2 ? Field(2) : Field();
    const ResLieDerPair p = random_valid_pair(f, f.degree() == 1 ? 4 : 3, rng);
    TruncatedDeformation d = random_deformation(p, 1, rng);
    if (d.order() != 1) continue;
    if (f.degree() == 1 && p.dim() <= 3) t.expect(oracle_deformation_valid(p, d), "generated deformation invalid");
    ++infinitesimals;
    t.expect(infinitesimal(p, d).cocycle, "random infinitesimal is not a cocycle");

    // (b)
    const Matrix pi1 = random_matrix(f, p.dim(), p.dim(), rng);
    const TruncatedDeformation moved = apply_formal_isomorphism(d, {{1, pi1}});
    const Vec shift = added(infinitesimal(p, moved).cochain.coords(), infinitesimal(p, d).cochain.coords());
    t.expect(shift == diff_reslieder(deformation_context(p), 1).apply(endomorphism_coords(pi1)),
             "pi_1 shift differs from theta^1(pi_1)");
  }
  t.note(std::to_string(infinitesimals) + " infinitesimals");

  // (c) every valid deformation of order <= 2 on the small pairs
  std::size_t blocked = 0, extended = 0;
  for (const ResLieDerPair& p : small_pairs_gf2()) {
    std::vector<TruncatedDeformation> level;
    for (const DeformationTerm& term : oracle_extensions(p, trivial_deformation(p, 0)))
      level.push_back(with_term(p, term));
    for (int ord = 1; ord <= 2; ++ord) {
      std::vector<TruncatedDeformation> next;
      for (const TruncatedDeformation& d : level) {
        const ObstructionResult ob = obstruction(p, d);
        const auto found = oracle_extensions(p, d);
        const auto e = extend_deformation(p, d);
        t.expect(ob.is_cocycle, "obstruction is not a cocycle");
        t.expect(e.has_value() == ob.trivial, "extension result disagrees with the obstruction class");
        t.expect(e.has_value() == !found.empty(), "extension result disagrees with exhaustive search");
        if (e) {
          t.expect(oracle_deformation_valid(p, *e), "produced extension invalid");
          ++extended;
        } else {
          ++blocked;
        }
        if (ord == 1)
          for (const DeformationTerm& term : found) {
            TruncatedDeformation x = d;
            x.terms.push_back(term);
            next.push_back(std::move(x));
          }
      }
      level = std::move(next);
    }
  }
  t.expect(extended > 0 && blocked > 0, "exhaustive family lacks both outcomes");
  t.note(std::to_string(extended) + " extended, " + std::to_string(blocked) + " blocked");

  // (d)
  std::vector<ResLieDerPair> contexts = small_pairs_gf2();
  for (const char* name : kCatalog) contexts.push_back(catalog(name));
  std::size_t h3_zero = 0, extended5 = 0;
  for (const ResLieDerPair& p : contexts) {
    const ComplexContext ctx = deformation_context(p);
    if (cohomology(ctx, 3).betti != 0) continue;
    ++h3_zero;
    const SubspaceData z = cohomology(ctx, 2).cocycles;
    const std::uint64_t total = std::uint64_t{1} << z.dim();
    const std::uint64_t count = std::min<std::uint64_t>(total, 256);
    for (std::uint64_t i = 0; i < count; ++i) {
      const std::uint64_t code = total <= 256 ? i : rng() % total;
      Vec c(space_dim(ctx, 2), 0);
      for (std::size_t b = 0; b < z.dim(); ++b)
        if ((code >> b) & 1U) c = added(c, z.vector(b));
      TruncatedDeformation d = with_term(p, cochain_to_term(ctx, split_pair(ctx, 2, c)));
      bool ok = true;
      while (ok && d.order() < 5) {
        auto e = extend_deformation(p, d);
        ok = e.has_value();
        if (ok) d = std::move(*e);
      }
      t.expect(ok, "2-cocycle failed to extend with H^3 = 0");
      if (ok) {
        t.expect(check_deformation(p, d).valid(), "order-5 deformation invalid");
        if (p.dim() <= 2) t.expect(oracle_deformation_valid(p, d), "order-5 deformation rejected by the oracle");
        ++extended5;
      }
    }
  }
  t.expect(h3_zero > 0, "no context with H^3 = 0");
  t.note(std::to_string(h3_zero) + " contexts with H^3 = 0, " + std::to_string(extended5) + " cocycles to order 5");
  return t.passed();
}

bool criterion6(Tally& t) {
  Rng rng(606);
  std::size_t extensions = 0, iso_pairs = 0;
  std::set<std::string> errors;
  for (const ResLieDerPair& g : small_pairs_gf2())
    for (const ResLieDerPair& h : small_modules_gf2()) {
      const ComplexContext ctx = extension_context(g, h);
      const Matrix d1 = differential(ctx, 1);
      const Matrix d2 = differential(ctx, 2);
      std::vector<Vec> zs;

      // build iff cocycle, over every degree-2 cochain
      for (const Vec& c : all_vectors(Field(), space_dim(ctx, 2))) {
        const bool cocycle = is_zero(d2.apply(c));
        const ResLieDerPair raw = raw_extension(g, h, c);
        t.expect(oracle_pair_valid(raw) == cocycle, "assembled pair validity differs from the cocycle condition");
        try {
          const BuiltExtension ext = build_central_extension({g, h, split_pair(ctx, 2, c)});
          t.expect(cocycle, "built an extension from a non-cocycle");
          t.expect(ext.ghat.algebra == raw.algebra && ext.ghat.derivation == raw.derivation,
                   "built extension differs from the assembled pair");
          zs.push_back(c);
        } catch (const std::invalid_argument& e) {
          t.expect(!cocycle, std::string("rejected a cocycle: ") + e.what());
          errors.insert(e.what());
        }
      }

      for (const Vec& c : zs) {
        ++extensions;
        const BuiltExtension ext = build_central_extension({g, h, split_pair(ctx, 2, c)});
        t.expect(extract_cocycle(ext, ext.canonical_section).coords() == c, "round trip changed the cocycle");
        t.expect(ext.projection * ext.inclusion == Matrix(Field(), g.dim(), h.dim()), "sequence not exact");
        for (int s = 0; s < 50; ++s) {
          const Matrix k1 = random_matrix(Field(), h.dim(), g.dim(), rng);
          const Matrix k2 = random_matrix(Field(), h.dim(), g.dim(), rng);
          const Vec c1 = extract_cocycle(ext, shifted_section(ext, k1)).coords();
          const Vec c2 = extract_cocycle(ext, shifted_section(ext, k2)).coords();
          t.expect(vsum(c1, c2) == d1.apply(map_coords(k1 + k2)), "section change is not the expected coboundary");
        }
      }

      // isomorphism iff cohomologous; all pairs when few, sampled otherwise
      const bool all_pairs = zs.size() <= 16;
      const std::size_t trials = all_pairs ? zs.size() * zs.size() : 256;
      for (std::size_t i = 0; i < trials; ++i) {
        const Vec& c1 = all_pairs ? zs[i / zs.size()] : zs[rng() % zs.size()];
        const Vec c2 = all_pairs ? zs[i % zs.size()]
                       : i % 2  ? zs[rng() % zs.size()]
                                : vsum(c1, d1.apply(random_vec(Field(), space_dim(ctx, 1), rng)));
        const PairCochain p1 = split_pair(ctx, 2, c1), p2 = split_pair(ctx, 2, c2);
        const bool cohomologous = coboundary_witness(ctx, 2, vsum(c1, c2)).has_value();
        const auto iso = extensions_isomorphic(p1, p2, g, h);
        t.expect(iso.has_value() == cohomologous, "isomorphism verdict differs from cohomology");
        const BuiltExtension e1 = build_central_extension({g, h, p1});
        const BuiltExtension e2 = build_central_extension({g, h, p2});
        if (iso) t.expect(is_extension_morphism(e1, e2, iso->iso), "returned isomorphism does not verify");
        if (i % 4 == 0)
          t.expect(oracle_isomorphic(e1.ghat, e2.ghat, g.dim()) == cohomologous,
                   "brute-force isomorphism search disagrees");
        ++iso_pairs;
      }
    }
  for (const char* id : {"two-map", "derivation", "restricted-derivation"})
    t.expect(errors.count(std::string("not a 2-cocycle: ") + id + " identity fails") == 1,
             std::string("no rejection named ") + id);
  t.note(std::to_string(extensions) + " extensions, " + std::to_string(iso_pairs) + " isomorphism queries");
  return t.passed();
}

bool criterion7(Tally& t) {
  Rng rng(707);
  std::size_t lifted = 0, blocked = 0, phi_zero = 0, phi_nonzero = 0;
  for (const RestrictedLieAlgebra& g : small_algebras_gf2()) {
    const auto dgs = all_derivations_gf2(g);
    for (std::size_t hd = 1; hd <= 2; ++hd) {
      const RestrictedLieAlgebra h(Field(), hd);
      const ComplexContext ctx = algebra_extension_context(g, hd);
      const Matrix d1 = diff_star2(ctx, 1);
      const auto dhs = all_matrices_gf2(hd, hd);
      for (const Vec& c : cocycles_of(ctx, 2)) {
        const BuiltExtension ext = build_algebra_extension(g, h, Cochain{2, c});
        for (const Matrix& dg : dgs)
          for (const Matrix& dh : dhs) {
            const DerivationObstruction ob = derivation_obstruction(ext, dh, dg, ext.canonical_section);
            t.expect(ob.is_cocycle, "derivation obstruction is not a cocycle");
            const Matrix kappa = random_matrix(Field(), hd, g.dim(), rng);
            const DerivationObstruction ob2 = derivation_obstruction(ext, dh, dg, shifted_section(ext, kappa));
            t.expect(vsum(ob.cochain.coords, ob2.cochain.coords) == d1.apply(map_coords(dh * kappa + kappa * dg)),
                     "section change shifts the obstruction incorrectly");

            const auto brute = oracle_lifts(ext.ghat.algebra, dg, dh);
            const auto lift = lift_derivation_pair(ext, dh, dg);
            t.expect(lift.has_value() == ob.trivial, "lift existence differs from the obstruction class");
            t.expect(lift.has_value() == !brute.empty(), "lift existence differs from brute force");
            if (lift) {
              ++lifted;
              t.expect(validate_pair({ext.ghat.algebra, *lift}).valid(), "lift is not a restricted derivation");
              t.expect(oracle_derivation(ext.ghat.algebra, *lift), "lift rejected by the element oracle");
              t.expect(ext.projection * *lift == dg * ext.projection, "lift does not cover D_g");
              t.expect(*lift * ext.inclusion == ext.inclusion * dh, "lift does not restrict to D_h");
            } else {
              ++blocked;
            }
          }
      }
      for (const Matrix& dg : dgs)
        for (const Matrix& dh : dhs) {
          const PhiAction phi = phi_action(g, h, dh, dg);
          bool all_lift = true;
          for (std::size_t i = 0; i < phi.representatives.dim(); ++i) {
            const BuiltExtension ext = build_algebra_extension(g, h, Cochain{2, phi.representatives.vector(i)});
            const bool lifts = lift_derivation_pair(ext, dh, dg).has_value();
            t.expect(lifts == is_zero(phi.matrix.column(i)), "Phi column disagrees with the lift");
            all_lift = all_lift && lifts;
          }
          t.expect(phi.is_zero == all_lift, "Phi vanishing disagrees with lifting on every representative");
          (phi.is_zero ? phi_zero : phi_nonzero) += 1;
        }
    }
  }
  t.expect(lifted > 0 && blocked > 0 && phi_zero > 0 && phi_nonzero > 0, "family lacks both outcomes");
  t.note(std::to_string(lifted) + " lifted, " + std::to_string(blocked) + " blocked");
  t.note("Phi zero " + std::to_string(phi_zero) + ", nonzero " + std::to_string(phi_nonzero));
  return t.passed();
}

bool criterion8(Tally& t) {
  struct Case {
    const char* name;
    std::size_t expected;
  };
  for (const Case& c : {Case{"nonabelian2", 4}, Case{"heisenberg3_zero", 16}}) {
    const RestrictedLieAlgebra g = catalog(c.name).algebra;
    const auto candidates = all_matrices_gf2(g.dim(), g.dim());
    const auto ok = oracle_derivations(g, candidates);
    const std::size_t brute = static_cast<std::size_t>(std::count(ok.begin(), ok.end(), true));
    const DerivationSpace ds = restricted_derivations(g);
    t.expect(ds.count && *ds.count == c.expected, std::string(c.name) + " count differs from the frozen value");
    t.expect(brute == c.expected, std::string(c.name) + " brute force over " + std::to_string(candidates.size()) +
                                      " matrices differs");
    t.note(std::string(c.name) + " " + std::to_string(brute) + "/" + std::to_string(candidates.size()));
  }
  return t.passed();
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(RESLIE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool criterion9(Tally& t) {
  Rng rng(909);
  ResLieDerPair p = random_valid_pair(Field(), 6, rng);
  while (p.dim() != 6) p = random_valid_pair(Field(), 6, rng);
  const RestrictedRepresentation ad = adjoint_rep(p);
  const auto t0 = Clock::now();
  for (ComplexKind kind : {ComplexKind::star2, ComplexKind::reslieder}) {
    const ComplexContext ctx(p, ad, kind);
    for (std::size_t n = min_degree(ctx); n <= 3; ++n) (void)cohomology(ctx, n);
  }
  const double s = seconds_since(t0);
  t.expect(s < 5.0, "N = 6 cohomology took longer than 5 s");
  t.note("N = 6 in " + std::to_string(s).substr(0, 5) + " s");

  io::json doc = io::pair_json(p);
  doc["representation"] = "adjoint";
  const std::filesystem::path in = std::filesystem::temp_directory_path() / "reslie_acceptance_n6.json";
  std::ofstream(in) << doc.dump(2);
  const std::filesystem::path data = RESLIE_CLI_DATA;
  const std::vector<std::string> commands = {
      "cohomology --input " + in.string() + " --complex star2 --output json",
      "cohomology --input " + in.string() + " --complex reslieder --output json",
      "cocycles --input " + (data / "nonabelian2.json").string() + " --output json",
      "deform extend --order 4 --input " + (data / "torus_deform.json").string() + " --output json",
      "central-ext iso --input " + (data / "ext_cohomologous.json").string() + " --output json",
      "derivation-lift --input " + (data / "lift_blocked.json").string(),
  };
  for (const std::string& args : commands) {
    const Run a = run_cli(args), b = run_cli(args);
    t.expect(a.code == 0 || a.code == 1, "CLI failed: " + args);
    t.expect(!a.out.empty() && a.out == b.out && a.code == b.code, "CLI output differs across runs: " + args);
  }
  t.note(std::to_string(commands.size()) + " CLI reports repeated");
  return t.passed();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<bool(Tally&)>>> criteria = {
      {"complex squares to zero", criterion1},
      {"delta commutes with d", criterion2},
      {"golden cohomology", criterion3},
      {"semidirect, adjoint and sweeps on random inputs", criterion4},
      {"deformation suite", criterion5},
      {"extension suite", criterion6},
      {"derivation-lift suite", criterion7},
      {"restricted derivation counts", criterion8},
      {"performance and determinism", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second(t);
    } catch (const std::exception& e) {
      t.expect(false, std::string("exception: ") + e.what());
    }
    ok = ok && t.passed();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << t.summary() << "; " << std::to_string(seconds_since(t0)).substr(0, 5) << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
