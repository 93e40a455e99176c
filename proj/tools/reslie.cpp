// Command-line front end.  Exit codes: 0 success, 1 negative mathematical
// verdict, 2 input or usage error.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "reslie/catalog.hpp"
#include "reslie/cochain.hpp"
#include "reslie/deformation.hpp"
#include "reslie/extension.hpp"
#include "reslie/io.hpp"

using namespace reslie;
using io::json;

namespace {

struct Options {
  std::string input;
  std::string complex = "reslieder";
  std::optional<std::size_t> degree;
  std::size_t max_degree = 3;
  std::string output = "text";
  std::uint64_t exhaustive_limit = kDefaultExhaustiveLimit;
  std::optional<std::size_t> order;
  bool list = false;
  std::string show;
};

struct Outcome {
  json results = json::object();
  json warnings = json::array();
  int code = 0;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

// Nested keys as indented lines; short arrays of scalars stay on one line.
void render_text(std::ostream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const auto flat = [](const json& v) {
    if (!v.is_array()) return v.is_primitive();
    for (const json& e : v)
      if (!e.is_primitive() && !(e.is_array() && std::all_of(e.begin(), e.end(), [](const json& x) {
                                  return x.is_primitive();
                                })))
        return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (flat(v) || (v.is_object() && v.empty())) {
        out << pad << k << ": " << scalar_text(v) << "\n";
      } else {
        out << pad << k << ":\n";
        render_text(out, v, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const json& v : j) {
      if (flat(v)) {
        out << pad << "- " << scalar_text(v) << "\n";
      } else {
        out << pad << "-\n";
        render_text(out, v, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

ComplexKind parse_kind(const std::string& s) { return s == "star2" ? ComplexKind::star2 : ComplexKind::reslieder; }

const ResLieDerPair& need_pair(const io::InputDocument& in) {
  if (!in.pair) throw io::SchemaError(":/dim", "missing field (this command needs an algebra)");
  return *in.pair;
}

// Validation of the document's pair; fills out.results and sets exit 1 when invalid.
bool check_pair(const ResLieDerPair& p, std::uint64_t limit, Outcome& out, const char* key = "validation") {
  const ValidationReport ra = validate_algebra(p.algebra, limit);
  json v;
  v["algebra"] = io::to_json(ra);
  bool ok = ra.valid();
  if (ok) {
    ValidationReport rp = validate_pair(p);
    rp.merge(sweep_pair(p, limit));
    v["pair"] = io::to_json(rp);
    ok = rp.valid();
  }
  if (!ok) {
    out.results[key] = std::move(v);
    out.code = 1;
  }
  return ok;
}

std::optional<RestrictedRepresentation> resolve_rep(const io::InputDocument& in, const ResLieDerPair& p,
                                                    std::uint64_t limit, Outcome& out) {
  RestrictedRepresentation r;
  if (in.adjoint_representation) {
    r = adjoint_rep(p);
  } else if (in.representation) {
    r = *in.representation;
  } else {
    r = bundled_representation(p, BundledRep::trivial);
    out.warnings.push_back("no representation given; using the trivial 1-dimensional one");
  }
  ValidationReport rr = validate_representation(p, r);
  if (rr.valid()) rr.merge(sweep_representation(p, r, limit));
  if (!rr.valid()) {
    out.results["representation"] = io::to_json(rr);
    out.code = 1;
    return std::nullopt;
  }
  return r;
}

json cochain_out(const ComplexContext& ctx, std::size_t n, const Vec& coords) {
  if (ctx.kind() == ComplexKind::star2) return io::cochain_json(ctx.shape(n), Cochain{n, coords});
  return io::pair_cochain_json(ctx, split_pair(ctx, n, coords));
}

Outcome cmd_validate(const io::InputDocument& in, const Options& o) {
  Outcome out;
  const ResLieDerPair& p = need_pair(in);
  const ValidationReport ra = validate_algebra(p.algebra, o.exhaustive_limit);
  out.results["sweep_performed"] = sweep_feasible(p.field(), p.dim(), o.exhaustive_limit);
  out.results["algebra"] = io::to_json(ra);
  bool ok = ra.valid();
  if (ok) {
    ValidationReport rp = validate_pair(p);
    rp.merge(sweep_pair(p, o.exhaustive_limit));
    out.results["pair"] = io::to_json(rp);
    ok = rp.valid();
    if (ok && (in.representation || in.adjoint_representation)) {
      const RestrictedRepresentation r = in.adjoint_representation ? adjoint_rep(p) : *in.representation;
      ValidationReport rr = validate_representation(p, r);
      if (rr.valid()) rr.merge(sweep_representation(p, r, o.exhaustive_limit));
      out.results["representation"] = io::to_json(rr);
      ok = rr.valid();
    }
  } else {
    out.results["pair"] = nullptr;
  }
  out.results["valid"] = ok;
  out.code = ok ? 0 : 1;
  return out;
}

Outcome cmd_cohomology(const io::InputDocument& in, const Options& o) {
  Outcome out;
  const ResLieDerPair& p = need_pair(in);
  if (!check_pair(p, o.exhaustive_limit, out)) return out;
  const auto rep = resolve_rep(in, p, o.exhaustive_limit, out);
  if (!rep) return out;
  const ComplexContext ctx(p, *rep, parse_kind(o.complex));
  const std::size_t lo = o.degree ? *o.degree : min_degree(ctx);
  const std::size_t hi = o.degree ? *o.degree : o.max_degree;
  if (lo < min_degree(ctx)) throw InputError("degree " + std::to_string(lo) + " is below the lowest degree of the complex");
  out.results["complex"] = to_string(ctx.kind());
  out.results["algebra_dim"] = ctx.algebra_dim();
  out.results["module_dim"] = ctx.module_dim();
  json betti = json::array();
  json degrees = json::array();
  for (std::size_t n = 0; n <= hi; ++n) {
    if (n < lo) {
      betti.push_back(nullptr);
      continue;
    }
    const CohomologyResult r = cohomology(ctx, n);
    betti.push_back(r.betti);
    degrees.push_back(json{{"degree", n},
                           {"cochain_dim", r.cochain_dim},
                           {"cocycle_dim", r.cocycle_dim},
                           {"coboundary_dim", r.coboundary_dim},
                           {"betti", r.betti}});
  }
  out.results["betti"] = std::move(betti);
  out.results["degrees"] = std::move(degrees);
  return out;
}

Outcome cmd_cocycles(const io::InputDocument& in, const Options& o) {
  Outcome out;
  const ResLieDerPair& p = need_pair(in);
  if (!check_pair(p, o.exhaustive_limit, out)) return out;
  const auto rep = resolve_rep(in, p, o.exhaustive_limit, out);
  if (!rep) return out;
  const ComplexContext ctx(p, *rep, parse_kind(o.complex));
  const std::size_t n = o.degree.value_or(2);
  if (n < min_degree(ctx)) throw InputError("degree " + std::to_string(n) + " is below the lowest degree of the complex");
  const CohomologyResult r = cohomology(ctx, n);
  const SubspaceData reps = extend_to_basis(r.coboundaries, r.cocycles);
  out.results["complex"] = to_string(ctx.kind());
  out.results["degree"] = n;
  out.results["cocycle_dim"] = r.cocycle_dim;
  out.results["betti"] = r.betti;
  json rj = json::array();
  for (std::size_t i = 0; i < reps.dim(); ++i) rj.push_back(cochain_out(ctx, n, reps.vector(i)));
  out.results["representatives"] = std::move(rj);
  json zj = json::array();
  for (std::size_t i = 0; i < r.cocycles.dim(); ++i) zj.push_back(cochain_out(ctx, n, r.cocycles.vector(i)));
  out.results["cocycle_basis"] = std::move(zj);
  return out;
}

Outcome cmd_semidirect(const io::InputDocument& in, const Options& o) {
  Outcome out;
  const ResLieDerPair& p = need_pair(in);
  if (!check_pair(p, o.exhaustive_limit, out)) return out;
  const auto rep = resolve_rep(in, p, o.exhaustive_limit, out);
  if (!rep) return out;
  const ResLieDerPair sd = semidirect_product(p, *rep);
  ValidationReport v = validate_algebra(sd.algebra, o.exhaustive_limit);
  v.merge(validate_pair(sd));
  out.results["pair"] = io::pair_json(sd);
  out.results["validation"] = io::to_json(v);
  out.code = v.valid() ? 0 : 1;
  return out;
}

const TruncatedDeformation& need_deformation(const io::InputDocument& in) {
  if (!in.deformation) throw io::SchemaError(":/deformation", "missing field");
  return *in.deformation;
}

json failures_json(const DeformationReport& r) {
  json fs = json::array();
  for (const DeformationFailure& f : r.failures)
    fs.push_back(json{{"equation", f.equation}, {"order", f.order}, {"witness", f.witness}, {"value", io::vec_json(f.value)}});
  return fs;
}

// Rejects malformed deformations as input errors and reports invalid ones.
bool check_deformation_input(const ResLieDerPair& p, const TruncatedDeformation& d, Outcome& out) {
  DeformationReport r;
  try {
    r = check_deformation(p, d);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("deformation: ") + e.what());
  }
  out.results["valid"] = r.valid();
  if (!r.valid()) {
    out.results["failures"] = failures_json(r);
    out.code = 1;
  }
  return r.valid();
}

Outcome cmd_deform(const std::string& action, const io::InputDocument& in, const Options& o) {
  Outcome out;
  const ResLieDerPair& p = need_pair(in);
  if (!check_pair(p, o.exhaustive_limit, out)) return out;
  const TruncatedDeformation& d = need_deformation(in);
  out.results["action"] = action;
  out.results["order"] = d.order();
  if (!check_deformation_input(p, d, out)) return out;
  const ComplexContext ctx = deformation_context(p);

  if (action == "check") return out;
  if (action == "infinitesimal") {
    if (d.order() == 0) throw InputError("deformation of order 0 has no infinitesimal");
    const Infinitesimal inf = infinitesimal(p, d);
    out.results["infinitesimal"] = io::pair_cochain_json(ctx, inf.cochain);
    out.results["cocycle"] = inf.cocycle;
    out.code = inf.cocycle ? 0 : 1;
  } else if (action == "obstruction") {
    const ObstructionResult ob = obstruction(p, d);
    out.results["obstruction"] = io::pair_cochain_json(ctx, ob.cochain);
    out.results["is_cocycle"] = ob.is_cocycle;
    out.results["trivial"] = ob.trivial;
    out.results["witness"] = ob.witness ? io::pair_cochain_json(ctx, *ob.witness) : json(nullptr);
    out.code = ob.trivial ? 0 : 1;
  } else if (action == "extend") {
    const std::size_t target = o.order.value_or(d.order() + 1);
    TruncatedDeformation cur = d;
    bool blocked = false;
    while (cur.order() < target) {
      auto next = extend_deformation(p, cur);
      if (!next) {
        blocked = true;
        break;
      }
      cur = std::move(*next);
    }
    out.results["target_order"] = target;
    out.results["reached_order"] = cur.order();
    out.results["blocked"] = blocked;
    out.results["deformation"] = io::deformation_json(cur);
    out.code = blocked ? 1 : 0;
  } else if (action == "trivialize") {
    const EquivalenceTranscript tr = trivialize(p, d);
    const RigidityCertificate rc = rigidity_certificate(p);
    json steps = json::array();
    for (const auto& [k, pi] : tr.steps) steps.push_back(json{{"order", k}, {"pi", io::to_json(pi)}});
    out.results["success"] = tr.success();
    out.results["steps"] = std::move(steps);
    out.results["blocked_at"] = tr.blocked_at ? json{{"order", tr.blocked_at->order},
                                                     {"class_coords", io::vec_json(tr.blocked_at->class_coords)}}
                                              : json(nullptr);
    out.results["result"] = io::deformation_json(tr.result);
    out.results["h2"] = rc.h2;
    out.results["rigid_certified"] = rc.rigid_certified;
    out.code = tr.success() ? 0 : 1;
  }
  return out;
}

const io::ExtensionDocument& need_extension(const io::InputDocument& in) {
  if (!in.extension) throw io::SchemaError(":/extension", "missing field");
  return *in.extension;
}

bool check_extension_inputs(const io::ExtensionDocument& e, std::uint64_t limit, Outcome& out) {
  if (!check_pair(e.g, limit, out, "g_validation")) return false;
  if (!check_pair(e.h, limit, out, "h_validation")) return false;
  if (!is_strongly_abelian(e.h)) {
    out.results["error"] = "h is not strongly abelian";
    out.code = 1;
    return false;
  }
  return true;
}

json extension_json(const BuiltExtension& ext) {
  return json{{"ghat", io::pair_json(ext.ghat)},
              {"inclusion", io::to_json(ext.inclusion)},
              {"projection", io::to_json(ext.projection)},
              {"canonical_section", io::to_json(ext.canonical_section)}};
}

Outcome cmd_central_ext(const std::string& action, const io::InputDocument& in, const Options& o) {
  Outcome out;
  const io::ExtensionDocument& e = need_extension(in);
  out.results["action"] = action;
  if (!check_extension_inputs(e, o.exhaustive_limit, out)) return out;
  const ComplexContext ctx = extension_context(e.g, e.h);

  const auto build = [&](const PairCochain& c, const char* key) -> std::optional<BuiltExtension> {
    try {
      return build_central_extension({e.g, e.h, c});
    } catch (const std::invalid_argument& err) {
      out.results[key] = err.what();
      out.code = 1;
      return std::nullopt;
    }
  };

  const auto ext = build(e.cocycle, "error");
  if (!ext) return out;
  if (action == "build") {
    out.results["extension"] = extension_json(*ext);
    ValidationReport v = validate_algebra(ext->ghat.algebra, o.exhaustive_limit);
    v.merge(validate_pair(ext->ghat));
    out.results["validation"] = io::to_json(v);
    out.code = v.valid() ? 0 : 1;
  } else if (action == "extract") {
    const Matrix s = e.section.value_or(ext->canonical_section);
    PairCochain c;
    try {
      c = extract_cocycle(*ext, s);
    } catch (const std::invalid_argument& err) {
      throw InputError(std::string("section: ") + err.what());
    }
    Vec diff = c.coords();
    const Vec orig = e.cocycle.coords();
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] ^= orig[i];
    const auto w = coboundary_witness(ctx, 2, diff);
    out.results["section"] = io::to_json(s);
    out.results["cocycle"] = io::pair_cochain_json(ctx, c);
    out.results["cohomologous_to_input"] = w.has_value();
    out.code = w ? 0 : 1;
  } else if (action == "iso") {
    if (!e.cocycle2) throw io::SchemaError(":/extension/cocycle2", "missing field (iso compares two cocycles)");
    if (!build(*e.cocycle2, "error")) return out;
    const auto iso = extensions_isomorphic(e.cocycle, *e.cocycle2, e.g, e.h);
    out.results["isomorphic"] = iso.has_value();
    out.results["nu"] = iso ? io::to_json(iso->nu) : json(nullptr);
    out.results["iso"] = iso ? io::to_json(iso->iso) : json(nullptr);
    out.code = iso ? 0 : 1;
  }
  return out;
}

Outcome cmd_derivation_lift(const io::InputDocument& in, const Options& o) {
  Outcome out;
  const io::ExtensionDocument& e = need_extension(in);
  if (!check_extension_inputs(e, o.exhaustive_limit, out)) return out;
  if (!is_zero(e.cocycle.low.coords))
    out.warnings.push_back("the derivation part of the cocycle is ignored; only (psi, sigma) define the extension");
  std::optional<BuiltExtension> ext;
  try {
    ext = build_algebra_extension(e.g.algebra, e.h.algebra, e.cocycle.top);
  } catch (const std::invalid_argument& err) {
    out.results["error"] = err.what();
    out.code = 1;
    return out;
  }
  const Matrix s = e.section.value_or(ext->canonical_section);
  DerivationObstruction ob;
  try {
    ob = derivation_obstruction(*ext, e.h.derivation, e.g.derivation, s);
  } catch (const std::invalid_argument& err) {
    throw InputError(err.what());
  }
  const ComplexContext ctx = algebra_extension_context(e.g.algebra, e.h.dim());
  out.results["obstruction"] = io::cochain_json(ctx.shape(2), ob.cochain);
  out.results["is_cocycle"] = ob.is_cocycle;
  out.results["trivial"] = ob.trivial;
  out.results["gamma"] = ob.witness ? io::to_json(*ob.witness) : json(nullptr);
  const auto lift = lift_derivation_pair(*ext, e.h.derivation, e.g.derivation);
  out.results["ghat"] = io::pair_json(ResLieDerPair{ext->ghat.algebra, lift.value_or(Matrix(e.g.field(), 0, 0))});
  if (!lift) out.results["ghat"].erase("derivation");
  out.results["lift"] = lift ? io::to_json(*lift) : json(nullptr);
  const PhiAction phi = phi_action(e.g.algebra, e.h.algebra, e.h.derivation, e.g.derivation);
  out.results["phi"] = json{{"h2_dim", phi.representatives.dim()}, {"rank", rank(phi.matrix)}, {"is_zero", phi.is_zero}};
  out.code = lift ? 0 : 1;
  return out;
}

Outcome cmd_catalog(const Options& o) {
  Outcome out;
  if (!o.show.empty()) {
    try {
      out.results["pair"] = io::pair_json(catalog(o.show));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    return out;
  }
  out.results["names"] = catalog_names();
  return out;
}

void add_common(CLI::App* sc, Options& o, bool input = true) {
  if (input) sc->add_option("--input", o.input, "input document (JSON)")->required();
  sc->add_option("--output", o.output, "report format")->check(CLI::IsMember({"text", "json"}));
  sc->add_option("--exhaustive-limit", o.exhaustive_limit, "element sweeps run when |F|^N is at most this");
}

void add_degrees(CLI::App* sc, Options& o) {
  sc->add_option("--complex", o.complex, "cochain complex")->check(CLI::IsMember({"star2", "reslieder"}));
  sc->add_option("--degree", o.degree, "single degree");
  sc->add_option("--max-degree", o.max_degree, "highest degree (default 3)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology, deformations and extensions of restricted Lie algebras with derivations (char 2)", "reslie"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "check algebra, pair and representation axioms");
  add_common(validate, o);
  auto* coh = app.add_subcommand("cohomology", "Betti numbers and cochain dimensions");
  add_common(coh, o);
  add_degrees(coh, o);
  auto* cocyc = app.add_subcommand("cocycles", "cocycle basis and class representatives");
  add_common(cocyc, o);
  add_degrees(cocyc, o);
  auto* semi = app.add_subcommand("semidirect", "semidirect product with the representation");
  add_common(semi, o);

  auto* deform = app.add_subcommand("deform", "truncated deformations");
  deform->require_subcommand(1);
  std::vector<CLI::App*> deform_actions;
  for (const auto& [name, help] : std::initializer_list<std::pair<const char*, const char*>>{
           {"check", "verify the deformation equations order by order"},
           {"infinitesimal", "order-1 term as a 2-cochain and its cocycle test"},
           {"obstruction", "obstruction to the next order and its class"},
           {"extend", "extend order by order while obstructions vanish"},
           {"trivialize", "search for an equivalence to the trivial deformation"}}) {
    auto* sc = deform->add_subcommand(name, help);
    add_common(sc, o);
    if (std::string(name) == "extend") sc->add_option("--order", o.order, "target order (default: one more)");
    deform_actions.push_back(sc);
  }

  auto* cext = app.add_subcommand("central-ext", "central extensions by a strongly abelian pair");
  cext->require_subcommand(1);
  std::vector<CLI::App*> cext_actions;
  for (const auto& [name, help] : std::initializer_list<std::pair<const char*, const char*>>{
           {"build", "assemble the extension from a 2-cocycle"},
           {"extract", "recover the cocycle through a section"},
           {"iso", "decide isomorphism of the extensions of cocycle and cocycle2"}}) {
    auto* sc = cext->add_subcommand(name, help);
    add_common(sc, o);
    cext_actions.push_back(sc);
  }

  auto* lift = app.add_subcommand("derivation-lift", "lift a derivation pair to a central extension");
  add_common(lift, o);

  auto* cat = app.add_subcommand("catalog", "bundled example algebras");
  add_common(cat, o, false);
  cat->add_flag("--list", o.list, "list the names");
  cat->add_option("--show", o.show, "print one entry as an input document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  std::string command;
  Outcome out;
  std::vector<std::string> sources;
  try {
    if (cat->parsed()) {
      command = "catalog";
      out = cmd_catalog(o);
    } else {
      const io::InputDocument in = io::parse_input(o.input);
      sources = in.sources;
      if (validate->parsed()) {
        command = "validate";
        out = cmd_validate(in, o);
      } else if (coh->parsed()) {
        command = "cohomology";
        out = cmd_cohomology(in, o);
      } else if (cocyc->parsed()) {
        command = "cocycles";
        out = cmd_cocycles(in, o);
      } else if (semi->parsed()) {
        command = "semidirect";
        out = cmd_semidirect(in, o);
      } else if (lift->parsed()) {
        command = "derivation-lift";
        out = cmd_derivation_lift(in, o);
      } else if (deform->parsed()) {
        for (auto* sc : deform_actions)
          if (sc->parsed()) {
            command = "deform " + sc->get_name();
            out = cmd_deform(sc->get_name(), in, o);
          }
      } else {
        for (auto* sc : cext_actions)
          if (sc->parsed()) {
            command = "central-ext " + sc->get_name();
            out = cmd_central_ext(sc->get_name(), in, o);
          }
      }
    }
  } catch (const io::SchemaError& e) {
    std::cerr << "error: " << (e.path().starts_with(":") ? o.input : std::string()) << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  json report;
  report["command"] = command;
  report["inputs_digest"] = io::digest(sources);
  report["results"] = std::move(out.results);
  report["warnings"] = std::move(out.warnings);
  if (o.output == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    render_text(std::cout, report, 0);
  }
  return out.code;
}
