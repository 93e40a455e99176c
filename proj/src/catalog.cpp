#include "reslie/catalog.hpp"

#include <charconv>
#include <stdexcept>

namespace reslie {

std::vector<std::string> catalog_names() {
  return {"abelian1", "nonabelian2", "heisenberg3_zero", "heisenberg3_sq", "abelian_n"};
}

namespace {

RestrictedLieAlgebra heisenberg(const Field& f) {
  RestrictedLieAlgebra g(f, 3);
  g.set_bracket(0, 1, {0, 0, 1});
  return g;
}

std::string unknown_name(const std::string& name) {
  std::string msg = "unknown catalog entry '" + name + "'; available:";
  for (const auto& n : catalog_names()) msg += " " + n;
  return msg;
}

}  // namespace

ResLieDerPair catalog(const std::string& name, const Field& field) {
  if (name == "abelian1") return with_zero_derivation(RestrictedLieAlgebra(field, 1));
  if (name == "nonabelian2") {
    RestrictedLieAlgebra g(field, 2);
    g.set_bracket(0, 1, {0, 1});
    g.set_square(0, {1, 0});
    return with_zero_derivation(std::move(g));
  }
  if (name == "heisenberg3_zero") return with_zero_derivation(heisenberg(field));
  if (name == "heisenberg3_sq") {
    RestrictedLieAlgebra g = heisenberg(field);
    g.set_square(0, {0, 0, 1});
    return with_zero_derivation(std::move(g));
  }
  const std::string prefix = "abelian_";
  if (name.starts_with(prefix)) {
    std::size_t n = 0;
    const char* first = name.data() + prefix.size();
    const char* last = name.data() + name.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && first != last && n >= 1 && n <= 64)
      return with_zero_derivation(RestrictedLieAlgebra(field, n));
  }
  throw std::invalid_argument(unknown_name(name));
}

RestrictedRepresentation bundled_representation(const ResLieDerPair& p, BundledRep kind) {
  if (kind == BundledRep::adjoint) return adjoint_rep(p);
  return trivial_representation(p.field(), p.dim(), 1);
}

}  // namespace reslie
