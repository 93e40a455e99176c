#pragma once

// Named example ResLieDer pairs.  All entries carry the zero derivation.
//
//   abelian1          N=1, zero bracket and square
//   nonabelian2       [e0,e1] = e1, e0^[2] = e0, e1^[2] = 0
//   heisenberg3_zero  [e0,e1] = e2, e2 central, all squares 0
//   heisenberg3_sq    same bracket, e0^[2] = e2
//   abelian_<n>       N=n, zero bracket and square

#include <string>
#include <vector>

#include "reslie/algebra.hpp"

namespace reslie {

/// Names as listed by `catalog --list`; the last one is the parameterized family.
std::vector<std::string> catalog_names();

/// Throws std::invalid_argument listing the available names when `name` is unknown.
ResLieDerPair catalog(const std::string& name, const Field& field = Field());

enum class BundledRep { trivial, adjoint };

/// The 1-dimensional trivial representation (rho = 0, eta = 0) or the adjoint one.
RestrictedRepresentation bundled_representation(const ResLieDerPair& p, BundledRep kind);

}  // namespace reslie
