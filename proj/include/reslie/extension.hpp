#pragma once

// Central extensions 0 -> h -> ghat -> g -> 0 of ResLieDer pairs by a
// strongly abelian pair h, and lifts of derivation pairs to them.
//
// Cocycles live in the complexes of g with values in the trivial
// representation (h, rho = 0, eta = D_h).  A built extension has basis
// g first, then h:
//
//   [x + h1, y + h2] = [x, y] + psi(x, y)
//   (x + h)^[2]      = x^[2] + sigma(x)
//   D(x + h)         = D_g x + tau(x) + D_h h
//
// Maps from g to h (sections relative to the canonical one, witnesses,
// isomorphism data) are H x N matrices; as 1-cochains their coordinate
// a * H + m is the m-th component of the image of e_a.

#include <cstddef>
#include <optional>
#include <string>

#include "reslie/algebra.hpp"
#include "reslie/cochain.hpp"

namespace reslie {

struct CentralExtensionSpec {
  ResLieDerPair g;
  ResLieDerPair h;        // strongly abelian
  PairCochain cocycle;    // degree 2 in extension_context(g, h)
};

struct BuiltExtension {
  ResLieDerPair g;
  ResLieDerPair h;
  ResLieDerPair ghat;
  Matrix inclusion;          // (N+H) x H
  Matrix projection;         // N x (N+H)
  Matrix canonical_section;  // (N+H) x N
};

/// ResLD complex of g with values in (h, 0, D_h).
ComplexContext extension_context(const ResLieDerPair& g, const ResLieDerPair& h);
/// Star2 complex of the algebra g with values in the trivial module of dimension h_dim.
ComplexContext algebra_extension_context(const RestrictedLieAlgebra& g, std::size_t h_dim);

Vec map_coords(const Matrix& m);  // H x N matrix -> 1-cochain coordinates
Matrix map_from_coords(const Field& f, std::size_t h_dim, std::size_t g_dim, std::span<const Scalar> coords);

/// Throws std::invalid_argument("not a 2-cocycle: ...") naming the first
/// failing identity (jacobi, two-map, derivation, restricted-derivation), or
/// for an h that is not strongly abelian.
BuiltExtension build_central_extension(const CentralExtensionSpec& spec);

/// Central extension of restricted Lie algebras from a star2 2-cocycle
/// (psi, sigma); all derivations are zero.
BuiltExtension build_algebra_extension(const RestrictedLieAlgebra& g, const RestrictedLieAlgebra& h,
                                       const Cochain& cocycle);

/// ((psi, sigma), tau) relative to `section`.  Throws std::invalid_argument
/// when projection * section != Id or a value falls outside the image of h.
PairCochain extract_cocycle(const BuiltExtension& ext, const Matrix& section);

struct ExtensionIsomorphism {
  Matrix nu;   // H x N, c1 = c2 + vartheta^1 nu
  Matrix iso;  // x + h -> x + nu(x) + h, from the extension of c1 to that of c2
};

/// Present iff c1 - c2 is a coboundary.  The map is checked to be a
/// morphism of pairs commuting with inclusion and projection.
std::optional<ExtensionIsomorphism> extensions_isomorphic(const PairCochain& c1, const PairCochain& c2,
                                                          const ResLieDerPair& g, const ResLieDerPair& h);

/// True when m maps ext1.ghat to ext2.ghat as a pair morphism, m i = i and
/// theta m = theta.
bool is_extension_morphism(const BuiltExtension& ext1, const BuiltExtension& ext2, const Matrix& m);

struct DerivationObstruction {
  Cochain cochain;  // degree 2 in algebra_extension_context(g, H)
  bool is_cocycle = false;
  bool trivial = false;
  std::optional<Matrix> witness;  // gamma, H x N
};

/// Obstruction to lifting (D_h, D_g) to ext.ghat, computed from `section`.
/// The derivations stored in ext are ignored.  Throws std::invalid_argument
/// when D_h or D_g is not a restricted derivation.
DerivationObstruction derivation_obstruction(const BuiltExtension& ext, const Matrix& d_h, const Matrix& d_g,
                                             const Matrix& section);

/// A restricted derivation of ext.ghat commuting with inclusion and
/// projection, or nullopt when the obstruction class is nonzero.
std::optional<Matrix> lift_derivation_pair(const BuiltExtension& ext, const Matrix& d_h, const Matrix& d_g);

/// The Phi formula on a star2 2-cochain (psi, sigma) with values in h.
Cochain phi_formula(const ComplexContext& ctx, const Matrix& d_h, const Matrix& d_g, const Cochain& c);

struct PhiAction {
  SubspaceData representatives;  // cocycles whose classes form a basis of H^2_{*2}(g; h)
  Matrix matrix;                 // column i = class of Phi(representative i)
  bool is_zero = true;
};

/// Throws std::domain_error("Phi not well-defined: ...") if Phi sends a
/// coboundary outside the coboundaries.
PhiAction phi_action(const RestrictedLieAlgebra& g, const RestrictedLieAlgebra& h, const Matrix& d_h,
                     const Matrix& d_g);

}  // namespace reslie
