#pragma once

// Shared by the unit tests and the acceptance binary: independent brute-force
// oracles and generators of random valid (and deliberately broken) inputs.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "reslie/algebra.hpp"

namespace testing_support {

using reslie::Field;
using reslie::Matrix;
using reslie::ResLieDerPair;
using reslie::RestrictedLieAlgebra;
using reslie::RestrictedRepresentation;
using reslie::Scalar;
using reslie::Vec;
using Rng = std::mt19937_64;

/// Every vector of F^n, in a fixed order.
std::vector<Vec> all_vectors(const Field& f, std::size_t n);
/// Every n x m matrix over GF(2) (requires n*m <= 20).
std::vector<Matrix> all_matrices_gf2(std::size_t rows, std::size_t cols);

// Oracle arithmetic written from the raw tables without the library's
// evaluation routines.
Vec oracle_bracket(const RestrictedLieAlgebra& g, const Vec& x, const Vec& y);
Vec oracle_square(const RestrictedLieAlgebra& g, const Vec& x);
Vec oracle_apply(const Matrix& m, const Vec& x);
Vec vsum(const Vec& a, const Vec& b);

/// All element-level axioms of a pair: bracket alternating and Jacobi on all
/// triples, ad(x^[2]) = (ad x)^2 via [x^[2], y] = [x,[x,y]] on all x, y,
/// derivation and restrictedness on all elements.
bool oracle_pair_valid(const ResLieDerPair& p);
bool oracle_derivation(const RestrictedLieAlgebra& g, const Matrix& d);
/// oracle_derivation for many candidates with one element table.
std::vector<bool> oracle_derivations(const RestrictedLieAlgebra& g, const std::vector<Matrix>& ds);

Scalar random_scalar(const Field& f, Rng& rng);
Vec random_vec(const Field& f, std::size_t n, Rng& rng);
Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, Rng& rng);
Matrix random_invertible(const Field& f, std::size_t n, Rng& rng);

/// Same pair written in the basis given by the columns of p.
ResLieDerPair change_basis(const ResLieDerPair& pair, const Matrix& p);
/// Uniformly random element of the restricted derivation space.
Matrix random_restricted_derivation(const RestrictedLieAlgebra& g, Rng& rng);
/// Abelian bracket with random squares.
RestrictedLieAlgebra random_abelian(const Field& f, std::size_t n, Rng& rng);

/// A random valid pair of dimension at most max_dim drawn from several
/// families: catalog algebras in a random basis, abelian algebras with random
/// squares, semidirect products and direct sums, each with a random
/// restricted derivation.
ResLieDerPair random_valid_pair(const Field& f, std::size_t max_dim, Rng& rng);
/// Trivial (random eta) or adjoint representation.
RestrictedRepresentation random_valid_rep(const ResLieDerPair& p, Rng& rng);

/// e0^[2] = e0 on a line over GF(2); its adjoint ResLD H^2 vanishes.
ResLieDerPair torus_line();
/// Eight valid GF(2) pairs of dimension 1 and 2 with various derivations.
std::vector<ResLieDerPair> small_pairs_gf2();

/// A random perturbation of one structure constant of the algebra or of the
/// derivation; the result may or may not be valid.
ResLieDerPair mutate(const ResLieDerPair& p, Rng& rng);

}  // namespace testing_support
