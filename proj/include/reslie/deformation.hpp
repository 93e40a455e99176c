#pragma once

// Truncated 1-parameter deformations of a ResLieDer pair.
//
// A deformation of order n is a list of terms (mu_i, sigma_i, D_i), i = 0..n,
// with term 0 equal to (bracket, square, derivation) of the base pair.  All
// t-arithmetic is in F[t]/(t^{n+1}).  sigma_i is stored on basis vectors and
// extended by
//
//   sigma_i(sum x_a e_a) = sum_a x_a^2 sigma_i(e_a) + sum_{a<b} x_a x_b mu_i(e_a, e_b).
//
// A term of positive order is identified with a degree-2 ResLD cochain with
// values in the adjoint representation: phi_2 = mu, omega_2 = sigma,
// phi_1 = D.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "reslie/algebra.hpp"
#include "reslie/cochain.hpp"

namespace reslie {

struct DeformationTerm {
  std::vector<Vec> mu;     // mu[a * N + b] = mu(e_a, e_b)
  std::vector<Vec> sigma;  // sigma[a] = sigma(e_a)
  Matrix D;                // column a = D e_a

  friend bool operator==(const DeformationTerm&, const DeformationTerm&) = default;
};

DeformationTerm zero_term(const Field& field, std::size_t dim);
DeformationTerm base_term(const ResLieDerPair& p);
bool is_zero(const DeformationTerm& t);

struct TruncatedDeformation {
  std::vector<DeformationTerm> terms;

  std::size_t order() const { return terms.size() - 1; }
};

/// Base pair with zero terms up to `order`.
TruncatedDeformation trivial_deformation(const ResLieDerPair& p, std::size_t order);

// Evaluation of a single term at arbitrary elements.
Vec mu_eval(const Field& f, const DeformationTerm& t, const Vec& x, const Vec& y);
Vec sigma_eval(const Field& f, const DeformationTerm& t, const Vec& x);

/// The adjoint ResLD context of `p`, where deformation cochains live.
ComplexContext deformation_context(const ResLieDerPair& p);
/// Endomorphisms of g as 1-cochains: coordinate a * N + m is (pi e_a)_m.
Vec endomorphism_coords(const Matrix& m);
Matrix endomorphism_from_coords(const Field& f, std::size_t n, std::span<const Scalar> coords);
PairCochain term_to_cochain(const ComplexContext& ctx, const DeformationTerm& t);
DeformationTerm cochain_to_term(const ComplexContext& ctx, const PairCochain& c);

struct DeformationFailure {
  std::string equation;  // jacobi, two-map-compat, derivation, restricted-der
  std::size_t order = 0;
  std::vector<std::size_t> witness;  // basis indices
  Vec value;
};

struct DeformationReport {
  std::vector<DeformationFailure> failures;
  bool valid() const { return failures.empty(); }
};

/// Checks the per-order identities for k = 0..n.  The cubic and bilinear ones
/// run on basis tuples; the two quadratic-in-x ones on x in {e_a} and
/// {e_a + e_b : a < b}.  For the quadratic identities the witness lists the
/// indices making up x, then the index of y when present.
/// Throws std::invalid_argument if term 0 differs from the pair or a term has
/// the wrong shape or a non-alternating mu.
DeformationReport check_deformation(const ResLieDerPair& p, const TruncatedDeformation& d);

struct Infinitesimal {
  PairCochain cochain;
  bool cocycle = false;
};

/// Term 1 as a degree-2 ResLD cochain; throws for order 0.
Infinitesimal infinitesimal(const ResLieDerPair& p, const TruncatedDeformation& d);

struct ObstructionResult {
  PairCochain cochain;  // degrees (3, 2)
  bool is_cocycle = false;
  bool trivial = false;
  std::optional<PairCochain> witness;  // degrees (2, 1), vartheta^2 witness = cochain
};

/// Throws std::invalid_argument when d is not a valid deformation.
ObstructionResult obstruction(const ResLieDerPair& p, const TruncatedDeformation& d);

/// d extended by the obstruction witness, or nullopt when the obstruction
/// class is nonzero.  The result is re-checked.
std::optional<TruncatedDeformation> extend_deformation(const ResLieDerPair& p, const TruncatedDeformation& d);

/// Transform by pi_t = Id + sum_k pi_k t^k (the k need not be distinct; equal
/// orders add up).  Returns pi_t^{-1} mu_t(pi_t, pi_t), pi_t^{-1} sigma_t pi_t
/// and pi_t^{-1} D_t pi_t truncated at the order of d.
TruncatedDeformation apply_formal_isomorphism(const TruncatedDeformation& d,
                                              const std::vector<std::pair<std::size_t, Matrix>>& steps);

struct EquivalenceTranscript {
  /// Applied one after another, each as a single-step formal isomorphism.
  std::vector<std::pair<std::size_t, Matrix>> steps;
  struct Blocked {
    std::size_t order = 0;
    Vec class_coords;  // in the basis of H^2 given by extend_to_basis
  };
  std::optional<Blocked> blocked_at;
  TruncatedDeformation result;  // d after all recorded steps

  bool success() const { return !blocked_at.has_value(); }
};

EquivalenceTranscript trivialize(const ResLieDerPair& p, const TruncatedDeformation& d);

struct RigidityCertificate {
  std::size_t h2 = 0;
  bool rigid_certified = false;
};

/// rigid_certified when H^2_ResLD(g; g) = 0.  A false value proves nothing.
RigidityCertificate rigidity_certificate(const ResLieDerPair& p);

}  // namespace reslie
