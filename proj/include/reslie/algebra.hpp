#pragma once

// Restricted Lie algebras over GF(2^k), restricted derivations, ResLieDer
// pairs and restricted representations.
//
// An algebra is stored by structure constants on a basis e_0..e_{N-1}:
// bracket(a, b) holds the coordinates of [e_a, e_b] and square(a) those of
// e_a^[2].  The 2-mapping of a general element is defined by
//
//   (sum_a x_a e_a)^[2] = sum_a x_a^2 e_a^[2] + sum_{a<b} x_a x_b [e_a, e_b],
//
// which is the unique extension compatible with (x+y)^[2] = x^[2] + y^[2] + [x,y]
// and (t x)^[2] = t^2 x^[2].

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "reslie/field.hpp"
#include "reslie/matrix.hpp"

namespace reslie {

class RestrictedLieAlgebra {
 public:
  RestrictedLieAlgebra() = default;
  /// Zero bracket and zero 2-mapping.
  RestrictedLieAlgebra(Field field, std::size_t dim);

  const Field& field() const { return field_; }
  std::size_t dim() const { return dim_; }

  const Vec& bracket(std::size_t a, std::size_t b) const { return bracket_[a * dim_ + b]; }
  const Vec& square(std::size_t a) const { return square_[a]; }

  /// Sets [e_a, e_b] and [e_b, e_a] together.
  void set_bracket(std::size_t a, std::size_t b, Vec value);
  /// Sets only the (a, b) slot; used to describe malformed tensors.
  void set_bracket_entry(std::size_t a, std::size_t b, Vec value);
  void set_square(std::size_t a, Vec value);

  /// [x, y] by bilinear extension.
  Vec bracket_eval(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// x^[2] by the evaluation rule above.
  Vec two_map_eval(std::span<const Scalar> x) const;
  /// ad e_a as an N x N matrix (column b = [e_a, e_b]).
  Matrix ad(std::size_t a) const;
  Matrix ad(std::span<const Scalar> x) const;

  friend bool operator==(const RestrictedLieAlgebra&, const RestrictedLieAlgebra&) = default;

 private:
  void check_vec(std::span<const Scalar> v) const;

  Field field_;
  std::size_t dim_ = 0;
  std::vector<Vec> bracket_;
  std::vector<Vec> square_;
};

struct ResLieDerPair {
  RestrictedLieAlgebra algebra;
  Matrix derivation;  // column a = D e_a

  std::size_t dim() const { return algebra.dim(); }
  const Field& field() const { return algebra.field(); }
};

/// Pair with the zero derivation.
ResLieDerPair with_zero_derivation(RestrictedLieAlgebra algebra);

struct RestrictedRepresentation {
  std::size_t dim = 0;
  std::vector<Matrix> rho;  // rho[a] = rho(e_a), dim x dim
  Matrix eta;               // compatible endomorphism of V

  /// rho(x) = sum_a x_a rho(e_a).
  Matrix action(std::span<const Scalar> x) const;
};

/// (V, 0, eta): the zero action.
RestrictedRepresentation trivial_representation(const Field& field, std::size_t algebra_dim,
                                                std::size_t dim, const Matrix* eta = nullptr);

struct ValidationFailure {
  std::string axiom;
  std::vector<std::size_t> witness;  // basis indices or element indices of a sweep
  Vec lhs;  // flattened row-major when the compared values are matrices
  Vec rhs;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;
  bool valid() const { return failures.empty(); }
  void merge(const ValidationReport& other);
};

inline constexpr std::uint64_t kDefaultExhaustiveLimit = 4096;

/// Tensor shape, Jacobi on basis triples and ad(e_a^[2]) = (ad e_a)^2.  When
/// |F|^N <= exhaustive_limit also sweeps every element (see sweep_algebra).
ValidationReport validate_algebra(const RestrictedLieAlgebra& a,
                                  std::uint64_t exhaustive_limit = kDefaultExhaustiveLimit);

/// Derivation identity on basis pairs and D(e_a^[2]) = [e_a, D e_a] on basis
/// elements.  Together with the derivation identity the basis condition
/// implies D(x^[2]) = [x, D x] for every x.
ValidationReport validate_pair(const ResLieDerPair& p);

/// The three representation identities on basis indices.
ValidationReport validate_representation(const ResLieDerPair& p, const RestrictedRepresentation& r);

// Element sweeps.  These enumerate every element of the algebra (and every
// pair of elements where the identity is bilinear) and serve as independent
// oracles for the basis-level validators.  They return an empty report
// without checking anything when |F|^N exceeds the limit; use
// sweep_feasible() to tell the cases apart.
bool sweep_feasible(const Field& field, std::size_t dim, std::uint64_t limit);
ValidationReport sweep_algebra(const RestrictedLieAlgebra& a, std::uint64_t limit);
ValidationReport sweep_pair(const ResLieDerPair& p, std::uint64_t limit);
ValidationReport sweep_representation(const ResLieDerPair& p, const RestrictedRepresentation& r,
                                      std::uint64_t limit);

/// (ad, D) on g itself.  Requires a valid pair.
RestrictedRepresentation adjoint_rep(const ResLieDerPair& p);

/// g + V with [x+u, y+v] = [x,y] + rho(x)v + rho(y)u, (x+u)^[2] = x^[2] + rho(x)u
/// and derivation D + eta.  Basis: g first, then V.
ResLieDerPair semidirect_product(const ResLieDerPair& p, const RestrictedRepresentation& r);

bool is_strongly_abelian(const RestrictedLieAlgebra& a);
inline bool is_strongly_abelian(const ResLieDerPair& p) { return is_strongly_abelian(p.algebra); }

struct DerivationSpace {
  std::size_t dimension = 0;
  std::vector<Matrix> basis;
  /// |F|^dimension when it fits in 64 bits.
  std::optional<std::uint64_t> count;
};

/// Restricted derivations of `a`: both identities are linear in D, so the
/// solution set is the nullspace of an (N * C(N,2) + N^2) x N^2 system.
DerivationSpace restricted_derivations(const RestrictedLieAlgebra& a);

}  // namespace reslie
