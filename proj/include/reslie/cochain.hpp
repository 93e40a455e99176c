#pragma once

// Cochain complexes C_{*2}(g;V) and C_ResLD(g;V) in characteristic 2.
//
// A degree-n star2 cochain is a pair (phi, omega): phi is alternating n-linear,
// omega is quadratic in its first argument and alternating multilinear in the
// remaining n-2.  Coordinates:
//
//   phi block    (increasing tuple I of size n in lex order, m)
//   omega block  (basis index a, increasing tuple J of size n-2 in lex order, m)
//
// phi block first, m fastest.  omega(e_a; J) is stored for every a, also
// when a occurs in J.  A ResLD n-cochain is the star2 n-cochain followed by
// the star2 (n-1)-cochain; for n = 1 the second part is empty.
//
// omega on a general first argument follows the quadratic rule
//   omega(sum x_a e_a; zs) = sum_a x_a^2 omega(e_a; zs) + sum_{a<b} x_a x_b phi(e_a, e_b, zs).

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reslie/algebra.hpp"
#include "reslie/matrix.hpp"

namespace reslie {

enum class ComplexKind { star2, reslieder };

std::string to_string(ComplexKind kind);

/// Subsets of {0..n-1} as bitmasks, enumerated per size in lex order of the
/// increasing index tuple.
class SubsetIndex {
 public:
  explicit SubsetIndex(std::size_t n);
  std::size_t universe() const { return n_; }
  /// C(n, k); 0 when k > n.
  std::size_t count(std::size_t k) const;
  const std::vector<std::uint32_t>& subsets(std::size_t k) const;
  /// Position of `mask` among the subsets of the same size.
  std::size_t rank(std::uint32_t mask) const { return rank_[mask]; }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint32_t>> by_size_;
  std::vector<std::uint32_t> rank_;
};

std::vector<std::size_t> mask_to_tuple(std::uint32_t mask);
/// Throws std::invalid_argument unless the tuple is strictly increasing.
std::uint32_t tuple_to_mask(const std::vector<std::size_t>& tuple);

class CochainShape {
 public:
  CochainShape(std::shared_ptr<const SubsetIndex> subsets, std::size_t module_dim, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t algebra_dim() const { return subsets_->universe(); }
  std::size_t module_dim() const { return m_; }
  std::size_t phi_count() const;
  std::size_t omega_count() const;
  std::size_t size() const { return phi_count() + omega_count(); }

  std::size_t phi_index(std::uint32_t mask, std::size_t m) const { return subsets_->rank(mask) * m_ + m; }
  std::size_t omega_index(std::size_t a, std::uint32_t mask, std::size_t m) const;
  const SubsetIndex& subsets() const { return *subsets_; }

 private:
  std::shared_ptr<const SubsetIndex> subsets_;
  std::size_t m_;
  std::size_t degree_;
};

/// Sparse algebra element: (basis index, coefficient) with distinct indices.
using SparseVec = std::vector<std::pair<std::uint32_t, Scalar>>;
SparseVec to_sparse(std::span<const Scalar> v);

class ComplexContext {
 public:
  /// Validates the algebra, the pair and the representation; throws
  /// std::invalid_argument naming the first failing axiom.
  ComplexContext(ResLieDerPair pair, RestrictedRepresentation rep, ComplexKind kind);

  const ResLieDerPair& pair() const { return pair_; }
  const RestrictedRepresentation& rep() const { return rep_; }
  ComplexKind kind() const { return kind_; }
  const Field& field() const { return pair_.field(); }
  std::size_t algebra_dim() const { return pair_.dim(); }
  std::size_t module_dim() const { return rep_.dim; }

  /// Shape of C_{*2}^n.
  CochainShape shape(std::size_t n) const { return CochainShape(subsets_, rep_.dim, n); }
  /// Same context with the other complex kind.
  ComplexContext with_kind(ComplexKind kind) const;

  // Structure data in sparse form, used by the formula evaluators.
  const SparseVec& bracket(std::size_t a, std::size_t b) const { return bracket_[a * pair_.dim() + b]; }
  const SparseVec& derivation_column(std::size_t a) const { return dcol_[a]; }
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
  SparseVec square(const SparseVec& x) const;
  SparseVec derive(const SparseVec& x) const;

 private:
  ComplexContext() = default;

  ResLieDerPair pair_;
  RestrictedRepresentation rep_;
  ComplexKind kind_ = ComplexKind::star2;
  std::shared_ptr<const SubsetIndex> subsets_;
  std::vector<SparseVec> bracket_;
  std::vector<SparseVec> dcol_;
};

/// Star2 cochain of a given degree; coords follow CochainShape.
struct Cochain {
  std::size_t degree = 0;
  Vec coords;
};

Cochain zero_cochain(const ComplexContext& ctx, std::size_t degree);
Scalar phi_coord(const ComplexContext& ctx, const Cochain& c, const std::vector<std::size_t>& tuple, std::size_t m);
Scalar omega_coord(const ComplexContext& ctx, const Cochain& c, std::size_t a, const std::vector<std::size_t>& tuple,
                   std::size_t m);
void set_phi(const ComplexContext& ctx, Cochain& c, const std::vector<std::size_t>& tuple, std::size_t m, Scalar s);
void set_omega(const ComplexContext& ctx, Cochain& c, std::size_t a, const std::vector<std::size_t>& tuple,
               std::size_t m, Scalar s);

/// ResLD cochain of degree n: top has degree n, low degree n-1 (empty coords
/// when n = 1).
struct PairCochain {
  Cochain top;
  Cochain low;

  std::size_t degree() const { return top.degree; }
  Vec coords() const;
};

PairCochain split_pair(const ComplexContext& ctx, std::size_t n, std::span<const Scalar> coords);

/// Dimension of the n-th cochain space of the context's complex.
std::size_t space_dim(const ComplexContext& ctx, std::size_t n);
std::size_t star2_dim(const ComplexContext& ctx, std::size_t n);

/// phi(args) by multilinear expansion.
Vec eval_phi(const ComplexContext& ctx, const Cochain& c, const std::vector<Vec>& args);
/// omega(x; zs) by the quadratic rule in x and multilinear expansion in zs.
Vec eval_omega(const ComplexContext& ctx, const Cochain& c, const Vec& x, const std::vector<Vec>& zs);

/// The differential formulas applied directly at arbitrary arguments, without
/// going through the coordinate matrices.
Vec apply_d_phi(const ComplexContext& ctx, const Cochain& c, const std::vector<Vec>& zs);
Vec apply_d_omega(const ComplexContext& ctx, const Cochain& c, const Vec& x, const std::vector<Vec>& zs);

/// Matrix of the star2 differential C^n -> C^{n+1}.
Matrix diff_star2(const ComplexContext& ctx, std::size_t n);
/// Matrix of delta on C_{*2}^n, n >= 1.
Matrix delta_op(const ComplexContext& ctx, std::size_t n);
/// Matrix of vartheta^n: C_ResLD^n -> C_ResLD^{n+1}, n >= 1.
Matrix diff_reslieder(const ComplexContext& ctx, std::size_t n);
/// diff_star2 or diff_reslieder according to the context's kind.
Matrix differential(const ComplexContext& ctx, std::size_t n);

/// Lowest degree of the context's complex (0 for star2, 1 for reslieder).
std::size_t min_degree(const ComplexContext& ctx);

struct CohomologyResult {
  std::size_t degree = 0;
  ComplexKind kind = ComplexKind::star2;
  std::size_t cochain_dim = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t betti = 0;
  SubspaceData cocycles;
  SubspaceData coboundaries;
};

CohomologyResult cohomology(const ComplexContext& ctx, std::size_t n);

bool is_cocycle(const ComplexContext& ctx, std::size_t n, std::span<const Scalar> coords);
/// Some w with D^{n-1} w = coords, or nullopt.  At the lowest degree only
/// the zero cochain has a witness (the empty vector).
std::optional<Vec> coboundary_witness(const ComplexContext& ctx, std::size_t n, std::span<const Scalar> coords);

}  // namespace reslie
