#pragma once

// Arithmetic in GF(2^k), 1 <= k <= 16, in the polynomial basis.
//
// A scalar is a polynomial over GF(2) packed little-endian into an integer:
// bit j holds the coefficient of x^j.  Addition is XOR; multiplication is
// carry-less multiplication reduced by the field modulus.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace reslie {

using Scalar = std::uint16_t;
using Vec = std::vector<Scalar>;

/// True when `poly` (bit j = coefficient of x^j) is irreducible over GF(2).
/// Trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(std::uint32_t poly);

/// Lexicographically smallest irreducible polynomial of degree k.
std::uint32_t default_modulus(int k);

/// Carry-less product of two polynomials reduced modulo `modulus`.
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus);

class Field {
 public:
  /// GF(2).
  Field();
  /// GF(2^k) with the default modulus.
  explicit Field(int k);
  /// GF(2^k) with an explicit modulus; the modulus must have degree k and be
  /// irreducible.  Ignored when k == 1.
  Field(int k, std::uint32_t modulus);

  int degree() const { return degree_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return std::uint32_t{1} << degree_; }
  bool contains(std::uint64_t bits) const { return bits < order(); }

  Scalar add(Scalar a, Scalar b) const { return static_cast<Scalar>(a ^ b); }
  Scalar mul(Scalar a, Scalar b) const {
    if (degree_ == 1) return static_cast<Scalar>(a & b);
    if (a == 0 || b == 0) return 0;
    const auto& t = *tables_;
    return t.exp[t.log[a] + t.log[b]];
  }
  Scalar square(Scalar a) const { return mul(a, a); }
  /// Throws std::domain_error("division by zero in field") for a == 0.
  Scalar inv(Scalar a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;  // log[a] for a != 0
    std::vector<Scalar> exp;         // doubled length, avoids a modulo in mul
  };
  void build_tables();

  int degree_ = 1;
  std::uint32_t modulus_ = 0b11;
  std::shared_ptr<const Tables> tables_;
};

enum class ScalarOp { add, mul, inv, square };

/// Single entry point over the four scalar operations; `b` is ignored for
/// the unary ones.
Scalar scalar_arith(const Field& f, Scalar a, Scalar b, ScalarOp op);

// Vector helpers over a field.  All vectors are dense coordinate lists.

/// y += a * x
void axpy(const Field& f, std::span<Scalar> y, Scalar a, std::span<const Scalar> x);
Vec scaled(const Field& f, Scalar a, std::span<const Scalar> x);
Vec added(std::span<const Scalar> x, std::span<const Scalar> y);
bool is_zero(std::span<const Scalar> x);
Vec unit_vector(std::size_t n, std::size_t i);

}  // namespace reslie
