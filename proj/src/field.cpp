#include "reslie/field.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace reslie {

namespace {

int poly_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) a ^= m << (da - dm);
  return a;
}

}  // namespace

std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
  std::uint64_t prod = 0;
  for (std::uint64_t shifted = a; b != 0; b >>= 1, shifted <<= 1)
    if (b & 1U) prod ^= shifted;
  const int dm = poly_degree(modulus);
  for (int dp = 63; dp >= dm; --dp)
    if ((prod >> dp) & 1U) prod ^= static_cast<std::uint64_t>(modulus) << (dp - dm);
  return static_cast<std::uint32_t>(prod);
}

bool is_irreducible(std::uint32_t poly) {
  const int d = poly_degree(poly);
  if (d < 1) return false;
  for (int dd = 1; dd <= d / 2; ++dd)
    for (std::uint32_t q = 1U << dd; q < (2U << dd); ++q)
      if (poly_mod(poly, q) == 0) return false;
  return true;
}

std::uint32_t default_modulus(int k) {
  if (k < 1 || k > 16) throw std::invalid_argument("field degree must be in [1, 16]");
  for (std::uint32_t p = 1U << k; p < (2U << k); ++p)
    if (is_irreducible(p)) return p;
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field::Field() = default;

Field::Field(int k) : Field(k, default_modulus(k)) {}

Field::Field(int k, std::uint32_t modulus) : degree_(k) {
  if (k < 1 || k > 16) throw std::invalid_argument("field degree must be in [1, 16]");
  if (k == 1) {
    modulus_ = 0b11;
    return;
  }
  if (poly_degree(modulus) != k)
    throw std::invalid_argument("modulus degree " + std::to_string(poly_degree(modulus)) +
                                " does not match field degree " + std::to_string(k));
  if (!is_irreducible(modulus))
    throw std::invalid_argument("modulus " + std::to_string(modulus) +
                                " is reducible over GF(2)");
  modulus_ = modulus;
  build_tables();
}

void Field::build_tables() {
  const std::uint32_t group = order() - 1;
  // The modulus need not be primitive, so search for a generator of the
  // multiplicative group.
  std::uint32_t gen = 0;
  for (std::uint32_t g = 2; g < order() && gen == 0; ++g) {
    std::uint32_t x = g;
    std::uint32_t ord = 1;
    while (x != 1) {
      x = poly_mulmod(x, g, modulus_);
      ++ord;
    }
    if (ord == group) gen = g;
  }
  auto t = std::make_shared<Tables>();
  t->log.assign(order(), 0);
  t->exp.assign(2 * static_cast<std::size_t>(group), 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < group; ++i) {
    t->exp[i] = static_cast<Scalar>(x);
    t->exp[i + group] = static_cast<Scalar>(x);
    t->log[x] = i;
    x = poly_mulmod(x, gen, modulus_);
  }
  tables_ = std::move(t);
}

Scalar Field::inv(Scalar a) const {
  if (a == 0) throw std::domain_error("division by zero in field");
  if (degree_ == 1) return 1;
  const auto& t = *tables_;
  const std::uint32_t group = order() - 1;
  return t.exp[(group - t.log[a]) % group];
}

Scalar scalar_arith(const Field& f, Scalar a, Scalar b, ScalarOp op) {
  switch (op) {
    case ScalarOp::add: return f.add(a, b);
    case ScalarOp::mul: return f.mul(a, b);
    case ScalarOp::inv: return f.inv(a);
    case ScalarOp::square: return f.square(a);
  }
  throw std::invalid_argument("unknown scalar op");
}

void axpy(const Field& f, std::span<Scalar> y, Scalar a, std::span<const Scalar> x) {
  if (y.size() != x.size()) throw std::invalid_argument("axpy: dimension mismatch");
  if (a == 0) return;
  if (a == 1) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] ^= x[i];
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) y[i] ^= f.mul(a, x[i]);
}

Vec scaled(const Field& f, Scalar a, std::span<const Scalar> x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(a, x[i]);
  return out;
}

Vec added(std::span<const Scalar> x, std::span<const Scalar> y) {
  if (x.size() != y.size()) throw std::invalid_argument("vector add: dimension mismatch");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = static_cast<Scalar>(x[i] ^ y[i]);
  return out;
}

bool is_zero(std::span<const Scalar> x) {
  for (Scalar s : x)
    if (s != 0) return false;
  return true;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

}  // namespace reslie
