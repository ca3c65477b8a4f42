#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hilbfam/gflinalg.hpp"
#include "hilbfam/setfam.hpp"

namespace hilbfam {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr long kZeroPolynomialDegree = std::numeric_limits<long>::min();

struct Monomial {
  std::vector<unsigned> exponents;

  unsigned total_degree() const;
  std::size_t nvars() const { return exponents.size(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Global order: ascending total degree, then lexicographic on exponents.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
};

// All monomials in n variables with every exponent <= cap and total degree
// <= m, in the global order.
std::vector<Monomial> monomials_upto(unsigned n, unsigned m, unsigned cap);

class Polynomial {
public:
  Polynomial(std::uint32_t p, unsigned n);

  static Polynomial constant(std::uint32_t p, unsigned n, std::int64_t c);
  static Polynomial variable(std::uint32_t p, unsigned n, unsigned index);  // 0-based
  // sum_i v_i x_i - c
  static Polynomial affine(std::uint32_t p, std::span<const std::uint32_t> v, std::int64_t c);

  std::uint32_t modulus() const { return p_; }
  unsigned nvars() const { return n_; }
  const std::map<Monomial, Fp>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long degree() const;
  Fp coefficient(const Monomial& mono) const;
  Fp constant_term() const;

  // Adds c * mono; drops the term if the coefficient becomes zero.
  void add_term(const Monomial& mono, std::int64_t c);

  Fp evaluate(std::span<const std::uint32_t> x) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;

  // "1 + 2*x1*x3"; terms in the global monomial order; "0" for zero.
  std::string render() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void check_compatible(const Polynomial& other) const;

  std::uint32_t p_;
  unsigned n_;
  std::map<Monomial, Fp> terms_;
};

Fp evaluate(const Polynomial& f, std::span<const std::uint32_t> x);

// Replaces every positive exponent by 1 (normal form modulo x_i^2 - x_i).
Polynomial multilinear_reduce(const Polynomial& f);

struct AffineFactor {
  Point v;
  std::int64_t c = 0;
};

// Expanded product of (<x, v> - c) over the factors.
Polynomial expand_affine_product(std::span<const AffineFactor> factors, std::uint32_t p, unsigned n);

}  // namespace hilbfam
