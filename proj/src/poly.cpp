#include "hilbfam/poly.hpp"

#include <algorithm>
#include <numeric>

#include "hilbfam/errors.hpp"

namespace hilbfam {

namespace {

Fp reduce_signed(std::int64_t c, std::uint32_t p) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<Fp>(r);
}

Fp pow_mod(std::uint64_t base, unsigned e, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Fp>(result);
}

void collect_monomials(unsigned n, unsigned budget, unsigned cap, std::vector<unsigned>& cur,
                       std::vector<Monomial>& out) {
  if (cur.size() == n) {
    out.push_back(Monomial{cur});
    return;
  }
  for (unsigned e = 0; e <= std::min(cap, budget); ++e) {
    cur.push_back(e);
    collect_monomials(n, budget - e, cap, cur, out);
    cur.pop_back();
  }
}

}  // namespace

unsigned Monomial::total_degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0u); }

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return a.exponents <=> b.exponents;
}

std::vector<Monomial> monomials_upto(unsigned n, unsigned m, unsigned cap) {
  if (n < 1) throw DomainError("monomials need at least one variable");
  if (cap < 1) throw DomainError("exponent cap must be at least 1");
  std::vector<Monomial> out;
  std::vector<unsigned> cur;
  cur.reserve(n);
  collect_monomials(n, m, cap, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial::Polynomial(std::uint32_t p, unsigned n) : p_(p), n_(n) {
  if (!is_prime(p) || p > kMaxModulus) throw DomainError("polynomial modulus must be a supported prime");
}

Polynomial Polynomial::constant(std::uint32_t p, unsigned n, std::int64_t c) {
  Polynomial f(p, n);
  f.add_term(Monomial{std::vector<unsigned>(n, 0)}, c);
  return f;
}

Polynomial Polynomial::variable(std::uint32_t p, unsigned n, unsigned index) {
  if (index >= n) throw DomainError("variable index out of range");
  Polynomial f(p, n);
  Monomial mono{std::vector<unsigned>(n, 0)};
  mono.exponents[index] = 1;
  f.add_term(mono, 1);
  return f;
}

Polynomial Polynomial::affine(std::uint32_t p, std::span<const std::uint32_t> v, std::int64_t c) {
  const auto n = static_cast<unsigned>(v.size());
  Polynomial f = constant(p, n, -c);
  for (unsigned i = 0; i < n; ++i) {
    if (v[i] % p == 0) continue;
    Monomial mono{std::vector<unsigned>(n, 0)};
    mono.exponents[i] = 1;
    f.add_term(mono, v[i]);
  }
  return f;
}

long Polynomial::degree() const {
  if (terms_.empty()) return kZeroPolynomialDegree;
  // the map is sorted by total degree first
  return static_cast<long>(terms_.rbegin()->first.total_degree());
}

Fp Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

Fp Polynomial::constant_term() const { return coefficient(Monomial{std::vector<unsigned>(n_, 0)}); }

void Polynomial::add_term(const Monomial& mono, std::int64_t c) {
  if (mono.nvars() != n_) throw DomainError("monomial has the wrong number of variables");
  const Fp v = reduce_signed(c, p_);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, v);
  if (inserted) return;
  it->second = static_cast<Fp>((std::uint64_t{it->second} + v) % p_);
  if (it->second == 0) terms_.erase(it);
}

Fp Polynomial::evaluate(std::span<const std::uint32_t> x) const {
  if (x.size() != n_) throw DomainError("point dimension does not match polynomial");
  std::uint64_t acc = 0;
  for (const auto& [mono, coeff] : terms_) {
    std::uint64_t t = coeff;
    for (unsigned i = 0; i < n_ && t; ++i) {
      if (mono.exponents[i]) t = t * pow_mod(x[i], mono.exponents[i], p_) % p_;
    }
    acc = (acc + t) % p_;
  }
  return static_cast<Fp>(acc);
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (p_ != other.p_ || n_ != other.n_) throw DomainError("polynomials over different rings");
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_compatible(other);
  Polynomial r = *this;
  for (const auto& [mono, c] : other.terms_) r.add_term(mono, c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_compatible(other);
  Polynomial r(p_, n_);
  Monomial prod{std::vector<unsigned>(n_, 0)};
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      for (unsigned i = 0; i < n_; ++i) prod.exponents[i] = ma.exponents[i] + mb.exponents[i];
      r.add_term(prod, static_cast<std::int64_t>(std::uint64_t{ca} * cb % p_));
    }
  }
  return r;
}

std::string Polynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    std::string factors;
    for (unsigned i = 0; i < n_; ++i) {
      if (!mono.exponents[i]) continue;
      if (!factors.empty()) factors += '*';
      factors += "x" + std::to_string(i + 1);
      if (mono.exponents[i] > 1) factors += "^" + std::to_string(mono.exponents[i]);
    }
    if (factors.empty()) {
      out += std::to_string(coeff);
    } else if (coeff == 1) {
      out += factors;
    } else {
      out += std::to_string(coeff) + "*" + factors;
    }
  }
  return out;
}

Fp evaluate(const Polynomial& f, std::span<const std::uint32_t> x) { return f.evaluate(x); }

Polynomial multilinear_reduce(const Polynomial& f) {
  Polynomial r(f.modulus(), f.nvars());
  for (const auto& [mono, c] : f.terms()) {
    Monomial reduced = mono;
    for (auto& e : reduced.exponents) e = e ? 1 : 0;
    r.add_term(reduced, c);
  }
  return r;
}

Polynomial expand_affine_product(std::span<const AffineFactor> factors, std::uint32_t p, unsigned n) {
  Polynomial acc = Polynomial::constant(p, n, 1);
  for (const auto& f : factors) {
    if (f.v.size() != n) throw DomainError("affine factor has the wrong number of coordinates");
    acc = acc * Polynomial::affine(p, f.v, f.c);
  }
  return acc;
}

}  // namespace hilbfam
