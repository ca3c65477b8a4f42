#include <doctest.h>

#include <random>

#include "hilbfam/errors.hpp"
#include "hilbfam/poly.hpp"

using namespace hilbfam;

namespace {

Monomial mono(std::vector<unsigned> e) { return Monomial{std::move(e)}; }

Polynomial random_poly(std::mt19937_64& rng, std::uint32_t p, unsigned n, unsigned max_exp, unsigned terms) {
  Polynomial f(p, n);
  for (unsigned t = 0; t < terms; ++t) {
    std::vector<unsigned> e(n);
    for (auto& x : e) x = rng() % (max_exp + 1);
    f.add_term(mono(e), static_cast<std::int64_t>(rng() % p));
  }
  return f;
}

std::vector<Point> cube(unsigned n) {
  std::vector<Point> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Point pt(n);
    for (unsigned i = 0; i < n; ++i) pt[i] = mask >> i & 1;
    out.push_back(pt);
  }
  return out;
}

}  // namespace

TEST_CASE("monomials_upto order") {
  auto as_vectors = [](const std::vector<Monomial>& ms) {
    std::vector<std::vector<unsigned>> out;
    for (const auto& m : ms) out.push_back(m.exponents);
    return out;
  };
  CHECK(as_vectors(monomials_upto(2, 1, 1)) == std::vector<std::vector<unsigned>>{{0, 0}, {0, 1}, {1, 0}});
  CHECK(as_vectors(monomials_upto(2, 2, 1)) == std::vector<std::vector<unsigned>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK(as_vectors(monomials_upto(1, 3, 2)) == std::vector<std::vector<unsigned>>{{0}, {1}, {2}});
  CHECK(monomials_upto(20, 4, 1).size() == 6196);
  CHECK(monomials_upto(12, 2, 1).size() == 79);
  CHECK(monomials_upto(10, 4, 1).size() == 386);
  CHECK_THROWS_AS(monomials_upto(0, 1, 1), DomainError);
  CHECK_THROWS_AS(monomials_upto(2, 1, 0), DomainError);
}

TEST_CASE("evaluate examples") {
  auto x1x2 = Polynomial::variable(2, 2, 0) * Polynomial::variable(2, 2, 1);
  CHECK(evaluate(x1x2, Point{1, 1}) == 1);
  auto f = Polynomial::variable(3, 2, 0) + Polynomial::variable(3, 2, 1) + Polynomial::constant(3, 2, -1);
  CHECK(evaluate(f, Point{1, 0}) == 0);
  auto sq = Polynomial::variable(3, 1, 0) * Polynomial::variable(3, 1, 0);
  CHECK(evaluate(sq, Point{2}) == 1);
  CHECK_THROWS_AS(evaluate(sq, Point{1, 1}), DomainError);
}

TEST_CASE("multilinear_reduce examples") {
  Polynomial f(2, 1);
  f.add_term(mono({2}), 1);
  Polynomial expect(2, 1);
  expect.add_term(mono({1}), 1);
  CHECK(multilinear_reduce(f) == expect);

  Polynomial g(3, 2);
  g.add_term(mono({2, 1}), 1);
  g.add_term(mono({1, 1}), 1);
  Polynomial g_expect(3, 2);
  g_expect.add_term(mono({1, 1}), 2);
  CHECK(multilinear_reduce(g) == g_expect);

  CHECK(multilinear_reduce(Polynomial::constant(3, 2, 5)) == Polynomial::constant(3, 2, 2));
}

TEST_CASE("expand_affine_product examples") {
  CHECK(expand_affine_product({}, 2, 4) == Polynomial::constant(2, 4, 1));

  const std::vector<AffineFactor> one{{Point{1, 1, 0, 0}, 1}};
  auto f = expand_affine_product(one, 2, 4);
  CHECK(f.render() == "1 + x2 + x1");

  const std::vector<AffineFactor> two{{Point{1, 0, 1, 0}, 1}, {Point{1, 1, 0, 0}, 1}};
  auto g = expand_affine_product(two, 2, 4);
  CHECK(g.degree() == 2);
  CHECK(evaluate(g, Point{0, 0, 0, 0}) == 1);
  // evaluation equality with the factor-wise product on all of {0,1}^4
  for (const auto& x : cube(4)) {
    const Fp a = (x[0] + x[2] + 1) % 2, b = (x[0] + x[1] + 1) % 2;
    CHECK(evaluate(g, x) == a * b % 2);
  }
}

TEST_CASE("zero polynomial and rendering") {
  Polynomial z(5, 3);
  CHECK(z.is_zero());
  CHECK(z.degree() == kZeroPolynomialDegree);
  CHECK(z.degree() < 0);
  CHECK(z.render() == "0");
  CHECK(Polynomial::constant(5, 3, 0).is_zero());

  Polynomial f(3, 3);
  f.add_term(mono({1, 0, 1}), 2);
  f.add_term(mono({0, 0, 0}), 1);
  f.add_term(mono({0, 2, 0}), 1);
  CHECK(f.render() == "1 + x2^2 + 2*x1*x3");
  f.add_term(mono({1, 0, 1}), 1);
  CHECK(f.render() == "1 + x2^2");
  CHECK(f.terms().size() == 2);
  CHECK_THROWS_AS(f.add_term(mono({1}), 1), DomainError);
  CHECK_THROWS_AS(Polynomial(4, 2), DomainError);
  CHECK_THROWS_AS(Polynomial(2, 2) + Polynomial(3, 2), DomainError);
}

TEST_CASE("multilinear reduction preserves values on the cube") {
  std::mt19937_64 rng(21);
  for (unsigned n = 1; n <= 10; ++n) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const auto f = random_poly(rng, p, n, 3, 8);
      const auto r = multilinear_reduce(f);
      CHECK(r.degree() <= f.degree());
      for (const auto& [m, c] : r.terms()) {
        CHECK(c != 0);
        for (auto e : m.exponents) CHECK(e <= 1);
      }
      for (const auto& x : cube(n)) CHECK(evaluate(r, x) == evaluate(f, x));
    }
  }
}

TEST_CASE("expanded affine products evaluate factor-wise") {
  std::mt19937_64 rng(22);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const unsigned n = 1 + rng() % 5;
      std::vector<AffineFactor> factors(rng() % 5);
      for (auto& f : factors) {
        f.v.resize(n);
        for (auto& x : f.v) x = rng() % p;
        f.c = static_cast<std::int64_t>(rng() % (2 * p)) - p;
      }
      const auto prod = expand_affine_product(factors, p, n);
      CHECK(prod.degree() <= static_cast<long>(factors.size()));
      for (int k = 0; k < 20; ++k) {
        Point x(n);
        for (auto& v : x) v = rng() % p;
        std::int64_t expect = 1;
        for (const auto& f : factors) {
          std::int64_t dot = 0;
          for (unsigned i = 0; i < n; ++i) dot += std::int64_t{f.v[i]} * x[i];
          expect = (expect * (((dot - f.c) % p + p) % p)) % p;
        }
        CHECK(evaluate(prod, x) == static_cast<Fp>(expect));
      }
    }
  }
}

TEST_CASE("arithmetic never stores zero coefficients") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t p = trial % 2 ? 2 : 3;
    const auto f = random_poly(rng, p, 3, 2, 6), g = random_poly(rng, p, 3, 2, 6);
    for (const auto& h : {f + g, f * g}) {
      for (const auto& [m, c] : h.terms()) CHECK(c != 0);
    }
    // f + (p-1) f = 0
    Polynomial neg(p, 3);
    for (const auto& [m, c] : f.terms()) neg.add_term(m, -static_cast<std::int64_t>(c));
    CHECK((f + neg).is_zero());
  }
}
