#include "hilbfam/hilbert.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hilbfam/errors.hpp"

namespace hilbfam {

namespace {

void validate(const PointSet& points, std::uint32_t p, unsigned cap) {
  if (!is_prime(p) || p > kMaxModulus) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (points.n < 1) throw DomainError("point set needs dimension n >= 1");
  if (cap != 1 && cap != p - 1) throw DomainError("exponent cap must be 1 or p - 1");
  for (const auto& pt : points.points) {
    if (pt.size() != points.n) throw DomainError("point dimension does not match n");
    for (auto x : pt) {
      if (x >= p) throw DomainError("point coordinate is not reduced mod p");
      if (cap == 1 && x > 1) throw DomainError("exponent cap 1 is only valid on 0/1 points");
    }
  }
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

HilbertReport base_report(const PointSet& points, std::uint32_t p, unsigned m, unsigned cap) {
  HilbertReport rep;
  rep.n = points.n;
  rep.p = p;
  rep.m = m;
  rep.cap = cap;
  auto eval = evaluation_matrix(points, m, p, cap);
  rep.columns = eval.monomials.size();
  rep.h_oracle = rank_mod_p(eval.matrix);
  rep.ideal_dim = rep.columns - rep.h_oracle;
  return rep;
}

void attach_closed_form(HilbertReport& rep, BigInt value) {
  rep.match = (value == rep.h_oracle);
  rep.h_closed_form = std::move(value);
}

void check_modq_args(unsigned n, unsigned d, std::uint32_t q, std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (!prime_power_exponent(q, p)) {
    throw DomainError("q = " + std::to_string(q) + " is not a positive power of p = " + std::to_string(p));
  }
  if (d > n) throw DomainError("d must satisfy 0 <= d <= n");
}

template <class ReportAt>
std::vector<HilbertReport> series_until_stable(std::size_t target, unsigned max_degree, ReportAt report_at) {
  std::vector<HilbertReport> out;
  for (unsigned m = 0;; ++m) {
    out.push_back(report_at(m));
    if (out.back().h_oracle == target || m >= max_degree) break;
  }
  return out;
}

}  // namespace

bool PointSet::is_binary() const {
  return std::all_of(points.begin(), points.end(),
                     [](const Point& pt) { return std::all_of(pt.begin(), pt.end(), [](auto x) { return x <= 1; }); });
}

std::size_t PointSet::distinct_count() const { return std::set<Point>(points.begin(), points.end()).size(); }

PointSet points_of(const SetFamily& family) { return PointSet{family.n(), char_vectors(family)}; }

EvaluationMatrix evaluation_matrix(const PointSet& points, unsigned m, std::uint32_t p, unsigned cap) {
  validate(points, p, cap);
  EvaluationMatrix out;
  out.points = points.points;
  out.monomials = monomials_upto(points.n, m, cap);
  out.matrix = FpMatrix(p, points.size(), out.monomials.size());

  // powers[i * (cap + 1) + e] = x_i^e for the current point
  std::vector<std::uint64_t> powers(static_cast<std::size_t>(points.n) * (cap + 1));
  for (std::size_t r = 0; r < points.size(); ++r) {
    const Point& pt = points.points[r];
    for (unsigned i = 0; i < points.n; ++i) {
      std::uint64_t acc = 1;
      for (unsigned e = 0; e <= cap; ++e) {
        powers[i * (cap + 1) + e] = acc;
        acc = acc * pt[i] % p;
      }
    }
    auto row = out.matrix.row(r);
    for (std::size_t c = 0; c < out.monomials.size(); ++c) {
      const auto& ex = out.monomials[c].exponents;
      std::uint64_t v = 1;
      for (unsigned i = 0; i < points.n && v; ++i) {
        if (ex[i]) v = v * powers[i * (cap + 1) + ex[i]] % p;
      }
      row[c] = static_cast<Fp>(v);
    }
  }
  return out;
}

std::size_t hilbert_value(const PointSet& points, unsigned m, std::uint32_t p, unsigned cap) {
  return rank_mod_p(evaluation_matrix(points, m, p, cap).matrix);
}

std::vector<std::size_t> hilbert_series(const PointSet& points, std::uint32_t p, unsigned cap) {
  validate(points, p, cap);
  const std::size_t target = points.distinct_count();
  std::vector<std::size_t> out;
  for (unsigned m = 0;; ++m) {
    out.push_back(hilbert_value(points, m, p, cap));
    // every function on the points is reached by degree n * cap
    if (out.back() == target || m >= points.n * cap) break;
  }
  return out;
}

std::vector<Polynomial> ideal_truncation_basis(const PointSet& points, unsigned m, std::uint32_t p,
                                               unsigned cap) {
  auto eval = evaluation_matrix(points, m, p, cap);
  std::vector<Polynomial> out;
  for (const auto& vec : kernel_basis(eval.matrix)) {
    Polynomial f(p, points.n);
    for (std::size_t c = 0; c < vec.values.size(); ++c) {
      if (vec.values[c]) f.add_term(eval.monomials[c], vec.values[c]);
    }
    out.push_back(std::move(f));
  }
  return out;
}

BigInt wilson_value(unsigned n, unsigned d, unsigned m) {
  if (d > n) throw DomainError("d must satisfy 0 <= d <= n");
  if (m > std::min(d, n - d)) throw DomainError("Wilson's formula holds only for 0 <= m <= min(d, n - d)");
  return binomial(n, m);
}

BigInt modq_value(unsigned n, unsigned d, unsigned q, unsigned m) {
  if (n < 1) throw DomainError("n must be positive");
  if (d > n) throw DomainError("d must satisfy 0 <= d <= n");
  if (q < 2) throw DomainError("q must be at least 2");
  const std::int64_t N = n, Q = q, M = m, R = std::min(d, n - d);
  BigInt h = 0;
  if (M <= R) {
    for (std::int64_t i = 0; i <= floor_div(M, Q); ++i) h += binomial(n, M - i * Q);
    return h;
  }
  for (std::int64_t i = -floor_div(R, Q); i <= floor_div(N - R, Q); ++i) h += binomial(n, R + i * Q);
  for (std::int64_t i = 1; i <= floor_div(N - M, Q); ++i) h -= binomial(n, M + i * Q);
  return h;
}

HilbertReport hilbert_report_points(const PointSet& points, std::uint32_t p, unsigned m, unsigned cap) {
  return base_report(points, p, m, cap);
}

HilbertReport hilbert_report_uniform(unsigned n, unsigned d, std::uint32_t p, unsigned m, unsigned cap) {
  if (d > n) throw DomainError("d must satisfy 0 <= d <= n");
  auto rep = base_report(points_of(make_uniform_family(n, static_cast<int>(d))), p, m, cap);
  rep.d = d;
  rep.r = std::min(d, n - d);
  rep.closed_form = ClosedForm::Wilson;
  if (m <= *rep.r) attach_closed_form(rep, wilson_value(n, d, m));
  return rep;
}

HilbertReport hilbert_report_modq(unsigned n, unsigned d, std::uint32_t q, std::uint32_t p, unsigned m,
                                  unsigned cap) {
  check_modq_args(n, d, q, p);
  auto rep = base_report(points_of(make_modq_family(n, static_cast<int>(d), q)), p, m, cap);
  rep.d = d;
  rep.q = q;
  rep.r = std::min(d, n - d);
  rep.closed_form = ClosedForm::ModQ;
  attach_closed_form(rep, modq_value(n, d, q, m));
  return rep;
}

std::vector<HilbertReport> hilbert_series_uniform(unsigned n, unsigned d, std::uint32_t p, unsigned cap) {
  const std::size_t target = static_cast<std::size_t>(binomial_u64(n, d));
  return series_until_stable(target, n * cap, [&](unsigned m) { return hilbert_report_uniform(n, d, p, m, cap); });
}

std::vector<HilbertReport> hilbert_series_modq(unsigned n, unsigned d, std::uint32_t q, std::uint32_t p,
                                               unsigned cap) {
  check_modq_args(n, d, q, p);
  const std::size_t target = make_modq_family(n, static_cast<int>(d), q).size();
  return series_until_stable(target, n * cap,
                             [&](unsigned m) { return hilbert_report_modq(n, d, q, p, m, cap); });
}

std::vector<HilbertReport> hilbert_series_points(const PointSet& points, std::uint32_t p, unsigned cap) {
  validate(points, p, cap);
  return series_until_stable(points.distinct_count(), points.n * cap,
                             [&](unsigned m) { return hilbert_report_points(points, p, m, cap); });
}

}  // namespace hilbfam
