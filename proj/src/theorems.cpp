#include "hilbfam/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <string>

#include "hilbfam/errors.hpp"

namespace hilbfam {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

const char* const kPointSetReading =
    "nested sets are read as arbitrary finite point sets of F_p^n; only dimension counting is used";

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_prime(std::uint32_t p) {
  if (!is_prime(p) || p > kMaxModulus) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

// First (polynomial, point) pair with a nonzero value, scanning polynomials in
// basis order and points in the given order.
std::optional<Witness> first_nonvanishing(const std::vector<Polynomial>& basis, const std::vector<Point>& points,
                                          long degree_bound) {
  for (const auto& f : basis) {
    for (const auto& pt : points) {
      if (Fp v = f.evaluate(pt); v != 0) {
        return Witness{"nonvanishing", f, pt, std::nullopt, degree_bound, v};
      }
    }
  }
  return std::nullopt;
}

json shape(std::size_t rows, std::size_t cols) { return json::array({rows, cols}); }

}  // namespace

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::Main: return "MAIN";
    case Claim::Main2: return "MAIN2";
    case Claim::Hrubes: return "HRUBES";
    case Claim::Hlemma: return "HLEMMA";
    case Claim::GridRemark: return "GRID_REMARK";
    case Claim::Main3: return "MAIN3";
  }
  return "UNKNOWN";
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotApplicable: return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

VerificationReport verify_ideal_truncation_equality(const PointSet& f, const PointSet& g, unsigned m,
                                                    std::uint32_t p, unsigned cap) {
  const auto start = Clock::now();
  require_prime(p);
  if (f.n != g.n) throw DomainError("point sets live in different dimensions");
  const std::set<Point> g_points(g.points.begin(), g.points.end());
  for (const auto& pt : f.points) {
    if (!g_points.count(pt)) throw DomainError("first point set is not contained in the second");
  }

  VerificationReport rep;
  rep.claim = Claim::Main;
  rep.params = {{"n", f.n},
                {"m", m},
                {"p", p},
                {"cap", cap},
                {"size_F", f.size()},
                {"size_G", g.size()},
                {"interpretation", kPointSetReading}};

  const auto eval_f = evaluation_matrix(f, m, p, cap);
  const auto eval_g = evaluation_matrix(g, m, p, cap);
  const std::size_t h_f = rank_mod_p(eval_f.matrix);
  const std::size_t h_g = rank_mod_p(eval_g.matrix);
  const std::size_t columns = eval_f.monomials.size();
  rep.metrics = {{"h_F", h_f},
                 {"h_G", h_g},
                 {"columns", columns},
                 {"ideal_dim_F", columns - h_f},
                 {"ideal_dim_G", columns - h_g},
                 {"matrix_F", shape(eval_f.matrix.rows(), columns)},
                 {"matrix_G", shape(eval_g.matrix.rows(), columns)}};

  if (h_f != h_g) {
    rep.status = Status::NotApplicable;
  } else {
    const auto basis = ideal_truncation_basis(f, m, p, cap);
    rep.metrics["kernel_polynomials_checked"] = basis.size();
    if (auto w = first_nonvanishing(basis, g.points, m)) {
      rep.status = Status::Fail;
      rep.witnesses.push_back(std::move(*w));
    } else {
      rep.status = Status::Pass;
    }
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_main2(unsigned n, unsigned d, std::uint32_t q, std::uint32_t p, bool force) {
  const auto start = Clock::now();
  require_prime(p);
  if (n < 1) throw DomainError("n must be positive");
  if (!prime_power_exponent(q, p)) {
    throw DomainError("q = " + std::to_string(q) + " is not a positive power of p = " + std::to_string(p));
  }
  if (d > n) throw DomainError("d must satisfy 0 <= d <= n");

  VerificationReport rep;
  rep.claim = Claim::Main2;
  const bool in_range = q - 1 <= d && d + q - 1 <= n;
  rep.params = {{"n", n}, {"d", d}, {"q", q}, {"p", p}, {"m", q - 1}, {"hypothesis_holds", in_range}};
  if (!in_range && !force) {
    rep.status = Status::NotApplicable;
    rep.wall_seconds = seconds_since(start);
    return rep;
  }

  const auto uniform = points_of(make_uniform_family(n, static_cast<int>(d)));
  const auto modq = points_of(make_modq_family(n, static_cast<int>(d), q));
  const auto basis = ideal_truncation_basis(uniform, q - 1, p, 1);
  const std::size_t columns = monomials_upto(n, q - 1, 1).size();
  rep.metrics = {{"columns", columns},
                 {"h_uniform", columns - basis.size()},
                 {"kernel_dim", basis.size()},
                 {"matrix", shape(uniform.size(), columns)},
                 {"points_checked", modq.size()}};

  Status outcome = Status::Pass;
  if (auto w = first_nonvanishing(basis, modq.points, q - 1)) {
    outcome = Status::Fail;
    rep.witnesses.push_back(std::move(*w));
  }
  if (in_range) {
    rep.status = outcome;
  } else {
    rep.status = Status::NotApplicable;
    rep.empirical_status = outcome;
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_hrubes(std::uint32_t p) {
  const auto start = Clock::now();
  require_prime(p);
  VerificationReport rep;
  rep.claim = Claim::Hrubes;
  rep.params = {{"p", p}, {"n", 2 * p}, {"d", p}, {"m", p - 1}, {"cap", 1}};

  const auto points = points_of(make_uniform_family(2 * p, static_cast<int>(p)));
  const auto basis = ideal_truncation_basis(points, p - 1, p, 1);
  const std::size_t columns = monomials_upto(2 * p, p - 1, 1).size();
  rep.metrics = {{"columns", columns},
                 {"h", columns - basis.size()},
                 {"kernel_dim", basis.size()},
                 {"matrix", shape(points.size(), columns)}};

  rep.status = Status::Pass;
  const Point origin(2 * p, 0);
  for (const auto& f : basis) {
    if (Fp c = f.constant_term(); c != 0) {
      rep.status = Status::Fail;
      rep.witnesses.push_back(Witness{"nonzero_at_origin", f, origin, std::nullopt, static_cast<long>(p) - 1, c});
      break;
    }
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

VerificationReport verify_hlemma(std::uint32_t p) {
  const auto start = Clock::now();
  require_prime(p);
  VerificationReport rep;
  rep.claim = Claim::Hlemma;
  rep.params = {{"p", p}, {"n", 4 * p}, {"d_vanish", 2 * p}, {"d_target", 3 * p}, {"m", p - 1}, {"cap", 1}};

  const auto half = points_of(make_uniform_family(4 * p, static_cast<int>(2 * p)));
  const auto three_quarter = points_of(make_uniform_family(4 * p, static_cast<int>(3 * p)));
  const auto basis = ideal_truncation_basis(half, p - 1, p, 1);
  const std::size_t columns = monomials_upto(4 * p, p - 1, 1).size();
  rep.metrics = {{"columns", columns},
                 {"h", columns - basis.size()},
                 {"kernel_dim", basis.size()},
                 {"matrix", shape(half.size(), columns)},
                 {"points_checked", three_quarter.size()}};

  if (auto w = first_nonvanishing(basis, three_quarter.points, static_cast<long>(p) - 1)) {
    rep.status = Status::Fail;
    rep.witnesses.push_back(std::move(*w));
  } else {
    rep.status = Status::Pass;
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

void GridInstance::validate() const {
  require_prime(p);
  if (sets.empty()) throw DomainError("grid needs at least one coordinate set");
  if (w.size() != sets.size()) throw DomainError("grid point w has the wrong dimension");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::vector<std::uint32_t> t = sets[i];
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end()) throw DomainError("grid coordinate set has duplicates");
    if (t.size() < 2) throw DomainError("grid coordinate sets need at least two elements");
    if (t.back() >= p) throw DomainError("grid coordinate set is not within F_p");
    if (!std::binary_search(t.begin(), t.end(), w[i])) throw DomainError("w lies outside the grid");
  }
}

VerificationReport verify_grid_remark(const GridInstance& grid) {
  const auto start = Clock::now();
  grid.validate();
  const unsigned n = grid.n();
  const std::uint32_t p = grid.p;

  BigInt grid_size = 1;
  long degree_sum = 0;
  for (const auto& t : grid.sets) {
    grid_size *= t.size();
    degree_sum += static_cast<long>(t.size());
  }
  if (grid_size > enumeration_cap()) throw ResourceError("grid has more points than the enumeration cap");
  const unsigned m = static_cast<unsigned>(degree_sum - n - 1);
  const std::size_t expected = static_cast<std::size_t>(grid_size) - 1;

  std::vector<std::vector<std::uint32_t>> sorted = grid.sets;
  for (auto& t : sorted) std::sort(t.begin(), t.end());
  PointSet g{n, {}};
  Point cur(n);
  // odometer over the sorted coordinate sets, first coordinate slowest
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    for (unsigned i = 0; i < n; ++i) cur[i] = sorted[i][idx[i]];
    g.points.push_back(cur);
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && ++idx[i] == sorted[i].size()) idx[i--] = 0;
    if (i < 0) break;
  }
  PointSet f{n, {}};
  std::copy_if(g.points.begin(), g.points.end(), std::back_inserter(f.points),
               [&](const Point& pt) { return pt != grid.w; });

  const unsigned cap = p - 1;
  VerificationReport rep;
  rep.claim = Claim::GridRemark;
  json sets = json::array();
  for (const auto& t : sorted) sets.push_back(t);
  rep.params = {{"p", p}, {"n", n}, {"T", sets}, {"w", grid.w}, {"m", m}, {"cap", cap}};

  const std::size_t h_f = hilbert_value(f, m, p, cap);
  const std::size_t h_g = hilbert_value(g, m, p, cap);
  const auto basis = ideal_truncation_basis(f, m, p, cap);
  rep.metrics = {{"h_F", h_f},
                 {"h_G", h_g},
                 {"expected", expected},
                 {"columns", monomials_upto(n, m, cap).size()},
                 {"kernel_dim", basis.size()}};

  rep.status = Status::Pass;
  if (h_f != expected || h_g != expected) {
    rep.status = Status::Fail;
    rep.witnesses.push_back(Witness{"dimension", std::nullopt, std::nullopt, std::nullopt, m, std::nullopt});
  }
  if (auto w = first_nonvanishing(basis, {grid.w}, m)) {
    rep.status = Status::Fail;
    rep.witnesses.push_back(std::move(*w));
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

}  // namespace hilbfam
