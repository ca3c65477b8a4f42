#include "hilbfam/batch.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "hilbfam/hilbert.hpp"

namespace hilbfam {

namespace {

// All subsets of {0..p-1} with at least two elements, ascending by mask.
std::vector<std::vector<std::uint32_t>> coordinate_sets(std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    std::vector<std::uint32_t> t;
    for (std::uint32_t x = 0; x < p; ++x) {
      if (mask >> x & 1) t.push_back(x);
    }
    if (t.size() >= 2) out.push_back(std::move(t));
  }
  return out;
}

void append_grids(std::uint32_t p, unsigned n, std::vector<std::function<VerificationReport()>>& checks) {
  const auto sets = coordinate_sets(p);
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    GridInstance g{p, {}, {}};
    for (unsigned i = 0; i < n; ++i) g.sets.push_back(sets[choice[i]]);
    // every w in the grid
    std::vector<std::size_t> widx(n, 0);
    while (true) {
      GridInstance inst = g;
      inst.w.resize(n);
      for (unsigned i = 0; i < n; ++i) inst.w[i] = g.sets[i][widx[i]];
      checks.push_back([inst] { return verify_grid_remark(inst); });
      int i = static_cast<int>(n) - 1;
      while (i >= 0 && ++widx[i] == g.sets[i].size()) widx[i--] = 0;
      if (i < 0) break;
    }
    int i = static_cast<int>(n) - 1;
    while (i >= 0 && ++choice[i] == sets.size()) choice[i--] = 0;
    if (i < 0) break;
  }
}

}  // namespace

std::vector<std::function<VerificationReport()>> batch_checks(const BatchOptions& opts) {
  std::vector<std::function<VerificationReport()>> checks;
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; p <= opts.p_max; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }
  for (auto p : primes) {
    checks.push_back([p] { return verify_hrubes(p); });
    checks.push_back([p] { return verify_hlemma(p); });
  }
  const std::uint64_t q_max = std::uint64_t{opts.p_max} * opts.p_max;
  for (auto p : primes) {
    for (std::uint64_t q = p; q <= q_max; q *= p) {
      const auto qq = static_cast<std::uint32_t>(q);
      for (unsigned n = 1; n <= opts.n_max; ++n) {
        for (unsigned d = qq - 1; d + qq - 1 <= n; ++d) {
          checks.push_back([=] { return verify_main2(n, d, qq, p); });
          checks.push_back([=] {
            return verify_ideal_truncation_equality(points_of(make_uniform_family(n, static_cast<int>(d))),
                                                    points_of(make_modq_family(n, static_cast<int>(d), qq)), qq - 1,
                                                    p, 1);
          });
        }
      }
    }
  }
  for (auto p : primes) {
    for (unsigned n = 1; n <= opts.grid_n_max; ++n) append_grids(p, n, checks);
  }
  return checks;
}

std::vector<VerificationReport> run_batch(const BatchOptions& opts) {
  const auto checks = batch_checks(opts);
  std::vector<VerificationReport> results(checks.size());
  std::vector<std::exception_ptr> errors(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      try {
        results[i] = checks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace hilbfam
