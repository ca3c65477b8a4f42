#include "hilbfam/balancing.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>

#include "hilbfam/errors.hpp"

namespace hilbfam {

namespace {

using json = nlohmann::ordered_json;

const char* const kMemberReading = "the intersecting set G ranges over the members of the family";

std::uint64_t allowed_sizes_mask(const std::vector<unsigned>& L) {
  std::uint64_t mask = 0;
  for (unsigned l : L) mask |= std::uint64_t{1} << l;
  return mask;
}

bool meets(std::uint64_t f, std::uint64_t g, std::uint64_t allowed) {
  return allowed >> std::popcount(f & g) & 1;
}

std::vector<std::uint64_t> masks_of(const SetFamily& family) {
  std::vector<std::uint64_t> out;
  out.reserve(family.size());
  for (const auto& s : family) out.push_back(s.mask());
  return out;
}

void validate_L(unsigned n, std::vector<unsigned>& L) {
  std::sort(L.begin(), L.end());
  if (L.empty()) throw DomainError("L must be nonempty");
  if (std::adjacent_find(L.begin(), L.end()) != L.end()) throw DomainError("L has a repeated value");
  const unsigned d = n / 2;
  if (L.front() < 1 || L.back() + 1 > d) {
    throw DomainError("L must lie within [1, " + std::to_string(d) + " - 1]");
  }
}

void validate_ground_set(unsigned n) {
  if (n < 2 || n % 2 != 0) throw DomainError("ground set size n must be a positive even number");
  if (n > 64) throw DomainError("balancing families are limited to n <= 64");
}

// Bitset over the d-subsets (by index) each candidate covers.
class CoverTable {
public:
  CoverTable(const std::vector<std::uint64_t>& targets, const std::vector<std::uint64_t>& candidates,
             std::uint64_t allowed)
      : words_((targets.size() + 63) / 64), bits_(candidates.size() * words_, 0) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      for (std::size_t t = 0; t < targets.size(); ++t) {
        if (meets(targets[t], candidates[c], allowed)) bits_[c * words_ + t / 64] |= std::uint64_t{1} << (t % 64);
      }
    }
  }

  std::size_t words() const { return words_; }
  const std::uint64_t* row(std::size_t c) const { return bits_.data() + c * words_; }
  bool covers(std::size_t c, std::size_t t) const { return row(c)[t / 64] >> (t % 64) & 1; }

private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

class Searcher {
public:
  Searcher(const CoverTable& table, std::size_t targets, std::size_t candidates)
      : table_(table), targets_(targets), candidates_(candidates) {}

  bool run(unsigned budget, std::vector<std::size_t>& chosen) {
    std::vector<std::uint64_t> covered(table_.words(), 0);
    return dfs(budget, covered, chosen);
  }

  std::uint64_t explored = 0;

private:
  std::optional<std::size_t> first_uncovered(const std::vector<std::uint64_t>& covered) const {
    for (std::size_t w = 0; w < covered.size(); ++w) {
      std::uint64_t free = ~covered[w];
      if (free) {
        std::size_t t = w * 64 + static_cast<std::size_t>(std::countr_zero(free));
        if (t < targets_) return t;
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  bool dfs(unsigned budget, const std::vector<std::uint64_t>& covered, std::vector<std::size_t>& chosen) {
    ++explored;
    auto target = first_uncovered(covered);
    if (!target) return true;
    if (budget == 0) return false;
    std::vector<std::uint64_t> next(covered.size());
    for (std::size_t c = 0; c < candidates_; ++c) {
      if (!table_.covers(c, *target)) continue;
      const std::uint64_t* row = table_.row(c);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] = covered[w] | row[w];
      chosen.push_back(c);
      if (dfs(budget - 1, next, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const CoverTable& table_;
  std::size_t targets_;
  std::size_t candidates_;
};

}  // namespace

BalancingInstance::BalancingInstance(unsigned n_, std::vector<unsigned> L_, SetFamily family_)
    : n(n_), L(std::move(L_)), family(std::move(family_)) {
  validate_ground_set(n);
  validate_L(n, L);
  if (family.n() != n) throw DomainError("family ground set does not match n");
}

BalancingCheck is_balancing(const BalancingInstance& inst) {
  const auto members = masks_of(inst.family);
  const std::uint64_t allowed = allowed_sizes_mask(inst.L);
  for (const auto& f : make_uniform_family(inst.n, static_cast<int>(inst.d()))) {
    const std::uint64_t fm = f.mask();
    const bool covered = std::any_of(members.begin(), members.end(), [&](auto g) { return meets(fm, g, allowed); });
    if (!covered) return BalancingCheck{false, f};
  }
  return BalancingCheck{true, std::nullopt};
}

Polynomial witness_poly(const BalancingInstance& inst, std::uint32_t p) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (inst.n != 2 * p) throw DomainError("witness polynomial needs n = 2p");
  if (inst.L.front() < 1 || inst.L.back() >= p) throw DomainError("L must lie within [1, p - 1]");
  std::vector<AffineFactor> factors;
  for (const auto& g : inst.family) {
    const Point v = char_vector(g, inst.n);
    for (unsigned l : inst.L) factors.push_back(AffineFactor{v, l});
  }
  return expand_affine_product(factors, p, inst.n);
}

VerificationReport check_lower_bound(const BalancingInstance& inst, std::uint32_t p) {
  const auto start = std::chrono::steady_clock::now();
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  VerificationReport rep;
  rep.claim = Claim::Main3;
  rep.params = {{"n", inst.n},
                {"p", p},
                {"L", inst.L},
                {"s", inst.s()},
                {"m", inst.m()},
                {"family", json::array()},
                {"interpretation", kMemberReading}};
  for (const auto& g : inst.family) rep.params["family"].push_back(g.members());

  auto finish = [&]() {
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
  };

  if (inst.n != 2 * p) {
    rep.metrics["reason"] = "the bound is stated for n = 2p";
    rep.status = Status::NotApplicable;
    return finish();
  }
  const auto check = is_balancing(inst);
  rep.metrics["balancing"] = check.balancing;
  if (!check.balancing) {
    rep.status = Status::NotApplicable;
    rep.witnesses.push_back(Witness{"uncovered", std::nullopt, std::nullopt, check.uncovered, 0, std::nullopt});
    return finish();
  }

  const long ms = static_cast<long>(inst.m()) * inst.s();
  const bool bound_holds = 2 * ms >= static_cast<long>(inst.n);
  const Polynomial cert = witness_poly(inst, p);
  const Fp at_origin = cert.constant_term();
  std::uint64_t expected_origin = 1;
  for (unsigned i = 0; i < inst.m(); ++i) {
    for (unsigned l : inst.L) expected_origin = expected_origin * (p - l % p) % p;
  }
  const bool degree_ok = cert.degree() <= ms;
  const bool origin_ok = at_origin != 0 && at_origin == expected_origin;

  rep.metrics["bound_lhs_2sm"] = 2 * ms;
  rep.metrics["bound_rhs_n"] = inst.n;
  rep.metrics["bound_holds"] = bound_holds;
  rep.metrics["certificate_degree"] = cert.degree();
  rep.metrics["degree_limit_ms"] = ms;
  rep.metrics["certificate_at_origin"] = at_origin;
  rep.metrics["expected_at_origin"] = expected_origin;
  rep.metrics["certificate_terms"] = cert.terms().size();

  rep.status = Status::Pass;
  if (!bound_holds) {
    rep.status = Status::Fail;
    rep.witnesses.push_back(Witness{"bound", std::nullopt, std::nullopt, std::nullopt, ms, std::nullopt});
  }
  if (!degree_ok || !origin_ok) {
    rep.status = Status::Fail;
    rep.witnesses.push_back(Witness{"certificate", cert, Point(inst.n, 0), std::nullopt, ms, at_origin});
  }
  std::size_t checked = 0;
  for (const auto& f : make_uniform_family(inst.n, static_cast<int>(p))) {
    const Point v = char_vector(f, inst.n);
    ++checked;
    if (Fp val = cert.evaluate(v); val != 0) {
      rep.status = Status::Fail;
      rep.witnesses.push_back(Witness{"nonvanishing", cert, v, f, ms, val});
      break;
    }
  }
  rep.metrics["points_checked"] = checked;
  rep.metrics["certificate"] = cert.render();
  return finish();
}

SearchResult min_balancing_size(unsigned n, std::vector<unsigned> L, unsigned size_limit,
                                const std::optional<SetFamily>& pool) {
  validate_ground_set(n);
  validate_L(n, L);
  if (size_limit < 1) throw DomainError("size limit must be at least 1");

  std::vector<Subset> candidates;
  if (pool) {
    if (pool->n() != n) throw DomainError("candidate pool ground set does not match n");
    candidates = pool->sets();
  } else {
    if (n >= 63 || (std::uint64_t{1} << n) - 2 > enumeration_cap()) {
      throw ResourceError("candidate enumeration exceeds the enumeration cap");
    }
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) candidates.push_back(Subset::from_mask(mask));
    std::sort(candidates.begin(), candidates.end());
  }

  std::vector<std::uint64_t> targets;
  for (const auto& f : make_uniform_family(n, static_cast<int>(n / 2))) targets.push_back(f.mask());
  std::vector<std::uint64_t> cand_masks;
  for (const auto& c : candidates) cand_masks.push_back(c.mask());
  if (static_cast<double>(cand_masks.size()) * static_cast<double>((targets.size() + 63) / 64) >
      static_cast<double>(enumeration_cap())) {
    throw ResourceError("cover table exceeds the enumeration cap");
  }
  const CoverTable table(targets, cand_masks, allowed_sizes_mask(L));

  SearchResult result;
  Searcher searcher(table, targets.size(), cand_masks.size());
  for (unsigned k = 1; k <= size_limit; ++k) {
    std::vector<std::size_t> chosen;
    if (searcher.run(k, chosen)) {
      std::vector<Subset> members;
      for (auto c : chosen) members.push_back(candidates[c]);
      result.minimum_size = static_cast<unsigned>(members.size());
      result.witness_family = SetFamily(n, std::move(members));
      break;
    }
  }
  result.explored = searcher.explored;
  result.limit_hit = !result.minimum_size.has_value();
  return result;
}

}  // namespace hilbfam
