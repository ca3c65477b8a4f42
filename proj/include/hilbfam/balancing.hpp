#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hilbfam/poly.hpp"
#include "hilbfam/setfam.hpp"
#include "hilbfam/theorems.hpp"

namespace hilbfam {

/// Family over [n], n = 2d, together with the admissible intersection sizes L.
struct BalancingInstance {
  unsigned n = 2;
  std::vector<unsigned> L;  // ascending, within [1, d-1]
  SetFamily family{2};

  // Sorts and validates L; throws DomainError on an invalid instance.
  BalancingInstance(unsigned n, std::vector<unsigned> L, SetFamily family);

  unsigned d() const { return n / 2; }
  unsigned s() const { return static_cast<unsigned>(L.size()); }
  unsigned m() const { return static_cast<unsigned>(family.size()); }
};

struct BalancingCheck {
  bool balancing = false;
  std::optional<Subset> uncovered;  // lexicographically first uncovered d-subset
};

// Every d-subset F must meet some family member G with |F cap G| in L.
BalancingCheck is_balancing(const BalancingInstance& inst);

// prod_i prod_{l in L} (x . v_{G_i} - l) over F_p; requires n = 2p and L within [1, p-1].
Polynomial witness_poly(const BalancingInstance& inst, std::uint32_t p);

VerificationReport check_lower_bound(const BalancingInstance& inst, std::uint32_t p);

struct SearchResult {
  std::optional<unsigned> minimum_size;
  std::optional<SetFamily> witness_family;
  std::uint64_t explored = 0;
  bool limit_hit = false;
};

// Iterative deepening on family size. Candidates default to all nonempty
// proper subsets of [n]; pass a pool to restrict them.
SearchResult min_balancing_size(unsigned n, std::vector<unsigned> L, unsigned size_limit,
                                const std::optional<SetFamily>& pool = std::nullopt);

}  // namespace hilbfam
