#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbfam {

using BigInt = boost::multiprecision::cpp_int;
using Point = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Process-wide cap on the number of sets (or points) any constructor will
// enumerate. Thread-safe.
std::uint64_t enumeration_cap();
void set_enumeration_cap(std::uint64_t cap);

bool is_prime(std::uint64_t p);

// Returns alpha with q = p^alpha, alpha >= 1, or nullopt if q is not such a power.
std::optional<unsigned> prime_power_exponent(std::uint64_t q, std::uint64_t p);

// Exact C(n, k); 0 when k < 0 or k > n.
BigInt binomial(std::uint64_t n, std::int64_t k);

// Native fast path; throws ResourceError if the value does not fit.
std::uint64_t binomial_u64(std::uint64_t n, std::int64_t k);

struct Params {
  unsigned n = 1;
  std::uint32_t p = 2;
  std::uint32_t q = 2;
  unsigned d = 0;
  unsigned m = 0;

  // Validates: p prime, q a positive power of p, 0 <= d <= n, n >= 1.
  static Params make(unsigned n, std::uint32_t p, std::uint32_t q, unsigned d, unsigned m);
};

/// Subset of [n] stored as a strictly increasing list of 1-based members.
class Subset {
public:
  Subset() = default;
  // Sorts the input; throws DomainError on duplicates or a zero member.
  explicit Subset(std::vector<unsigned> members);

  const std::vector<unsigned>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  unsigned max_member() const { return members_.empty() ? 0 : members_.back(); }
  bool contains(unsigned x) const;

  // Bit i-1 set iff i is a member. Requires max_member() <= 64.
  std::uint64_t mask() const;
  static Subset from_mask(std::uint64_t mask);

  std::string to_string() const;  // "{1,3}"

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset& a, const Subset& b) { return a.members_ <=> b.members_; }

private:
  std::vector<unsigned> members_;
};

/// Duplicate-free family of subsets of [n], kept in lexicographic order of the
/// sorted member lists.
class SetFamily {
public:
  explicit SetFamily(unsigned n) : n_(n) {}
  // Canonicalizes order; throws DomainError on duplicates or members > n.
  SetFamily(unsigned n, std::vector<Subset> sets);

  unsigned n() const { return n_; }
  const std::vector<Subset>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  bool contains(const Subset& s) const;

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
  unsigned n_;
  std::vector<Subset> sets_;
};

SetFamily make_uniform_family(unsigned n, int d, std::uint64_t cap = enumeration_cap());
SetFamily make_modq_family(unsigned n, int d, std::uint32_t q, std::uint64_t cap = enumeration_cap());

Point char_vector(const Subset& s, unsigned n);
std::vector<Point> char_vectors(const SetFamily& family);

// Text format: header line "n=<int>", then one subset per line as
// comma-separated 1-based members; an empty line is the empty set.
SetFamily parse_family(std::string_view text);
SetFamily load_family(const std::string& path);
std::string format_family(const SetFamily& family);

}  // namespace hilbfam
