#include "hilbfam/setfam.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hilbfam/errors.hpp"

namespace hilbfam {

namespace {

std::atomic<std::uint64_t> g_enumeration_cap{kDefaultEnumerationCap};

void check_cap(const BigInt& count, std::uint64_t cap, const char* what) {
  if (count > cap) {
    std::ostringstream os;
    os << what << ": " << count << " sets exceeds the enumeration cap " << cap;
    throw ResourceError(os.str());
  }
}

// Appends all k-subsets of [n] in lexicographic order.
void append_combinations(unsigned n, unsigned k, std::vector<Subset>& out) {
  if (k > n) return;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    out.emplace_back(idx);
    // advance to the next combination
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == n - k + static_cast<unsigned>(i) + 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

unsigned parse_unsigned(std::string_view s, std::size_t line) {
  s = trim(s);
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("family text line " + std::to_string(line) + ": bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::uint64_t enumeration_cap() { return g_enumeration_cap.load(std::memory_order_relaxed); }

void set_enumeration_cap(std::uint64_t cap) { g_enumeration_cap.store(cap, std::memory_order_relaxed); }

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t f = 3; f <= p / f; f += 2) {
    if (p % f == 0) return false;
  }
  return true;
}

std::optional<unsigned> prime_power_exponent(std::uint64_t q, std::uint64_t p) {
  if (!is_prime(p) || q < p) return std::nullopt;
  unsigned alpha = 0;
  while (q % p == 0) {
    q /= p;
    ++alpha;
  }
  if (q != 1) return std::nullopt;
  return alpha;
}

BigInt binomial(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  if (n <= 64) return BigInt(binomial_u64(n, k));
  std::uint64_t kk = std::min<std::uint64_t>(k, n - k);
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    r *= n - kk + i;
    r /= i;
  }
  return r;
}

std::uint64_t binomial_u64(std::uint64_t n, std::int64_t k) {
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return 0;
  std::uint64_t kk = std::min<std::uint64_t>(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= kk; ++i) {
    // r * (n-kk+i) / i is exact at every step
    r = r * (n - kk + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) {
      throw ResourceError("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(r);
}

Params Params::make(unsigned n, std::uint32_t p, std::uint32_t q, unsigned d, unsigned m) {
  if (n < 1) throw DomainError("n must be positive");
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (!prime_power_exponent(q, p)) {
    throw DomainError("q = " + std::to_string(q) + " is not a positive power of p = " + std::to_string(p));
  }
  if (d > n) throw DomainError("d must satisfy 0 <= d <= n");
  return Params{n, p, q, d, m};
}

Subset::Subset(std::vector<unsigned> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw DomainError("subset has a repeated member");
  }
  if (!members_.empty() && members_.front() == 0) throw DomainError("subset members are 1-based");
}

bool Subset::contains(unsigned x) const { return std::binary_search(members_.begin(), members_.end(), x); }

std::uint64_t Subset::mask() const {
  if (max_member() > 64) throw DomainError("bitmask form needs members <= 64");
  std::uint64_t mask = 0;
  for (unsigned x : members_) mask |= std::uint64_t{1} << (x - 1);
  return mask;
}

Subset Subset::from_mask(std::uint64_t mask) {
  std::vector<unsigned> members;
  for (unsigned i = 0; i < 64; ++i) {
    if (mask >> i & 1) members.push_back(i + 1);
  }
  return Subset(std::move(members));
}

std::string Subset::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(members_[i]);
  }
  return s + "}";
}

SetFamily::SetFamily(unsigned n, std::vector<Subset> sets) : n_(n), sets_(std::move(sets)) {
  for (const auto& s : sets_) {
    if (s.max_member() > n_) {
      throw DomainError("subset " + s.to_string() + " is not within [" + std::to_string(n_) + "]");
    }
  }
  std::sort(sets_.begin(), sets_.end());
  auto dup = std::adjacent_find(sets_.begin(), sets_.end());
  if (dup != sets_.end()) throw DomainError("family lists " + dup->to_string() + " twice");
}

bool SetFamily::contains(const Subset& s) const { return std::binary_search(sets_.begin(), sets_.end(), s); }

SetFamily make_uniform_family(unsigned n, int d, std::uint64_t cap) {
  if (n < 1) throw DomainError("n must be positive");
  if (d < 0 || static_cast<unsigned>(d) > n) throw DomainError("d must satisfy 0 <= d <= n");
  check_cap(binomial(n, d), cap, "uniform family");
  std::vector<Subset> sets;
  append_combinations(n, static_cast<unsigned>(d), sets);
  return SetFamily(n, std::move(sets));
}

SetFamily make_modq_family(unsigned n, int d, std::uint32_t q, std::uint64_t cap) {
  if (n < 1) throw DomainError("n must be positive");
  if (d < 0 || static_cast<unsigned>(d) > n) throw DomainError("d must satisfy 0 <= d <= n");
  if (q < 2) throw DomainError("q must be at least 2");
  BigInt total = 0;
  for (unsigned k = static_cast<unsigned>(d) % q; k <= n; k += q) total += binomial(n, k);
  check_cap(total, cap, "mod-q family");
  std::vector<Subset> sets;
  for (unsigned k = static_cast<unsigned>(d) % q; k <= n; k += q) append_combinations(n, k, sets);
  return SetFamily(n, std::move(sets));
}

Point char_vector(const Subset& s, unsigned n) {
  if (s.max_member() > n) {
    throw DomainError("subset " + s.to_string() + " is not within [" + std::to_string(n) + "]");
  }
  Point v(n, 0);
  for (unsigned x : s.members()) v[x - 1] = 1;
  return v;
}

std::vector<Point> char_vectors(const SetFamily& family) {
  std::vector<Point> out;
  out.reserve(family.size());
  for (const auto& s : family) out.push_back(char_vector(s, family.n()));
  return out;
}

SetFamily parse_family(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) throw DomainError("family text is empty; expected header 'n=<int>'");
  auto header = trim(lines.front());
  if (header.substr(0, 2) != "n=") throw DomainError("family text must start with 'n=<int>'");
  unsigned n = parse_unsigned(header.substr(2), 1);
  if (n < 1) throw DomainError("family header: n must be positive");

  std::vector<Subset> sets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto line = trim(lines[i]);
    std::vector<unsigned> members;
    while (!line.empty()) {
      auto comma = line.find(',');
      members.push_back(parse_unsigned(line.substr(0, comma), i + 1));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
      if (trim(line).empty()) throw DomainError("family text line " + std::to_string(i + 1) + ": trailing comma");
    }
    for (unsigned x : members) {
      if (x < 1 || x > n) {
        throw DomainError("family text line " + std::to_string(i + 1) + ": member " + std::to_string(x) +
                          " outside [" + std::to_string(n) + "]");
      }
    }
    sets.emplace_back(std::move(members));
  }
  return SetFamily(n, std::move(sets));
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open family file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str());
}

std::string format_family(const SetFamily& family) {
  std::string out = "n=" + std::to_string(family.n()) + "\n";
  for (const auto& s : family) {
    for (std::size_t i = 0; i < s.members().size(); ++i) {
      if (i) out += ',';
      out += std::to_string(s.members()[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace hilbfam
