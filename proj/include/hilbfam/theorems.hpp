#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hilbfam/hilbert.hpp"
#include "hilbfam/poly.hpp"
#include "hilbfam/setfam.hpp"

namespace hilbfam {

enum class Claim { Main, Main2, Hrubes, Hlemma, GridRemark, Main3 };
enum class Status { Pass, Fail, NotApplicable };

std::string_view to_string(Claim c);
std::string_view to_string(Status s);

/// A counterexample or explanatory datum attached to a report.
struct Witness {
  std::string kind;  // "nonvanishing", "uncovered", "bound", ...
  std::optional<Polynomial> polynomial;
  std::optional<Point> point;
  std::optional<Subset> subset;
  long degree_bound = 0;
  std::optional<Fp> value;  // polynomial evaluated at point
};

struct VerificationReport {
  Claim claim = Claim::Main;
  Status status = Status::NotApplicable;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<Witness> witnesses;
  nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
  // Outcome of the check when run outside the theorem's hypotheses on request.
  std::optional<Status> empirical_status;
  double wall_seconds = 0.0;
};

// Nested point sets F within G; NOT_APPLICABLE when h_F(m) != h_G(m).
VerificationReport verify_ideal_truncation_equality(const PointSet& f, const PointSet& g, unsigned m,
                                                    std::uint32_t p, unsigned cap);

// Degree <= q-1 polynomials vanishing on V([n] choose d) also vanish on V(F(d,q)).
// With force = true the check runs outside q-1 <= d <= n-q+1 and the outcome
// is stored in empirical_status while status stays NOT_APPLICABLE.
VerificationReport verify_main2(unsigned n, unsigned d, std::uint32_t q, std::uint32_t p, bool force = false);

VerificationReport verify_hrubes(std::uint32_t p);
VerificationReport verify_hlemma(std::uint32_t p);

struct GridInstance {
  std::uint32_t p = 2;
  std::vector<std::vector<std::uint32_t>> sets;  // T_1 .. T_n, each within F_p, |T_i| >= 2
  Point w;

  unsigned n() const { return static_cast<unsigned>(sets.size()); }
  void validate() const;
};

VerificationReport verify_grid_remark(const GridInstance& grid);

}  // namespace hilbfam
