#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hilbfam/gflinalg.hpp"
#include "hilbfam/poly.hpp"
#include "hilbfam/setfam.hpp"

namespace hilbfam {

/// Finite point set in F_p^n. Coordinates must already be residues mod p.
struct PointSet {
  unsigned n = 0;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  bool is_binary() const;
  std::size_t distinct_count() const;
};

PointSet points_of(const SetFamily& family);

struct EvaluationMatrix {
  FpMatrix matrix;
  std::vector<Point> points;        // row order
  std::vector<Monomial> monomials;  // column order
};

// Rows indexed by points, columns by monomials_upto(n, m, cap). cap must be 1
// (binary points only) or p - 1.
EvaluationMatrix evaluation_matrix(const PointSet& points, unsigned m, std::uint32_t p, unsigned cap);

std::size_t hilbert_value(const PointSet& points, unsigned m, std::uint32_t p, unsigned cap);

// h(0), h(1), ... up to and including the first m with h(m) = #distinct points.
std::vector<std::size_t> hilbert_series(const PointSet& points, std::uint32_t p, unsigned cap);

// Basis of the degree <= m part of the vanishing ideal, in the cap-reduced
// monomial basis.
std::vector<Polynomial> ideal_truncation_basis(const PointSet& points, unsigned m, std::uint32_t p,
                                               unsigned cap);

// C(n, m); only asserted for 0 <= m <= min(d, n - d).
BigInt wilson_value(unsigned n, unsigned d, unsigned m);

// Closed-form Hilbert function of the family of subsets with size = d mod q.
BigInt modq_value(unsigned n, unsigned d, unsigned q, unsigned m);

enum class ClosedForm { None, Wilson, ModQ };

struct HilbertReport {
  unsigned n = 0;
  std::optional<unsigned> d;
  std::uint32_t p = 2;
  std::optional<std::uint32_t> q;
  unsigned m = 0;
  unsigned cap = 1;
  std::size_t h_oracle = 0;
  std::optional<BigInt> h_closed_form;
  std::size_t ideal_dim = 0;
  std::optional<unsigned> r;
  std::optional<bool> match;
  std::size_t columns = 0;
  ClosedForm closed_form = ClosedForm::None;

  friend bool operator==(const HilbertReport&, const HilbertReport&) = default;
};

// V([n] choose d); closed form filled only inside Wilson's range.
HilbertReport hilbert_report_uniform(unsigned n, unsigned d, std::uint32_t p, unsigned m, unsigned cap = 1);
// V(F(d, q)) with q a power of p.
HilbertReport hilbert_report_modq(unsigned n, unsigned d, std::uint32_t q, std::uint32_t p, unsigned m,
                                  unsigned cap = 1);
HilbertReport hilbert_report_points(const PointSet& points, std::uint32_t p, unsigned m, unsigned cap);

// One report per m from 0 to stabilization.
std::vector<HilbertReport> hilbert_series_uniform(unsigned n, unsigned d, std::uint32_t p, unsigned cap = 1);
std::vector<HilbertReport> hilbert_series_modq(unsigned n, unsigned d, std::uint32_t q, std::uint32_t p,
                                               unsigned cap = 1);
std::vector<HilbertReport> hilbert_series_points(const PointSet& points, std::uint32_t p, unsigned cap);

}  // namespace hilbfam
