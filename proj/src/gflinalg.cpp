#include "hilbfam/gflinalg.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "hilbfam/errors.hpp"
#include "hilbfam/setfam.hpp"

namespace hilbfam {

namespace {

void check_modulus(std::uint32_t p) {
  if (p < 2 || p > kMaxModulus || !is_prime(p)) {
    throw DomainError("matrix modulus " + std::to_string(p) + " is not a supported prime");
  }
}

}  // namespace

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  check_modulus(p);
}

FpMatrix::FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<std::uint64_t> entries)
    : FpMatrix(p, rows, cols) {
  if (entries.size() != rows * cols) throw DomainError("entry count does not match matrix shape");
  for (std::size_t i = 0; i < entries.size(); ++i) data_[i] = static_cast<Fp>(entries[i] % p);
}

FpMatrix FpMatrix::identity(std::uint32_t p, std::size_t size) {
  FpMatrix m(p, size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

std::vector<Fp> FpMatrix::multiply(std::span<const Fp> x) const {
  if (x.size() != cols_) throw DomainError("vector length does not match matrix columns");
  std::vector<Fp> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    auto row_r = row(r);
    for (std::size_t c = 0; c < cols_; ++c) acc = (acc + std::uint64_t{row_r[c]} * x[c]) % p_;
    y[r] = static_cast<Fp>(acc);
  }
  return y;
}

Fp inverse_mod(Fp a, std::uint32_t p) {
  if (a % p == 0) throw DomainError("zero has no inverse");
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += p;
  return static_cast<Fp>(t);
}

namespace detail {

RrefResult rref_generic(const FpMatrix& m) {
  RrefResult out{m, {}};
  FpMatrix& a = out.reduced;
  const std::uint64_t p = a.modulus();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> support;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = pivot_row;
    while (found < rows && a(found, col) == 0) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      std::swap_ranges(a.row(found).begin(), a.row(found).end(), a.row(pivot_row).begin());
    }
    auto prow = a.row(pivot_row);
    const std::uint64_t inv = inverse_mod(prow[col], a.modulus());
    support.clear();
    for (std::size_t c = col; c < cols; ++c) {
      if (prow[c] != 0) {
        prow[c] = static_cast<Fp>(prow[c] * inv % p);
        support.push_back(c);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      auto target = a.row(r);
      const std::uint64_t f = target[col];
      if (f == 0) continue;
      const std::uint64_t neg = p - f;
      for (std::size_t c : support) target[c] = static_cast<Fp>((target[c] + neg * prow[c]) % p);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return out;
}

RrefResult rref_gf2(const FpMatrix& m) {
  if (m.modulus() != 2) throw DomainError("bit-packed elimination needs p = 2");
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::uint64_t> bits(rows * words, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (m(r, c)) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  auto word_row = [&](std::size_t r) { return bits.data() + r * words; };

  RrefResult out{FpMatrix(2, rows, cols), {}};
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t found = pivot_row;
    while (found < rows && !(word_row(found)[w] & bit)) ++found;
    if (found == rows) continue;
    if (found != pivot_row) std::swap_ranges(word_row(found), word_row(found) + words, word_row(pivot_row));
    const std::uint64_t* prow = word_row(pivot_row);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row) continue;
      std::uint64_t* target = word_row(r);
      if (!(target[w] & bit)) continue;
      // columns left of col are zero in the pivot row
      for (std::size_t k = w; k < words; ++k) target[k] ^= prow[k];
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  for (std::size_t r = 0; r < rows; ++r) {
    const std::uint64_t* src = word_row(r);
    for (std::size_t k = 0; k < words; ++k) {
      std::uint64_t x = src[k];
      while (x) {
        out.reduced(r, k * 64 + static_cast<std::size_t>(std::countr_zero(x))) = 1;
        x &= x - 1;
      }
    }
  }
  return out;
}

}  // namespace detail

RrefResult rref(const FpMatrix& m) {
  return m.modulus() == 2 ? detail::rref_gf2(m) : detail::rref_generic(m);
}

std::size_t rank_mod_p(const FpMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<FpVector> kernel_basis(const FpMatrix& m) {
  const auto [reduced, pivots] = rref(m);
  const std::uint32_t p = m.modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FpVector v{p, std::vector<Fp>(m.cols(), 0)};
    v.values[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Fp e = reduced(i, free);
      if (e) v.values[pivots[i]] = p - e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hilbfam
