#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hilbfam {

using Fp = std::uint32_t;

// Largest supported modulus; products of two residues must fit in 64 bits.
inline constexpr std::uint32_t kMaxModulus = (1u << 31) - 1;

struct FpVector {
  std::uint32_t p = 2;
  std::vector<Fp> values;

  friend bool operator==(const FpVector&, const FpVector&) = default;
};

/// Dense row-major matrix over F_p.
class FpMatrix {
public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  // Entries are reduced mod p.
  FpMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, std::vector<std::uint64_t> entries);

  static FpMatrix identity(std::uint32_t p, std::size_t size);

  std::uint32_t modulus() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Fp& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Fp> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Fp> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

  std::vector<Fp> multiply(std::span<const Fp> x) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> data_;
};

struct RrefResult {
  FpMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

// Reduced row echelon form. Pivot = first nonzero in the leftmost unfinished
// column; p == 2 takes the bit-packed path, which is bit-identical.
RrefResult rref(const FpMatrix& m);
std::size_t rank_mod_p(const FpMatrix& m);

// Free-variable basis of {c : M c = 0}, ascending free column; each vector is
// 1 on its own free column and 0 on the other free columns.
std::vector<FpVector> kernel_basis(const FpMatrix& m);

Fp inverse_mod(Fp a, std::uint32_t p);

namespace detail {
RrefResult rref_generic(const FpMatrix& m);
RrefResult rref_gf2(const FpMatrix& m);
}  // namespace detail

}  // namespace hilbfam
