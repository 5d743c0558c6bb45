#pragma once

#include <cstdint>
#include <vector>

namespace trop {

/// Dense GF(2) matrix with 64-bit packed rows; big enough for the boundary
/// matrices of desk-scale complexes.
class Gf2Matrix {
 public:
  Gf2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(static_cast<size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c) { data_[static_cast<size_t>(r) * words_ + c / 64] ^= (1ull << (c % 64)); }
  bool get(int r, int c) const {
    return (data_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
  }

  int rank() const;

  /// Basis of {x : M x = 0}, one inner vector per basis element, as column
  /// index lists.
  std::vector<std::vector<int>> kernel_basis() const;

 private:
  int rows_, cols_, words_;
  std::vector<std::uint64_t> data_;
};

}  // namespace trop
