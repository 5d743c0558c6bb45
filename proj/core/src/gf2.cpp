#include "trop/gf2.hpp"
#include <algorithm>

namespace trop {

namespace {

// Column-echelon elimination over the transpose: we eliminate rows of a
// working copy; pivots correspond to independent rows.
struct Work {
  int rows, cols, words;
  std::vector<std::uint64_t> data;

  std::uint64_t* row(int r) { return data.data() + static_cast<size_t>(r) * words; }

  void xor_rows(int dst, int src) {
    auto* d = row(dst);
    auto* s = row(src);
    for (int w = 0; w < words; ++w) d[w] ^= s[w];
  }

  bool get(int r, int c) const {
    return (data[static_cast<size_t>(r) * words + c / 64] >> (c % 64)) & 1;
  }
};

}  // namespace

int Gf2Matrix::rank() const {
  Work w{rows_, cols_, words_, data_};
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (w.get(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int k = 0; k < words_; ++k) std::swap(w.row(piv)[k], w.row(rank)[k]);
    for (int r = 0; r < rows_; ++r)
      if (r != rank && w.get(r, c)) w.xor_rows(r, rank);
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> Gf2Matrix::kernel_basis() const {
  Work w{rows_, cols_, words_, data_};
  std::vector<int> pivot_col;
  int rank = 0;
  std::vector<int> col_pivot_row(cols_, -1);
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int piv = -1;
    for (int r = rank; r < rows_; ++r)
      if (w.get(r, c)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int k = 0; k < words_; ++k) std::swap(w.row(piv)[k], w.row(rank)[k]);
    for (int r = 0; r < rows_; ++r)
      if (r != rank && w.get(r, c)) w.xor_rows(r, rank);
    pivot_col.push_back(c);
    col_pivot_row[c] = rank;
    ++rank;
  }
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (col_pivot_row[free] >= 0) continue;
    std::vector<int> vec{free};
    for (int c : pivot_col)
      if (w.get(col_pivot_row[c], free)) vec.push_back(c);
    std::sort(vec.begin(), vec.end());
    basis.push_back(std::move(vec));
  }
  return basis;
}

}  // namespace trop
