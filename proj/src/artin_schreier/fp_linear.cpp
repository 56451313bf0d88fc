#include "asgl/fp_linear.hpp"

#include <stdexcept>

namespace asgl {

namespace {

int inv_mod(int a, int p) {
  int r = 1, e = p - 2, base = a % p;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::optional<std::vector<int>> solve_mod_p(std::vector<std::vector<int>> M, std::vector<int> b, int p) {
  const std::size_t rows = M.size();
  if (b.size() != rows) throw std::invalid_argument("right-hand side has the wrong length");
  const std::size_t cols = rows == 0 ? 0 : M[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && M[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(M[piv], M[r]);
    std::swap(b[piv], b[r]);
    const int inv = inv_mod(M[r][c], p);
    for (std::size_t k = c; k < cols; ++k) M[r][k] = M[r][k] * inv % p;
    b[r] = b[r] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      const int f = M[i][c];
      for (std::size_t k = c; k < cols; ++k) M[i][k] = ((M[i][k] - f * M[r][k]) % p + p) % p;
      b[i] = ((b[i] - f * b[r]) % p + p) % p;
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<int> y(cols, 0);
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = b[i];
  return y;
}

}  // namespace asgl
