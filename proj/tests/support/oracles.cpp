#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace gendirac::testing {

std::vector<Complex> solve_dense(DenseMatrix a, std::vector<Complex> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) == 0.0) throw std::runtime_error("singular system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Complex> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= a[i][c] * x[c];
    x[i] = s / a[i][i];
  }
  return x;
}

int rank_dense(DenseMatrix a, double tol) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  double scale = 0.0;
  for (const auto& row : a) {
    for (const auto& z : row) scale = std::max(scale, std::abs(z));
  }
  const double cutoff = tol * scale;
  std::vector<std::size_t> col_order(cols);
  for (std::size_t c = 0; c < cols; ++c) col_order[c] = c;

  int rank = 0;
  for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
    std::size_t pr = step, pc = step;
    double best = 0.0;
    for (std::size_t r = step; r < rows; ++r) {
      for (std::size_t c = step; c < cols; ++c) {
        const double v = std::abs(a[r][col_order[c]]);
        if (v > best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    }
    if (best <= cutoff) break;
    std::swap(a[step], a[pr]);
    std::swap(col_order[step], col_order[pc]);
    const std::size_t piv = col_order[step];
    for (std::size_t r = step + 1; r < rows; ++r) {
      const Complex f = a[r][piv] / a[step][piv];
      for (std::size_t c = step; c < cols; ++c) a[r][col_order[c]] -= f * a[step][col_order[c]];
    }
    ++rank;
  }
  return rank;
}

Complex determinant(ComplexMatrix4 m) {
  Complex det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    }
    if (m(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      m.row(col).swap(m.row(pivot));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < 4; ++r) m.row(r) -= (m(r, col) / m(col, col)) * m.row(col);
  }
  return det;
}

std::array<Complex, 16> decompose_by_elimination(const ComplexMatrix4& m) {
  const auto& basis = clifford_basis();
  DenseMatrix a(16, std::vector<Complex>(16));
  std::vector<Complex> b(16);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const auto row = static_cast<std::size_t>(4 * r + c);
      for (std::size_t i = 0; i < 16; ++i) a[row][i] = basis[i].matrix(r, c);
      b[row] = m(r, c);
    }
  }
  const auto x = solve_dense(a, b);
  std::array<Complex, 16> out;
  std::copy(x.begin(), x.end(), out.begin());
  return out;
}

std::array<double, 4> general_eigenvalues(const ComplexMatrix4& m) {
  Eigen::ComplexEigenSolver<ComplexMatrix4> solver(m, false);
  std::array<double, 4> ev;
  for (int i = 0; i < 4; ++i) ev[static_cast<std::size_t>(i)] = solver.eigenvalues()(i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

ComplexMatrix4 random_matrix(Rng& rng, double scale) {
  ComplexMatrix4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = scale * Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  }
  return m;
}

Spinor random_unit_spinor(Rng& rng) {
  Spinor s;
  for (int a = 0; a < 4; ++a) s(a) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return s.normalized();
}

}  // namespace gendirac::testing
