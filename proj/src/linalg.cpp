#include "liesym/linalg.hpp"

#include <algorithm>

#include "liesym/errors.hpp"

namespace liesym {

namespace {

// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(QMatrix& a, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  const int nrows = static_cast<int>(a.size());
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int p = -1;
    for (int r = row; r < nrows; ++r)
      if (!a[r][col].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[row], a[p]);
    const Rational inv = a[row][col].inverse();
    for (int c = col; c < ncols; ++c) a[row][c] *= inv;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (int c = col; c < ncols; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int matrix_rank(QMatrix a) {
  if (a.empty()) return 0;
  return static_cast<int>(rref(a, static_cast<int>(a[0].size())).size());
}

std::vector<std::vector<mpz_class>> nullspace_primitive(QMatrix a, int ncols) {
  for (const auto& r : a)
    if (static_cast<int>(r.size()) != ncols) throw DomainError("ragged matrix");
  const std::vector<int> pivots = rref(a, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<std::vector<mpz_class>> out;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    // Rational solution with 1 at the free column, back-substituted pivots.
    std::vector<Rational> v(ncols, Rational(0));
    v[free_col] = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free_col];

    mpz_class lcm = 1;
    for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                    x.denominator().get_mpz_t());
    std::vector<mpz_class> w(ncols);
    mpz_class content = 0;
    for (int c = 0; c < ncols; ++c) {
      w[c] = v[c].numerator() * (lcm / v[c].denominator());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w[c].get_mpz_t());
    }
    if (content > 1)
      for (auto& x : w) x /= content;
    for (const auto& x : w) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : w) y = -y;
      break;
    }
    out.push_back(std::move(w));
  }
  return out;
}

QMatrix mat_identity(int n) {
  QMatrix m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int k = n ? static_cast<int>(a[0].size()) : 0;
  if (static_cast<int>(b.size()) != k) throw DomainError("matrix shape mismatch");
  const int m = k ? static_cast<int>(b[0].size()) : 0;
  QMatrix r(n, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) {
      if (a[i][j].is_zero()) continue;
      for (int c = 0; c < m; ++c) r[i][c] += a[i][j] * b[j][c];
    }
  return r;
}

QMatrix mat_inverse(QMatrix a) {
  const int n = static_cast<int>(a.size());
  for (auto& row : a) {
    if (static_cast<int>(row.size()) != n) throw DomainError("matrix is not square");
    row.resize(2 * n, Rational(0));
  }
  for (int i = 0; i < n; ++i) a[i][n + i] = Rational(1);
  const std::vector<int> pivots = rref(a, 2 * n);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1)
    throw NonInvertibleError("matrix is singular");
  QMatrix inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace liesym
