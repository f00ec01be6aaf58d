#include "hrap/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hrap {

Exact lorentz_inner(const Vec& x, const Vec& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("lorentz_inner: dimension mismatch");
  Exact s;
  for (size_t i = 0; i + 1 < x.size(); ++i) s += x[i] * y[i];
  return s - x.back() * y.back();
}

VectorClass classify_vector(const Vec& x) {
  switch (lorentz_inner(x, x).sign()) {
    case 1: return VectorClass::SpaceLike;
    case -1: return VectorClass::TimeLike;
    default: return VectorClass::LightLike;
  }
}

Vec reflect(const Vec& u, const Vec& x) {
  if (lorentz_inner(u, u) != Exact(1))
    throw std::invalid_argument("reflect: mirror normal is not unit");
  const Exact c = lorentz_inner(x, u);
  Vec out = x;
  const Exact two(2);
  for (size_t i = 0; i < out.size(); ++i) out[i] -= two * c * u[i];
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot column per row.
std::vector<int> rref(std::vector<Vec>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Exact inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Exact f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<Vec> solve_kernel(const std::vector<Vec>& vectors) {
  if (vectors.empty())
    throw std::invalid_argument("solve_kernel: empty constraint list");
  const size_t cols = vectors[0].size();
  std::vector<Vec> rows;
  rows.reserve(vectors.size());
  for (const Vec& v : vectors) {
    if (v.size() != cols)
      throw std::invalid_argument("solve_kernel: dimension mismatch");
    Vec row = v;
    row.back() = -row.back();  // fold the form's signature into the row
    rows.push_back(std::move(row));
  }
  const std::vector<int> pivots = rref(rows);

  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec b(cols, Exact(0));
    b[free] = Exact(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      b[static_cast<size_t>(pivots[r])] = -rows[r][free];
    basis.push_back(std::move(b));
  }
  return basis;
}

int rank_of(const std::vector<Vec>& rows) {
  if (rows.empty()) return 0;
  std::vector<Vec> m = rows;
  return static_cast<int>(rref(m).size());
}

Mat Mat::identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Exact(1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  Mat out(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Exact& f = at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < n_; ++j) out.at(i, j) += f * o.at(k, j);
    }
  return out;
}

Vec Mat::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("Mat::apply: dimension mismatch");
  Vec out(x.size(), Exact(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i] += at(i, j) * x[j];
  return out;
}

Mat Mat::transpose() const {
  Mat out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::optional<Mat> Mat::inverse() const {
  // Gauss-Jordan on [A | I].
  std::vector<Vec> m(n_, Vec(2 * static_cast<size_t>(n_), Exact(0)));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m[i][j] = at(i, j);
    m[i][static_cast<size_t>(n_) + i] = Exact(1);
  }
  const std::vector<int> pivots = rref(m);
  if (static_cast<int>(pivots.size()) != n_ || pivots.back() != n_ - 1)
    return std::nullopt;
  Mat out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = m[i][static_cast<size_t>(n_) + j];
  return out;
}

Mat lorentz_form(int d) {
  Mat j = Mat::identity(d + 1);
  j.at(d, d) = Exact(-1);
  return j;
}

}  // namespace hrap
