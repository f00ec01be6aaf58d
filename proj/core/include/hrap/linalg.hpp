#pragma once

#include <optional>
#include <vector>

#include "hrap/exact.hpp"

namespace hrap {

// A Lorentzian vector (x_1, ..., x_d, x_{d+1}); the form is
// <x,y> = x_1 y_1 + ... + x_d y_d - x_{d+1} y_{d+1}.
using Vec = std::vector<Exact>;

enum class VectorClass { SpaceLike, TimeLike, LightLike };

Exact lorentz_inner(const Vec& x, const Vec& y);  // throws on size mismatch
VectorClass classify_vector(const Vec& x);

// x - 2<x,u>u. Requires <u,u> = 1 exactly.
Vec reflect(const Vec& u, const Vec& x);

// Exact basis of {x : <x, v> = 0 for every v in vectors}. Gaussian
// elimination pivots on the first nonzero entry; over an exact field the
// pivot choice affects only the (deterministic) basis presentation.
std::vector<Vec> solve_kernel(const std::vector<Vec>& vectors);

// Plain linear rank of the given vectors as rows. Coincides with the rank of
// the Lorentz constraint system since the form is nondegenerate.
int rank_of(const std::vector<Vec>& rows);

// Dense square exact matrix, row-major.
class Mat {
 public:
  explicit Mat(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}
  static Mat identity(int n);

  int size() const { return n_; }
  Exact& at(int r, int c) { return a_[static_cast<size_t>(r) * n_ + c]; }
  const Exact& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * n_ + c];
  }

  Mat operator*(const Mat& o) const;
  Vec apply(const Vec& x) const;
  Mat transpose() const;
  std::optional<Mat> inverse() const;  // nullopt when singular

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

 private:
  int n_;
  std::vector<Exact> a_;
};

// J = diag(1, ..., 1, -1) of size (d+1) x (d+1).
Mat lorentz_form(int d);

}  // namespace hrap
