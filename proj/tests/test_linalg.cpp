#include <doctest.h>

#include <random>

#include "hrap/linalg.hpp"

using hrap::Exact;
using hrap::Mat;
using hrap::Rat;
using hrap::Vec;

namespace {

Vec random_vec(std::mt19937& rng, size_t n) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  Vec v;
  for (size_t i = 0; i < n; ++i)
    v.push_back(Exact(Rat(num(rng), den(rng)), Rat(num(rng), den(rng))));
  return v;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("inner product carries the signature") {
  const Vec x{1, 2, 3};
  const Vec y{4, 5, 6};
  CHECK(hrap::lorentz_inner(x, y) == Exact(4 + 10 - 18));
  CHECK_THROWS_AS(hrap::lorentz_inner(x, Vec{1, 2}), std::invalid_argument);
}

TEST_CASE("vector trichotomy") {
  CHECK(hrap::classify_vector({0, 0, 1}) == hrap::VectorClass::TimeLike);
  CHECK(hrap::classify_vector({1, 0, 1}) == hrap::VectorClass::LightLike);
  CHECK(hrap::classify_vector({1, 0, 0}) == hrap::VectorClass::SpaceLike);
}

TEST_CASE("reflection is an exact involution preserving the form") {
  std::mt19937 rng(7);
  const Vec u{17, 0, Exact(12) * Exact::sqrt2()};  // unit space-like
  REQUIRE(hrap::lorentz_inner(u, u) == Exact(1));
  for (int trial = 0; trial < 50; ++trial) {
    const Vec x = random_vec(rng, 3), y = random_vec(rng, 3);
    const Vec rx = hrap::reflect(u, x), ry = hrap::reflect(u, y);
    CHECK(hrap::lorentz_inner(rx, ry) == hrap::lorentz_inner(x, y));
    CHECK(hrap::reflect(u, rx) == x);
  }
  Vec mu = u;
  for (Exact& c : mu) c = -c;
  CHECK(hrap::reflect(u, u) == mu);
}

TEST_CASE("kernel of two independent constraints in 3-space is a line") {
  const std::vector<Vec> rows{Vec{1, 0, 0}, Vec{0, 1, 0}};
  const std::vector<Vec> basis = hrap::solve_kernel(rows);
  REQUIRE(basis.size() == 1);
  // The solution must be Lorentz-orthogonal to both rows.
  for (const Vec& r : rows)
    CHECK(hrap::lorentz_inner(r, basis[0]).is_zero());
  CHECK(!basis[0][2].is_zero());
}

TEST_CASE("rank counts independent rows") {
  CHECK(hrap::rank_of({Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{1, 1, 0}}) == 2);
  CHECK(hrap::rank_of({Vec{1, 2, 3}}) == 1);
  CHECK(hrap::rank_of({}) == 0);
  CHECK(hrap::rank_of({Vec{0, 0, 0}}) == 0);
}

TEST_CASE("matrix inverse round trips and flags singularity") {
  std::mt19937 rng(11);
  Mat m(3);
  for (int r = 0; r < 3; ++r) {
    const Vec row = random_vec(rng, 3);
    for (int c = 0; c < 3; ++c) m.at(r, c) = row[static_cast<size_t>(c)];
  }
  // Nudge the diagonal until the matrix is invertible, then round trip.
  while (!m.inverse().has_value())
    for (int r = 0; r < 3; ++r) m.at(r, r) += Exact(1);
  const Mat inv = *m.inverse();
  CHECK(m * inv == Mat::identity(3));
  CHECK(inv * m == Mat::identity(3));

  Mat sing(2);
  sing.at(0, 0) = Exact(1);
  sing.at(0, 1) = Exact(2);
  sing.at(1, 0) = Exact(2);
  sing.at(1, 1) = Exact(4);
  CHECK(!sing.inverse().has_value());
}

TEST_CASE("form matrix matches the inner product") {
  std::mt19937 rng(13);
  const Mat j = hrap::lorentz_form(2);
  for (int trial = 0; trial < 20; ++trial) {
    const Vec x = random_vec(rng, 3), y = random_vec(rng, 3);
    Exact via_mat(0);
    const Vec jy = j.apply(y);
    for (size_t i = 0; i < x.size(); ++i) via_mat += x[i] * jy[i];
    CHECK(via_mat == hrap::lorentz_inner(x, y));
  }
}

}  // TEST_SUITE
