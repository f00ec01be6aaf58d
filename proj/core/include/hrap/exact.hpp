#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace hrap {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Element of Q(sqrt 2), stored as rat + root2 * sqrt(2). Canonical form is
// inherited from cpp_rational (fully reduced, positive denominator), so
// equality is plain structural equality.
class Exact {
 public:
  Exact() = default;
  Exact(int v) : rat_(v) {}            // NOLINT: implicit by design
  Exact(Int v) : rat_(std::move(v)) {} // NOLINT
  Exact(Rat v) : rat_(std::move(v)) {} // NOLINT
  Exact(Rat rat, Rat root2) : rat_(std::move(rat)), root2_(std::move(root2)) {}

  static Exact sqrt2() { return {Rat(0), Rat(1)}; }

  // Parses the str() format: "a", "a/b", "a/b+c/d*r2", "c*r2", "-c/d*r2".
  // Throws std::invalid_argument on anything else.
  static Exact parse(std::string_view text);

  const Rat& rat() const { return rat_; }
  const Rat& root2() const { return root2_; }

  bool is_zero() const { return rat_.is_zero() && root2_.is_zero(); }
  bool is_rational() const { return root2_.is_zero(); }

  // Exact sign (-1, 0, +1). When the two parts pull in opposite directions
  // the winner is decided by comparing rat^2 against 2*root2^2, never by
  // floating approximation.
  int sign() const;

  Exact operator-() const { return {-rat_, -root2_}; }

  Exact& operator+=(const Exact& o) {
    rat_ += o.rat_;
    root2_ += o.root2_;
    return *this;
  }
  Exact& operator-=(const Exact& o) {
    rat_ -= o.rat_;
    root2_ -= o.root2_;
    return *this;
  }
  Exact& operator*=(const Exact& o) {
    // (a + b r)(c + d r) = (ac + 2bd) + (ad + bc) r  with r^2 = 2.
    Rat a = rat_ * o.rat_ + 2 * root2_ * o.root2_;
    Rat b = rat_ * o.root2_ + root2_ * o.rat_;
    rat_ = std::move(a);
    root2_ = std::move(b);
    return *this;
  }

  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(Exact a, const Exact& b) { return a *= b; }

  // Field inverse via the conjugate: 1/(a + b r) = (a - b r)/(a^2 - 2 b^2).
  // Throws std::domain_error on zero.
  Exact inverse() const;
  friend Exact operator/(const Exact& a, const Exact& b) {
    return a * b.inverse();
  }

  Exact abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Exact& a, const Exact& b) {
    return a.rat_ == b.rat_ && a.root2_ == b.root2_;
  }
  friend std::strong_ordering operator<=>(const Exact& a, const Exact& b) {
    switch ((a - b).sign()) {
      case -1: return std::strong_ordering::less;
      case 1: return std::strong_ordering::greater;
      default: return std::strong_ordering::equal;
    }
  }

  double to_double() const;
  std::string str() const;

 private:
  Rat rat_{0};
  Rat root2_{0};
};

// Convenience for rational literals: exact(1, 2) = 1/2.
inline Exact exact(long num, long den = 1) { return Exact(Rat(num, den)); }

}  // namespace hrap
