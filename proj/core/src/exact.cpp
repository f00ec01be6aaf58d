#include "hrap/exact.hpp"

#include <cctype>
#include <numbers>
#include <stdexcept>

namespace hrap {

int Exact::sign() const {
  const int sr = rat_.sign();
  const int ss = root2_.sign();
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  // Opposite pulls: |rat| vs |root2|*sqrt(2), settled on squares. Equality of
  // the squares would force sqrt(2) rational, so it cannot happen here; the
  // branch only keeps the function total.
  const Rat lhs = rat_ * rat_;
  const Rat rhs = 2 * root2_ * root2_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sr : ss;
}

Exact Exact::inverse() const {
  if (is_zero()) throw std::domain_error("Exact: division by zero");
  // a^2 - 2 b^2 = 0 with (a, b) != 0 would make sqrt(2) rational.
  const Rat norm = rat_ * rat_ - 2 * root2_ * root2_;
  return {rat_ / norm, -root2_ / norm};
}

double Exact::to_double() const {
  return rat_.convert_to<double>() +
         root2_.convert_to<double>() * std::numbers::sqrt2;
}

namespace {

std::string rat_str(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

}  // namespace

std::string Exact::str() const {
  if (root2_.is_zero()) return rat_str(rat_);
  if (rat_.is_zero()) return rat_str(root2_) + "*r2";
  std::string s = rat_str(rat_);
  s += root2_.sign() > 0 ? "+" : "-";
  Rat mag = root2_.sign() > 0 ? root2_ : Rat(-root2_);
  s += rat_str(mag) + "*r2";
  return s;
}

namespace {

[[noreturn]] void bad_scalar(std::string_view text) {
  throw std::invalid_argument("Exact: cannot parse \"" + std::string(text) +
                              "\"");
}

// One signed term: sign? digits ('/' digits)? ('*r2')?. Returns the rational
// coefficient and whether the term carried the *r2 marker.
struct Term {
  Rat value;
  bool is_root2;
};

Term parse_term(std::string_view text, size_t& i) {
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  const size_t digits_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
    ++i;
  if (i == digits_begin) bad_scalar(text);
  Int num(std::string(text.substr(digits_begin, i - digits_begin)));
  Int den(1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    const size_t den_begin = i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i])))
      ++i;
    if (i == den_begin) bad_scalar(text);
    den = Int(std::string(text.substr(den_begin, i - den_begin)));
    if (den.is_zero()) bad_scalar(text);
  }
  bool root2 = false;
  if (text.substr(i, 3) == "*r2") {
    root2 = true;
    i += 3;
  }
  Rat value(num, den);
  if (neg) value = -value;
  return {std::move(value), root2};
}

}  // namespace

Exact Exact::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) bad_scalar(text);

  size_t i = 0;
  const Term first = parse_term(text, i);
  Rat rat, root2;
  (first.is_root2 ? root2 : rat) = first.value;
  if (i < text.size()) {
    if (text[i] != '+' && text[i] != '-') bad_scalar(text);
    const Term second = parse_term(text, i);
    if (second.is_root2 == first.is_root2) bad_scalar(text);
    (second.is_root2 ? root2 : rat) = second.value;
  }
  if (i != text.size()) bad_scalar(text);
  return {std::move(rat), std::move(root2)};
}

}  // namespace hrap
