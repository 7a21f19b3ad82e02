#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace atlas {

using Rational = boost::rational<std::int64_t>;

/// Exact value c * sqrt(r) with c rational and r a squarefree positive integer.
class Surd {
 public:
  Surd() = default;
  Surd(Rational coefficient, std::int64_t radicand = 1);
  static Surd integer(std::int64_t v) { return Surd(Rational(v)); }
  /// Non-negative square root of a non-negative rational.
  static Surd sqrt(Rational square);

  const Rational& coefficient() const { return coefficient_; }
  std::int64_t radicand() const { return radicand_; }
  Rational square() const { return coefficient_ * coefficient_ * Rational(radicand_); }
  bool is_rational() const { return radicand_ == 1; }
  bool is_zero() const { return coefficient_ == Rational(0); }
  double to_double() const;
  /// "80", "3/2", "sqrt(11)", "3*sqrt(11)".
  std::string to_string() const;
  /// Inverse of to_string.
  static Surd parse(const std::string& text);

  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Surd& b);
  /// Requires matching radicands unless one side is zero.
  friend Surd operator+(const Surd& a, const Surd& b);
  friend bool operator==(const Surd& a, const Surd& b) {
    return a.coefficient_ == b.coefficient_ && (a.radicand_ == b.radicand_ || a.coefficient_ == Rational(0));
  }
  /// Orders by numeric value (exactly, via signed squares).
  friend bool operator<(const Surd& a, const Surd& b);

 private:
  void normalize();
  Rational coefficient_{0};
  std::int64_t radicand_ = 1;
};

}  // namespace atlas
