#include "atlas/surd.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "atlas/error.hpp"

namespace atlas {

namespace {

// Splits n > 0 as s^2 * r with r squarefree; returns {s, r}.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  require(n > 0, ErrorKind::InvalidArgument, "radicand must be positive");
  std::int64_t s = 1, r = 1;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    while (n % (f * f) == 0) {
      n /= f * f;
      s *= f;
    }
    if (n % f == 0) {
      n /= f;
      r *= f;
    }
  }
  r *= n;
  return {s, r};
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const std::int64_t v = std::stoll(text, &used);
      require(used == text.size(), ErrorKind::Parse, "bad number \"" + text + "\"");
      return Rational(v);
    }
    const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    const std::int64_t n = std::stoll(num, &used);
    require(used == num.size(), ErrorKind::Parse, "bad number \"" + text + "\"");
    const std::int64_t d = std::stoll(den, &used);
    require(used == den.size() && d != 0, ErrorKind::Parse, "bad number \"" + text + "\"");
    return Rational(n, d);
  } catch (const std::logic_error&) {
    fail(ErrorKind::Parse, "bad number \"" + text + "\"");
  }
}

}  // namespace

Surd::Surd(Rational coefficient, std::int64_t radicand) : coefficient_(coefficient), radicand_(radicand) {
  normalize();
}

void Surd::normalize() {
  if (coefficient_ == Rational(0)) {
    radicand_ = 1;
    return;
  }
  auto [s, r] = split_square(radicand_);
  coefficient_ *= s;
  radicand_ = r;
}

Surd Surd::sqrt(Rational square) {
  require(square >= Rational(0), ErrorKind::InvalidArgument, "square root of a negative rational");
  if (square == Rational(0)) return Surd();
  // sqrt(a/b) = sqrt(a b) / b
  const std::int64_t a = square.numerator(), b = square.denominator();
  auto [s, r] = split_square(a * b);
  return Surd(Rational(s, b), r);
}

double Surd::to_double() const {
  return static_cast<double>(coefficient_.numerator()) / static_cast<double>(coefficient_.denominator()) *
         std::sqrt(static_cast<double>(radicand_));
}

std::string Surd::to_string() const {
  std::ostringstream out;
  const bool unit = coefficient_ == Rational(1);
  if (radicand_ == 1 || !unit) {
    out << coefficient_.numerator();
    if (coefficient_.denominator() != 1) out << '/' << coefficient_.denominator();
  }
  if (radicand_ != 1) out << (unit ? "" : "*") << "sqrt(" << radicand_ << ')';
  return out.str();
}

Surd Surd::parse(const std::string& text) {
  const auto pos = text.find("sqrt(");
  if (pos == std::string::npos) return Surd(parse_rational(text));
  require(!text.empty() && text.back() == ')', ErrorKind::Parse, "bad surd \"" + text + "\"");
  const std::string inside = text.substr(pos + 5, text.size() - pos - 6);
  const Rational under = parse_rational(inside);
  Rational coeff(1);
  if (pos > 0) {
    require(pos >= 2 && text[pos - 1] == '*', ErrorKind::Parse, "bad surd \"" + text + "\"");
    coeff = parse_rational(text.substr(0, pos - 1));
  }
  Surd root = sqrt(under);
  return Surd(coeff) * root;
}

Surd operator*(const Surd& a, const Surd& b) {
  if (a.is_zero() || b.is_zero()) return Surd();
  return Surd(a.coefficient_ * b.coefficient_, a.radicand_ * b.radicand_);
}

Surd operator/(const Surd& a, const Surd& b) {
  require(!b.is_zero(), ErrorKind::InvalidArgument, "division by zero surd");
  // c1 sqrt(r1) / (c2 sqrt(r2)) = (c1 / (c2 r2)) sqrt(r1 r2)
  return Surd(a.coefficient_ / (b.coefficient_ * Rational(b.radicand_)), a.radicand_ * b.radicand_);
}

Surd operator+(const Surd& a, const Surd& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  require(a.radicand_ == b.radicand_, ErrorKind::InvalidArgument, "adding surds with different radicands");
  return Surd(a.coefficient_ + b.coefficient_, a.radicand_);
}

bool operator<(const Surd& a, const Surd& b) {
  auto signed_square = [](const Surd& s) {
    const Rational sq = s.square();
    return s.coefficient_ < Rational(0) ? -sq : sq;
  };
  return signed_square(a) < signed_square(b);
}

}  // namespace atlas
