#include "atlas/gfield.hpp"

#include <sstream>

#include "atlas/error.hpp"

namespace atlas {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b over GF(p).
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (lead * b[i]) % p) % p);
    trim(a);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return true;
  // Trial division by every monic polynomial of degree 1..n/2.
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FiniteField::FiniteField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
  require(p < (1ull << 31), ErrorKind::InvalidArgument, "characteristic exceeds 2^31");
  require(is_prime(p), ErrorKind::InvalidArgument, "field characteristic " + std::to_string(p) + " is not prime");
  require(k >= 1, ErrorKind::InvalidArgument, "field degree must be at least 1");
  q_ = 1;
  for (unsigned i = 0; i < k; ++i) {
    q_ *= p;
    require(q_ <= kFieldGuard, ErrorKind::Guard, "field size exceeds 2^20");
  }

  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    // Lexicographic order with the constant term most significant.
    std::uint64_t count = q_;
    bool found = false;
    for (std::uint64_t code = 0; code < count && !found; ++code) {
      Poly f(k + 1);
      std::uint64_t c = code;
      for (unsigned i = k; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      f[k] = 1;
      if (f[0] != 0 && is_irreducible(f, p)) {
        modulus_ = f;
        found = true;
      }
    }
    require(found, ErrorKind::Invariant, "no irreducible modulus found");
  }

  one_ = static_cast<Index>(q_ / p);  // [1, 0, ..., 0]

  // Primitive element: smallest index whose powers reach q - 1 distinct values.
  const std::uint64_t group_order = q_ - 1;
  exp_.assign(group_order, 0);
  log_.assign(q_, 0);
  for (Index g = 1; g < q_; ++g) {
    const FFElem ge = element(g);
    FFElem x = one();
    std::uint64_t e = 0;
    bool ok = true;
    for (; e < group_order; ++e) {
      const Index xi = index(x);
      if (e > 0 && xi == one_) {
        ok = false;
        break;
      }
      exp_[e] = xi;
      x = FFElem{poly_mulmod(x.coefficients, ge.coefficients)};
    }
    if (ok && index(x) == one_) {
      primitive_ = g;
      break;
    }
  }
  require(primitive_ != 0, ErrorKind::Invariant, "no primitive element found");
  for (std::uint64_t e = 0; e < group_order; ++e) log_[exp_[e]] = static_cast<std::uint32_t>(e);
}

FFElem FiniteField::element(Index i) const {
  require(i < q_, ErrorKind::InvalidArgument, "field element index out of range");
  FFElem a;
  a.coefficients.assign(k_, 0);
  for (unsigned j = k_; j-- > 0;) {
    a.coefficients[j] = static_cast<std::uint32_t>(i % p_);
    i = static_cast<Index>(i / p_);
  }
  return a;
}

FiniteField::Index FiniteField::index(const FFElem& a) const {
  check(a);
  std::uint64_t i = 0;
  for (unsigned j = 0; j < k_; ++j) i = i * p_ + a.coefficients[j];
  return static_cast<Index>(i);
}

void FiniteField::check(const FFElem& a) const {
  require(a.coefficients.size() == k_, ErrorKind::InvalidArgument, "field element has wrong length");
  for (std::uint32_t c : a.coefficients)
    require(c < p_, ErrorKind::InvalidArgument, "field element coefficient not reduced");
}

Poly FiniteField::poly_mulmod(const Poly& a, const Poly& b) const {
  Poly product(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      product[i + j] = static_cast<std::uint32_t>((product[i + j] + std::uint64_t{a[i]} * b[j]) % p_);
  Poly r = poly_mod(std::move(product), modulus_, p_);
  r.resize(k_, 0);
  return r;
}

FFElem FiniteField::add(const FFElem& a, const FFElem& b) const {
  check(a);
  check(b);
  FFElem r = a;
  for (unsigned i = 0; i < k_; ++i) r.coefficients[i] = static_cast<std::uint32_t>((a.coefficients[i] + b.coefficients[i]) % p_);
  return r;
}

FFElem FiniteField::neg(const FFElem& a) const {
  check(a);
  FFElem r = a;
  for (auto& c : r.coefficients) c = static_cast<std::uint32_t>((p_ - c) % p_);
  return r;
}

FFElem FiniteField::sub(const FFElem& a, const FFElem& b) const { return add(a, neg(b)); }

FFElem FiniteField::mul(const FFElem& a, const FFElem& b) const {
  check(a);
  check(b);
  return FFElem{poly_mulmod(a.coefficients, b.coefficients)};
}

FFElem FiniteField::inv(const FFElem& a) const { return element(inv(index(a))); }

FFElem FiniteField::div(const FFElem& a, const FFElem& b) const { return mul(a, inv(b)); }

FFElem FiniteField::pow(const FFElem& a, std::uint64_t e) const { return element(pow(index(a), e)); }

FFElem FiniteField::frobenius(const FFElem& a, unsigned power) const {
  return element(frobenius(index(a), power));
}

bool FiniteField::is_square(const FFElem& a) const { return is_square(index(a)); }

FiniteField::Index FiniteField::add(Index a, Index b) const {
  std::uint64_t r = 0, scale = 1;
  std::uint64_t x = a, y = b;
  for (unsigned j = 0; j < k_; ++j) {
    r += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Index>(r);
}

FiniteField::Index FiniteField::neg(Index a) const {
  std::uint64_t r = 0, scale = 1;
  std::uint64_t x = a;
  for (unsigned j = 0; j < k_; ++j) {
    r += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return static_cast<Index>(r);
}

FiniteField::Index FiniteField::mul(Index a, Index b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

FiniteField::Index FiniteField::inv(Index a) const {
  require(a != 0, ErrorKind::InvalidArgument, "division by zero in finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

FiniteField::Index FiniteField::pow(Index a, std::uint64_t e) const {
  if (e == 0) return one_;
  if (a == 0) return 0;
  return exp_[static_cast<std::uint64_t>(static_cast<unsigned __int128>(log_[a]) * e % (q_ - 1))];
}

FiniteField::Index FiniteField::frobenius(Index a, unsigned power) const {
  require(power < k_, ErrorKind::InvalidArgument, "Frobenius power out of range");
  std::uint64_t e = 1;
  for (unsigned i = 0; i < power; ++i) e *= p_;
  return pow(a, e);
}

bool FiniteField::is_square(Index a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

std::string FiniteField::format(const FFElem& a) const {
  check(a);
  std::ostringstream out;
  out << '[';
  for (unsigned i = 0; i < k_; ++i) out << (i ? "," : "") << a.coefficients[i];
  out << ']';
  return out.str();
}

std::string FiniteField::describe() const {
  std::ostringstream out;
  out << "GF(" << p_ << '^' << k_ << "; modulus=";
  bool first = true;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    if (i == 0 || c != 1) out << c;
    if (i >= 1) out << 'x';
    if (i >= 2) out << '^' << i;
  }
  out << ')';
  return out.str();
}

}  // namespace atlas
