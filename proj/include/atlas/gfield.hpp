#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace atlas {

/// Deterministic Miller-Rabin for n < 2^31 (witnesses 2, 3, 5, 7).
bool is_prime(std::uint64_t n);

/// Largest field the library will build.
inline constexpr std::uint64_t kFieldGuard = 1u << 20;

/// Element of GF(p^k) in the polynomial basis: coefficients[i] multiplies x^i.
struct FFElem {
  std::vector<std::uint32_t> coefficients;
  friend bool operator==(const FFElem&, const FFElem&) = default;
};

/// GF(p^k) with the lexicographically least monic irreducible modulus
/// (coefficients compared from the constant term upward).
///
/// Elements are also addressed by an index in [0, q): the coefficient vector
/// [c0, c1, ..., c_{k-1}] read as a base-p numeral with c0 most significant.
/// Index order is the point order used by every group constructor.
class FiniteField {
 public:
  using Index = std::uint32_t;

  FiniteField(std::uint64_t p, unsigned k);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint64_t size() const { return q_; }
  /// Monic modulus, coefficients low to high (length k + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FFElem element(Index i) const;
  Index index(const FFElem& a) const;
  FFElem zero() const { return element(0); }
  FFElem one() const { return element(one_); }

  FFElem add(const FFElem& a, const FFElem& b) const;
  FFElem sub(const FFElem& a, const FFElem& b) const;
  FFElem neg(const FFElem& a) const;
  FFElem mul(const FFElem& a, const FFElem& b) const;
  FFElem div(const FFElem& a, const FFElem& b) const;
  FFElem inv(const FFElem& a) const;
  FFElem pow(const FFElem& a, std::uint64_t e) const;
  /// a^(p^power), 0 <= power < k.
  FFElem frobenius(const FFElem& a, unsigned power) const;
  /// Zero counts as a square.
  bool is_square(const FFElem& a) const;
  /// Generator of the multiplicative group with the smallest index.
  FFElem primitive_element() const { return element(primitive_); }

  // Index-level arithmetic backed by log tables.
  Index zero_index() const { return 0; }
  Index one_index() const { return one_; }
  Index primitive_index() const { return primitive_; }
  Index add(Index a, Index b) const;
  Index neg(Index a) const;
  Index mul(Index a, Index b) const;
  Index inv(Index a) const;
  Index pow(Index a, std::uint64_t e) const;
  Index frobenius(Index a, unsigned power) const;
  bool is_square(Index a) const;

  /// "[c0,c1,...]".
  std::string format(const FFElem& a) const;
  /// "GF(p^k; modulus=...)".
  std::string describe() const;

 private:
  std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) const;
  void check(const FFElem& a) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  Index one_ = 0;
  Index primitive_ = 0;
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
  std::vector<Index> exp_;          // exp_[e] for 0 <= e < q - 1
};

}  // namespace atlas
