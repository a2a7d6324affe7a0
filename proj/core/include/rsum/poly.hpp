#ifndef RSUM_POLY_HPP
#define RSUM_POLY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsum/domain.hpp"

namespace rsum {

using BigInt = boost::multiprecision::cpp_int;
using Exponents = std::vector<std::uint32_t>;

BigInt factorial(std::uint32_t n);

/// Sparse polynomial in x_1..x_n with integer coefficients. Zero coefficients
/// are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(std::size_t num_vars);

  static MultiPoly constant(std::size_t num_vars, const BigInt& c);
  /// x_{i+1}; i is zero-based.
  static MultiPoly variable(std::size_t num_vars, std::size_t i);
  static MultiPoly monomial(Exponents e, const BigInt& c);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Total degree; 0 for the zero polynomial.
  std::uint32_t degree() const;
  /// True when every stored term has the same total degree (and for zero).
  bool is_homogeneous() const;
  BigInt coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const BigInt& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const BigInt& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const BigInt& c, MultiPoly a) { return a *= c; }

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Canonical text: terms by descending total degree, then descending
  /// exponent vector, e.g. "2*x1^2*x3 - x2".
  std::string to_string() const;

 private:
  void check_vars(const MultiPoly& other) const;
  std::size_t num_vars_;
  std::map<Exponents, BigInt> terms_;
};

/// Exact product; throws InputError on variable-count mismatch.
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);

/// Dense univariate polynomial, coeffs[i] multiplies x^i. Trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coeffs);

  /// c * x^k
  static UniPoly monomial(std::size_t k, const BigInt& c = 1);
  /// (x)_j = x(x-1)...(x-j+1); (x)_0 = 1.
  static UniPoly falling_factorial(std::uint32_t j);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  BigInt evaluate(const BigInt& x) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const BigInt& c, const UniPoly& a);

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Descending powers, e.g. "2*x^2 - x + 3".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Multinomial coefficient m!/(e_1!...e_n!), i.e. the coefficient of
/// x^e in (x_1+...+x_n)^m. Zero when sum(e) != m.
BigInt linear_power_coeff(const Exponents& exponents, std::uint32_t m);

/// [x^target] P * (x_1+...+x_n)^(|target| - deg P), summed term by term via
/// linear_power_coeff; the power is never expanded. Throws InputError when
/// |target| < deg P, P is zero, or the lengths differ.
BigInt coeff_of_product_with_linear_power(const MultiPoly& p, const Exponents& target);

/// Q_n = (x_1-x_2)(x_2-x_3)...(x_{n-1}-x_n), expanded. n >= 2.
MultiPoly path_polynomial(std::size_t n);
/// P_n = Q_n * (x_n - x_1), expanded. n >= 2.
MultiPoly cycle_polynomial(std::size_t n);

/// Replaces each monomial x_1^{j_1}...x_n^{j_n} of a homogeneous P by the
/// product of falling factorials (x)_{j_1}...(x)_{j_n}. Throws InputError for
/// non-homogeneous input.
UniPoly l_transform(const MultiPoly& p);

struct IdentityCheck {
  bool holds = false;
  BigInt extracted;    // coefficient extraction side
  BigInt transformed;  // (kn - deg P)!/(k!)^n * L(P)(k)
};

/// Checks [x_1^k...x_n^k] P (x_1+...+x_n)^(kn - deg P) = (kn - deg P)!/(k!)^n L(P)(k),
/// each side computed on its own path. Requires P nonzero homogeneous, deg P <= kn.
IdentityCheck l_identity_check(const MultiPoly& p, std::uint32_t k);

/// (k1+k2+k3-2)!/(k1!k2!k3!) * (k2 + (k2-k1)(k3-k2)): the coefficient of
/// x1^k1 x2^k2 x3^k3 in (x1-x2)(x2-x3)(x1+x2+x3)^(k1+k2+k3-2).
BigInt anr_coefficient(std::uint32_t k1, std::uint32_t k2, std::uint32_t k3);

/// ((k-1)n)!/(k!)^n * 2 k^(n/2), n even.
BigInt even_cycle_coefficient(std::uint32_t n, std::uint32_t k);

/// ((k-1)n+1)!/(k!)^n * k^((n-1)/2), n odd >= 3.
BigInt odd_path_coefficient(std::uint32_t n, std::uint32_t k);

struct RecursionCheck {
  bool holds = false;
  UniPoly cycle_side;  // L(P_{n+1})
  UniPoly path_side;   // x L(Q_n) + x^2 L(Q_{n-2})
};

/// L(P_{n+1}) = x L(Q_n) + x^2 L(Q_{n-2}) for odd n >= 5, all three
/// transforms computed from expanded polynomials.
RecursionCheck l_recursion_check(std::uint32_t n);

struct CoeffCertificate {
  BigInt coefficient;             // h
  std::optional<BigInt> residue;  // h mod p; empty in characteristic 0
  bool certified = false;         // h is nonzero in the field
  std::int64_t bound = 0;         // sum(|A_i| - 1) - deg P + 1
};

/// Coefficient test behind the restricted-sumset lower bound
/// |{a_1+...+a_n : P(a) != 0}| >= sum(|A_i|-1) - deg P + 1.
/// Throws InputError when deg P > sum(|A_i| - 1) or sizes are malformed.
CoeffCertificate certified_lower_bound(const MultiPoly& p, const std::vector<std::size_t>& sizes,
                                       const TorsionBound& characteristic);

}  // namespace rsum

#endif  // RSUM_POLY_HPP
