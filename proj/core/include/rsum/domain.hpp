#ifndef RSUM_DOMAIN_HPP
#define RSUM_DOMAIN_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rsum {

/// Deterministic trial-division primality test.
bool is_prime(std::int64_t n) noexcept;

/// A prime p, validated at construction.
class PrimeModulus {
 public:
  /// Throws InputError unless p is prime and fits in 32 bits.
  explicit PrimeModulus(std::int64_t p);

  std::uint32_t value() const noexcept { return p_; }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint32_t p_;
};

/// An element of F_p. The stored value is always reduced into [0, p).
class Residue {
 public:
  /// Reduces v modulo p, so negative literals are accepted.
  Residue(std::int64_t v, PrimeModulus modulus);

  std::uint32_t value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return modulus_; }

  /// Throws InputError when the moduli differ.
  friend Residue operator+(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a, const Residue& b);
  friend Residue operator-(const Residue& a);

  friend bool operator==(const Residue& a, const Residue& b) noexcept {
    return a.value_ == b.value_ && a.modulus_ == b.modulus_;
  }
  /// Orders by representative in [0, p); only meaningful within one modulus.
  friend std::strong_ordering operator<=>(const Residue& a, const Residue& b) noexcept {
    return a.value_ <=> b.value_;
  }

 private:
  std::uint32_t value_;
  PrimeModulus modulus_;
};

/// A point of Z^r.
class LatticePoint {
 public:
  /// Throws InputError when coords is empty.
  explicit LatticePoint(std::vector<std::int64_t> coords);
  LatticePoint(std::initializer_list<std::int64_t> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }

  /// Coordinatewise arithmetic; throws InputError on dimension mismatch.
  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator-(const LatticePoint& a);
  friend LatticePoint operator*(std::int64_t c, const LatticePoint& a);

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) noexcept {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic; throws InputError on dimension mismatch.
  friend std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b);

 private:
  std::vector<std::int64_t> coords_;
};

/// Lexicographic order on Z^r. It is translation compatible (a<b implies
/// a+c<b+c) and reversed by negation (a<b implies -b<-a).
std::strong_ordering lex_compare(const LatticePoint& a, const LatticePoint& b);

/// p(G): the least order of a nonzero element, or infinity.
class TorsionBound {
 public:
  static TorsionBound infinite() noexcept { return TorsionBound{}; }
  static TorsionBound finite(std::uint64_t value);

  bool is_finite() const noexcept { return value_.has_value(); }
  /// Throws std::logic_error for the infinite bound.
  std::uint64_t value() const;
  /// min(p(G), x), with the infinite bound acting as +inf.
  std::int64_t min_with(std::int64_t x) const noexcept;

  std::string to_string() const;

  friend bool operator==(const TorsionBound&, const TorsionBound&) = default;

 private:
  TorsionBound() = default;
  explicit TorsionBound(std::uint64_t v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

/// Marker for the torsion-free carrier Z^r.
struct TorsionFree {
  std::size_t dim = 1;
};

TorsionBound min_torsion(const PrimeModulus& modulus);
TorsionBound min_torsion(const TorsionFree& lattice);

template <class E>
struct ApClassification {
  bool is_ap = false;
  std::optional<E> difference;
};

/// AP test for a list sorted ascending by the domain order. Sets of size at
/// most two count as APs; a difference is reported only when |A| >= 2.
template <class E>
ApClassification<E> is_arithmetic_progression(std::span<const E> sorted) {
  ApClassification<E> out;
  if (sorted.size() < 2) {
    out.is_ap = true;
    return out;
  }
  const E d = sorted[1] - sorted[0];
  for (std::size_t i = 2; i < sorted.size(); ++i) {
    if (!(sorted[i] - sorted[i - 1] == d)) return out;
  }
  out.is_ap = true;
  out.difference = d;
  return out;
}

template <class E>
ApClassification<E> is_arithmetic_progression(const std::vector<E>& sorted) {
  return is_arithmetic_progression(std::span<const E>(sorted));
}

/// Decimal for F_p, "(a,b,...)" for Z^r with r > 1, plain decimal for r = 1.
std::string to_string(const Residue& r);
std::string to_string(const LatticePoint& p);

}  // namespace rsum

template <>
struct std::hash<rsum::LatticePoint> {
  std::size_t operator()(const rsum::LatticePoint& p) const noexcept;
};

#endif  // RSUM_DOMAIN_HPP
