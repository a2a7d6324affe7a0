#include "rsum/domain.hpp"

#include <limits>
#include <stdexcept>

#include "rsum/errors.hpp"

namespace rsum {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(0) {
  if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p)) {
    throw InputError("modulus " + std::to_string(p) + " is not a 32-bit prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

Residue::Residue(std::int64_t v, PrimeModulus modulus) : value_(0), modulus_(modulus) {
  const auto p = static_cast<std::int64_t>(modulus.value());
  auto r = v % p;
  if (r < 0) r += p;
  value_ = static_cast<std::uint32_t>(r);
}

namespace {

void require_same_modulus(const Residue& a, const Residue& b) {
  if (!(a.modulus() == b.modulus())) {
    throw InputError("residues from different moduli: " + std::to_string(a.modulus().value()) +
                     " vs " + std::to_string(b.modulus().value()));
  }
}

void require_same_dim(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) {
    throw InputError("lattice dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
  }
}

}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(static_cast<std::int64_t>(a.value_) + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
  require_same_modulus(a, b);
  return Residue(static_cast<std::int64_t>(a.value_) - b.value_, a.modulus_);
}

Residue operator-(const Residue& a) { return Residue(-static_cast<std::int64_t>(a.value_), a.modulus_); }

LatticePoint::LatticePoint(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("lattice point needs at least one coordinate");
}

LatticePoint::LatticePoint(std::initializer_list<std::int64_t> coords)
    : LatticePoint(std::vector<std::int64_t>(coords)) {}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a, b);
  std::vector<std::int64_t> c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
  return LatticePoint(std::move(c));
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a, b);
  std::vector<std::int64_t> c(a.dim());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
  return LatticePoint(std::move(c));
}

LatticePoint operator-(const LatticePoint& a) {
  std::vector<std::int64_t> c(a.coords_);
  for (auto& x : c) x = -x;
  return LatticePoint(std::move(c));
}

LatticePoint operator*(std::int64_t k, const LatticePoint& a) {
  std::vector<std::int64_t> c(a.coords_);
  for (auto& x : c) x *= k;
  return LatticePoint(std::move(c));
}

std::strong_ordering lex_compare(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a, b);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  return lex_compare(a, b);
}

TorsionBound TorsionBound::finite(std::uint64_t value) {
  if (value == 0) throw InputError("torsion bound must be positive");
  return TorsionBound(value);
}

std::uint64_t TorsionBound::value() const {
  if (!value_) throw std::logic_error("infinite torsion bound has no finite value");
  return *value_;
}

std::int64_t TorsionBound::min_with(std::int64_t x) const noexcept {
  if (!value_) return x;
  const auto p = static_cast<std::int64_t>(*value_);
  return x < p ? x : p;
}

std::string TorsionBound::to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

TorsionBound min_torsion(const PrimeModulus& modulus) { return TorsionBound::finite(modulus.value()); }

TorsionBound min_torsion(const TorsionFree&) { return TorsionBound::infinite(); }

std::string to_string(const Residue& r) { return std::to_string(r.value()); }

std::string to_string(const LatticePoint& p) {
  if (p.dim() == 1) return std::to_string(p[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  s += ')';
  return s;
}

}  // namespace rsum

std::size_t std::hash<rsum::LatticePoint>::operator()(const rsum::LatticePoint& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto c : p.coords()) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}
