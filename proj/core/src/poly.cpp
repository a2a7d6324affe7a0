#include "rsum/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rsum/errors.hpp"

namespace rsum {

BigInt factorial(std::uint32_t n) {
  BigInt f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

namespace {

std::uint32_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

/// num / den, which must divide exactly.
BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("closed form ratio is not an integer: " + num.str() + " / " + den.str());
  return q;
}

BigInt ipow(const BigInt& base, std::uint32_t e) {
  BigInt r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

void append_coefficient(std::ostringstream& os, const BigInt& c, bool first, bool has_monomial) {
  const BigInt mag = c < 0 ? BigInt(-c) : c;
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  if (!has_monomial) {
    os << mag;
  } else if (mag != 1) {
    os << mag << '*';
  }
}

}  // namespace

MultiPoly::MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars == 0) throw InputError("polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const BigInt& c) {
  MultiPoly p(num_vars);
  p.add_term(Exponents(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t i) {
  if (i >= num_vars) throw InputError("variable index out of range");
  Exponents e(num_vars, 0);
  e[i] = 1;
  return monomial(std::move(e), 1);
}

MultiPoly MultiPoly::monomial(Exponents e, const BigInt& c) {
  MultiPoly p(e.size());
  p.add_term(e, c);
  return p;
}

std::uint32_t MultiPoly::degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = total_degree(terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return total_degree(t.first) == d; });
}

BigInt MultiPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const BigInt& c) {
  if (e.size() != num_vars_) throw InputError("exponent vector length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_vars(const MultiPoly& other) const {
  if (other.num_vars_ != num_vars_) {
    throw InputError("variable count mismatch: " + std::to_string(num_vars_) + " vs " +
                     std::to_string(other.num_vars_));
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_vars(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_vars(b);
  MultiPoly out(a.num_vars_);
  Exponents e(a.num_vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exponents, BigInt>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
    const auto dx = total_degree(x->first), dy = total_degree(y->first);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    const bool has_monomial = total_degree(t->first) > 0;
    append_coefficient(os, t->second, first, has_monomial);
    bool first_var = true;
    for (std::size_t i = 0; i < t->first.size(); ++i) {
      const auto k = t->first[i];
      if (k == 0) continue;
      if (!first_var) os << '*';
      os << 'x' << (i + 1);
      if (k > 1) os << '^' << k;
      first_var = false;
    }
    first = false;
  }
  return os.str();
}

UniPoly::UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::monomial(std::size_t k, const BigInt& c) {
  std::vector<BigInt> v(k + 1, 0);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::falling_factorial(std::uint32_t j) {
  UniPoly r = monomial(0, 1);
  for (std::uint32_t i = 0; i < j; ++i) r = r * UniPoly({BigInt(-static_cast<std::int64_t>(i)), BigInt(1)});
  return r;
}

BigInt UniPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const BigInt& c, const UniPoly& a) {
  std::vector<BigInt> out(a.coeffs_);
  for (auto& x : out) x *= c;
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const auto& c = coeffs_[i];
    if (c == 0) continue;
    append_coefficient(os, c, first, i > 0);
    if (i > 0) os << 'x';
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

BigInt linear_power_coeff(const Exponents& exponents, std::uint32_t m) {
  if (total_degree(exponents) != m) return 0;
  // Product of binomials C(e_1+...+e_i, e_i) avoids the large m! / ... quotient.
  BigInt result = 1;
  std::uint32_t running = 0;
  for (auto e : exponents) {
    for (std::uint32_t j = 1; j <= e; ++j) {
      result *= running + j;
      result /= j;
    }
    running += e;
  }
  return result;
}

BigInt coeff_of_product_with_linear_power(const MultiPoly& p, const Exponents& target) {
  if (p.is_zero()) throw InputError("coefficient extraction needs a nonzero polynomial");
  if (target.size() != p.num_vars()) throw InputError("target length does not match variable count");
  const auto target_degree = total_degree(target);
  const auto deg = p.degree();
  if (target_degree < deg) throw InputError("target degree is below deg P");
  const std::uint32_t power = target_degree - deg;
  BigInt sum = 0;
  Exponents rest(target.size());
  for (const auto& [e, c] : p.terms()) {
    bool fits = true;
    for (std::size_t i = 0; i < e.size() && fits; ++i) {
      if (e[i] > target[i]) fits = false;
      else rest[i] = target[i] - e[i];
    }
    if (fits) sum += c * linear_power_coeff(rest, power);
  }
  return sum;
}

MultiPoly path_polynomial(std::size_t n) {
  if (n < 2) throw InputError("path polynomial needs n >= 2");
  MultiPoly q = MultiPoly::constant(n, 1);
  for (std::size_t i = 0; i + 1 < n; ++i) q = q * (MultiPoly::variable(n, i) - MultiPoly::variable(n, i + 1));
  return q;
}

MultiPoly cycle_polynomial(std::size_t n) {
  return path_polynomial(n) * (MultiPoly::variable(n, n - 1) - MultiPoly::variable(n, 0));
}

UniPoly l_transform(const MultiPoly& p) {
  if (!p.is_homogeneous()) throw InputError("l_transform requires a homogeneous polynomial");
  std::vector<UniPoly> ff;
  auto falling = [&ff](std::uint32_t j) -> const UniPoly& {
    while (ff.size() <= j) ff.push_back(UniPoly::falling_factorial(static_cast<std::uint32_t>(ff.size())));
    return ff[j];
  };
  UniPoly out;
  for (const auto& [e, c] : p.terms()) {
    UniPoly term = UniPoly::monomial(0, c);
    for (auto j : e) {
      if (j > 0) term = term * falling(j);
    }
    out += term;
  }
  return out;
}

IdentityCheck l_identity_check(const MultiPoly& p, std::uint32_t k) {
  if (p.is_zero()) throw InputError("identity check needs a nonzero polynomial");
  if (!p.is_homogeneous()) throw InputError("identity check needs a homogeneous polynomial");
  const auto n = static_cast<std::uint32_t>(p.num_vars());
  const auto deg = p.degree();
  if (deg > k * n) throw InputError("identity check needs deg P <= kn");

  IdentityCheck out;
  out.extracted = coeff_of_product_with_linear_power(p, Exponents(n, k));

  const BigInt numerator = factorial(k * n - deg) * l_transform(p).evaluate(k);
  const BigInt denominator = ipow(factorial(k), n);
  BigInt q, r;
  boost::multiprecision::divide_qr(numerator, denominator, q, r);
  out.transformed = q;
  out.holds = r == 0 && q == out.extracted;
  return out;
}

BigInt anr_coefficient(std::uint32_t k1, std::uint32_t k2, std::uint32_t k3) {
  if (k1 == 0 || k2 == 0 || k3 == 0) throw InputError("anr_coefficient needs k1, k2, k3 >= 1");
  const BigInt a(k1), b(k2), c(k3);
  const BigInt shape = b + (b - a) * (c - b);
  return exact_div(factorial(k1 + k2 + k3 - 2) * shape, factorial(k1) * factorial(k2) * factorial(k3));
}

BigInt even_cycle_coefficient(std::uint32_t n, std::uint32_t k) {
  if (n == 0 || n % 2 != 0) throw InputError("even_cycle_coefficient needs a positive even n");
  if (k == 0) throw InputError("even_cycle_coefficient needs k >= 1");
  return exact_div(factorial((k - 1) * n) * 2 * ipow(BigInt(k), n / 2), ipow(factorial(k), n));
}

BigInt odd_path_coefficient(std::uint32_t n, std::uint32_t k) {
  if (n < 3 || n % 2 == 0) throw InputError("odd_path_coefficient needs odd n >= 3");
  if (k == 0) throw InputError("odd_path_coefficient needs k >= 1");
  return exact_div(factorial((k - 1) * n + 1) * ipow(BigInt(k), (n - 1) / 2), ipow(factorial(k), n));
}

RecursionCheck l_recursion_check(std::uint32_t n) {
  if (n < 5 || n % 2 == 0) throw InputError("l_recursion_check needs odd n >= 5");
  RecursionCheck out;
  out.cycle_side = l_transform(cycle_polynomial(n + 1));
  out.path_side = UniPoly::monomial(1) * l_transform(path_polynomial(n)) +
                  UniPoly::monomial(2) * l_transform(path_polynomial(n - 2));
  out.holds = out.cycle_side == out.path_side;
  return out;
}

CoeffCertificate certified_lower_bound(const MultiPoly& p, const std::vector<std::size_t>& sizes,
                                       const TorsionBound& characteristic) {
  if (sizes.size() != p.num_vars()) throw InputError("one size per variable is required");
  Exponents target;
  std::int64_t budget = 0;
  for (auto s : sizes) {
    if (s == 0) throw InputError("sets must be nonempty");
    target.push_back(static_cast<std::uint32_t>(s - 1));
    budget += static_cast<std::int64_t>(s) - 1;
  }
  const auto deg = static_cast<std::int64_t>(p.degree());
  if (deg > budget) throw InputError("deg P exceeds sum(|A_i| - 1)");

  CoeffCertificate out;
  out.coefficient = coeff_of_product_with_linear_power(p, target);
  out.bound = budget - deg + 1;
  if (characteristic.is_finite()) {
    const BigInt modulus(characteristic.value());
    BigInt r = out.coefficient % modulus;
    if (r < 0) r += modulus;
    out.residue = r;
    out.certified = r != 0;
  } else {
    out.certified = out.coefficient != 0;
  }
  return out;
}

}  // namespace rsum
