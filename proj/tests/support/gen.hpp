#ifndef RSUM_TESTS_GEN_HPP
#define RSUM_TESTS_GEN_HPP

// Small hand-rolled generators for property tests. Every case derives its own
// generator from (suite seed, case index) so failures replay in isolation.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rsum/family.hpp"
#include "rsum/poly.hpp"
#include "rsum/sweep.hpp"

namespace rsum::testing {

class Gen {
 public:
  Gen(std::uint64_t seed, std::uint64_t index) : rng_(splitmix64(seed ^ splitmix64(index))) {}

  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(bounded_draw(rng_, static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool coin() { return range(0, 1) == 1; }

  /// k distinct integers from [lo, hi], sorted.
  std::vector<std::int64_t> distinct(std::size_t k, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (auto i : sample_subset(rng_, static_cast<std::size_t>(hi - lo + 1), k)) {
      out.push_back(lo + static_cast<std::int64_t>(i));
    }
    return out;
  }

  ZpFamily zp_family(PrimeModulus p, std::size_t n, std::size_t max_size) {
    std::vector<std::vector<std::int64_t>> sets;
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(range(1, static_cast<std::int64_t>(std::min<std::size_t>(max_size, p.value()))));
      sets.push_back(distinct(k, 0, p.value() - 1));
    }
    return make_zp_family(p, sets);
  }

  LatticeFamily int_family(std::size_t n, std::size_t max_size, std::int64_t lo, std::int64_t hi) {
    std::vector<std::vector<std::int64_t>> sets;
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(range(1, static_cast<std::int64_t>(max_size)));
      sets.push_back(distinct(k, lo, hi));
    }
    return make_int_family(sets);
  }

  LatticeFamily lattice_family(std::size_t n, std::size_t dim, std::size_t max_size, std::int64_t span) {
    std::vector<std::vector<LatticePoint>> sets;
    for (std::size_t i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(range(1, static_cast<std::int64_t>(max_size)));
      std::set<std::vector<std::int64_t>> pts;
      while (pts.size() < k) {
        std::vector<std::int64_t> c(dim);
        for (auto& x : c) x = range(-span, span);
        pts.insert(c);
      }
      std::vector<LatticePoint> set;
      for (const auto& c : pts) set.emplace_back(c);
      sets.push_back(std::move(set));
    }
    return LatticeFamily(std::move(sets));
  }

  /// Nonzero homogeneous polynomial in `vars` variables of total degree `deg`.
  MultiPoly homogeneous(std::size_t vars, std::uint32_t deg, std::int64_t coeff_bound = 9) {
    while (true) {
      MultiPoly p(vars);
      const auto terms = range(1, 6);
      for (std::int64_t t = 0; t < terms; ++t) {
        Exponents e(vars, 0);
        for (std::uint32_t d = 0; d < deg; ++d) ++e[static_cast<std::size_t>(range(0, static_cast<std::int64_t>(vars) - 1))];
        p.add_term(e, BigInt(range(-coeff_bound, coeff_bound)));
      }
      if (!(p == MultiPoly(vars))) return p;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rsum::testing

#endif
