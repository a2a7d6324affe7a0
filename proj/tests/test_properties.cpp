#include <gtest/gtest.h>

#include <algorithm>

#include "rsum/bounds.hpp"
#include "rsum/poly.hpp"
#include "rsum/sumset.hpp"
#include "support/gen.hpp"

using namespace rsum;
using rsum::testing::Gen;

namespace {

constexpr SumsetKind kAllKinds[] = {SumsetKind::plain, SumsetKind::distinct, SumsetKind::linear, SumsetKind::cyclic};

template <class E>
bool subset(const std::vector<E>& a, const std::vector<E>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class E>
SetFamily<E> reorder(const SetFamily<E>& f, bool reverse, std::size_t rotate) {
  std::vector<std::size_t> order(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) order[i] = (i + rotate) % f.size();
  if (reverse) std::reverse(order.begin(), order.end());
  return f.permuted(order);
}

LatticeFamily map_int(const LatticeFamily& f, std::int64_t scale, std::int64_t shift) {
  std::vector<std::vector<LatticePoint>> sets;
  for (const auto& s : f.members()) {
    std::vector<LatticePoint> out;
    for (const auto& x : s) out.push_back(scale * x + LatticePoint{shift});
    sets.push_back(std::move(out));
  }
  return LatticeFamily(std::move(sets));
}

}  // namespace

TEST(Properties, DpMatchesOracleOverIntegers) {
  for (std::uint64_t i = 0; i < 250; ++i) {
    Gen g(101, i);
    const auto f = g.int_family(static_cast<std::size_t>(g.range(1, 6)), 6, -20, 20);
    for (auto k : kAllKinds) ASSERT_EQ(compute_sumset(f, k).elements, brute_force_oracle(f, k).elements) << to_string(f);
  }
}

TEST(Properties, DpMatchesOracleOverPrimeFields) {
  const std::int64_t primes[] = {2, 3, 5, 7, 11, 13, 31, 101};
  for (std::uint64_t i = 0; i < 250; ++i) {
    Gen g(102, i);
    const PrimeModulus p(primes[g.range(0, 7)]);
    const auto f = g.zp_family(p, static_cast<std::size_t>(g.range(1, 6)), 6);
    for (auto k : kAllKinds) ASSERT_EQ(compute_sumset(f, k).elements, brute_force_oracle(f, k).elements) << to_string(f);
  }
}

TEST(Properties, DpMatchesOracleOverLattices) {
  for (std::uint64_t i = 0; i < 120; ++i) {
    Gen g(103, i);
    const auto f = g.lattice_family(static_cast<std::size_t>(g.range(1, 4)), static_cast<std::size_t>(g.range(2, 3)), 4, 3);
    for (auto k : kAllKinds) ASSERT_EQ(compute_sumset(f, k).elements, brute_force_oracle(f, k).elements) << to_string(f);
  }
}

TEST(Properties, Containments) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Gen g(104, i);
    const auto f = g.int_family(static_cast<std::size_t>(g.range(2, 6)), 5, -10, 10);
    const auto plain = plain_sumset(f).elements;
    const auto lin = linear_restricted_sumset(f).elements;
    const auto cyc = cyclic_restricted_sumset(f).elements;
    const auto dis = distinct_sumset(f).elements;
    EXPECT_TRUE(subset(cyc, lin));
    EXPECT_TRUE(subset(lin, plain));
    EXPECT_TRUE(subset(dis, cyc));
  }
}

TEST(Properties, SmallNSpecializations) {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Gen g(105, i);
    const auto f2 = g.int_family(2, 6, -10, 10);
    const auto d2 = distinct_sumset(f2).elements;
    EXPECT_EQ(linear_restricted_sumset(f2).elements, d2);
    EXPECT_EQ(cyclic_restricted_sumset(f2).elements, d2);
    const auto f3 = g.int_family(3, 6, -10, 10);
    EXPECT_EQ(cyclic_restricted_sumset(f3).elements, distinct_sumset(f3).elements);
  }
}

TEST(Properties, TranslationAndDilation) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Gen g(106, i);
    const auto n = static_cast<std::size_t>(g.range(1, 6));
    const auto f = g.int_family(n, 5, -10, 10);
    const auto t = g.range(-30, 30);
    std::int64_t c = g.range(-4, 4);
    if (c == 0) c = 3;
    for (auto k : {SumsetKind::linear, SumsetKind::cyclic}) {
      const auto base = compute_sumset(f, k).elements;
      std::vector<LatticePoint> shifted;
      for (const auto& x : base) shifted.push_back(x + LatticePoint{static_cast<std::int64_t>(n) * t});
      EXPECT_EQ(compute_sumset(map_int(f, 1, t), k).elements, shifted);
      EXPECT_EQ(compute_sumset(map_int(f, c, 0), k).cardinality(), base.size());
    }
  }
}

TEST(Properties, TranslationInPrimeFields) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Gen g(107, i);
    const PrimeModulus p(g.coin() ? 11 : 13);
    const auto n = static_cast<std::size_t>(g.range(2, 5));
    const auto f = g.zp_family(p, n, 5);
    const auto t = g.range(0, p.value() - 1);
    std::vector<std::vector<Residue>> moved;
    for (const auto& s : f.members()) {
      std::vector<Residue> out;
      for (const auto& x : s) out.push_back(x + Residue(t, p));
      moved.push_back(out);
    }
    for (auto k : {SumsetKind::linear, SumsetKind::cyclic}) {
      std::vector<Residue> expect;
      for (const auto& x : compute_sumset(f, k).elements) expect.push_back(x + Residue(static_cast<std::int64_t>(n) * t, p));
      std::sort(expect.begin(), expect.end());
      EXPECT_EQ(compute_sumset(ZpFamily(moved), k).elements, expect);
    }
  }
}

TEST(Properties, ReversalAndRotation) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Gen g(108, i);
    const auto n = static_cast<std::size_t>(g.range(2, 6));
    const auto f = g.int_family(n, 5, -10, 10);
    const auto lin = linear_restricted_sumset(f).elements;
    const auto cyc = cyclic_restricted_sumset(f).elements;
    EXPECT_EQ(linear_restricted_sumset(reorder(f, true, 0)).elements, lin);
    const auto r = static_cast<std::size_t>(g.range(0, static_cast<std::int64_t>(n) - 1));
    EXPECT_EQ(cyclic_restricted_sumset(reorder(f, false, r)).elements, cyc);
    EXPECT_EQ(cyclic_restricted_sumset(reorder(f, true, r)).elements, cyc);
  }
}

TEST(Properties, Monotone) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Gen g(109, i);
    const auto n = static_cast<std::size_t>(g.range(2, 5));
    std::vector<std::vector<std::int64_t>> sets;
    for (std::size_t j = 0; j < n; ++j) sets.push_back(g.distinct(static_cast<std::size_t>(g.range(1, 3)), 0, 12));
    auto prev_l = linear_restricted_sumset(make_int_family(sets)).elements;
    auto prev_c = cyclic_restricted_sumset(make_int_family(sets)).elements;
    for (int step = 0; step < 4; ++step) {
      auto& s = sets[static_cast<std::size_t>(g.range(0, static_cast<std::int64_t>(n) - 1))];
      const auto x = g.range(0, 12);
      if (std::find(s.begin(), s.end(), x) == s.end()) s.push_back(x);
      const auto l = linear_restricted_sumset(make_int_family(sets)).elements;
      const auto c = cyclic_restricted_sumset(make_int_family(sets)).elements;
      EXPECT_TRUE(subset(prev_l, l));
      EXPECT_TRUE(subset(prev_c, c));
      prev_l = l;
      prev_c = c;
    }
  }
}

TEST(Properties, ApCardinalities) {
  for (std::int64_t k = 2; k <= 8; ++k) {
    std::vector<std::int64_t> a;
    for (std::int64_t i = 0; i < k; ++i) a.push_back(i);
    for (std::int64_t n = 2; n <= 8; ++n) {
      const auto f = LatticeFamily::repeated(make_int_set(a), static_cast<std::size_t>(n));
      const std::int64_t parity = n % 2;
      EXPECT_EQ(static_cast<std::int64_t>(linear_restricted_sumset(f).cardinality()), n * k - 2 * n + 1 + parity);
      if (k >= 3) {
        EXPECT_EQ(static_cast<std::int64_t>(cyclic_restricted_sumset(f).cardinality()),
                  n * k - 2 * n + (parity ? -1 : 1) * (1 + parity));
      }
    }
  }
}

TEST(Properties, TorsionFreeBoundsHold) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Gen g(110, i);
    const auto set = make_int_set(g.distinct(static_cast<std::size_t>(g.range(2, 6)), -15, 15));
    const auto n = static_cast<std::size_t>(g.range(2, 7));
    for (auto k : {SumsetKind::linear, SumsetKind::cyclic}) {
      EXPECT_NE(verify_torsion_free(set, n, k).verdict, Verdict::violated);
    }
  }
}

TEST(Properties, FieldTheoremsHoldOnRandomInstances) {
  const std::int64_t primes[] = {5, 7, 11, 13, 17};
  for (std::uint64_t i = 0; i < 300; ++i) {
    Gen g(111, i);
    const PrimeModulus p(primes[g.range(0, 4)]);
    const auto n = static_cast<std::size_t>(g.range(2, 5));
    const auto k = static_cast<std::size_t>(g.range(2, 4));
    std::vector<std::vector<std::int64_t>> sets;
    for (std::size_t j = 0; j < n; ++j) sets.push_back(g.distinct(k, 0, p.value() - 1));
    const auto f = make_zp_family(p, sets);
    const auto r = n % 2 ? verify_odd_linear_theorem(f) : verify_even_cyclic_theorem(f);
    EXPECT_NE(r.verdict, Verdict::violated) << to_string(f);
  }
}

TEST(Properties, BoundTakesMinWithP) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Gen g(112, i);
    const auto n = static_cast<std::size_t>(g.range(2, 6));
    std::vector<std::size_t> sizes(n);
    for (auto& s : sizes) s = static_cast<std::size_t>(g.range(2, 9));
    for (auto kind : {BoundKind::conjecture_linear, BoundKind::conjecture_cyclic}) {
      const auto raw = eval_bound({kind, sizes, TorsionBound::infinite()});
      const auto p = static_cast<std::uint64_t>(g.range(2, 40));
      EXPECT_EQ(eval_bound({kind, sizes, TorsionBound::finite(p)}), std::min<std::int64_t>(raw, static_cast<std::int64_t>(p)));
    }
  }
}

TEST(Properties, LTransformIsLinear) {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Gen g(113, i);
    const auto vars = static_cast<std::size_t>(g.range(1, 5));
    const auto deg = static_cast<std::uint32_t>(g.range(0, 6));
    const auto p = g.homogeneous(vars, deg), q = g.homogeneous(vars, deg);
    const BigInt a(g.range(-5, 5)), b(g.range(-5, 5));
    auto lhs_poly = p;
    lhs_poly *= a;
    auto bq = q;
    bq *= b;
    lhs_poly += bq;
    const auto rhs = a * l_transform(p) + b * l_transform(q);
    if (lhs_poly == MultiPoly(vars)) {
      EXPECT_EQ(rhs, UniPoly());
    } else {
      EXPECT_EQ(l_transform(lhs_poly), rhs);
    }
  }
}

TEST(Properties, FallingFactorialIdentity) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Gen g(114, i);
    const auto vars = static_cast<std::size_t>(g.range(1, 5));
    const auto k = static_cast<std::uint32_t>(g.range(1, 4));
    const auto deg = static_cast<std::uint32_t>(g.range(0, std::min<std::int64_t>(6, static_cast<std::int64_t>(k * vars))));
    const auto p = g.homogeneous(vars, deg);
    const auto r = l_identity_check(p, k);
    EXPECT_TRUE(r.holds) << p.to_string() << " k=" << k;
  }
}

TEST(Properties, MultinomialsAreNonnegative) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    Gen g(115, i);
    Exponents e(static_cast<std::size_t>(g.range(1, 6)));
    std::uint32_t m = 0;
    for (auto& x : e) m += (x = static_cast<std::uint32_t>(g.range(0, 7)));
    const auto c = linear_power_coeff(e, m);
    EXPECT_GT(c, 0);
    BigInt denom = 1;
    for (auto x : e) denom *= factorial(x);
    EXPECT_EQ(c * denom, factorial(m));
  }
}
