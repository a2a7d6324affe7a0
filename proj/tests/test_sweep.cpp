#include <random>
#include <gtest/gtest.h>

#include <sstream>

#include "rsum/errors.hpp"
#include "rsum/format.hpp"
#include "rsum/sweep.hpp"

using namespace rsum;

namespace {

std::string run_text(const SweepConfig& c, ReportFormat f = ReportFormat::jsonl) {
  std::ostringstream os;
  const auto s = run_sweep(c, [&](const VerificationReport& r) { os << format_record(r, f) << '\n'; });
  os << format_summary(s, f) << '\n';
  return os.str();
}

}  // namespace

TEST(Unrank, EnumeratesInLexOrder) {
  for (std::size_t u : {1u, 4u, 7u}) {
    for (std::size_t s = 0; s <= u; ++s) {
      const auto total = binomial_saturating(u, s);
      std::vector<std::size_t> prev;
      for (std::uint64_t r = 0; r < total; ++r) {
        const auto cur = unrank_subset(r, u, s);
        ASSERT_EQ(cur.size(), s);
        EXPECT_TRUE(std::is_sorted(cur.begin(), cur.end()));
        if (r) EXPECT_LT(prev, cur);
        prev = cur;
      }
      EXPECT_THROW(unrank_subset(total, u, s), InputError);
    }
  }
  EXPECT_EQ(unrank_subset(0, 5, 2), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(unrank_subset(9, 5, 2), (std::vector<std::size_t>{3, 4}));
}

TEST(Sampling, SubsetsAreValid) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const auto s = sample_subset(rng, 13, 5);
    ASSERT_EQ(s.size(), 5u);
    EXPECT_TRUE(std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end());
    EXPECT_LT(s.back(), 13u);
  }
  std::mt19937_64 a(9), b(9);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(bounded_draw(a, 7), bounded_draw(b, 7));
}

TEST(Sweep, ExhaustiveThreeSetOverF5) {
  SweepConfig c;
  c.target = SweepTarget::three_set;
  c.domain = PrimeModulus(5);
  c.size_min = 2;
  c.size_max = 5;
  c.cap = 1'000'000;
  std::uint64_t seen = 0;
  const auto s = run_sweep(c, [&](const VerificationReport&) { ++seen; });
  EXPECT_TRUE(s.exhaustive);
  EXPECT_EQ(s.instances, 9906u);
  EXPECT_EQ(seen, s.instances);
  EXPECT_EQ(s.violated, 0u);
  EXPECT_EQ(s.holds + s.equality, s.instances);
}

TEST(Sweep, EqualSizeConjectureOverF5HasNoViolations) {
  for (std::size_t k = 2; k <= 4; ++k) {
    SweepConfig c;
    c.target = SweepTarget::conjecture;
    c.domain = PrimeModulus(5);
    c.n_min = c.n_max = 3;
    c.size_min = c.size_max = k;
    c.cap = 1'000'000;
    const auto s = run_sweep(c, [](const VerificationReport& r) {
      if (r.verdict == Verdict::violated) ADD_FAILURE() << r.check << " " << r.family;
    });
    EXPECT_TRUE(s.exhaustive);
    EXPECT_EQ(s.instances, 2 * binomial_saturating(5, k) * binomial_saturating(5, k) * binomial_saturating(5, k));
  }
}

TEST(Sweep, OutOfRangeNGivesSkippedRecords) {
  SweepConfig c;
  c.domain = PrimeModulus(5);
  c.n_min = c.n_max = 1;
  c.kinds = {SumsetKind::cyclic};
  std::vector<VerificationReport> out;
  const auto s = run_sweep(c, [&](const VerificationReport& r) { out.push_back(r); });
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].verdict, Verdict::skipped);
  EXPECT_FALSE(out[0].note.empty());
  EXPECT_EQ(s.skipped, 1u);
}

TEST(Sweep, EmptyRangeGivesEmptyReport) {
  SweepConfig c;
  c.n_min = 4;
  c.n_max = 3;
  const auto s = run_sweep(c, [](const VerificationReport&) { ADD_FAILURE(); });
  EXPECT_EQ(s.instances, 0u);
}

TEST(Sweep, SeededSamplingIsByteIdentical) {
  SweepConfig c;
  c.domain = PrimeModulus(11);
  c.n_min = 3;
  c.n_max = 4;
  c.size_min = 3;
  c.size_max = 4;
  c.cap = 300;
  c.seed = 1234;
  const auto a = run_text(c);
  const auto b = run_text(c);
  EXPECT_EQ(a, b);
  c.threads = 3;
  EXPECT_EQ(run_text(c), a);
  c.seed = 1235;
  EXPECT_NE(run_text(c), a);
}

TEST(Sweep, InstanceLimitTruncates) {
  SweepConfig c;
  c.domain = PrimeModulus(11);
  c.n_min = c.n_max = 3;
  c.cap = 50;
  c.instance_limit = 70;
  const auto s = run_sweep(c, [](const VerificationReport&) {});
  EXPECT_EQ(s.instances, 70u);
  EXPECT_TRUE(s.truncated);
  EXPECT_NE(s.coverage.find("instance limit"), std::string::npos);
}

TEST(Sweep, LatticeEqualityWindow) {
  SweepConfig c;
  c.target = SweepTarget::equality;
  c.domain = LatticeWindow{0, 6, 1};
  c.n_min = c.n_max = 5;
  c.size_min = c.size_max = 3;
  c.kinds = {SumsetKind::cyclic};
  c.cap = 1'000'000;
  std::uint64_t exceptional = 0;
  const auto s = run_sweep(c, [&](const VerificationReport& r) {
    if (r.note == "exceptional-k3n5") ++exceptional;
  });
  EXPECT_EQ(s.instances, 35u);
  EXPECT_EQ(s.violated, 0u);
  // Every 3-set reaches the bound; the 26 non-APs in {0..6} are the exceptions.
  EXPECT_EQ(s.equality, 35u);
  EXPECT_EQ(exceptional, 26u);
}

TEST(Sweep, DomainMismatchRejected) {
  SweepConfig c;
  c.target = SweepTarget::equality;
  c.domain = PrimeModulus(5);
  EXPECT_THROW(run_sweep(c, [](const VerificationReport&) {}), InputError);
  c.target = SweepTarget::three_set;
  c.domain = LatticeWindow{};
  EXPECT_THROW(run_sweep(c, [](const VerificationReport&) {}), InputError);
}

TEST(Sweep, TargetNames) {
  for (auto t : {SweepTarget::conjecture, SweepTarget::three_set, SweepTarget::even_cyclic, SweepTarget::odd_linear,
                 SweepTarget::corollary, SweepTarget::torsion_free, SweepTarget::equality}) {
    EXPECT_EQ(parse_sweep_target(to_string(t)), t);
  }
}

TEST(Format, RecordsAreStable) {
  VerificationReport r;
  r.domain = "F7";
  r.check = "three-set-L";
  r.family = "{0,1};{0,1};{0,1}";
  r.bound = 2;
  r.actual = 2;
  r.verdict = Verdict::equality;
  r.witness = {"1", "2"};
  r.elapsed = std::chrono::microseconds(123);
  EXPECT_EQ(format_record(r, ReportFormat::jsonl),
            R"({"domain":"F7","kind":"three-set-L","family":"{0,1};{0,1};{0,1}","bound":2,"actual":2,)"
            R"("verdict":"equality","witness":[]})");
  EXPECT_EQ(format_record(r, ReportFormat::text), "F7  three-set-L  {0,1};{0,1};{0,1}  bound=2  actual=2  equality");
  r.verdict = Verdict::violated;
  EXPECT_NE(format_record(r, ReportFormat::jsonl).find(R"("witness":["1","2"])"), std::string::npos);
}
