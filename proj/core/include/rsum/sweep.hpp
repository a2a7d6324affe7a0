#ifndef RSUM_SWEEP_HPP
#define RSUM_SWEEP_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rsum/bounds.hpp"

namespace rsum {

enum class SweepTarget { conjecture, three_set, even_cyclic, odd_linear, corollary, torsion_free, equality };

std::string_view to_string(SweepTarget t) noexcept;
std::optional<SweepTarget> parse_sweep_target(std::string_view name) noexcept;

/// Points of Z^dim with every coordinate in [lo, hi].
struct LatticeWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 12;
  std::size_t dim = 1;

  std::size_t point_count() const;
  LatticePoint point(std::size_t index) const;
};

struct SweepConfig {
  SweepTarget target = SweepTarget::conjecture;
  std::variant<PrimeModulus, LatticeWindow> domain = PrimeModulus(5);
  std::size_t n_min = 2;
  std::size_t n_max = 3;
  std::size_t size_min = 2;
  std::size_t size_max = 3;
  std::vector<SumsetKind> kinds{SumsetKind::linear, SumsetKind::cyclic};
  /// Draw one set and repeat it in every slot.
  bool repeated = false;
  std::uint64_t seed = 0x72737560'5eed0001ULL;
  /// Blocks with more families than this are sampled, `cap` draws each.
  std::uint64_t cap = 100'000;
  /// Stop after this many records in total; 0 means no limit.
  std::uint64_t instance_limit = 0;
  unsigned threads = 1;
  EngineOptions engine{};
};

struct SweepSummary {
  std::uint64_t instances = 0;
  std::uint64_t holds = 0;
  std::uint64_t equality = 0;
  std::uint64_t violated = 0;
  std::uint64_t skipped = 0;
  std::uint64_t errors = 0;
  std::uint64_t blocks = 0;
  std::uint64_t sampled_blocks = 0;
  bool exhaustive = true;
  bool truncated = false;   // instance_limit reached
  bool resource_hit = false;
  std::string coverage;
  std::vector<VerificationReport> violations;  // first few, in emission order

  void count(const VerificationReport& r);
};

/// Receives every record in deterministic order.
using ReportSink = std::function<void(const VerificationReport&)>;

/// Enumerates families block by block: one block per (n, size pattern, kind).
/// A block is exhaustive when it holds at most config.cap families, otherwise
/// config.cap families are drawn from it with per-instance seeded generators.
/// Throws InputError for inconsistent configuration.
SweepSummary run_sweep(const SweepConfig& config, const ReportSink& sink);

/// The k-th s-subset of {0, ..., universe-1} in lexicographic order.
std::vector<std::size_t> unrank_subset(std::uint64_t rank, std::size_t universe, std::size_t s);

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept;

/// Deterministic bounded draw in [0, bound) by rejection.
template <class Rng>
std::uint64_t bounded_draw(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t max = ~std::uint64_t{0};
  const std::uint64_t excess = (max % bound + 1) % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t x = rng();
    if (x <= max - excess) return x % bound;
  }
}

/// Uniform s-subset of {0, ..., universe-1} (Floyd), sorted.
template <class Rng>
std::vector<std::size_t> sample_subset(Rng& rng, std::size_t universe, std::size_t s) {
  std::vector<std::size_t> chosen;
  chosen.reserve(s);
  for (std::size_t j = universe - s; j < universe; ++j) {
    const auto t = static_cast<std::size_t>(bounded_draw(rng, j + 1));
    if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
      chosen.push_back(t);
    } else {
      chosen.push_back(j);
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace rsum

#endif  // RSUM_SWEEP_HPP
