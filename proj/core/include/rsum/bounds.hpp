#ifndef RSUM_BOUNDS_HPP
#define RSUM_BOUNDS_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsum/domain.hpp"
#include "rsum/family.hpp"
#include "rsum/sumset.hpp"

namespace rsum {

enum class BoundKind {
  conjecture_linear,    // min{p(G), sum|A_i| - 2n + 1 + {n}_2}
  conjecture_cyclic,    // min{p(G), sum|A_i| - 2n + (-1)^n (1 + {n}_2)}
  three_set_linear,     // min{p(G), |A_1|+|A_2|+|A_3| - 4}
  even_cyclic,          // sum|A_i| - 2n + 1, n even
  odd_linear,           // sum|A_i| - 2n + 2, n odd
  torsion_free_linear,  // n|A| - 2n + 1 + {n}_2
  torsion_free_cyclic,  // n|A| - 2n + (-1)^n (1 + {n}_2)
  anr_pair,             // min{p(G), |A| + |B| - 2} for |A| < |B|
};

std::string_view to_string(BoundKind kind) noexcept;

struct BoundFormula {
  BoundKind kind = BoundKind::conjecture_linear;
  std::vector<std::size_t> sizes;  // |A_1|, ..., |A_n|
  TorsionBound torsion = TorsionBound::infinite();
};

/// The formula value after the min with p(G); may be zero or negative.
/// Throws InputError when the number of sizes does not fit the kind.
std::int64_t eval_bound(const BoundFormula& formula);

constexpr std::int64_t clamp_bound(std::int64_t bound) noexcept { return bound < 0 ? 0 : bound; }

enum class Verdict { holds, equality, violated, skipped, error };

std::string_view to_string(Verdict v) noexcept;

/// violated iff actual < max(bound, 0); equality iff actual == bound > 0.
Verdict judge(std::size_t actual, std::int64_t bound) noexcept;

/// One theorem instance. `bound` is reported unclamped.
struct VerificationReport {
  std::string domain;
  std::string check;
  std::string family;
  std::optional<std::int64_t> bound;
  std::optional<std::size_t> actual;
  Verdict verdict = Verdict::skipped;
  std::vector<std::string> witness;
  std::string note;
  std::chrono::microseconds elapsed{0};
};

template <class E>
VerificationReport verify_conjecture(const SetFamily<E>& family, SumsetKind kind, const EngineOptions& options = {});

/// |L(A_1,A_2,A_3)| >= min{p, sum - 4} given |A_1|,|A_3| >= 2 and |A_2|-|A_1| in {0,1}.
VerificationReport verify_three_set_theorem(const ZpFamily& family, const EngineOptions& options = {});

/// |L| >= |C| >= sum - 2n + 1 for n even, equal sizes >= 2, p > sum - 2n.
VerificationReport verify_even_cyclic_theorem(const ZpFamily& family, const EngineOptions& options = {});

/// |L| >= sum - 2n + 2 for n odd, equal sizes >= 2, p > sum - 2n + 1.
VerificationReport verify_odd_linear_theorem(const ZpFamily& family, const EngineOptions& options = {});

/// Lower bounds for n~A (linear) and n°A (cyclic) over Z^r; |A| >= 2, n >= 2.
VerificationReport verify_torsion_free(const std::vector<LatticePoint>& set, std::size_t n, SumsetKind kind,
                                       const EngineOptions& options = {});

enum class EqualityClass {
  ap_equality,
  exceptional_k3n5,
  strict,
  unexpected_equality,  // equality for a non-AP outside the (k=3, n=5) cyclic case
  missing_ap_equality,  // an AP whose cardinality exceeds the bound
};

std::string_view to_string(EqualityClass c) noexcept;

struct EqualityOutcome {
  EqualityClass cls = EqualityClass::strict;
  std::int64_t bound = 0;
  std::size_t actual = 0;
  bool is_ap = false;

  /// False for the two classes the equality characterization rules out.
  bool consistent() const noexcept {
    return cls != EqualityClass::unexpected_equality && cls != EqualityClass::missing_ap_equality;
  }
};

/// Compares |n~A| or |n°A| with the exact torsion-free bound and classifies
/// the outcome. Requires |A| >= 3, n > 2 and kind linear or cyclic.
EqualityOutcome classify_equality(const std::vector<LatticePoint>& set, std::size_t n, SumsetKind kind,
                                  const EngineOptions& options = {});

/// classify_equality as a report: violated when the outcome is inconsistent,
/// skipped outside the hypotheses.
VerificationReport equality_report(const std::vector<LatticePoint>& set, std::size_t n, SumsetKind kind,
                                   const EngineOptions& options = {});

/// Whether L(A,A,A) covers F_p; empty when |A| < floor(p/3) + 2.
std::optional<bool> verify_corollary_coverage(PrimeModulus p, const std::vector<Residue>& set,
                                              const EngineOptions& options = {});

VerificationReport corollary_report(PrimeModulus p, const std::vector<Residue>& set,
                                    const EngineOptions& options = {});

}  // namespace rsum

#endif  // RSUM_BOUNDS_HPP
