#ifndef RSUM_EXHAUSTIVE_HPP
#define RSUM_EXHAUSTIVE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rsum/bounds.hpp"

namespace rsum {

// Exhaustive theorem checks over F_p for p < 64.
//
// Families are enumerated slot by slot with every subset held as a 64-bit
// mask. The adjacent-distinct DP state after slots 1..i is shared by all
// families with that prefix, so each leaf costs |A_n| word ORs. With affine
// reduction the first slot runs over orbit representatives of x -> cx + t
// (c != 0); such maps applied to all slots at once preserve |L| and |C|.

enum class ExhaustiveCheck { three_set, even_cyclic, odd_linear, conjecture_linear, conjecture_cyclic };

std::string_view to_string(ExhaustiveCheck c) noexcept;

/// Per-slot sizes of the families to enumerate.
using SizePattern = std::vector<std::size_t>;

struct ExhaustiveOptions {
  bool affine_reduction = true;
  std::size_t max_witnesses = 16;
  /// Refuse runs whose leaf count would exceed this.
  std::uint64_t leaf_cap = 50'000'000'000ULL;
  unsigned threads = 1;
};

struct ExhaustiveWitness {
  std::vector<std::uint64_t> masks;  // bit u set iff u is in A_i
  std::size_t actual = 0;
  std::int64_t bound = 0;
};

struct ExhaustiveResult {
  std::uint64_t evaluated = 0;  // families actually evaluated
  std::uint64_t covered = 0;    // families covered, counting affine images
  std::uint64_t holds = 0;
  std::uint64_t equality = 0;
  std::uint64_t violated = 0;
  std::vector<ExhaustiveWitness> violations;  // earliest in enumeration order

  ExhaustiveResult& operator+=(const ExhaustiveResult& other);
};

/// Hypothesis-respecting size patterns for each check.
std::vector<SizePattern> three_set_patterns(std::uint32_t p);
std::vector<SizePattern> even_cyclic_patterns(std::uint32_t p, std::size_t n);
std::vector<SizePattern> odd_linear_patterns(std::uint32_t p, std::size_t n);
std::vector<SizePattern> conjecture_patterns(std::uint32_t p, std::size_t n, std::size_t min_size,
                                             std::size_t max_size);

/// Runs `check` over every family whose slot sizes match one of `patterns`.
/// Throws InputError for p >= 64 or malformed patterns, ResourceError when
/// the leaf count exceeds options.leaf_cap.
ExhaustiveResult exhaustive_check(std::uint32_t p, ExhaustiveCheck check, const std::vector<SizePattern>& patterns,
                                  const ExhaustiveOptions& options = {});

/// Affine orbit representatives of the s-subsets of F_p, with orbit sizes.
struct OrbitRep {
  std::uint64_t mask;
  std::uint64_t orbit_size;
};
std::vector<OrbitRep> affine_orbit_representatives(std::uint32_t p, std::size_t s);

/// All s-subsets of F_p as masks, in increasing numeric order.
std::vector<std::uint64_t> subsets_of_size(std::uint32_t p, std::size_t s);

/// "{0,2};{1,3}" for a list of masks.
std::string masks_to_string(const std::vector<std::uint64_t>& masks);

}  // namespace rsum

#endif  // RSUM_EXHAUSTIVE_HPP
