#ifndef RSUM_SUMSET_HPP
#define RSUM_SUMSET_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rsum/family.hpp"

namespace rsum {

/// plain: A_1+...+A_n. distinct: pairwise distinct summands.
/// linear: a_i != a_{i+1}. cyclic: linear plus a_n != a_1.
enum class SumsetKind { plain, distinct, linear, cyclic };

std::string_view to_string(SumsetKind kind) noexcept;
std::optional<SumsetKind> parse_sumset_kind(std::string_view name) noexcept;

template <class E>
struct SumsetResult {
  SumsetKind kind = SumsetKind::plain;
  std::vector<E> elements;  // sorted, deduplicated

  std::size_t cardinality() const noexcept { return elements.size(); }
  bool contains(const E& e) const { return std::binary_search(elements.begin(), elements.end(), e); }
};

struct EngineOptions {
  /// Largest dense sum bitset; families needing more fall back to sorted vectors.
  std::size_t dense_limit_bits = std::size_t{1} << 26;
  /// Cap on reachable subsets tracked by the pairwise-distinct DP.
  std::size_t distinct_state_cap = 4'000'000;
  /// Always use the sparse store (lets tests exercise both stores).
  bool force_sparse = false;
};

struct OracleOptions {
  std::uint64_t tuple_cap = 100'000'000;
};

/// Layered DP. For n = 1 every kind returns A_1 (no adjacency constraints exist).
/// Throws ResourceError when the distinct DP exceeds its caps.
template <class E>
SumsetResult<E> compute_sumset(const SetFamily<E>& family, SumsetKind kind, const EngineOptions& options = {});

/// Full tuple enumeration; the independent oracle for compute_sumset.
/// Throws ResourceError when prod |A_i| exceeds options.tuple_cap.
template <class E>
SumsetResult<E> brute_force_oracle(const SetFamily<E>& family, SumsetKind kind, const OracleOptions& options = {});

template <class E>
SumsetResult<E> plain_sumset(const SetFamily<E>& f, const EngineOptions& o = {}) {
  return compute_sumset(f, SumsetKind::plain, o);
}
template <class E>
SumsetResult<E> distinct_sumset(const SetFamily<E>& f, const EngineOptions& o = {}) {
  return compute_sumset(f, SumsetKind::distinct, o);
}
/// L(A_1, ..., A_n).
template <class E>
SumsetResult<E> linear_restricted_sumset(const SetFamily<E>& f, const EngineOptions& o = {}) {
  return compute_sumset(f, SumsetKind::linear, o);
}
/// C(A_1, ..., A_n).
template <class E>
SumsetResult<E> cyclic_restricted_sumset(const SetFamily<E>& f, const EngineOptions& o = {}) {
  return compute_sumset(f, SumsetKind::cyclic, o);
}

}  // namespace rsum

#endif  // RSUM_SUMSET_HPP
