#include "rsum/sumset.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

#include "rsum/bitmask.hpp"
#include "rsum/errors.hpp"

namespace rsum {

__extension__ using u128 = unsigned __int128;

std::string_view to_string(SumsetKind kind) noexcept {
  switch (kind) {
    case SumsetKind::plain: return "plain";
    case SumsetKind::distinct: return "distinct";
    case SumsetKind::linear: return "linear";
    case SumsetKind::cyclic: return "cyclic";
  }
  return "?";
}

std::optional<SumsetKind> parse_sumset_kind(std::string_view name) noexcept {
  if (name == "plain") return SumsetKind::plain;
  if (name == "distinct") return SumsetKind::distinct;
  if (name == "linear") return SumsetKind::linear;
  if (name == "cyclic") return SumsetKind::cyclic;
  return std::nullopt;
}

namespace {

using Index = std::uint32_t;

/// Members rewritten as sorted indices into the sorted universe.
template <class E>
struct IndexedFamily {
  std::vector<E> universe;
  std::vector<std::vector<Index>> slots;

  explicit IndexedFamily(const SetFamily<E>& family) : universe(family.universe()) {
    for (const auto& m : family.members()) {
      std::vector<Index> idx;
      idx.reserve(m.size());
      for (const auto& e : m) {
        const auto it = std::lower_bound(universe.begin(), universe.end(), e);
        idx.push_back(static_cast<Index>(it - universe.begin()));
      }
      slots.push_back(std::move(idx));
    }
  }
};

// ---------------------------------------------------------------------------
// Sum stores. A store knows how to represent a set of partial sums, translate
// it by a universe element, and decode the final layer back to elements.

/// Sums as bits. F_p uses rotation mod p; Z^r uses a mixed-radix code of the
/// offset from the coordinatewise minimum, with radix n*span+1 so that n-term
/// sums never carry between coordinates.
template <class E>
class DenseStore;

template <>
class DenseStore<Residue> {
 public:
  using Set = Bitmask;

  static std::optional<DenseStore> make(const IndexedFamily<Residue>& f, std::size_t limit) {
    const std::size_t p = f.universe.front().modulus().value();
    if (p > limit) return std::nullopt;
    return DenseStore(f, p);
  }

  Set empty() const { return Bitmask(p_); }
  Set singleton(Index u) const {
    Bitmask b(p_);
    b.set(universe_->at(u).value());
    return b;
  }
  void translate_into(Set& dst, const Set& src, Index u) const {
    dst.or_rotated_left(src, universe_->at(u).value());
  }
  std::vector<Residue> decode(const Set& s) const {
    std::vector<Residue> out;
    const PrimeModulus m = universe_->front().modulus();
    s.for_each_set([&](std::size_t b) { out.emplace_back(static_cast<std::int64_t>(b), m); });
    return out;
  }

 private:
  DenseStore(const IndexedFamily<Residue>& f, std::size_t p) : p_(p), universe_(&f.universe) {}
  std::size_t p_;
  const std::vector<Residue>* universe_;
};

template <>
class DenseStore<LatticePoint> {
 public:
  using Set = Bitmask;

  static std::optional<DenseStore> make(const IndexedFamily<LatticePoint>& f, std::size_t limit) {
    const auto& u = f.universe;
    const std::size_t r = u.front().dim();
    const std::size_t n = f.slots.size();
    std::vector<std::int64_t> lo(u.front().coords()), hi(u.front().coords());
    for (const auto& pt : u) {
      for (std::size_t c = 0; c < r; ++c) {
        lo[c] = std::min(lo[c], pt[c]);
        hi[c] = std::max(hi[c], pt[c]);
      }
    }
    std::vector<std::size_t> radix(r), stride(r);
    std::size_t total = 1;
    for (std::size_t c = 0; c < r; ++c) {
      const auto span = static_cast<u128>(hi[c] - lo[c]);
      const u128 rad = span * n + 1;
      if (rad > limit || static_cast<u128>(total) * rad > limit) return std::nullopt;
      radix[c] = static_cast<std::size_t>(rad);
      stride[c] = total;
      total *= radix[c];
    }
    DenseStore s;
    s.nbits_ = total;
    s.n_ = n;
    s.lo_ = std::move(lo);
    s.radix_ = std::move(radix);
    s.stride_ = std::move(stride);
    s.code_.reserve(u.size());
    for (const auto& pt : u) {
      std::size_t code = 0;
      for (std::size_t c = 0; c < r; ++c) code += static_cast<std::size_t>(pt[c] - s.lo_[c]) * s.stride_[c];
      s.code_.push_back(code);
    }
    return s;
  }

  Set empty() const { return Bitmask(nbits_); }
  Set singleton(Index u) const {
    Bitmask b(nbits_);
    b.set(code_[u]);
    return b;
  }
  void translate_into(Set& dst, const Set& src, Index u) const { dst.or_shifted_left(src, code_[u]); }

  /// Only valid for complete n-term sums.
  std::vector<LatticePoint> decode(const Set& s) const {
    std::vector<LatticePoint> out;
    const std::size_t r = lo_.size();
    s.for_each_set([&](std::size_t b) {
      std::vector<std::int64_t> coords(r);
      for (std::size_t c = 0; c < r; ++c) {
        const auto digit = static_cast<std::int64_t>((b / stride_[c]) % radix_[c]);
        coords[c] = digit + static_cast<std::int64_t>(n_) * lo_[c];
      }
      out.emplace_back(std::move(coords));
    });
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  DenseStore() = default;
  std::size_t nbits_ = 0;
  std::size_t n_ = 0;
  std::vector<std::int64_t> lo_;
  std::vector<std::size_t> radix_, stride_, code_;
};

/// Sums as sorted vectors of elements.
template <class E>
class SparseStore {
 public:
  using Set = std::vector<E>;

  explicit SparseStore(const IndexedFamily<E>& f) : universe_(&f.universe) {}

  Set empty() const { return {}; }
  Set singleton(Index u) const { return {universe_->at(u)}; }
  void translate_into(Set& dst, const Set& src, Index u) const {
    Set moved;
    moved.reserve(src.size());
    const E& t = universe_->at(u);
    for (const auto& s : src) moved.push_back(s + t);
    std::sort(moved.begin(), moved.end());
    unite(dst, moved);
  }
  static void unite(Set& dst, const Set& src) {
    Set merged;
    merged.reserve(dst.size() + src.size());
    std::set_union(dst.begin(), dst.end(), src.begin(), src.end(), std::back_inserter(merged));
    dst = std::move(merged);
  }
  std::vector<E> decode(const Set& s) const { return s; }

 private:
  const std::vector<E>* universe_;
};

template <class Set>
void unite(Set& dst, const Set& src) {
  if constexpr (std::is_same_v<Set, Bitmask>) {
    dst |= src;
  } else {
    SparseStore<typename Set::value_type>::unite(dst, src);
  }
}

template <class Set>
bool is_empty(const Set& s) {
  if constexpr (std::is_same_v<Set, Bitmask>) {
    return !s.any();
  } else {
    return s.empty();
  }
}

// ---------------------------------------------------------------------------
// Dynamic programs.

template <class Store, class E>
typename Store::Set plain_dp(const Store& store, const IndexedFamily<E>& f) {
  auto layer = store.empty();
  for (auto u : f.slots[0]) unite(layer, store.singleton(u));
  for (std::size_t i = 1; i < f.slots.size(); ++i) {
    auto next = store.empty();
    for (auto v : f.slots[i]) store.translate_into(next, layer, v);
    layer = std::move(next);
  }
  return layer;
}

/// Layer i maps each last element a_i (aligned with slots[i]) to the set of
/// partial sums a_1+...+a_i over adjacent-distinct prefixes. With `first`
/// set, a_1 is pinned to that universe index.
template <class Store, class E>
std::vector<typename Store::Set> adjacent_distinct_layers(const Store& store, const IndexedFamily<E>& f,
                                                          std::optional<Index> first) {
  using Set = typename Store::Set;
  const auto& s0 = f.slots[0];
  std::vector<Set> cur(s0.size(), store.empty());
  for (std::size_t j = 0; j < s0.size(); ++j) {
    if (!first || s0[j] == *first) cur[j] = store.singleton(s0[j]);
  }
  for (std::size_t i = 1; i < f.slots.size(); ++i) {
    const auto& prev = f.slots[i - 1];
    const auto& next = f.slots[i];
    const std::size_t m = prev.size();
    // prefix[j] = cur[0..j), suffix[j] = cur[j..m)
    std::vector<Set> prefix(m + 1, store.empty()), suffix(m + 1, store.empty());
    for (std::size_t j = 0; j < m; ++j) {
      prefix[j + 1] = prefix[j];
      unite(prefix[j + 1], cur[j]);
    }
    for (std::size_t j = m; j-- > 0;) {
      suffix[j] = suffix[j + 1];
      unite(suffix[j], cur[j]);
    }
    std::vector<Set> out(next.size(), store.empty());
    for (std::size_t t = 0; t < next.size(); ++t) {
      const Index v = next[t];
      const auto it = std::lower_bound(prev.begin(), prev.end(), v);
      if (it != prev.end() && *it == v) {
        const auto j = static_cast<std::size_t>(it - prev.begin());
        Set excl = prefix[j];
        unite(excl, suffix[j + 1]);
        if (!is_empty(excl)) store.translate_into(out[t], excl, v);
      } else if (!is_empty(prefix[m])) {
        store.translate_into(out[t], prefix[m], v);
      }
    }
    cur = std::move(out);
  }
  return cur;
}

template <class Store, class E>
typename Store::Set linear_dp(const Store& store, const IndexedFamily<E>& f) {
  auto result = store.empty();
  for (const auto& s : adjacent_distinct_layers(store, f, std::nullopt)) unite(result, s);
  return result;
}

template <class Store, class E>
typename Store::Set cyclic_dp(const Store& store, const IndexedFamily<E>& f) {
  auto result = store.empty();
  const auto& last = f.slots.back();
  for (auto first : f.slots.front()) {
    const auto layer = adjacent_distinct_layers(store, f, first);
    for (std::size_t t = 0; t < last.size(); ++t) {
      if (last[t] != first) unite(result, layer[t]);
    }
  }
  return result;
}

/// Sums over pairwise-distinct tuples depend only on the set of elements
/// used, so the DP tracks reachable subsets of the universe as bitmasks.
template <class E>
std::vector<E> distinct_dp(const IndexedFamily<E>& f, const EngineOptions& options) {
  if (f.universe.size() > 64) {
    throw ResourceError("distinct sumset DP supports at most 64 distinct elements, got " +
                        std::to_string(f.universe.size()));
  }
  std::unordered_set<std::uint64_t> layer{0};
  for (const auto& slot : f.slots) {
    std::unordered_set<std::uint64_t> next;
    for (auto mask : layer) {
      for (auto v : slot) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (mask & bit) continue;
        next.insert(mask | bit);
        if (next.size() > options.distinct_state_cap) {
          throw ResourceError("distinct sumset DP exceeded " + std::to_string(options.distinct_state_cap) +
                              " states");
        }
      }
    }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  std::vector<E> out;
  out.reserve(layer.size());
  for (auto mask : layer) {
    std::optional<E> sum;
    for (auto bits = mask; bits; bits &= bits - 1) {
      const E& e = f.universe[static_cast<std::size_t>(std::countr_zero(bits))];
      sum = sum ? *sum + e : e;
    }
    out.push_back(*sum);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class Store, class E>
std::vector<E> run_with_store(const Store& store, const IndexedFamily<E>& f, SumsetKind kind) {
  switch (kind) {
    case SumsetKind::plain: return store.decode(plain_dp(store, f));
    case SumsetKind::linear: return store.decode(linear_dp(store, f));
    case SumsetKind::cyclic: return store.decode(cyclic_dp(store, f));
    case SumsetKind::distinct: break;
  }
  throw std::logic_error("unreachable sumset kind");
}

}  // namespace

template <class E>
SumsetResult<E> compute_sumset(const SetFamily<E>& family, SumsetKind kind, const EngineOptions& options) {
  SumsetResult<E> result;
  result.kind = kind;
  if (family.size() == 1) {
    result.elements = family[0];
    return result;
  }
  const IndexedFamily<E> f(family);
  if (kind == SumsetKind::distinct) {
    result.elements = distinct_dp(f, options);
    return result;
  }
  std::optional<DenseStore<E>> dense;
  if (!options.force_sparse) dense = DenseStore<E>::make(f, options.dense_limit_bits);
  result.elements = dense ? run_with_store(*dense, f, kind) : run_with_store(SparseStore<E>(f), f, kind);
  return result;
}

template <class E>
SumsetResult<E> brute_force_oracle(const SetFamily<E>& family, SumsetKind kind, const OracleOptions& options) {
  const std::size_t n = family.size();
  u128 tuples = 1;
  for (const auto& m : family.members()) {
    tuples *= m.size();
    if (tuples > options.tuple_cap) {
      throw ResourceError("oracle would enumerate more than " + std::to_string(options.tuple_cap) + " tuples");
    }
  }
  std::vector<E> sums;
  std::vector<std::size_t> pos(n, 0);
  const bool restricted_cycle = kind == SumsetKind::cyclic && n >= 2;
  while (true) {
    bool ok = true;
    if (kind == SumsetKind::distinct) {
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n && ok; ++j) ok = !(family[i][pos[i]] == family[j][pos[j]]);
    } else if (kind == SumsetKind::linear || kind == SumsetKind::cyclic) {
      for (std::size_t i = 0; i + 1 < n && ok; ++i) ok = !(family[i][pos[i]] == family[i + 1][pos[i + 1]]);
      if (ok && restricted_cycle) ok = !(family[n - 1][pos[n - 1]] == family[0][pos[0]]);
    }
    if (ok) {
      E s = family[0][pos[0]];
      for (std::size_t i = 1; i < n; ++i) s = s + family[i][pos[i]];
      sums.push_back(std::move(s));
    }
    std::size_t i = 0;
    while (i < n && ++pos[i] == family[i].size()) pos[i++] = 0;
    if (i == n) break;
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return SumsetResult<E>{kind, std::move(sums)};
}

template SumsetResult<Residue> compute_sumset(const SetFamily<Residue>&, SumsetKind, const EngineOptions&);
template SumsetResult<LatticePoint> compute_sumset(const SetFamily<LatticePoint>&, SumsetKind,
                                                   const EngineOptions&);
template SumsetResult<Residue> brute_force_oracle(const SetFamily<Residue>&, SumsetKind, const OracleOptions&);
template SumsetResult<LatticePoint> brute_force_oracle(const SetFamily<LatticePoint>&, SumsetKind,
                                                       const OracleOptions&);

}  // namespace rsum
