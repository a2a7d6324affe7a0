#include "rsum/exhaustive.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <memory>
#include <thread>
#include <tuple>

#include "rsum/errors.hpp"

namespace rsum {

__extension__ using u128 = unsigned __int128;

std::string_view to_string(ExhaustiveCheck c) noexcept {
  switch (c) {
    case ExhaustiveCheck::three_set: return "three-set-L";
    case ExhaustiveCheck::even_cyclic: return "even-C";
    case ExhaustiveCheck::odd_linear: return "odd-L";
    case ExhaustiveCheck::conjecture_linear: return "conjecture-L";
    case ExhaustiveCheck::conjecture_cyclic: return "conjecture-C";
  }
  return "?";
}

ExhaustiveResult& ExhaustiveResult::operator+=(const ExhaustiveResult& o) {
  evaluated += o.evaluated;
  covered += o.covered;
  holds += o.holds;
  equality += o.equality;
  violated += o.violated;
  violations.insert(violations.end(), o.violations.begin(), o.violations.end());
  return *this;
}

std::vector<SizePattern> three_set_patterns(std::uint32_t p) {
  std::vector<SizePattern> out;
  for (std::size_t s1 = 2; s1 <= p; ++s1)
    for (std::size_t s2 = s1; s2 <= std::min<std::size_t>(s1 + 1, p); ++s2)
      for (std::size_t s3 = 2; s3 <= p; ++s3) out.push_back({s1, s2, s3});
  return out;
}

std::vector<SizePattern> even_cyclic_patterns(std::uint32_t p, std::size_t n) {
  std::vector<SizePattern> out;
  if (n < 2 || n % 2 != 0) return out;
  for (std::size_t s = 2; s <= p; ++s) {
    if (static_cast<std::int64_t>(p) > static_cast<std::int64_t>(n * (s - 2))) out.emplace_back(n, s);
  }
  return out;
}

std::vector<SizePattern> odd_linear_patterns(std::uint32_t p, std::size_t n) {
  std::vector<SizePattern> out;
  if (n < 3 || n % 2 == 0) return out;
  for (std::size_t s = 2; s <= p; ++s) {
    if (static_cast<std::int64_t>(p) > static_cast<std::int64_t>(n * (s - 2) + 1)) out.emplace_back(n, s);
  }
  return out;
}

std::vector<SizePattern> conjecture_patterns(std::uint32_t p, std::size_t n, std::size_t min_size,
                                             std::size_t max_size) {
  std::vector<SizePattern> out;
  min_size = std::max<std::size_t>(min_size, 2);
  max_size = std::min<std::size_t>(max_size, p);
  if (n < 2 || min_size > max_size) return out;
  SizePattern cur(n, min_size);
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (i-- > 0) {
      if (++cur[i] <= max_size) break;
      cur[i] = min_size;
      if (i == 0) return out;
    }
  }
}

std::vector<std::uint64_t> subsets_of_size(std::uint32_t p, std::size_t s) {
  std::vector<std::uint64_t> out;
  if (s > p || p >= 64) return out;
  if (s == 0) return {0};
  // Gosper's hack walks s-bit masks in increasing order.
  std::uint64_t m = (std::uint64_t{1} << s) - 1;
  const std::uint64_t limit = std::uint64_t{1} << p;
  while (m < limit) {
    out.push_back(m);
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

namespace {

struct Field {
  std::uint32_t p;
  std::uint64_t full;

  explicit Field(std::uint32_t prime) : p(prime), full((std::uint64_t{1} << prime) - 1) {}

  std::uint64_t rot(std::uint64_t m, std::uint32_t k) const {
    return k == 0 ? m : ((m << k) | (m >> (p - k))) & full;
  }

  std::uint64_t affine_image(std::uint64_t m, std::uint32_t c, std::uint32_t t) const {
    std::uint64_t out = 0;
    for (auto bits = m; bits; bits &= bits - 1) {
      const auto u = static_cast<std::uint64_t>(std::countr_zero(bits));
      out |= std::uint64_t{1} << ((u * c + t) % p);
    }
    return out;
  }
};

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

using Row = std::array<std::uint64_t, 64>;

struct Witness {
  std::tuple<std::size_t, std::size_t, std::uint64_t> key;  // pattern, rep, sequence
  ExhaustiveWitness w;
};

class Walker {
 public:
  Walker(const Field& field, ExhaustiveCheck check, const SizePattern& pattern,
         const std::vector<std::vector<std::uint64_t>>& lists, std::size_t max_witnesses)
      : f_(field), check_(check), pattern_(pattern), lists_(lists), max_witnesses_(max_witnesses) {
    const BoundKind kind = [&] {
      switch (check) {
        case ExhaustiveCheck::three_set: return BoundKind::three_set_linear;
        case ExhaustiveCheck::even_cyclic: return BoundKind::even_cyclic;
        case ExhaustiveCheck::odd_linear: return BoundKind::odd_linear;
        case ExhaustiveCheck::conjecture_linear: return BoundKind::conjecture_linear;
        case ExhaustiveCheck::conjecture_cyclic: return BoundKind::conjecture_cyclic;
      }
      return BoundKind::conjecture_linear;
    }();
    bound_ = eval_bound(BoundFormula{kind, pattern, TorsionBound::finite(field.p)});
    need_cyclic_ = check == ExhaustiveCheck::even_cyclic || check == ExhaustiveCheck::conjecture_cyclic;
    need_linear_ = !need_cyclic_ || check == ExhaustiveCheck::even_cyclic;
    const std::size_t n = pattern.size();
    state_.assign(n, std::vector<Row>(need_cyclic_ ? 64 : 1));
    path_.assign(n, 0);
  }

  /// Walks every family whose first slot is `first`.
  void run(std::uint64_t first, std::size_t pattern_index, std::size_t rep_index, ExhaustiveResult& out,
           std::vector<Witness>& witnesses) {
    pattern_index_ = pattern_index;
    rep_index_ = rep_index;
    sequence_ = 0;
    path_[0] = first;
    starts_.clear();
    if (need_cyclic_) {
      for (auto bits = first; bits; bits &= bits - 1) starts_.push_back(static_cast<std::uint32_t>(std::countr_zero(bits)));
    } else {
      starts_.push_back(kAllStarts);
    }
    for (std::size_t si = 0; si < starts_.size(); ++si) {
      Row& row = state_[0][si];
      for (std::uint32_t v = 0; v < f_.p; ++v) {
        row[v] = (starts_[si] == kAllStarts || starts_[si] == v) ? std::uint64_t{1} << v : 0;
      }
    }
    descend(1, out, witnesses);
  }

 private:
  static constexpr std::uint32_t kAllStarts = 0xffffffffU;

  /// next[v] = rot(OR of prev[u] over u in `chosen`, u != v; v).
  void transition(const Row& prev, std::uint64_t chosen, Row& next) const {
    std::array<std::uint32_t, 64> elems{};
    std::array<std::uint64_t, 65> prefix{}, suffix{};
    std::size_t s = 0;
    for (auto bits = chosen; bits; bits &= bits - 1) elems[s++] = static_cast<std::uint32_t>(std::countr_zero(bits));
    for (std::size_t j = 0; j < s; ++j) prefix[j + 1] = prefix[j] | prev[elems[j]];
    suffix[s] = 0;
    for (std::size_t j = s; j-- > 0;) suffix[j] = suffix[j + 1] | prev[elems[j]];
    const std::uint64_t total = prefix[s];
    std::size_t j = 0;
    for (std::uint32_t v = 0; v < f_.p; ++v) {
      std::uint64_t excl = total;
      if (j < s && elems[j] == v) {
        excl = prefix[j] | suffix[j + 1];
        ++j;
      }
      next[v] = f_.rot(excl, v);
    }
  }

  void descend(std::size_t depth, ExhaustiveResult& out, std::vector<Witness>& witnesses) {
    const std::size_t n = pattern_.size();
    // state_[depth - 1] holds the DP before slot depth-1 is restricted; fold
    // in the chosen subset path_[depth - 1].
    for (std::size_t si = 0; si < starts_.size(); ++si) {
      transition(state_[depth - 1][si], path_[depth - 1], state_[depth][si]);
    }
    if (depth == n - 1) {
      leaves(out, witnesses);
      return;
    }
    for (auto m : lists_[depth]) {
      path_[depth] = m;
      descend(depth + 1, out, witnesses);
    }
  }

  void leaves(ExhaustiveResult& out, std::vector<Witness>& witnesses) {
    const std::size_t n = pattern_.size();
    const auto& last = state_[n - 1];
    Row lin{}, cyc{};
    for (std::uint32_t v = 0; v < f_.p; ++v) {
      std::uint64_t l = 0, c = 0;
      for (std::size_t si = 0; si < starts_.size(); ++si) {
        l |= last[si][v];
        if (need_cyclic_ && starts_[si] != v) c |= last[si][v];
      }
      lin[v] = l;
      cyc[v] = c;
    }
    const auto clamped = clamp_bound(bound_);
    for (auto m : lists_[n - 1]) {
      std::uint64_t l = 0, c = 0;
      for (auto bits = m; bits; bits &= bits - 1) {
        const auto v = std::countr_zero(bits);
        l |= lin[v];
        c |= cyc[v];
      }
      const auto lsize = static_cast<std::int64_t>(std::popcount(l));
      const auto csize = static_cast<std::int64_t>(std::popcount(c));
      const std::int64_t actual = need_cyclic_ ? csize : lsize;
      ++out.evaluated;
      const bool violated = actual < clamped || (check_ == ExhaustiveCheck::even_cyclic && lsize < csize);
      if (violated) {
        ++out.violated;
        if (witnesses.size() < max_witnesses_) {
          path_[n - 1] = m;
          witnesses.push_back(
              {{pattern_index_, rep_index_, sequence_}, {path_, static_cast<std::size_t>(actual), bound_}});
        }
      } else if (bound_ > 0 && actual == bound_) {
        ++out.equality;
      } else {
        ++out.holds;
      }
      ++sequence_;
    }
  }

  const Field& f_;
  ExhaustiveCheck check_;
  const SizePattern& pattern_;
  const std::vector<std::vector<std::uint64_t>>& lists_;
  std::size_t max_witnesses_;
  std::int64_t bound_ = 0;
  bool need_cyclic_ = false;
  bool need_linear_ = true;
  std::vector<std::vector<Row>> state_;
  std::vector<std::uint64_t> path_;
  std::vector<std::uint32_t> starts_;
  std::size_t pattern_index_ = 0;
  std::size_t rep_index_ = 0;
  std::uint64_t sequence_ = 0;
};

}  // namespace

std::vector<OrbitRep> affine_orbit_representatives(std::uint32_t p, std::size_t s) {
  if (p >= 64 || !is_prime(p)) throw InputError("affine orbits need a prime p < 64");
  const Field f(p);
  std::vector<OrbitRep> out;
  for (auto m : subsets_of_size(p, s)) {
    std::uint64_t least = m;
    std::vector<std::uint64_t> images;
    for (std::uint32_t c = 1; c < p; ++c) {
      for (std::uint32_t t = 0; t < p; ++t) {
        const auto img = f.affine_image(m, c, t);
        least = std::min(least, img);
        images.push_back(img);
      }
    }
    if (least != m) continue;
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    out.push_back({m, images.size()});
  }
  return out;
}

std::string masks_to_string(const std::vector<std::uint64_t>& masks) {
  std::string s;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (i) s += ';';
    s += '{';
    bool first = true;
    for (auto bits = masks[i]; bits; bits &= bits - 1) {
      if (!first) s += ',';
      s += std::to_string(std::countr_zero(bits));
      first = false;
    }
    s += '}';
  }
  return s;
}

ExhaustiveResult exhaustive_check(std::uint32_t p, ExhaustiveCheck check, const std::vector<SizePattern>& patterns,
                                  const ExhaustiveOptions& options) {
  if (p >= 64 || !is_prime(p)) throw InputError("exhaustive checks need a prime p < 64");
  const Field field(p);

  std::map<std::size_t, std::vector<std::uint64_t>> lists;
  std::map<std::size_t, std::vector<OrbitRep>> reps;
  u128 leaves = 0;
  for (const auto& pat : patterns) {
    if (pat.size() < 2) throw InputError("exhaustive patterns need at least two slots");
    for (auto s : pat) {
      if (s == 0 || s > p) throw InputError("pattern size out of range for p = " + std::to_string(p));
      if (binomial_u64(p, s) > 50'000'000ULL) throw ResourceError("too many subsets per slot");
    }
    u128 count = options.affine_reduction ? 1 : binomial_u64(p, pat[0]);
    if (options.affine_reduction) {
      auto [it, inserted] = reps.try_emplace(pat[0]);
      if (inserted) it->second = affine_orbit_representatives(p, pat[0]);
      count = it->second.size();
    }
    for (std::size_t i = 1; i < pat.size(); ++i) count *= binomial_u64(p, pat[i]);
    leaves += count;
    if (leaves > options.leaf_cap) {
      throw ResourceError("exhaustive run would evaluate more than " + std::to_string(options.leaf_cap) +
                          " families");
    }
  }
  for (const auto& pat : patterns)
    for (auto s : pat)
      if (!lists.count(s)) lists[s] = subsets_of_size(p, s);

  // One task per (pattern, first-slot subset); tasks are dealt round-robin.
  struct Task {
    std::size_t pattern;
    std::size_t rep;
    std::uint64_t mask;
    std::uint64_t weight;
  };
  std::vector<Task> tasks;
  for (std::size_t pi = 0; pi < patterns.size(); ++pi) {
    const auto& pat = patterns[pi];
    std::uint64_t rest = 1;
    for (std::size_t i = 1; i < pat.size(); ++i) rest *= binomial_u64(p, pat[i]);
    if (options.affine_reduction) {
      const auto& r = reps.at(pat[0]);
      for (std::size_t k = 0; k < r.size(); ++k) tasks.push_back({pi, k, r[k].mask, r[k].orbit_size * rest});
    } else {
      const auto& l = lists.at(pat[0]);
      for (std::size_t k = 0; k < l.size(); ++k) tasks.push_back({pi, k, l[k], rest});
    }
  }

  const unsigned threads = std::max(1U, options.threads);
  std::vector<ExhaustiveResult> partial(threads);
  std::vector<std::vector<Witness>> found(threads);
  auto work = [&](unsigned tid) {
    std::vector<std::vector<std::uint64_t>> slot_lists;
    std::size_t current_pattern = static_cast<std::size_t>(-1);
    std::unique_ptr<Walker> walker;
    for (std::size_t t = tid; t < tasks.size(); t += threads) {
      const auto& task = tasks[t];
      if (task.pattern != current_pattern) {
        current_pattern = task.pattern;
        slot_lists.clear();
        for (auto s : patterns[task.pattern]) slot_lists.push_back(lists.at(s));
        walker = std::make_unique<Walker>(field, check, patterns[task.pattern], slot_lists, options.max_witnesses);
      }
      walker->run(task.mask, task.pattern, task.rep, partial[tid], found[tid]);
      partial[tid].covered += task.weight;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  ExhaustiveResult result;
  std::vector<Witness> all;
  for (unsigned t = 0; t < threads; ++t) {
    result += partial[t];
    all.insert(all.end(), found[t].begin(), found[t].end());
  }
  std::sort(all.begin(), all.end(), [](const Witness& a, const Witness& b) { return a.key < b.key; });
  if (all.size() > options.max_witnesses) all.resize(options.max_witnesses);
  result.violations.clear();
  for (auto& w : all) result.violations.push_back(std::move(w.w));
  return result;
}

}  // namespace rsum
