#include "rsum/sweep.hpp"

#include <random>
#include <thread>

#include "rsum/errors.hpp"
#include "rsum/exhaustive.hpp"

namespace rsum {

__extension__ using u128 = unsigned __int128;

std::string_view to_string(SweepTarget t) noexcept {
  switch (t) {
    case SweepTarget::conjecture: return "conjecture";
    case SweepTarget::three_set: return "three-set";
    case SweepTarget::even_cyclic: return "even-cyclic";
    case SweepTarget::odd_linear: return "odd-linear";
    case SweepTarget::corollary: return "corollary";
    case SweepTarget::torsion_free: return "torsion-free";
    case SweepTarget::equality: return "equality";
  }
  return "?";
}

std::optional<SweepTarget> parse_sweep_target(std::string_view name) noexcept {
  for (auto t : {SweepTarget::conjecture, SweepTarget::three_set, SweepTarget::even_cyclic, SweepTarget::odd_linear,
                 SweepTarget::corollary, SweepTarget::torsion_free, SweepTarget::equality}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::size_t LatticeWindow::point_count() const {
  if (hi < lo || dim == 0) return 0;
  const auto side = static_cast<std::size_t>(hi - lo + 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    if (total > (std::size_t{1} << 20) / side) throw InputError("lattice window too large");
    total *= side;
  }
  return total;
}

LatticePoint LatticeWindow::point(std::size_t index) const {
  const auto side = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::int64_t> c(dim);
  for (std::size_t i = dim; i-- > 0;) {
    c[i] = lo + static_cast<std::int64_t>(index % side);
    index /= side;
  }
  return LatticePoint(std::move(c));
}

void SweepSummary::count(const VerificationReport& r) {
  ++instances;
  switch (r.verdict) {
    case Verdict::holds: ++holds; break;
    case Verdict::equality: ++equality; break;
    case Verdict::violated:
      ++violated;
      if (violations.size() < 32) violations.push_back(r);
      break;
    case Verdict::skipped: ++skipped; break;
    case Verdict::error: ++errors; break;
  }
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > ~std::uint64_t{0}) return ~std::uint64_t{0};
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<std::size_t> unrank_subset(std::uint64_t rank, std::size_t universe, std::size_t s) {
  if (s > universe || rank >= binomial_saturating(universe, s)) throw InputError("subset rank out of range");
  std::vector<std::size_t> out;
  out.reserve(s);
  std::size_t x = 0;
  for (std::size_t left = s; left > 0; --left) {
    while (true) {
      // Subsets whose next element is x.
      const auto with_x = binomial_saturating(universe - x - 1, left - 1);
      if (rank < with_x) break;
      rank -= with_x;
      ++x;
    }
    out.push_back(x++);
  }
  return out;
}

namespace {

std::uint64_t mul_saturating(std::uint64_t a, std::uint64_t b) noexcept {
  const u128 r = static_cast<u128>(a) * b;
  return r > ~std::uint64_t{0} ? ~std::uint64_t{0} : static_cast<std::uint64_t>(r);
}

struct Block {
  std::size_t n = 0;
  SizePattern sizes;
  SumsetKind kind = SumsetKind::linear;
  bool repeated = false;
  std::string skip_reason;  // nonempty: emit one skipped record instead
};

bool pattern_in_range(const SizePattern& s, const SweepConfig& c) {
  return std::all_of(s.begin(), s.end(), [&](std::size_t x) { return x >= c.size_min && x <= c.size_max; });
}

std::vector<SizePattern> all_patterns(std::size_t n, std::size_t lo, std::size_t hi, bool equal) {
  std::vector<SizePattern> out;
  if (lo > hi || n == 0) return out;
  if (equal) {
    for (auto s = lo; s <= hi; ++s) out.emplace_back(n, s);
    return out;
  }
  SizePattern cur(n, lo);
  while (true) {
    out.push_back(cur);
    std::size_t i = n;
    while (true) {
      if (i == 0) return out;
      --i;
      if (++cur[i] <= hi) break;
      cur[i] = lo;
    }
  }
}

std::vector<Block> plan(const SweepConfig& c) {
  const bool zp = std::holds_alternative<PrimeModulus>(c.domain);
  const std::uint32_t p = zp ? std::get<PrimeModulus>(c.domain).value() : 0;
  auto need_zp = [&] {
    if (!zp) throw InputError(std::string(to_string(c.target)) + " sweeps run over a prime field");
  };
  auto need_lattice = [&] {
    if (zp) throw InputError(std::string(to_string(c.target)) + " sweeps run over Z^r");
  };
  auto linear_or_cyclic = [&](SumsetKind k) {
    if (k != SumsetKind::linear && k != SumsetKind::cyclic) {
      throw InputError("this sweep accepts only linear and cyclic kinds");
    }
  };

  std::vector<Block> blocks;
  auto skip = [&](std::size_t n, SumsetKind k, std::string why) {
    blocks.push_back({n, {}, k, false, std::move(why)});
  };

  switch (c.target) {
    case SweepTarget::conjecture:
      for (auto n = c.n_min; n <= c.n_max; ++n) {
        for (auto k : c.kinds) {
          linear_or_cyclic(k);
          if (n < 2) {
            skip(n, k, "n = " + std::to_string(n) + " is outside the conjecture (needs n >= 2)");
            continue;
          }
          for (auto& s : all_patterns(n, std::max<std::size_t>(c.size_min, 2), c.size_max, c.repeated)) {
            blocks.push_back({n, s, k, c.repeated, {}});
          }
        }
      }
      break;
    case SweepTarget::three_set:
      need_zp();
      for (auto& s : three_set_patterns(p)) {
        if (pattern_in_range(s, c)) blocks.push_back({3, s, SumsetKind::linear, false, {}});
      }
      break;
    case SweepTarget::even_cyclic:
    case SweepTarget::odd_linear: {
      need_zp();
      const bool even = c.target == SweepTarget::even_cyclic;
      const auto kind = even ? SumsetKind::cyclic : SumsetKind::linear;
      for (auto n = c.n_min; n <= c.n_max; ++n) {
        const auto pats = even ? even_cyclic_patterns(p, n) : odd_linear_patterns(p, n);
        if (even && (n < 2 || n % 2 != 0)) {
          skip(n, kind, "n = " + std::to_string(n) + " is not even");
          continue;
        }
        if (!even && (n < 3 || n % 2 == 0)) {
          skip(n, kind, "n = " + std::to_string(n) + " is not an odd number >= 3");
          continue;
        }
        for (auto& s : pats) {
          if (pattern_in_range(s, c)) blocks.push_back({n, s, kind, c.repeated, {}});
        }
      }
      break;
    }
    case SweepTarget::corollary: {
      need_zp();
      const std::size_t lo = std::max<std::size_t>(c.size_min, p / 3 + 2);
      for (auto s = lo; s <= std::min<std::size_t>(c.size_max, p); ++s) {
        blocks.push_back({3, SizePattern(3, s), SumsetKind::linear, true, {}});
      }
      break;
    }
    case SweepTarget::torsion_free:
    case SweepTarget::equality: {
      need_lattice();
      const bool eq = c.target == SweepTarget::equality;
      const std::size_t n_floor = eq ? 3 : 2;
      const std::size_t s_floor = eq ? 3 : 2;
      for (auto n = c.n_min; n <= c.n_max; ++n) {
        for (auto k : c.kinds) {
          linear_or_cyclic(k);
          if (n < n_floor) {
            skip(n, k, "n = " + std::to_string(n) + " is outside the theorem (needs n >= " +
                           std::to_string(n_floor) + ")");
            continue;
          }
          for (auto s = std::max(c.size_min, s_floor); s <= c.size_max; ++s) {
            blocks.push_back({n, SizePattern(n, s), k, true, {}});
          }
        }
      }
      break;
    }
  }
  return blocks;
}

std::string_view check_name(SweepTarget t, SumsetKind k) {
  switch (t) {
    case SweepTarget::conjecture: return k == SumsetKind::cyclic ? "conjecture-C" : "conjecture-L";
    case SweepTarget::three_set: return "three-set-L";
    case SweepTarget::even_cyclic: return "even-C";
    case SweepTarget::odd_linear: return "odd-L";
    case SweepTarget::corollary: return "corollary";
    case SweepTarget::torsion_free: return k == SumsetKind::cyclic ? "torsion-free-C" : "torsion-free-L";
    case SweepTarget::equality: return k == SumsetKind::cyclic ? "equality-C" : "equality-L";
  }
  return "?";
}

class Evaluator {
 public:
  explicit Evaluator(const SweepConfig& c) : c_(c) {
    if (auto* p = std::get_if<PrimeModulus>(&c.domain)) {
      prime_ = *p;
      universe_ = p->value();
    } else {
      window_ = std::get<LatticeWindow>(c.domain);
      universe_ = window_.point_count();
    }
  }

  std::size_t universe() const noexcept { return universe_; }

  VerificationReport evaluate(const Block& b, const std::vector<std::vector<std::size_t>>& slots) const {
    try {
      if (prime_) return evaluate_zp(b, slots);
      return evaluate_lattice(b, slots);
    } catch (const ResourceError& e) {
      return failure(b, slots, std::string("resource cap: ") + e.what());
    } catch (const std::exception& e) {
      return failure(b, slots, e.what());
    }
  }

 private:
  VerificationReport failure(const Block& b, const std::vector<std::vector<std::size_t>>& slots,
                             std::string why) const {
    VerificationReport r;
    r.domain = prime_ ? "F" + std::to_string(prime_->value())
                      : (window_.dim == 1 ? "Z" : "Z^" + std::to_string(window_.dim));
    r.check = std::string(check_name(c_.target, b.kind));
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (i) r.family += ';';
      r.family += "{";
      for (std::size_t j = 0; j < slots[i].size(); ++j) {
        if (j) r.family += ',';
        r.family += prime_ ? std::to_string(slots[i][j]) : to_string(window_.point(slots[i][j]));
      }
      r.family += "}";
    }
    r.verdict = Verdict::error;
    r.note = std::move(why);
    return r;
  }

  VerificationReport evaluate_zp(const Block& b, const std::vector<std::vector<std::size_t>>& slots) const {
    const PrimeModulus p = *prime_;
    std::vector<std::vector<Residue>> sets;
    for (std::size_t i = 0; i < b.n; ++i) {
      const auto& idx = slots[b.repeated ? 0 : i];
      std::vector<Residue> set;
      for (auto x : idx) set.emplace_back(static_cast<std::int64_t>(x), p);
      sets.push_back(std::move(set));
    }
    ZpFamily family(std::move(sets));
    VerificationReport r;
    switch (c_.target) {
      case SweepTarget::conjecture: r = verify_conjecture(family, b.kind, c_.engine); break;
      case SweepTarget::three_set: r = verify_three_set_theorem(family, c_.engine); break;
      case SweepTarget::even_cyclic: r = verify_even_cyclic_theorem(family, c_.engine); break;
      case SweepTarget::odd_linear: r = verify_odd_linear_theorem(family, c_.engine); break;
      case SweepTarget::corollary: r = corollary_report(p, family[0], c_.engine); break;
      default: throw InputError("target needs a lattice domain");
    }
    return r;
  }

  VerificationReport evaluate_lattice(const Block& b, const std::vector<std::vector<std::size_t>>& slots) const {
    auto to_points = [&](const std::vector<std::size_t>& idx) {
      std::vector<LatticePoint> set;
      for (auto x : idx) set.push_back(window_.point(x));
      return set;
    };
    switch (c_.target) {
      case SweepTarget::conjecture: {
        std::vector<std::vector<LatticePoint>> sets;
        for (std::size_t i = 0; i < b.n; ++i) sets.push_back(to_points(slots[b.repeated ? 0 : i]));
        return verify_conjecture(LatticeFamily(std::move(sets)), b.kind, c_.engine);
      }
      case SweepTarget::torsion_free: return verify_torsion_free(to_points(slots[0]), b.n, b.kind, c_.engine);
      case SweepTarget::equality: return equality_report(to_points(slots[0]), b.n, b.kind, c_.engine);
      default: throw InputError("target needs a prime field");
    }
  }

  const SweepConfig& c_;
  std::optional<PrimeModulus> prime_;
  LatticeWindow window_;
  std::size_t universe_ = 0;
};

}  // namespace

SweepSummary run_sweep(const SweepConfig& config, const ReportSink& sink) {
  if (config.cap == 0) throw InputError("cap must be positive");
  const auto blocks = plan(config);
  const Evaluator eval(config);
  const std::size_t universe = eval.universe();
  const unsigned threads = std::max(1U, config.threads);

  SweepSummary summary;
  std::uint64_t families_total = 0;
  std::uint64_t emitted = 0;
  auto emit = [&](const VerificationReport& r) {
    summary.count(r);
    if (r.verdict == Verdict::error && r.note.rfind("resource cap", 0) == 0) summary.resource_hit = true;
    sink(r);
    ++emitted;
  };
  auto full = [&] { return config.instance_limit != 0 && emitted >= config.instance_limit; };

  for (std::size_t bi = 0; bi < blocks.size() && !summary.truncated; ++bi) {
    const Block& b = blocks[bi];
    ++summary.blocks;
    if (!b.skip_reason.empty()) {
      if (full()) {
        summary.truncated = true;
        break;
      }
      VerificationReport r;
      r.domain = std::holds_alternative<PrimeModulus>(config.domain)
                     ? "F" + std::to_string(std::get<PrimeModulus>(config.domain).value())
                     : (std::get<LatticeWindow>(config.domain).dim == 1
                            ? "Z"
                            : "Z^" + std::to_string(std::get<LatticeWindow>(config.domain).dim));
      r.check = std::string(check_name(config.target, b.kind));
      r.family = "n=" + std::to_string(b.n);
      r.verdict = Verdict::skipped;
      r.note = b.skip_reason;
      emit(r);
      continue;
    }
    const std::size_t slot_count = b.repeated ? 1 : b.n;
    std::vector<std::uint64_t> per_slot(slot_count);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < slot_count; ++i) {
      per_slot[i] = binomial_saturating(universe, b.sizes[i]);
      count = mul_saturating(count, per_slot[i]);
    }
    if (count == 0) continue;
    const bool exhaustive = count <= config.cap;
    const std::uint64_t todo = exhaustive ? count : config.cap;
    if (!exhaustive) {
      ++summary.sampled_blocks;
      summary.exhaustive = false;
    }
    const std::uint64_t block_seed = splitmix64(config.seed ^ splitmix64(bi));

    auto slots_of = [&](std::uint64_t i) {
      std::vector<std::vector<std::size_t>> slots(slot_count);
      if (exhaustive) {
        for (std::size_t k = slot_count; k-- > 0;) {
          slots[k] = unrank_subset(i % per_slot[k], universe, b.sizes[k]);
          i /= per_slot[k];
        }
      } else {
        std::mt19937_64 rng(splitmix64(block_seed + i));
        for (std::size_t k = 0; k < slot_count; ++k) slots[k] = sample_subset(rng, universe, b.sizes[k]);
      }
      return slots;
    };

    constexpr std::uint64_t chunk = 4096;
    std::vector<VerificationReport> out;
    for (std::uint64_t start = 0; start < todo; start += chunk) {
      std::uint64_t len = std::min(chunk, todo - start);
      if (config.instance_limit != 0) {
        const auto room = config.instance_limit - std::min(config.instance_limit, emitted);
        if (room < len) {
          len = room;
          summary.truncated = true;
        }
      }
      out.assign(len, {});
      const unsigned stride = len < 64 ? 1 : threads;
      auto work = [&](unsigned tid) {
        for (std::uint64_t j = tid; j < len; j += stride) out[j] = eval.evaluate(b, slots_of(start + j));
      };
      if (stride == 1) {
        work(0);
      } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
      }
      for (const auto& r : out) emit(r);
      families_total += len;
      if (summary.truncated) break;
    }
  }

  std::string cov;
  if (summary.exhaustive) {
    cov = "exhaustive: " + std::to_string(families_total) + " families in " + std::to_string(summary.blocks) +
          " of " + std::to_string(blocks.size()) + " blocks";
  } else {
    cov = "sampled: " + std::to_string(summary.sampled_blocks) + " of " + std::to_string(summary.blocks) +
          " blocks visited (" + std::to_string(blocks.size()) + " planned) drew up to " + std::to_string(config.cap) + " families each (seed " + std::to_string(config.seed) +
          "); " + std::to_string(families_total) + " families evaluated";
  }
  if (summary.truncated) cov += "; stopped at the instance limit of " + std::to_string(config.instance_limit);
  if (summary.resource_hit) cov += "; some instances hit a resource cap";
  summary.coverage = std::move(cov);
  return summary;
}

}  // namespace rsum
