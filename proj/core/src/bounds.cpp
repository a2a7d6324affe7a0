#include "rsum/bounds.hpp"

#include <numeric>

#include "rsum/errors.hpp"

namespace rsum {

std::string_view to_string(BoundKind kind) noexcept {
  switch (kind) {
    case BoundKind::conjecture_linear: return "conjecture-L";
    case BoundKind::conjecture_cyclic: return "conjecture-C";
    case BoundKind::three_set_linear: return "three-set-L";
    case BoundKind::even_cyclic: return "even-C";
    case BoundKind::odd_linear: return "odd-L";
    case BoundKind::torsion_free_linear: return "torsion-free-L";
    case BoundKind::torsion_free_cyclic: return "torsion-free-C";
    case BoundKind::anr_pair: return "anr-pair";
  }
  return "?";
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::equality: return "equality";
    case Verdict::violated: return "violated";
    case Verdict::skipped: return "skipped";
    case Verdict::error: return "error";
  }
  return "?";
}

std::string_view to_string(EqualityClass c) noexcept {
  switch (c) {
    case EqualityClass::ap_equality: return "ap-equality";
    case EqualityClass::exceptional_k3n5: return "exceptional-k3n5";
    case EqualityClass::strict: return "strict";
    case EqualityClass::unexpected_equality: return "unexpected-equality";
    case EqualityClass::missing_ap_equality: return "missing-ap-equality";
  }
  return "?";
}

std::int64_t eval_bound(const BoundFormula& f) {
  const auto n = static_cast<std::int64_t>(f.sizes.size());
  const auto total = static_cast<std::int64_t>(std::accumulate(f.sizes.begin(), f.sizes.end(), std::size_t{0}));
  const std::int64_t parity = n % 2;  // {n}_2
  const std::int64_t sign = parity ? -1 : 1;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw InputError(std::string(to_string(f.kind)) + " bound needs " + what);
  };
  std::int64_t raw = 0;
  switch (f.kind) {
    case BoundKind::conjecture_linear:
    case BoundKind::torsion_free_linear:
      need(n >= 2, "n >= 2");
      raw = total - 2 * n + 1 + parity;
      break;
    case BoundKind::conjecture_cyclic:
    case BoundKind::torsion_free_cyclic:
      need(n >= 2, "n >= 2");
      raw = total - 2 * n + sign * (1 + parity);
      break;
    case BoundKind::three_set_linear:
      need(n == 3, "exactly three sizes");
      raw = total - 4;
      break;
    case BoundKind::even_cyclic:
      need(n >= 2 && parity == 0, "an even n");
      raw = total - 2 * n + 1;
      break;
    case BoundKind::odd_linear:
      need(parity == 1, "an odd n");
      raw = total - 2 * n + 2;
      break;
    case BoundKind::anr_pair:
      need(n == 2, "exactly two sizes");
      raw = total - 2;
      break;
  }
  return f.torsion.min_with(raw);
}

Verdict judge(std::size_t actual, std::int64_t bound) noexcept {
  const auto a = static_cast<std::int64_t>(actual);
  if (a < clamp_bound(bound)) return Verdict::violated;
  if (bound > 0 && a == bound) return Verdict::equality;
  return Verdict::holds;
}

namespace {

using Clock = std::chrono::steady_clock;

template <class E>
std::vector<std::string> element_strings(const std::vector<E>& elements) {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(rsum::to_string(e));
  return out;
}

template <class E>
VerificationReport base_report(const SetFamily<E>& family, std::string check) {
  VerificationReport r;
  r.domain = domain_label(family);
  r.check = std::move(check);
  r.family = to_string(family);
  return r;
}

void finish(VerificationReport& r, Clock::time_point start) {
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

bool all_equal(const std::vector<std::size_t>& v) {
  return std::all_of(v.begin(), v.end(), [&](auto s) { return s == v.front(); });
}

template <class E>
VerificationReport compare(VerificationReport r, const SumsetResult<E>& s, std::int64_t bound) {
  r.bound = bound;
  r.actual = s.cardinality();
  r.verdict = judge(s.cardinality(), bound);
  r.witness = element_strings(s.elements);
  return r;
}

}  // namespace

template <class E>
VerificationReport verify_conjecture(const SetFamily<E>& family, SumsetKind kind, const EngineOptions& options) {
  const auto start = Clock::now();
  const bool linear = kind == SumsetKind::linear;
  if (!linear && kind != SumsetKind::cyclic) throw InputError("conjecture check needs kind linear or cyclic");
  auto r = base_report(family, linear ? "conjecture-L" : "conjecture-C");
  const auto sizes = family.sizes();
  if (family.size() < 2 || std::any_of(sizes.begin(), sizes.end(), [](auto s) { return s < 2; })) {
    r.note = "needs n > 1 and every |A_i| > 1";
    finish(r, start);
    return r;
  }
  const BoundFormula f{linear ? BoundKind::conjecture_linear : BoundKind::conjecture_cyclic, sizes,
                       torsion_of(family)};
  r = compare(std::move(r), compute_sumset(family, kind, options), eval_bound(f));
  finish(r, start);
  return r;
}

template VerificationReport verify_conjecture(const SetFamily<Residue>&, SumsetKind, const EngineOptions&);
template VerificationReport verify_conjecture(const SetFamily<LatticePoint>&, SumsetKind, const EngineOptions&);

VerificationReport verify_three_set_theorem(const ZpFamily& family, const EngineOptions& options) {
  const auto start = Clock::now();
  auto r = base_report(family, "three-set-L");
  const auto sizes = family.sizes();
  if (sizes.size() != 3) {
    r.note = "needs exactly three sets";
  } else if (sizes[0] < 2 || sizes[2] < 2) {
    r.note = "needs |A_1|, |A_3| >= 2";
  } else if (sizes[1] != sizes[0] && sizes[1] != sizes[0] + 1) {
    r.note = "needs |A_2| - |A_1| in {0, 1}";
  } else {
    const BoundFormula f{BoundKind::three_set_linear, sizes, torsion_of(family)};
    r = compare(std::move(r), linear_restricted_sumset(family, options), eval_bound(f));
  }
  finish(r, start);
  return r;
}

VerificationReport verify_even_cyclic_theorem(const ZpFamily& family, const EngineOptions& options) {
  const auto start = Clock::now();
  auto r = base_report(family, "even-C");
  const auto sizes = family.sizes();
  const auto n = static_cast<std::int64_t>(sizes.size());
  const auto total = static_cast<std::int64_t>(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}));
  const auto p = static_cast<std::int64_t>(torsion_of(family).value());
  if (n % 2 != 0) {
    r.note = "needs an even number of sets";
  } else if (!all_equal(sizes) || sizes.front() < 2) {
    r.note = "needs equal sizes >= 2";
  } else if (!(p > total - 2 * n)) {
    r.note = "needs p > sum|A_i| - 2n";
  } else {
    const BoundFormula f{BoundKind::even_cyclic, sizes, torsion_of(family)};
    const auto cyclic = cyclic_restricted_sumset(family, options);
    const auto linear = linear_restricted_sumset(family, options);
    r = compare(std::move(r), cyclic, eval_bound(f));
    if (linear.cardinality() < cyclic.cardinality()) {
      r.verdict = Verdict::violated;
      r.note = "|L| = " + std::to_string(linear.cardinality()) + " < |C|";
    }
  }
  finish(r, start);
  return r;
}

VerificationReport verify_odd_linear_theorem(const ZpFamily& family, const EngineOptions& options) {
  const auto start = Clock::now();
  auto r = base_report(family, "odd-L");
  const auto sizes = family.sizes();
  const auto n = static_cast<std::int64_t>(sizes.size());
  const auto total = static_cast<std::int64_t>(std::accumulate(sizes.begin(), sizes.end(), std::size_t{0}));
  const auto p = static_cast<std::int64_t>(torsion_of(family).value());
  if (n % 2 == 0 || n < 3) {
    r.note = "needs an odd number of sets, at least three";
  } else if (!all_equal(sizes) || sizes.front() < 2) {
    r.note = "needs equal sizes >= 2";
  } else if (!(p > total - 2 * n + 1)) {
    r.note = "needs p > sum|A_i| - 2n + 1";
  } else {
    const BoundFormula f{BoundKind::odd_linear, sizes, torsion_of(family)};
    r = compare(std::move(r), linear_restricted_sumset(family, options), eval_bound(f));
  }
  finish(r, start);
  return r;
}

VerificationReport verify_torsion_free(const std::vector<LatticePoint>& set, std::size_t n, SumsetKind kind,
                                       const EngineOptions& options) {
  const auto start = Clock::now();
  const bool linear = kind == SumsetKind::linear;
  if (!linear && kind != SumsetKind::cyclic) throw InputError("torsion-free check needs kind linear or cyclic");
  if (n == 0) throw InputError("n must be positive");
  const auto family = LatticeFamily::repeated(set, n);
  auto r = base_report(family, linear ? "torsion-free-L" : "torsion-free-C");
  if (set.size() < 2 || n < 2) {
    r.note = "needs |A| >= 2 and n >= 2";
  } else {
    const BoundFormula f{linear ? BoundKind::torsion_free_linear : BoundKind::torsion_free_cyclic, family.sizes(),
                         TorsionBound::infinite()};
    r = compare(std::move(r), compute_sumset(family, kind, options), eval_bound(f));
  }
  finish(r, start);
  return r;
}

EqualityOutcome classify_equality(const std::vector<LatticePoint>& set, std::size_t n, SumsetKind kind,
                                  const EngineOptions& options) {
  const bool linear = kind == SumsetKind::linear;
  if (!linear && kind != SumsetKind::cyclic) throw InputError("equality classification needs linear or cyclic");
  if (set.size() < 3 || n < 3) throw InputError("equality classification needs |A| >= 3 and n > 2");
  const auto family = LatticeFamily::repeated(set, n);
  const BoundFormula f{linear ? BoundKind::torsion_free_linear : BoundKind::torsion_free_cyclic, family.sizes(),
                       TorsionBound::infinite()};
  EqualityOutcome out;
  out.bound = eval_bound(f);
  out.actual = compute_sumset(family, kind, options).cardinality();
  out.is_ap = is_arithmetic_progression(family[0]).is_ap;
  const bool equal = static_cast<std::int64_t>(out.actual) == out.bound;
  const bool exceptional = !linear && set.size() == 3 && n == 5;
  if (equal) {
    if (out.is_ap) out.cls = EqualityClass::ap_equality;
    else if (exceptional) out.cls = EqualityClass::exceptional_k3n5;
    else out.cls = EqualityClass::unexpected_equality;
  } else {
    out.cls = (out.is_ap || exceptional) ? EqualityClass::missing_ap_equality : EqualityClass::strict;
  }
  return out;
}

VerificationReport equality_report(const std::vector<LatticePoint>& set, std::size_t n, SumsetKind kind,
                                   const EngineOptions& options) {
  const auto start = Clock::now();
  if (n == 0) throw InputError("n must be positive");
  const auto family = LatticeFamily::repeated(set, n);
  auto r = base_report(family, kind == SumsetKind::linear ? "equality-L" : "equality-C");
  if (set.size() < 3 || n < 3) {
    r.note = "needs |A| >= 3 and n > 2";
  } else {
    const auto o = classify_equality(set, n, kind, options);
    r.bound = o.bound;
    r.actual = o.actual;
    r.note = std::string(to_string(o.cls));
    if (!o.consistent()) r.verdict = Verdict::violated;
    else r.verdict = o.cls == EqualityClass::strict ? Verdict::holds : Verdict::equality;
  }
  finish(r, start);
  return r;
}

std::optional<bool> verify_corollary_coverage(PrimeModulus p, const std::vector<Residue>& set,
                                              const EngineOptions& options) {
  if (set.size() < p.value() / 3 + 2) return std::nullopt;
  const auto l = linear_restricted_sumset(ZpFamily::repeated(set, 3), options);
  return l.cardinality() == p.value();
}

VerificationReport corollary_report(PrimeModulus p, const std::vector<Residue>& set, const EngineOptions& options) {
  const auto start = Clock::now();
  const auto family = ZpFamily::repeated(set, 3);
  auto r = base_report(family, "corollary");
  if (set.size() < p.value() / 3 + 2) {
    r.note = "needs |A| >= floor(p/3) + 2";
  } else {
    r = compare(std::move(r), linear_restricted_sumset(family, options), static_cast<std::int64_t>(p.value()));
  }
  finish(r, start);
  return r;
}

}  // namespace rsum
