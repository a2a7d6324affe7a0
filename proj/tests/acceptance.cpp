// Acceptance runner. Prints one PASS/FAIL line per criterion.
//
//   acceptance                 all criteria
//   acceptance --criterion N   only criterion N
//
// Exit status is 0 iff every selected criterion passes.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "rsum/bounds.hpp"
#include "rsum/exhaustive.hpp"
#include "rsum/format.hpp"
#include "rsum/poly.hpp"
#include "rsum/sumset.hpp"
#include "rsum/sweep.hpp"
#include "support/gen.hpp"

using namespace rsum;

namespace {

// All comparisons are exact; only the wall-clock budgets have slack.
constexpr double kBudgetSeconds[11] = {0, 10, 30, 60, 60, 600, 600, 600, 300, 60, 60};

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::size_t ap_linear(std::int64_t n, std::int64_t k) { return static_cast<std::size_t>(n * k - 2 * n + 1 + n % 2); }

std::size_t ap_cyclic(std::int64_t n, std::int64_t k) {
  return static_cast<std::size_t>(n * k - 2 * n + (n % 2 ? -1 : 1) * (1 + n % 2));
}

Outcome ap_formulas() {
  Outcome o;
  int cells = 0, bad = 0;
  for (std::int64_t k = 2; k <= 8; ++k) {
    std::vector<std::int64_t> a;
    for (std::int64_t i = 0; i < k; ++i) a.push_back(i);
    for (std::int64_t n = 2; n <= 8; ++n) {
      const auto f = LatticeFamily::repeated(make_int_set(a), static_cast<std::size_t>(n));
      ++cells;
      if (linear_restricted_sumset(f).cardinality() != ap_linear(n, k)) ++bad;
      if (k >= 3) {
        ++cells;
        if (cyclic_restricted_sumset(f).cardinality() != ap_cyclic(n, k)) ++bad;
      }
    }
  }
  o.ok = bad == 0;
  o.detail = std::to_string(cells - bad) + "/" + std::to_string(cells) + " cardinalities match";
  return o;
}

Outcome l_identities() {
  Outcome o;
  int checks = 0, bad = 0;
  for (std::size_t n = 2; n <= 12; n += 2) {
    ++checks;
    if (l_transform(cycle_polynomial(n)) != UniPoly::monomial(n / 2, 2)) ++bad;
  }
  for (std::size_t n = 3; n <= 11; n += 2) {
    ++checks;
    if (l_transform(path_polynomial(n)) != UniPoly::monomial((n - 1) / 2, 1)) ++bad;
  }
  for (std::uint32_t n : {5u, 7u, 9u}) {
    ++checks;
    if (!l_recursion_check(n).holds) ++bad;
  }
  o.ok = bad == 0;
  o.detail = std::to_string(checks - bad) + "/" + std::to_string(checks) + " polynomial identities";
  return o;
}

Outcome lemma_identity() {
  Outcome o;
  int bad = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    testing::Gen g(0x1e77a, i);
    const auto vars = static_cast<std::size_t>(g.range(1, 5));
    const auto k = static_cast<std::uint32_t>(g.range(1, 4));
    const auto top = std::min<std::int64_t>(6, static_cast<std::int64_t>(k * vars));
    const auto deg = static_cast<std::uint32_t>(g.range(0, top));
    if (!l_identity_check(g.homogeneous(vars, deg), k).holds) ++bad;
  }
  o.ok = bad == 0;
  o.detail = std::to_string(200 - bad) + "/200 random polynomials";
  return o;
}

MultiPoly anr_polynomial() {
  const auto x1 = MultiPoly::variable(3, 0), x2 = MultiPoly::variable(3, 1), x3 = MultiPoly::variable(3, 2);
  return (x1 - x2) * (x2 - x3);
}

Outcome closed_forms() {
  Outcome o;
  int checks = 0, bad = 0;
  const auto anr = anr_polynomial();
  for (std::uint32_t k1 = 1; k1 <= 5; ++k1) {
    for (std::uint32_t k2 = 1; k2 <= 5; ++k2) {
      for (std::uint32_t k3 = 1; k3 <= 5; ++k3) {
        ++checks;
        if (coeff_of_product_with_linear_power(anr, {k1, k2, k3}) != anr_coefficient(k1, k2, k3)) ++bad;
      }
    }
  }
  for (std::uint32_t n = 2; n <= 8; ++n) {
    const auto poly = n % 2 ? path_polynomial(n) : cycle_polynomial(n);
    for (std::uint32_t k = 1; k <= 5; ++k) {
      if (n % 2 && n < 3) continue;
      if (k * n < poly.degree()) continue;
      ++checks;
      const auto extracted = coeff_of_product_with_linear_power(poly, Exponents(n, k));
      const auto closed = n % 2 ? odd_path_coefficient(n, k) : even_cycle_coefficient(n, k);
      if (extracted != closed) ++bad;
    }
  }
  o.ok = bad == 0;
  o.detail = std::to_string(checks - bad) + "/" + std::to_string(checks) + " coefficients agree";
  return o;
}

Outcome exhaustive_summary(std::uint32_t p, ExhaustiveCheck check, const std::vector<SizePattern>& patterns,
                           std::uint64_t& covered, std::uint64_t& violated) {
  const auto r = exhaustive_check(p, check, patterns);
  covered += r.covered;
  violated += r.violated;
  Outcome o;
  if (r.violated) {
    o.ok = false;
    o.detail = "p=" + std::to_string(p) + " " + std::string(to_string(check)) + " " +
               masks_to_string(r.violations.front().masks);
  }
  return o;
}

Outcome three_set() {
  std::uint64_t covered = 0, violated = 0;
  Outcome o;
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto r = exhaustive_summary(p, ExhaustiveCheck::three_set, three_set_patterns(p), covered, violated);
    if (!r.ok && o.ok) o = r;
  }
  o.detail = std::to_string(covered) + " triples, " + std::to_string(violated) + " violations" +
             (o.detail.empty() ? "" : "; first " + o.detail);
  return o;
}

Outcome corollary() {
  Outcome o;
  std::uint64_t checked = 0, failed = 0;
  for (std::int64_t pv : {2, 3, 5, 7, 11, 13}) {
    const PrimeModulus p(pv);
    const std::size_t min_size = static_cast<std::size_t>(pv / 3 + 2);
    for (std::size_t s = min_size; s <= static_cast<std::size_t>(pv); ++s) {
      for (auto mask : subsets_of_size(static_cast<std::uint32_t>(pv), s)) {
        std::vector<Residue> set;
        for (std::int64_t u = 0; u < pv; ++u) {
          if (mask >> u & 1) set.emplace_back(u, p);
        }
        const auto covers = verify_corollary_coverage(p, set);
        ++checked;
        if (!covers.value_or(false)) {
          ++failed;
          if (o.detail.empty()) o.detail = "; first p=" + std::to_string(pv) + " " + set_to_string(set);
        }
      }
    }
  }
  o.ok = failed == 0;
  o.detail = std::to_string(checked) + " sets, " + std::to_string(failed) + " failures" + o.detail;
  return o;
}

Outcome even_odd() {
  std::uint64_t covered = 0, violated = 0;
  Outcome o;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (std::size_t n : {2u, 4u}) {
      const auto r = exhaustive_summary(p, ExhaustiveCheck::even_cyclic, even_cyclic_patterns(p, n), covered, violated);
      if (!r.ok && o.ok) o = r;
    }
    for (std::size_t n : {3u, 5u}) {
      const auto r = exhaustive_summary(p, ExhaustiveCheck::odd_linear, odd_linear_patterns(p, n), covered, violated);
      if (!r.ok && o.ok) o = r;
    }
  }
  o.detail = std::to_string(covered) + " families, " + std::to_string(violated) + " violations" +
             (o.detail.empty() ? "" : "; first " + o.detail);
  return o;
}

Outcome equality() {
  Outcome o;
  std::uint64_t checked = 0, wrong = 0, exceptional_bad = 0;
  std::map<std::string, std::uint64_t> cells;
  for (std::size_t k = 3; k <= 5; ++k) {
    for (auto mask : subsets_of_size(13, k)) {
      std::vector<std::int64_t> values;
      for (std::int64_t u = 0; u <= 12; ++u) {
        if (mask >> u & 1) values.push_back(u);
      }
      const auto set = make_int_set(values);
      for (std::size_t n = 3; n <= 6; ++n) {
        for (auto kind : {SumsetKind::linear, SumsetKind::cyclic}) {
          const auto r = classify_equality(set, n, kind);
          ++checked;
          if (!r.consistent()) {
            ++wrong;
            ++cells["k=" + std::to_string(k) + " n=" + std::to_string(n) + " " + std::string(to_string(kind))];
          }
          if (k == 3 && n == 5 && kind == SumsetKind::cyclic && r.actual != 3) ++exceptional_bad;
        }
      }
    }
  }
  o.ok = wrong == 0 && exceptional_bad == 0;
  std::ostringstream d;
  d << checked << " instances, " << wrong << " misclassified, " << exceptional_bad << " with |5°A| != 3";
  for (const auto& [cell, count] : cells) d << "; " << cell << ": " << count;
  o.detail = d.str();
  return o;
}

Outcome engine_soundness() {
  Outcome o;
  constexpr SumsetKind kinds[] = {SumsetKind::plain, SumsetKind::distinct, SumsetKind::linear, SumsetKind::cyclic};
  const std::int64_t primes[] = {2, 3, 5, 7, 11, 13, 31, 101};
  int bad = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    testing::Gen g(0x50a1d, i);
    const auto n = static_cast<std::size_t>(g.range(1, 6));
    auto compare = [&](const auto& f) {
      for (auto k : kinds) {
        if (compute_sumset(f, k).elements != brute_force_oracle(f, k).elements) {
          ++bad;
          if (o.detail.empty()) o.detail = "; first " + to_string(f) + " " + std::string(to_string(k));
        }
      }
    };
    switch (i % 3) {
      case 0: compare(g.zp_family(PrimeModulus(primes[g.range(0, 7)]), n, 6)); break;
      case 1: compare(g.int_family(n, 6, -40, 40)); break;
      default: compare(g.lattice_family(std::min<std::size_t>(n, 4), 2, 5, 4)); break;
    }
  }
  o.ok = bad == 0;
  o.detail = std::to_string(500 * 4 - bad) + "/2000 sumsets equal" + o.detail;
  return o;
}

std::string sweep_bytes(unsigned threads) {
  SweepConfig c;
  c.target = SweepTarget::conjecture;
  c.domain = PrimeModulus(7);
  c.n_min = 2;
  c.n_max = 4;
  c.size_min = 2;
  c.size_max = 3;
  c.cap = 500;
  c.seed = 0xdec0de;
  c.threads = threads;
  std::string out;
  const auto summary = run_sweep(c, [&](const VerificationReport& r) { out += format_record(r, ReportFormat::jsonl); });
  out += format_summary(summary, ReportFormat::jsonl);
  return out;
}

Outcome determinism() {
  const auto a = sweep_bytes(1), b = sweep_bytes(1), c = sweep_bytes(3);
  Outcome o;
  o.ok = a == b && a == c && !a.empty();
  o.detail = std::to_string(a.size()) + " bytes, reruns " + (a == b ? "identical" : "differ") + ", threaded run " +
             (a == c ? "identical" : "differs");
  return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> list = {
      {"AP cardinality formulas", ap_formulas},
      {"L-transform identities and recursion", l_identities},
      {"falling-factorial coefficient identity", lemma_identity},
      {"closed-form coefficients vs extraction", closed_forms},
      {"three-set bound, exhaustive p<=7", three_set},
      {"corollary coverage, exhaustive p<=13", corollary},
      {"even-C and odd-L bounds, exhaustive p<=11", even_odd},
      {"equality characterization over {0..12}", equality},
      {"DP matches brute-force oracle", engine_soundness},
      {"seeded sweep is byte-identical", determinism},
  };
  return list;
}

bool run_one(int index) {
  const auto& [name, fn] = criteria()[static_cast<std::size_t>(index - 1)];
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_budget = secs < kBudgetSeconds[index];
  const bool pass = o.ok && in_budget;
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << secs;
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << index << "  " << name << "  (" << o.detail << "; "
            << t.str() << " s of " << kBudgetSeconds[index] << " s" << (in_budget ? "" : ", over budget") << ")\n"
            << std::flush;
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const int n = std::atoi(argv[++i]);
      if (n < 1 || n > 10) {
        std::cerr << "criterion must be in 1..10\n";
        return 2;
      }
      selected.push_back(n);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (selected.empty()) {
    for (int n = 1; n <= 10; ++n) selected.push_back(n);
  }
  bool all = true;
  for (int n : selected) all = run_one(n) && all;
  return all ? 0 : 1;
}
