#include "rsum_cli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>

#include "rsum/bounds.hpp"
#include "rsum/errors.hpp"
#include "rsum/exhaustive.hpp"
#include "rsum/format.hpp"
#include "rsum/poly.hpp"
#include "rsum/sumset.hpp"
#include "rsum/sweep.hpp"
#include "rsum_cli/literal.hpp"

namespace rsum::cli {

namespace {

struct Options {
  // domain
  std::int64_t zp = 0;
  bool integer = false;
  std::size_t dim = 1;
  std::string window = "0:12";
  // families
  std::string family;
  std::string kind = "linear";
  std::string n = "";
  std::string sizes = "";
  bool repeated = false;
  // identities
  std::uint32_t poly_n_max = 12;
  std::uint32_t coeff_n_max = 8;
  std::uint32_t k_max = 5;
  std::uint32_t samples = 200;
  // runs
  std::string theorem;
  std::string target = "conjecture";
  std::uint64_t seed = SweepConfig{}.seed;
  std::uint64_t cap = 0;
  std::uint64_t limit = 0;
  unsigned threads = 1;
  bool oracle = false;
  std::string out;
  std::string format;
};

ReportFormat report_format(const std::string& name, ReportFormat fallback) {
  if (name.empty()) return fallback;
  auto f = parse_report_format(name);
  if (!f) throw InputError("unknown format \"" + name + "\"; expected text or jsonl");
  return *f;
}

SumsetKind sumset_kind(const std::string& name) {
  auto k = parse_sumset_kind(name);
  if (!k) throw InputError("unknown kind \"" + name + "\"; expected plain, distinct, linear or cyclic");
  return *k;
}

std::vector<SumsetKind> kind_list(const std::string& text) {
  std::vector<SumsetKind> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!part.empty()) out.push_back(sumset_kind(part));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw InputError("no kinds given");
  return out;
}

std::pair<std::size_t, std::size_t> size_range(const std::string& text, std::size_t lo, std::size_t hi) {
  if (text.empty()) return {lo, hi};
  auto [a, b] = parse_range(text);
  if (a < 0 || b < 0) throw InputError("ranges must be nonnegative");
  return {static_cast<std::size_t>(a), static_cast<std::size_t>(b)};
}

ZpFamily zp_family(PrimeModulus p, const std::vector<RawSet>& raw) {
  std::vector<std::vector<Residue>> sets;
  for (const auto& s : raw) {
    std::vector<Residue> set;
    for (const auto& pt : s) {
      if (pt.size() != 1) throw InputError("tuples are not elements of F_p");
      set.emplace_back(pt[0], p);
    }
    sets.push_back(std::move(set));
  }
  return ZpFamily(std::move(sets));
}

LatticeFamily lattice_family(std::size_t dim, const std::vector<RawSet>& raw) {
  std::vector<std::vector<LatticePoint>> sets;
  for (const auto& s : raw) {
    std::vector<LatticePoint> set;
    for (const auto& pt : s) {
      if (pt.size() != dim) {
        throw InputError("element with " + std::to_string(pt.size()) + " coordinates in Z^" + std::to_string(dim));
      }
      set.emplace_back(pt);
    }
    sets.push_back(std::move(set));
  }
  return LatticeFamily(std::move(sets));
}

bool use_zp(const Options& o) {
  if (o.zp != 0 && o.integer) throw InputError("--zp and --int are exclusive");
  if (o.zp == 0 && !o.integer) throw InputError("choose a domain with --zp <p> or --int");
  if (o.integer && o.dim == 0) throw InputError("--dim must be positive");
  return o.zp != 0;
}

LatticeWindow lattice_window(const Options& o) {
  auto [lo, hi] = parse_range(o.window);
  if (hi < lo) throw InputError("empty window");
  return LatticeWindow{lo, hi, o.dim};
}

/// Records go to --out when given (relative paths land under RSUM_OUTPUT_DIR
/// if set), otherwise to `fallback`.
class RecordStream {
 public:
  RecordStream(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty()) return;
    std::filesystem::path target(path);
    if (const char* dir = std::getenv("RSUM_OUTPUT_DIR"); dir && *dir && target.is_relative()) {
      target = std::filesystem::path(dir) / target;
    }
    if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
    file_.open(target, std::ios::binary | std::ios::trunc);
    if (!file_) throw std::runtime_error("cannot open " + target.string() + " for writing");
    stream_ = &file_;
    path_ = target.string();
  }

  std::ostream& get() { return *stream_; }
  bool to_file() const { return !path_.empty(); }
  const std::string& path() const { return path_; }
  void finish() {
    stream_->flush();
    if (to_file() && !file_) throw std::runtime_error("write to " + path_ + " failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
  std::string path_;
};

template <class E>
std::vector<std::string> element_list(const std::vector<E>& elems) {
  std::vector<std::string> out;
  for (const auto& e : elems) out.push_back(to_string(e));
  return out;
}

std::string braces(const std::vector<std::string>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += ',';
    s += items[i];
  }
  return s + "}";
}

template <class E>
int enumerate_family(const SetFamily<E>& family, SumsetKind kind, const Options& o, std::ostream& out) {
  const auto result = compute_sumset(family, kind);
  const auto elems = element_list(result.elements);
  std::optional<bool> agrees;
  if (o.oracle) agrees = brute_force_oracle(family, kind).elements == result.elements;
  const auto f = report_format(o.format, ReportFormat::text);
  if (f == ReportFormat::jsonl) {
    nlohmann::ordered_json j;
    j["domain"] = domain_label(family);
    j["kind"] = std::string(to_string(kind));
    j["family"] = to_string(family);
    j["elements"] = elems;
    j["cardinality"] = elems.size();
    if (agrees) j["oracle_agrees"] = *agrees;
    out << j.dump() << '\n';
  } else {
    out << "domain: " << domain_label(family) << '\n'
        << "kind: " << to_string(kind) << '\n'
        << "family: " << to_string(family) << '\n'
        << "elements: " << braces(elems) << '\n'
        << "cardinality: " << elems.size() << '\n';
    if (agrees) out << "oracle: " << (*agrees ? "agrees" : "DISAGREES") << '\n';
  }
  return agrees.value_or(true) ? exit_ok : exit_violation;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const auto raw = parse_family_literal(o.family);
  const auto kind = sumset_kind(o.kind);
  if (use_zp(o)) return enumerate_family(zp_family(PrimeModulus(o.zp), raw), kind, o, out);
  return enumerate_family(lattice_family(o.dim, raw), kind, o, out);
}

// identities -------------------------------------------------------------

struct IdentityLine {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

MultiPoly random_homogeneous(std::mt19937_64& rng, std::size_t vars, std::uint32_t degree) {
  while (true) {
    MultiPoly p(vars);
    const auto terms = 1 + bounded_draw(rng, 6);
    for (std::uint64_t t = 0; t < terms; ++t) {
      Exponents e(vars, 0);
      for (std::uint32_t d = 0; d < degree; ++d) ++e[bounded_draw(rng, vars)];
      const auto c = static_cast<std::int64_t>(bounded_draw(rng, 19)) - 9;
      p.add_term(e, BigInt(c));
    }
    if (!(p == MultiPoly(vars))) return p;
  }
}

std::vector<IdentityLine> identity_lines(const Options& o) {
  std::vector<IdentityLine> lines;
  auto str = [](const BigInt& v) { return v.str(); };
  for (std::uint32_t n = 2; n <= o.poly_n_max; n += 2) {
    const auto lhs = l_transform(cycle_polynomial(n));
    const auto rhs = UniPoly::monomial(n / 2, 2);
    lines.push_back({"L(P_" + std::to_string(n) + ")", lhs == rhs, lhs.to_string(), rhs.to_string()});
  }
  for (std::uint32_t n = 3; n <= o.poly_n_max; n += 2) {
    const auto lhs = l_transform(path_polynomial(n));
    const auto rhs = UniPoly::monomial((n - 1) / 2);
    lines.push_back({"L(Q_" + std::to_string(n) + ")", lhs == rhs, lhs.to_string(), rhs.to_string()});
  }
  for (std::uint32_t n = 5; n + 1 <= o.poly_n_max; n += 2) {
    const auto r = l_recursion_check(n);
    lines.push_back({"L(P_" + std::to_string(n + 1) + ") = x L(Q_" + std::to_string(n) + ") + x^2 L(Q_" +
                         std::to_string(n - 2) + ")",
                     r.holds, r.cycle_side.to_string(), r.path_side.to_string()});
  }
  const auto q3 = path_polynomial(3);
  for (std::uint32_t a = 1; a <= o.k_max; ++a)
    for (std::uint32_t b = 1; b <= o.k_max; ++b)
      for (std::uint32_t c = 1; c <= o.k_max; ++c) {
        const auto closed = anr_coefficient(a, b, c);
        const auto extracted = coeff_of_product_with_linear_power(q3, {a, b, c});
        lines.push_back({"anr(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")",
                         closed == extracted, str(closed), str(extracted)});
      }
  for (std::uint32_t n = 2; n <= o.coeff_n_max; ++n) {
    const bool even = n % 2 == 0;
    if (!even && n < 3) continue;
    const auto poly = even ? cycle_polynomial(n) : path_polynomial(n);
    for (std::uint32_t k = 1; k <= o.k_max; ++k) {
      const auto closed = even ? even_cycle_coefficient(n, k) : odd_path_coefficient(n, k);
      const auto extracted = coeff_of_product_with_linear_power(poly, Exponents(n, k));
      lines.push_back({std::string(even ? "even_cycle(" : "odd_path(") + std::to_string(n) + "," +
                           std::to_string(k) + ")",
                       closed == extracted, str(closed), str(extracted)});
    }
  }
  for (std::uint32_t i = 0; i < o.samples; ++i) {
    std::mt19937_64 rng(splitmix64(o.seed + i));
    const auto vars = static_cast<std::size_t>(1 + bounded_draw(rng, 5));
    const auto k = static_cast<std::uint32_t>(1 + bounded_draw(rng, 4));
    const auto max_deg = std::min<std::uint32_t>(6, k * static_cast<std::uint32_t>(vars));
    const auto deg = static_cast<std::uint32_t>(bounded_draw(rng, max_deg + 1));
    const auto p = random_homogeneous(rng, vars, deg);
    const auto r = l_identity_check(p, k);
    lines.push_back({"lemma(" + p.to_string() + ", k=" + std::to_string(k) + ")", r.holds, str(r.extracted),
                     str(r.transformed)});
  }
  return lines;
}

int cmd_identities(const Options& o, std::ostream& out) {
  if (o.poly_n_max > 16 || o.coeff_n_max > 10 || o.k_max > 8) throw InputError("identity ranges exceed caps");
  RecordStream rec(o.out, out);
  const auto f = report_format(o.format, ReportFormat::text);
  std::size_t failed = 0;
  const auto lines = identity_lines(o);
  for (const auto& l : lines) {
    if (!l.pass) ++failed;
    if (f == ReportFormat::jsonl) {
      nlohmann::ordered_json j;
      j["identity"] = l.name;
      j["pass"] = l.pass;
      j["lhs"] = l.lhs;
      j["rhs"] = l.rhs;
      rec.get() << j.dump() << '\n';
    } else {
      rec.get() << (l.pass ? "pass  " : "FAIL  ") << l.name << "  " << l.lhs;
      if (!l.pass || l.lhs != l.rhs) rec.get() << "  vs  " << l.rhs;
      rec.get() << '\n';
    }
  }
  rec.finish();
  out << lines.size() - failed << " of " << lines.size() << " identity checks pass\n";
  return failed ? exit_violation : exit_ok;
}

// verify / sweep ---------------------------------------------------------

int exit_for(const SweepSummary& s) {
  if (s.violated) return exit_violation;
  if (s.resource_hit || s.truncated) return exit_resource;
  if (s.errors) return exit_input;
  return exit_ok;
}

int single_report(const VerificationReport& r, ReportFormat f, std::ostream& out) {
  out << format_record(r, f) << '\n';
  switch (r.verdict) {
    case Verdict::violated: return exit_violation;
    case Verdict::error: return exit_input;
    default: return exit_ok;
  }
}

std::optional<SweepTarget> theorem_target(const std::string& t) {
  if (t == "three-set") return SweepTarget::three_set;
  if (t == "even-cyclic") return SweepTarget::even_cyclic;
  if (t == "odd-linear") return SweepTarget::odd_linear;
  if (t == "conjecture") return SweepTarget::conjecture;
  if (t == "corollary") return SweepTarget::corollary;
  if (t == "torsion-free") return SweepTarget::torsion_free;
  if (t == "equality") return SweepTarget::equality;
  return std::nullopt;
}

int verify_literal(SweepTarget target, const Options& o, ReportFormat f, std::ostream& out) {
  const auto raw = parse_family_literal(o.family);
  const auto kind = sumset_kind(o.kind);
  if (use_zp(o)) {
    const PrimeModulus p(o.zp);
    const auto family = zp_family(p, raw);
    switch (target) {
      case SweepTarget::three_set: return single_report(verify_three_set_theorem(family), f, out);
      case SweepTarget::even_cyclic: return single_report(verify_even_cyclic_theorem(family), f, out);
      case SweepTarget::odd_linear: return single_report(verify_odd_linear_theorem(family), f, out);
      case SweepTarget::conjecture: return single_report(verify_conjecture(family, kind), f, out);
      case SweepTarget::corollary:
        if (family.size() != 1) throw InputError("corollary takes a single set");
        return single_report(corollary_report(p, family[0]), f, out);
      default: throw InputError("this theorem runs over Z^r; use --int");
    }
  }
  const auto family = lattice_family(o.dim, raw);
  if (target == SweepTarget::conjecture) return single_report(verify_conjecture(family, kind), f, out);
  if (target != SweepTarget::torsion_free && target != SweepTarget::equality) {
    throw InputError("this theorem runs over F_p; use --zp");
  }
  std::size_t n = family.size();
  if (n == 1) {
    if (o.n.empty()) throw InputError("give --n or repeat the set with xN");
    const auto [a, b] = parse_range(o.n);
    if (a != b || a < 1) throw InputError("--n must be a single positive value here");
    n = static_cast<std::size_t>(a);
  } else if (!family.is_uniform()) {
    throw InputError("this theorem takes one set repeated n times");
  }
  const auto& set = family[0];
  if (target == SweepTarget::torsion_free) return single_report(verify_torsion_free(set, n, kind), f, out);
  return single_report(equality_report(set, n, kind), f, out);
}

int verify_exhaustive(SweepTarget target, const Options& o, ReportFormat f, std::ostream& out) {
  const auto p = PrimeModulus(o.zp).value();
  const auto [smin, smax] = size_range(o.sizes, 2, p);
  std::vector<std::pair<ExhaustiveCheck, std::vector<SizePattern>>> runs;
  auto keep = [&](std::vector<SizePattern> pats) {
    std::erase_if(pats, [&](const SizePattern& s) {
      return std::any_of(s.begin(), s.end(), [&](std::size_t x) { return x < smin || x > smax; });
    });
    return pats;
  };
  std::string default_n = target == SweepTarget::odd_linear ? "3:5" : "2:4";
  const auto [nlo, nhi] = size_range(o.n, 0, 0);
  const auto n_range = o.n.empty() ? parse_range(default_n) : std::pair<std::int64_t, std::int64_t>(nlo, nhi);
  switch (target) {
    case SweepTarget::three_set: runs.push_back({ExhaustiveCheck::three_set, keep(three_set_patterns(p))}); break;
    case SweepTarget::even_cyclic:
      for (auto n = n_range.first; n <= n_range.second; ++n)
        runs.push_back({ExhaustiveCheck::even_cyclic, keep(even_cyclic_patterns(p, static_cast<std::size_t>(n)))});
      break;
    case SweepTarget::odd_linear:
      for (auto n = n_range.first; n <= n_range.second; ++n)
        runs.push_back({ExhaustiveCheck::odd_linear, keep(odd_linear_patterns(p, static_cast<std::size_t>(n)))});
      break;
    case SweepTarget::conjecture: {
      const auto kind = sumset_kind(o.kind);
      const auto check = kind == SumsetKind::cyclic ? ExhaustiveCheck::conjecture_cyclic
                                                    : ExhaustiveCheck::conjecture_linear;
      if (kind != SumsetKind::linear && kind != SumsetKind::cyclic) throw InputError("conjecture kinds: linear, cyclic");
      for (auto n = n_range.first; n <= n_range.second; ++n)
        runs.push_back({check, conjecture_patterns(p, static_cast<std::size_t>(n), smin, smax)});
      break;
    }
    default: break;
  }
  ExhaustiveOptions eo;
  eo.threads = o.threads;
  if (o.cap) eo.leaf_cap = o.cap;
  RecordStream rec(o.out, out);
  int code = exit_ok;
  for (const auto& [check, pats] : runs) {
    if (pats.empty()) continue;
    const auto r = exhaustive_check(p, check, pats, eo);
    rec.get() << format_exhaustive(p, check, r, f) << '\n';
    if (r.violated) code = exit_violation;
  }
  rec.finish();
  return code;
}

SweepConfig sweep_config(SweepTarget target, const Options& o, bool exhaustive_default) {
  SweepConfig c;
  c.target = target;
  if (use_zp(o)) {
    c.domain = PrimeModulus(o.zp);
  } else {
    c.domain = lattice_window(o);
  }
  const std::size_t universe = o.zp ? static_cast<std::size_t>(o.zp) : lattice_window(o).point_count();
  std::tie(c.n_min, c.n_max) = size_range(o.n, 2, 4);
  std::tie(c.size_min, c.size_max) = size_range(o.sizes, 2, std::min<std::size_t>(universe, 3));
  if (target == SweepTarget::equality || target == SweepTarget::torsion_free) {
    if (o.n.empty()) std::tie(c.n_min, c.n_max) = std::pair<std::size_t, std::size_t>{3, 6};
    if (o.sizes.empty()) std::tie(c.size_min, c.size_max) = std::pair<std::size_t, std::size_t>{3, 5};
  }
  if (target == SweepTarget::corollary && o.sizes.empty()) c.size_max = universe;
  c.kinds = kind_list(o.kind);
  c.repeated = o.repeated;
  c.seed = o.seed;
  c.cap = o.cap ? o.cap : (exhaustive_default ? 100'000'000ULL : 2'000ULL);
  c.instance_limit = o.limit;
  c.threads = o.threads;
  return c;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto target = theorem_target(o.theorem);
  if (!target) throw InputError("unknown theorem \"" + o.theorem + "\"");
  const auto f = report_format(o.format, ReportFormat::text);
  if (!o.family.empty()) return verify_literal(*target, o, f, out);
  const bool zp = use_zp(o);
  if (zp && o.zp < 64 &&
      (*target == SweepTarget::three_set || *target == SweepTarget::even_cyclic ||
       *target == SweepTarget::odd_linear || *target == SweepTarget::conjecture)) {
    return verify_exhaustive(*target, o, f, out);
  }
  Options adjusted = o;
  if (*target == SweepTarget::equality && o.kind == "linear") adjusted.kind = "linear,cyclic";
  const auto config = sweep_config(*target, adjusted, true);
  RecordStream rec(o.out, out);
  const auto summary = run_sweep(config, [&](const VerificationReport& r) {
    if (rec.to_file() || r.verdict == Verdict::violated || r.verdict == Verdict::error) {
      rec.get() << format_record(r, f) << '\n';
    }
  });
  if (rec.to_file()) rec.get() << format_summary(summary, f) << '\n';
  rec.finish();
  out << format_summary(summary, f) << '\n';
  return exit_for(summary);
}

int cmd_sweep(const Options& o, std::ostream& out) {
  const auto target = parse_sweep_target(o.target);
  if (!target) throw InputError("unknown target \"" + o.target + "\"");
  const auto f = report_format(o.format, ReportFormat::jsonl);
  Options adjusted = o;
  if (o.kind == "linear") adjusted.kind = "linear,cyclic";
  const auto config = sweep_config(*target, adjusted, false);
  RecordStream rec(o.out, out);
  const auto summary = run_sweep(config, [&](const VerificationReport& r) { rec.get() << format_record(r, f) << '\n'; });
  rec.get() << format_summary(summary, f) << '\n';
  rec.finish();
  if (rec.to_file()) out << format_summary(summary, ReportFormat::text) << "\nreport: " << rec.path() << '\n';
  return exit_for(summary);
}

void domain_flags(CLI::App* app, Options& o) {
  app->add_option("--zp", o.zp, "Work in F_p for this prime p");
  app->add_flag("--int", o.integer, "Work in Z^r");
  app->add_option("--dim", o.dim, "Lattice dimension r for --int")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Restricted sumsets L and C: enumeration, identities and theorem checks", "rsum"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "Compute one sumset");
  domain_flags(enumerate, o);
  enumerate->add_option("--kind", o.kind, "plain, distinct, linear or cyclic")->capture_default_str();
  enumerate->add_flag("--oracle", o.oracle, "Cross-check against brute-force enumeration");
  enumerate->add_option("--format", o.format, "text or jsonl");
  enumerate->add_option("family", o.family, "Family literal, e.g. \"{0,1,2}x3\"")->required();

  auto* identities = app.add_subcommand("identities", "Check the L-transform and coefficient identities");
  identities->add_option("--n-max", o.poly_n_max, "Largest n for L(P_n), L(Q_n)")->capture_default_str();
  identities->add_option("--coeff-n-max", o.coeff_n_max, "Largest n for closed-form coefficients")
      ->capture_default_str();
  identities->add_option("--k-max", o.k_max, "Largest k, k_i for closed-form coefficients")->capture_default_str();
  identities->add_option("--samples", o.samples, "Random polynomials for the falling-factorial identity")
      ->capture_default_str();
  identities->add_option("--seed", o.seed, "Seed for random polynomials");
  identities->add_option("--out", o.out, "Write per-check lines here");
  identities->add_option("--format", o.format, "text or jsonl");

  auto* verify = app.add_subcommand("verify", "Check one theorem on a family or exhaustively");
  domain_flags(verify, o);
  verify->add_option("--theorem", o.theorem,
                     "three-set, even-cyclic, odd-linear, conjecture, corollary, torsion-free or equality")
      ->required();
  verify->add_option("--kind", o.kind, "linear or cyclic")->capture_default_str();
  verify->add_option("--n", o.n, "n or a range A:B");
  verify->add_option("--sizes", o.sizes, "Set sizes as a range A:B");
  verify->add_option("--window", o.window, "Coordinate window lo:hi for --int")->capture_default_str();
  verify->add_option("--cap", o.cap, "Work cap");
  verify->add_option("--threads", o.threads)->capture_default_str();
  verify->add_option("--out", o.out, "Write every record here");
  verify->add_option("--format", o.format, "text or jsonl");
  verify->add_option("family", o.family, "Family literal; omit for an exhaustive run");

  auto* sweep = app.add_subcommand("sweep", "Run a seeded sweep and write a record per family");
  domain_flags(sweep, o);
  sweep->add_option("--target", o.target,
                    "conjecture, three-set, even-cyclic, odd-linear, corollary, torsion-free or equality")
      ->capture_default_str();
  sweep->add_option("--kind", o.kind, "Comma-separated kinds (default linear,cyclic)");
  sweep->add_option("--n", o.n, "n or a range A:B");
  sweep->add_option("--sizes", o.sizes, "Set sizes as a range A:B");
  sweep->add_option("--window", o.window, "Coordinate window lo:hi for --int")->capture_default_str();
  sweep->add_flag("--repeated", o.repeated, "Use one set in every slot");
  sweep->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  sweep->add_option("--cap", o.cap, "Families per block before sampling");
  sweep->add_option("--limit", o.limit, "Stop after this many records");
  sweep->add_option("--threads", o.threads)->capture_default_str();
  sweep->add_option("--out", o.out, "Report path (RSUM_OUTPUT_DIR prefixes relative paths)");
  sweep->add_option("--format", o.format, "jsonl or text");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "rsum: " << e.what() << '\n';
    return exit_input;
  }

  try {
    if (*enumerate) return cmd_enumerate(o, out);
    if (*identities) return cmd_identities(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*sweep) return cmd_sweep(o, out);
  } catch (const InputError& e) {
    err << "rsum: " << e.what() << '\n';
    return exit_input;
  } catch (const ResourceError& e) {
    err << "rsum: resource cap: " << e.what() << '\n';
    return exit_resource;
  } catch (const std::exception& e) {
    err << "rsum: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

}  // namespace rsum::cli
