#include "prymcalc/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <algorithm>
#include <future>
#include <iostream>
#include <sstream>

#include "prymcalc/errors.hpp"
#include "prymcalc/field.hpp"
#include "prymcalc/lines.hpp"
#include "prymcalc/pencil24.hpp"
#include "prymcalc/quartic_fuzz.hpp"
#include "prymcalc/symprod.hpp"
#include "prymcalc/transversality.hpp"

namespace prymcalc::cli {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> kCommands{"verify-lines", "verify-transversality", "verify-pencil24", "verify-intersection",
                                         "verify-quartic-fuzz", "all"};

Status from_bool(bool ok) { return ok ? Status::pass : Status::fail; }

template <class F>
CheckEntry timed(std::string id, std::string anchor, F&& body) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckEntry e{std::move(id), std::move(anchor), Status::fail, json::object(), 0};
  std::forward<F>(body)(e);
  e.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return e;
}

std::string label(int i) { return lines::all_lines()[static_cast<std::size_t>(i)].label; }

void lines_checks(std::vector<CheckEntry>& out) {
  using namespace lines;
  out.push_back(timed("lines-box-search-27", "exactly 27 classes with l.l = l.K = -1 in the integer box |a0| <= 3, |ai| <= 2", [](CheckEntry& e) {
    const auto found = lines_in_box(3, 2);
    bool all_known = true;
    for (const auto& c : found) all_known = all_known && find_line(c) >= 0;
    e.payload["count"] = found.size();
    e.payload["all_labelled"] = all_known;
    e.status = from_bool(found.size() == 27 && all_known);
  }));
  out.push_back(timed("lines-incidence-srg", "the incidence graph of the 27 lines is strongly regular (27,10,1,5)", [](CheckEntry& e) {
    const auto s = srg_parameters(incidence_graph());
    e.payload["n"] = s.n;
    e.payload["k"] = s.k;
    e.payload["lambda"] = s.lambda;
    e.payload["mu"] = s.mu;
    e.payload["regular"] = s.regular;
    e.status = from_bool(s.regular && s.n == 27 && s.k == 10 && s.lambda == 1 && s.mu == 5);
  }));
  out.push_back(timed("lines-weyl-group-order", "the reflections in the six simple roots generate W(E6) of order 51840 acting on the lines", [](CheckEntry& e) {
    const auto& w = weyl_group();
    bool preserves = true;
    for (const auto& g : w.elements) preserves = preserves && preserves_pairing(g);
    const bool transitive = w.orbits().size() == 1;
    e.payload["order"] = w.order();
    e.payload["transitive"] = transitive;
    e.payload["preserves_pairing"] = preserves;
    e.status = from_bool(w.order() == 51840 && transitive && preserves);
  }));
  out.push_back(timed("lines-stabilizer-orbits", "the stabilizer of a line has order 1920 and orbits of sizes 1, 10, 16 equal to its incidence classes", [](CheckEntry& e) {
    const auto& w = weyl_group();
    bool ok = true;
    for (int l = 0; l < kLines; ++l) {
      const auto s = stabilizer(w, l);
      const auto orbits = s.orbits();
      const auto f = classify_fiber(l);
      std::vector<std::vector<int>> classes{f.marked, f.meeting, f.skew};
      std::vector<std::vector<int>> sorted_orbits = orbits;
      std::sort(sorted_orbits.begin(), sorted_orbits.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
      for (auto& c : classes) std::sort(c.begin(), c.end());
      const bool match = sorted_orbits == classes;
      ok = ok && s.order() == 1920 && match;
      if (l == 0) {
        e.payload["line"] = label(l);
        e.payload["order"] = s.order();
        json sizes = json::array();
        for (const auto& o : sorted_orbits) sizes.push_back(o.size());
        e.payload["orbit_sizes"] = sizes;
        json meeting = json::array();
        for (int m : f.meeting) meeting.push_back(label(m));
        e.payload["meeting"] = meeting;
      }
    }
    e.payload["index"] = w.order() / 1920;
    e.payload["all_lines_match"] = ok;
    e.status = from_bool(ok);
  }));
  out.push_back(timed("lines-tritangent-pairs", "through every line pass 5 tritangent pairs, a perfect matching on its 10 neighbors", [](CheckEntry& e) {
    bool ok = true;
    for (int l = 0; l < kLines; ++l) {
      const auto pairs = tritangent_pairs(l);
      std::vector<int> covered;
      for (const auto& [m, n] : pairs) {
        ok = ok && incidence(l, m) && incidence(l, n) && incidence(m, n);
        covered.push_back(m);
        covered.push_back(n);
      }
      std::sort(covered.begin(), covered.end());
      ok = ok && pairs.size() == 5 && covered == classify_fiber(l).meeting;
      if (l == 0) {
        json table = json::array();
        for (const auto& [m, n] : pairs) table.push_back({label(m), label(n)});
        e.payload["a1"] = table;
      }
    }
    e.payload["all_lines_match"] = ok;
    e.status = from_bool(ok);
  }));
}

void transversality_checks(std::vector<CheckEntry>& out) {
  out.push_back(timed("section-polynomial", "d on the fiber over [1:0] is -16 alpha^2 - 32 alpha with nonzero linear term", [](CheckEntry& e) {
    const auto s = section_reducedness();
    const RationalDomain qq;
    const bool exact = s.poly == UPoly<Rational>(qq, {Rational(0), Rational(-32), Rational(-16)});
    e.payload["polynomial"] = s.poly.to_string("alpha");
    e.payload["linear"] = s.linear.to_string();
    e.payload["matches_direct"] = s.matches_direct;
    e.status = from_bool(s.passed() && exact);
  }));
  out.push_back(timed("resultant-transversality", "R(alpha) = Res(Delta_alpha, d_alpha) is not identically zero and vanishes at 0 to finite order", [](CheckEntry& e) {
    const auto r = resultant_R();
    const bool nonzero = !r.r.is_zero();
    e.payload["degree"] = r.degree();
    e.payload["degree_bound"] = r.degree_bound;
    e.payload["order_at_zero"] = nonzero ? r.order_at_zero() : -1;
    e.payload["vanishes_at_zero"] = r.r.coeff(0).is_zero();
    e.payload["cross_validated"] = r.cross_validated;
    e.status = from_bool(nonzero && r.r.coeff(0).is_zero() && r.cross_validated);
  }));
  out.push_back(timed("p0-smooth", "P_0 is smooth on P^1 x P^1", [](CheckEntry& e) {
    const auto c = p0_smoothness_certificate();
    e.payload["certificate"] = to_string(c.status);
    e.payload["strategy"] = c.strategy;
    e.payload["strategies_tried"] = c.strategies_tried;
    e.payload["resultant"] = c.resultant.to_string();
    e.status = c.status == CertificateStatus::smooth ? Status::pass : (c.inconclusive ? Status::inconclusive : Status::fail);
  }));
  out.push_back(timed("singular-controls-fail", "the certificate rejects two singular control forms", [](CheckEntry& e) {
    bool ok = true;
    json rows = json::array();
    for (const auto& ctl : singular_controls()) {
      const auto c = smoothness_certificate(ctl.form);
      json row;
      row["form"] = ctl.name;
      row["certificate"] = to_string(c.status);
      row["inconclusive"] = c.inconclusive;
      row["reason"] = c.reason;
      if (c.singular_point) row["singular_point"] = *c.singular_point;
      rows.push_back(row);
      ok = ok && c.status == CertificateStatus::fail;
    }
    e.payload["controls"] = rows;
    e.status = from_bool(ok);
  }));
}

void pencil_checks(const RunConfig& cfg, std::vector<CheckEntry>& out) {
  std::vector<std::future<CheckEntry>> jobs;
  for (auto p : cfg.primes) {
    for (auto seed : cfg.seeds) {
      jobs.push_back(std::async(std::launch::async, [p, seed] {
        return timed("pencil24-p" + std::to_string(p) + "-seed" + std::to_string(seed),
                     "exactly 24 members of a generic pencil of (3,4)-forms have a vertical bitangent", [&](CheckEntry& e) {
                       const auto r = run_pencil_trial(p, seed);
                       e.payload["prime"] = p;
                       e.payload["seed"] = seed;
                       e.payload["count"] = r.validated_count;
                       e.payload["rejections"] = r.rejections;
                       e.payload["raw_degree"] = r.raw_degree;
                       e.payload["squarefree_degree"] = r.squarefree_degree;
                       e.payload["extraneous_factors"] = r.extraneous_factors;
                       e.payload["extraneous_degree"] = r.extraneous_degree;
                       e.payload["infinity_validated"] = r.infinity.validated;
                       e.payload["witnesses_verified"] = r.all_witnesses_verified();
                       e.status = from_bool(r.validated_count == 24 && r.all_witnesses_verified());
                     });
      }));
    }
  }
  for (auto& j : jobs) out.push_back(j.get());
}

void intersection_checks(std::vector<CheckEntry>& out) {
  out.push_back(timed("intersection-product-240", "c14 . Delta2 on X^(4) of a genus-5 curve expands as printed and equals 240", [](CheckEntry& e) {
    const auto r = product_and_eval();
    e.payload["c14"] = class_c14().to_string();
    e.payload["delta2"] = class_delta2().to_string();
    e.payload["expansion"] = r.product.to_string();
    e.payload["expansion_matches"] = r.expansion_matches;
    e.payload["normalization"] = "x^(d-j) theta^j -> g!/(g-j)!";
    json table;
    for (int j = 0; j <= 4; ++j) table["x^" + std::to_string(4 - j) + " theta^" + std::to_string(j)] = top_monomial_value(5, 4, j).to_string();
    e.payload["monomial_values"] = table;
    e.payload["value"] = r.value.to_string();
    e.status = from_bool(r.passed());
  }));
}

json stratum_json(const QuarticFuzzStratum& s) {
  json j;
  j["field"] = s.field;
  j["squares"] = s.squares;
  j["generic"] = s.generic;
  j["witnessed"] = s.witnessed;
  j["invariants_vanish"] = s.invariants_vanish;
  j["disagreements"] = s.disagreements;
  j["examples"] = s.examples;
  return j;
}

void fuzz_checks(const RunConfig& cfg, std::vector<CheckEntry>& out) {
  out.push_back(timed("quartic-square-criterion", "for A != 0, square over the closure iff Delta = d = 0, on random quartics", [&](CheckEntry& e) {
    QuarticFuzzOptions opt;
    opt.prime_count = cfg.fuzz_count;
    opt.rational_count = std::max<std::size_t>(1, cfg.fuzz_count / 10);
    const auto r = run_quartic_fuzz(opt);
    e.payload["prime_field"] = stratum_json(r.prime_field);
    e.payload["rationals"] = stratum_json(r.rationals);
    e.payload["boundary"] = {{"quartic", "(0,0,1,0,1)"}, {"invariants_vanish", r.boundary_invariants_vanish}, {"square", r.boundary_is_square}};
    e.payload["nondegenerate_counterexample"] = {{"quartic", "(1,0,6,16,9)"},
                                                 {"invariants_vanish", r.nondegenerate_invariants_vanish},
                                                 {"square", r.nondegenerate_is_square}};
    e.status = from_bool(r.passed());
  }));
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& e) { return e.status == Status::pass; });
}

json Report::to_json(bool with_timing) const {
  json j;
  j["tool"] = "prymcalc";
  j["version"] = version;
  j["passed"] = passed();
  json arr = json::array();
  for (const auto& e : checks) {
    json row;
    row["check"] = e.id;
    row["anchor"] = e.anchor;
    row["status"] = to_string(e.status);
    row["payload"] = e.payload;
    if (with_timing) row["wall_ms"] = e.wall_ms;
    arr.push_back(row);
  }
  j["checks"] = arr;
  return j;
}

std::string Report::summary_table() const {
  std::ostringstream s;
  std::size_t width = 5;
  for (const auto& e : checks) width = std::max(width, e.id.size());
  for (const auto& e : checks) {
    s << e.id << std::string(width + 2 - e.id.size(), ' ') << to_string(e.status);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%10.1f ms", e.wall_ms);
    s << std::string(14 - to_string(e.status).size(), ' ') << buf << "\n";
  }
  s << (passed() ? "all checks passed" : "some checks did not pass") << "\n";
  return s.str();
}

void validate(const RunConfig& c) {
  if (std::find(kCommands.begin(), kCommands.end(), c.command) == kCommands.end()) throw UsageError("unknown command '" + c.command + "'");
  if (c.primes.empty()) throw UsageError("at least one prime is required");
  if (c.seeds.empty()) throw UsageError("at least one seed is required");
  for (auto p : c.primes)
    if (p <= 1000 || p >= (1U << 31) || !is_prime_u32(p)) throw UsageError("--prime " + std::to_string(p) + ": need a prime in (1000, 2^31)");
  if (c.fuzz_count == 0) throw UsageError("--fuzz-count must be positive");
}

Report run(const RunConfig& c) {
  validate(c);
  Report r;
  const bool all = c.command == "all";
  if (all || c.command == "verify-lines") lines_checks(r.checks);
  if (all || c.command == "verify-transversality") transversality_checks(r.checks);
  if (all || c.command == "verify-pencil24") pencil_checks(c, r.checks);
  if (all || c.command == "verify-intersection") intersection_checks(r.checks);
  if (all || c.command == "verify-quartic-fuzz") fuzz_checks(c, r.checks);
  return r;
}

bool parse_args(const std::vector<std::string>& args, RunConfig& config, std::ostream& out) {
  CLI::App app{"Exact verification of the computational claims about (3,4)-curves, the 27 lines and X^(4)", "prymcalc"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  std::vector<std::uint32_t> primes;
  std::vector<std::int64_t> seeds;
  int trials = 0;
  app.add_option("--prime", primes, "prime for pencil trials (repeatable; default 10007 31991)");
  app.add_option("--seed", seeds, "seed for pencil trials (repeatable; default 1 2 3)");
  app.add_option("--trials", trials, "use seeds 1..n when no --seed is given")->check(CLI::PositiveNumber);
  app.add_option("--out", config.out, "write the JSON report here instead of stdout");
  app.add_option("--fuzz-count", config.fuzz_count, "random quartics over F_10007 (a tenth as many over QQ)")->check(CLI::PositiveNumber);
  app.add_flag("--quiet", config.quiet, "no summary table");
  app.set_version_flag("--version", kVersion);
  for (const auto& name : kCommands) app.add_subcommand(name, "run " + (name == "all" ? std::string("every check") : name.substr(7) + " checks"));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return false;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return false;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  config.command = app.get_subcommands().front()->get_name();
  if (!primes.empty()) config.primes = primes;
  if (!seeds.empty()) {
    config.seeds.clear();
    for (auto s : seeds) {
      if (s < 0) throw UsageError("--seed must be non-negative");
      config.seeds.push_back(static_cast<std::uint64_t>(s));
    }
  } else if (trials > 0) {
    config.seeds.clear();
    for (int s = 1; s <= trials; ++s) config.seeds.push_back(static_cast<std::uint64_t>(s));
  }
  validate(config);
  return true;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    if (!parse_args(args, cfg, out)) return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    const Report r = run(cfg);
    const std::string doc = r.to_json().dump(2) + "\n";
    if (!cfg.quiet) out << r.summary_table();
    if (cfg.out.empty()) {
      out << doc;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f || !(f << doc)) {
        err << "internal error: cannot write " << cfg.out << "\n";
        return 3;
      }
    }
    return r.passed() ? 0 : 1;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace prymcalc::cli
