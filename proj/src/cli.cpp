#include "dyckhankel/cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "dyckhankel/genfun.hpp"
#include "dyckhankel/paths.hpp"
#include "dyckhankel/report.hpp"

namespace dyckhankel {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("bad integer for " + what + ": '" + std::string(s) + "'");
  return v;
}

void check_modulus(int m) {
  if (m < 2) throw UsageError("m must be at least 2");
  if (m > kMaxModulus) throw GuardViolation("m must not exceed " + std::to_string(kMaxModulus));
}

// --- series specs ------------------------------------------------------------

struct SeriesSpec {
  enum class Kind { catalan, fmr, set } kind = Kind::catalan;
  int m = 0;
  int r = 0;
  HeightSet heights;
};

SeriesSpec parse_series(const std::string& spec) {
  SeriesSpec out;
  if (spec == "catalan") return out;
  if (spec.rfind("fmr:", 0) == 0) {
    out.kind = SeriesSpec::Kind::fmr;
    std::map<std::string, int> fields;
    std::stringstream ss(spec.substr(4));
    for (std::string item; std::getline(ss, item, ',');) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("expected key=value in series spec: '" + item + "'");
      fields[item.substr(0, eq)] = parse_int(std::string_view(item).substr(eq + 1), item.substr(0, eq));
    }
    if (fields.size() != 2 || !fields.count("m") || !fields.count("r"))
      throw UsageError("fmr series needs exactly m= and r=");
    out.m = fields["m"];
    out.r = fields["r"];
    check_modulus(out.m);
    if (out.r < 1 || out.r > out.m) throw UsageError("r must lie in 1..m");
    return out;
  }
  std::string set = spec;
  if (set.rfind("set:", 0) == 0) set = set.substr(4);
  out.kind = SeriesSpec::Kind::set;
  out.heights = HeightSet::parse(set);
  if (out.heights.modulus() > kMaxModulus)
    throw GuardViolation("modulus must not exceed " + std::to_string(kMaxModulus));
  return out;
}

TruncSeries build_series(const SeriesSpec& spec, int order) {
  switch (spec.kind) {
    case SeriesSpec::Kind::catalan:
      return catalan_series(order);
    case SeriesSpec::Kind::fmr:
      return fmr_series(spec.m, spec.r, order);
    case SeriesSpec::Kind::set: {
      const GFRequest req{spec.heights, order};
      req.validate();
      return dseries_recursive(req);
    }
  }
  throw UsageError("unknown series");
}

// --- subcommands -------------------------------------------------------------

int cmd_count(const RunConfig& cfg, std::ostream& out) {
  if (cfg.n < 0) throw UsageError("n must be nonnegative");
  const HeightSet s = HeightSet::parse(cfg.set_spec);
  const std::uint64_t count = count_avoiding(cfg.n, s);
  if (!cfg.dump_paths.empty()) {
    std::ofstream dump(cfg.dump_paths);
    if (!dump) throw GuardViolation("cannot open " + cfg.dump_paths);
    for_each_dyck(cfg.n, s, [&](const DyckPath& p) { dump << p.to_string() << '\n'; });
  }
  switch (cfg.format) {
    case OutputFormat::plain:
      out << count << '\n';
      break;
    case OutputFormat::json:
      out << Json{{"n", std::to_string(cfg.n)}, {"set", s.to_string()}, {"count", std::to_string(count)}}.dump(2)
          << '\n';
      break;
    case OutputFormat::csv:
      out << "n,set,count\n" << cfg.n << ',' << csv_field(s.to_string()) << ',' << count << '\n';
      break;
  }
  return exit_ok;
}

int cmd_hankel(const RunConfig& cfg, std::ostream& out) {
  if (cfg.terms < 0) throw UsageError("--n must be nonnegative");
  if (cfg.shift < 0) throw UsageError("--k must be nonnegative");
  const SeriesSpec spec = parse_series(cfg.series_spec);
  const int needed = std::max(0, 2 * (cfg.terms - 1) + cfg.shift);
  const int order = cfg.order > 0 ? cfg.order : needed;
  const TruncSeries f = build_series(spec, order);
  const std::vector<Rational> seq = hankel_sequence(f, cfg.shift, cfg.terms);
  const PeriodReport period = detect_periodicity(seq);
  switch (cfg.format) {
    case OutputFormat::plain:
      out << join_terms(seq) << '\n';
      if (period.confirmed())
        out << "preperiod=" << period.preperiod << " period=" << period.period << ' ' << period.star() << '\n';
      else
        out << "period=inconclusive\n";
      break;
    case OutputFormat::json:
      out << Json{{"series", cfg.series_spec},
                  {"shift", std::to_string(cfg.shift)},
                  {"n_max", std::to_string(cfg.terms)},
                  {"order", std::to_string(order)},
                  {"sequence", to_json(seq)},
                  {"period", to_json(period)}}
                 .dump(2)
          << '\n';
      break;
    case OutputFormat::csv:
      out << "series,shift,n_max,sequence,preperiod,period\n"
          << csv_field(cfg.series_spec) << ',' << cfg.shift << ',' << cfg.terms << ',' << csv_field(join_terms(seq))
          << ',' << (period.confirmed() ? std::to_string(period.preperiod) : "") << ','
          << (period.confirmed() ? std::to_string(period.period) : "") << '\n';
      break;
  }
  return exit_ok;
}

std::string relation_text(const StepRelation& rel) {
  return case_label(rel.tau_case) + " drop=" + std::to_string(rel.drop) + " sign=" + std::to_string(rel.sign) +
         " scale=" + rel.scale.to_string();
}

int cmd_tau(const RunConfig& cfg, std::ostream& out) {
  check_modulus(cfg.m);
  if (cfg.r < 1 || cfg.r > cfg.m) throw UsageError("r must lie in 1..m");
  const ChainReport chain = tau_chain(fmr_equation(cfg.m, cfg.r).canonical, 4);
  switch (cfg.format) {
    case OutputFormat::plain:
      for (std::size_t i = 0; i < chain.equations.size(); ++i) {
        const QuadEq& eq = chain.equations[i];
        out << "F_" << i << ": d=" << eq.d << " k=" << eq.k << " u=" << eq.u.to_string() << " v=" << eq.v.to_string()
            << '\n';
        if (i < chain.relations.size()) out << "  tau: " << relation_text(chain.relations[i]) << '\n';
      }
      out << "steps=" << chain.steps();
      if (chain.cycle)
        out << " cycle=F_" << chain.cycle->start << " delta=" << chain.cycle->drop << " sigma=" << chain.cycle->sign;
      else
        out << " cycle=none";
      out << '\n';
      break;
    case OutputFormat::json: {
      Json j{{"m", std::to_string(cfg.m)}, {"r", std::to_string(cfg.r)}};
      j.update(chain_json(chain));
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "index,d,k,u,v,case,drop,sign,scale\n";
      for (std::size_t i = 0; i < chain.equations.size(); ++i) {
        const QuadEq& eq = chain.equations[i];
        out << i << ',' << eq.d << ',' << eq.k << ',' << csv_field(eq.u.to_string()) << ','
            << csv_field(eq.v.to_string());
        if (i < chain.relations.size()) {
          const StepRelation& rel = chain.relations[i];
          out << ',' << case_label(rel.tau_case) << ',' << rel.drop << ',' << rel.sign << ',' << rel.scale.to_string();
        } else {
          out << ",,,,";
        }
        out << '\n';
      }
      break;
  }
  return exit_ok;
}

struct SuiteRun {
  std::optional<TheoremReport> theorem;
  std::vector<SuiteReport> suites;

  bool passed() const {
    if (theorem && !theorem->passed()) return false;
    return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
  }
};

void render_verify_plain(const SuiteRun& run, std::ostream& out) {
  std::vector<const CaseRecord*> ordered;
  if (run.theorem) {
    for (const auto& c : run.theorem->cases)
      if (!c.passed()) ordered.push_back(&c);
    for (const auto& c : run.theorem->cases)
      if (c.passed()) ordered.push_back(&c);
  }
  for (const CaseRecord* c : ordered) {
    out << (c->passed() ? "PASS" : "FAIL") << " theorem m=" << c->m << " r=" << c->r;
    if (c->first_mismatch) out << " first_mismatch=" << *c->first_mismatch;
    if (c->period.confirmed()) out << ' ' << c->period.star();
    if (c->chain.cycle) out << " delta=" << c->chain.cycle->drop << " sigma=" << c->chain.cycle->sign;
    out << '\n';
    for (const auto& f : c->failures) out << "  failure: " << f << '\n';
    for (const auto& w : c->warnings) out << "  warning: " << w << '\n';
  }
  int checks = 0;
  int failed_checks = 0;
  for (bool want_failed : {true, false}) {
    for (const auto& s : run.suites) {
      for (const auto& c : s.checks) {
        if (c.passed == want_failed) continue;
        out << (c.passed ? "PASS " : "FAIL ") << s.scope << ": " << c.name << " (" << c.checked << " checks)\n";
        for (const auto& f : c.failures) out << "  failure: " << f << '\n';
        ++checks;
        failed_checks += c.passed ? 0 : 1;
      }
    }
  }
  if (run.theorem)
    out << "theorem cases: " << run.theorem->cases.size() << ", failed: " << run.theorem->failed() << '\n';
  if (!run.suites.empty()) out << "identity groups: " << checks << ", failed: " << failed_checks << '\n';
  out << (run.passed() ? "result: pass" : "result: fail") << '\n';
}

void render_verify_json(const SuiteRun& run, std::ostream& out) {
  Json j;
  if (run.theorem) {
    Json cases = Json::array();
    for (const auto& c : run.theorem->cases)
      if (!c.passed()) cases.push_back(to_json(c));
    for (const auto& c : run.theorem->cases)
      if (c.passed()) cases.push_back(to_json(c));
    j["theorem"] = std::move(cases);
  }
  for (const auto& s : run.suites) {
    Json checks = Json::array();
    for (const auto& c : s.checks) checks.push_back(to_json(c));
    j[s.scope] = std::move(checks);
  }
  j["status"] = run.passed() ? "pass" : "fail";
  out << j.dump(2) << '\n';
}

void render_verify_csv(const SuiteRun& run, std::ostream& out) {
  out << "scope,name,m,r,status,first_mismatch,period,detail\n";
  if (run.theorem) {
    for (bool want_failed : {true, false}) {
      for (const auto& c : run.theorem->cases) {
        if (c.passed() == want_failed) continue;
        out << "theorem,F^{m;r}," << c.m << ',' << c.r << ',' << (c.passed() ? "pass" : "fail") << ','
            << (c.first_mismatch ? std::to_string(*c.first_mismatch) : "") << ','
            << csv_field(c.period.confirmed() ? c.period.star() : "") << ','
            << csv_field(c.failures.empty() ? "" : c.failures.front()) << '\n';
      }
    }
  }
  for (bool want_failed : {true, false}) {
    for (const auto& s : run.suites) {
      for (const auto& c : s.checks) {
        if (c.passed == want_failed) continue;
        out << s.scope << ',' << csv_field(c.name) << ",,," << (c.passed ? "pass" : "fail") << ",,,"
            << csv_field(c.failures.empty() ? "" : c.failures.front()) << '\n';
      }
    }
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  check_modulus(cfg.m_min);
  check_modulus(cfg.m_max);
  if (cfg.m_min > cfg.m_max) throw UsageError("--m-min must not exceed --m-max");
  if (cfg.jobs < 1) throw UsageError("--jobs must be positive");
  const bool all = cfg.scope == "all";
  SuiteRun run;
  if (all || cfg.scope == "theorem") {
    CaseOptions opts;
    opts.order = cfg.order;
    opts.n_max = cfg.n_max;
    run.theorem = verify_theorem(cfg.m_min, cfg.m_max, cfg.mode, opts, cfg.jobs);
    run.suites.push_back(verify_oracles(std::min(cfg.m_max, 5), 10));
  }
  if (all || cfg.scope == "classical") {
    ClassicalOptions opts;
    opts.seed = cfg.seed;
    run.suites.push_back(verify_classical(opts));
  }
  if (all || cfg.scope == "bijection") run.suites.push_back(verify_bijection(2, 4, 9));
  switch (cfg.format) {
    case OutputFormat::plain:
      render_verify_plain(run, out);
      break;
    case OutputFormat::json:
      render_verify_json(run, out);
      break;
    case OutputFormat::csv:
      render_verify_csv(run, out);
      break;
  }
  return run.passed() ? exit_ok : exit_failure;
}

int dispatch(const RunConfig& cfg, std::ostream& out) {
  if (cfg.subcommand == "count") return cmd_count(cfg, out);
  if (cfg.subcommand == "hankel") return cmd_hankel(cfg, out);
  if (cfg.subcommand == "tau") return cmd_tau(cfg, out);
  if (cfg.subcommand == "verify") return cmd_verify(cfg, out);
  throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
}

void add_output_options(CLI::App* sub, RunConfig& cfg) {
  const std::map<std::string, OutputFormat> formats{
      {"plain", OutputFormat::plain}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
  sub->add_option("--format", cfg.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  sub->add_option("--output", cfg.output, "Write the report to this file");
}

}  // namespace

int run_config(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    std::ostringstream buf;
    const int code = dispatch(cfg, buf);
    if (cfg.output.empty()) {
      out << buf.str();
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file) throw GuardViolation("cannot open " + cfg.output);
      file << buf.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const GuardViolation& e) {
    err << "error: " << e.what() << '\n';
    return exit_guard;
  } catch (const InsufficientOrder& e) {
    err << "error: insufficient order: " << e.what() << '\n';
    return exit_guard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Hankel determinants of Dyck paths with restricted peak heights"};
  app.require_subcommand(1);

  CLI::App* count = app.add_subcommand("count", "Count n-Dyck paths avoiding a set of peak heights");
  count->add_option("--n", cfg.n, "Semilength")->required();
  count->add_option("--set", cfg.set_spec, "Forbidden heights, e.g. finite:1,3 or periodic:m=5,V=1,2,4")->required();
  count->add_option("--dump-paths", cfg.dump_paths, "Write the admissible paths to this file");
  add_output_options(count, cfg);

  CLI::App* hankel = app.add_subcommand("hankel", "Hankel determinant sequence of a series");
  hankel->add_option("--series", cfg.series_spec, "catalan, fmr:m=M,r=R or set:<height set>");
  hankel->add_option("--k", cfg.shift, "Shift of the Hankel matrices");
  hankel->add_option("--n", cfg.terms, "Number of determinants");
  hankel->add_option("--order", cfg.order, "Truncation order of the series");
  add_output_options(hankel, cfg);

  CLI::App* tau = app.add_subcommand("tau", "Trace the quadratic transformation chain of F^{m,r}");
  tau->add_option("--m", cfg.m, "Modulus")->required();
  tau->add_option("--r", cfg.r, "Allowed residue")->required();
  add_output_options(tau, cfg);

  CLI::App* verify = app.add_subcommand("verify", "Verify the periodicity predictions and identities");
  verify->add_option("--scope", cfg.scope, "theorem, classical, bijection or all")
      ->check(CLI::IsMember({"theorem", "classical", "bijection", "all"}));
  verify->add_option("--m-min", cfg.m_min, "Smallest modulus");
  verify->add_option("--m-max", cfg.m_max, "Largest modulus");
  const std::map<std::string, VerifyMode> modes{
      {"direct", VerifyMode::direct}, {"tau", VerifyMode::tau}, {"both", VerifyMode::both}};
  verify->add_option("--mode", cfg.mode, "direct, tau or both")->transform(CLI::CheckedTransformer(modes));
  verify->add_option("--jobs", cfg.jobs, "Worker threads")->envname(kJobsEnv);
  verify->add_option("--seed", cfg.seed, "Seed of the randomized identity checks");
  verify->add_option("--order", cfg.order, "Series truncation order per case");
  verify->add_option("--n-max", cfg.n_max, "Number of determinants per case");
  add_output_options(verify, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }
  for (CLI::App* sub : {count, hankel, tau, verify})
    if (sub->parsed()) cfg.subcommand = sub->get_name();
  return run_config(cfg, out, err);
}

}  // namespace dyckhankel
