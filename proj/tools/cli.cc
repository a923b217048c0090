#include "cli.h"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "overtwist/classify.h"
#include "overtwist/error.h"
#include "overtwist/kneading.h"
#include "overtwist/markov.h"
#include "overtwist/sharkovsky.h"
#include "overtwist/vbo.h"

namespace overtwist::cli {

using nlohmann::ordered_json;

namespace {

ordered_json orp_json(const OverRotationPair& orp) { return {{"p", orp.p}, {"q", orp.q}}; }

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

}  // namespace

ordered_json analyze(const Pattern& pattern) {
  const OverRotationPair orp = over_rotation_pair(pattern);
  const bool convergent = is_convergent(pattern);
  const bool unimodal = is_unimodal(pattern);

  ordered_json blocks = ordered_json::array();
  for (const BlockDecomposition& b : block_decompositions(pattern))
    blocks.push_back({{"size", b.block_size}, {"quotient", b.quotient.str()}});

  ordered_json rep;
  rep["pattern"] = pattern.str();
  rep["period"] = pattern.period();
  rep["orp"] = orp_json(orp);
  rep["rho"] = orp.rho().str();
  rep["convergent"] = convergent;
  rep["unimodal"] = unimodal;
  rep["max_point"] = unimodal ? ordered_json(max_point(pattern)) : ordered_json(nullptr);
  rep["boundary_max"] = unimodal && max_point(pattern) == 1;
  if (convergent) {
    const CodeTable table = code(pattern);
    ordered_json codes = ordered_json::array();
    for (const Rational& v : table.values) codes.push_back(v.str());
    const CycleMean mean = min_cycle_mean(build_markov(pattern));
    rep["fixed_point"] = table.fixed_point.str();
    rep["codes"] = codes;
    rep["code_class"] = to_string(code_class(table));
    rep["overtwist"] = is_overtwist(pattern);
    rep["block_decompositions"] = blocks;
    rep["very_badly_ordered"] = is_very_badly_ordered(pattern);
    rep["r"] = mean.r.str();
    rep["r_attained"] = !mean.infimum_not_attained;
  } else {
    rep["fixed_point"] = nullptr;
    rep["codes"] = nullptr;
    rep["code_class"] = nullptr;
    rep["overtwist"] = false;
    rep["block_decompositions"] = blocks;
    rep["very_badly_ordered"] = nullptr;
    rep["r"] = nullptr;
    rep["r_attained"] = nullptr;
  }
  rep["horseshoe"] = has_horseshoe(pattern);
  if (unimodal) rep["kneading"] = kneading_of_pattern(pattern).str();
  return rep;
}

std::string render_text(const ordered_json& report) {
  std::ostringstream out;
  for (const auto& [key, value] : report.items()) {
    out << key << ": ";
    if (value.is_string()) {
      out << value.get<std::string>();
    } else if (key == "orp") {
      out << "(" << value["p"] << "," << value["q"] << ")";
    } else if (key == "codes") {
      if (value.is_null()) {
        out << "null";
      } else {
        bool first = true;
        for (const auto& c : value) {
          out << (first ? "" : " ") << c.get<std::string>();
          first = false;
        }
      }
    } else if (key == "block_decompositions") {
      if (value.empty()) out << "none";
      bool first = true;
      for (const auto& b : value) {
        out << (first ? "" : "; ") << "size " << b["size"] << " over " << b["quotient"].get<std::string>();
        first = false;
      }
    } else {
      out << value.dump();
    }
    out << "\n";
  }
  return out.str();
}

namespace {

struct Options {
  std::vector<std::string> pattern_words;
  bool json = false;
  bool text = false;
  int k = 0, p = 0, q = 0;
  std::int64_t m = 0, n = 0;
  int terms = 0;
  bool strongest = false;
  int max_period = 8;
  std::string dot_path;
  int kmax = 5, qmax = 12;
};

Pattern pattern_arg(const Options& o) { return parse_pattern(join_words(o.pattern_words)); }

int cmd_analyze(const Options& o, std::ostream& out) {
  const ordered_json rep = analyze(pattern_arg(o));
  if (o.json)
    out << rep.dump(2) << "\n";
  else
    out << render_text(rep);
  return 0;
}

int cmd_knead(const Options& o, std::ostream& out) {
  const KneadingSequence seq = o.strongest ? strongest_kneading(o.p, o.q) : rotation_kneading(o.p, o.q);
  if (o.terms > 0)
    out << seq.prefix(static_cast<std::size_t>(o.terms)) << "\n";
  else
    out << seq.str() << "\n";
  return 0;
}

int cmd_forced(const Options& o, std::ostream& out) {
  const auto cycles = forced_cycles_up_to(pattern_arg(o), o.max_period);
  if (o.json) {
    ordered_json arr = ordered_json::array();
    for (const ForcedCycle& c : cycles) {
      ordered_json witness = ordered_json::array();
      for (const Rational& x : c.witness) witness.push_back(x.str());
      arr.push_back({{"pattern", c.pattern.str()},
                     {"orp", orp_json(c.orp)},
                     {"rho", c.orp.rho().str()},
                     {"witness", witness},
                     {"loop", c.loop},
                     {"degenerate", c.degenerate}});
    }
    out << arr.dump(2) << "\n";
    return 0;
  }
  for (const ForcedCycle& c : cycles) {
    out << c.pattern.str() << "  orp (" << c.orp.p << "," << c.orp.q << ")  orbit";
    for (const Rational& x : c.witness) out << " " << x.str();
    if (c.degenerate) out << "  [degenerate]";
    out << "\n";
  }
  return 0;
}

int cmd_sharkovsky(const Options& o, std::ostream& out) {
  switch (sharkovsky_compare(o.m, o.n)) {
    case Sharpness::sharper: out << o.m << " sharper than " << o.n << "\n"; break;
    case Sharpness::equal: out << o.m << " equal to " << o.n << "\n"; break;
    case Sharpness::duller: out << o.m << " duller than " << o.n << "\n"; break;
  }
  return 0;
}

int cmd_markov(const Options& o, std::ostream& out, std::ostream& err) {
  const MarkovGraph g = build_markov(pattern_arg(o));
  const CycleMean mean = min_cycle_mean(g);
  if (!o.dot_path.empty()) {
    if (o.dot_path == "-") {
      out << to_dot(g);
      return 0;
    }
    std::ofstream file(o.dot_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.dot_path << "\n";
      return 2;
    }
    file << to_dot(g);
  }
  out << "fixed point: " << g.fixed_point().str() << "\n";
  out << "nodes: " << g.size() << "\n";
  out << "edges: " << g.edges().size() << "\n";
  out << "r: " << mean.r.str() << (mean.infimum_not_attained ? " (infimum not attained)" : "") << "\n";
  out << "interval: [" << mean.r.str() << ", 1/2]\n";
  return 0;
}

ordered_json report_json(const Pattern& pattern, const VboReport& rep) {
  return {{"pattern", pattern.str()},
          {"passed", rep.passed()},
          {"k", rep.k},
          {"unimodal", rep.unimodal},
          {"orp_matches", rep.orp_matches},
          {"code_route", rep.code_route},
          {"kneading_route", rep.kneading_route},
          {"markov_route", rep.markov_route},
          {"kneading", rep.kneading ? ordered_json(rep.kneading->str()) : ordered_json(nullptr)},
          {"r", rep.r ? ordered_json(rep.r->str()) : ordered_json(nullptr)},
          {"overtwist", rep.overtwist},
          {"block_over_overtwist", rep.block_over_overtwist},
          {"very_badly_ordered", rep.very_badly_ordered},
          {"irreducible", rep.irreducible},
          {"routes_agree", rep.routes_agree},
          {"failures", rep.failures}};
}

int verdict(const VboReport& rep) {
  if (!rep.routes_agree) return 3;
  return rep.passed() ? 0 : 1;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Pattern pattern = pattern_arg(o);
  const VboReport rep = verify_vbo(pattern, o.p, o.q);
  if (o.json) {
    out << report_json(pattern, rep).dump(2) << "\n";
  } else {
    out << (rep.passed() ? "PASS " : "FAIL ") << pattern.str() << "\n";
    for (const auto& f : rep.failures) out << "  " << f << "\n";
  }
  return verdict(rep);
}

int cmd_sweep(const Options& o, std::ostream& out) {
  int worst = 0;
  int cases = 0;
  for (int q = 3; q <= o.qmax; ++q) {
    for (int p = 1; 2 * p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      for (int k = 2; k <= o.kmax; ++k) {
        const Pattern pat = vbo_build(k, p, q);
        const VboReport rep = verify_vbo(pat, p, q);
        ++cases;
        out << (rep.passed() ? "PASS" : "FAIL") << " k=" << k << " p/q=" << p << "/" << q
            << (rep.irreducible ? "" : " (has block structure)") << "\n";
        worst = std::max(worst, verdict(rep));
      }
    }
  }
  out << cases << " cases\n";
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Over-rotation analysis of cyclic interval patterns", "overtwist"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "Full report for one pattern");
  analyze_cmd->add_option("pattern", o.pattern_words, "One-line \"2 4 6 5 3 1\" or cycle \"(1 2 4 5 3 6)\"")->required();
  auto* json_flag = analyze_cmd->add_flag("--json", o.json, "JSON output");
  analyze_cmd->add_flag("--text", o.text, "Plain text output (default)")->excludes(json_flag);

  auto* gamma_cmd = app.add_subcommand("gamma", "Unimodal over-twist pattern of number p/q");
  gamma_cmd->add_option("p", o.p)->required();
  gamma_cmd->add_option("q", o.q)->required();

  auto* vbo_cmd = app.add_subcommand("vbo", "Very badly ordered cycle of over-rotation pair (kp, kq)");
  vbo_cmd->add_option("k", o.k)->required();
  vbo_cmd->add_option("p", o.p)->required();
  vbo_cmd->add_option("q", o.q)->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check that a pattern is very badly ordered over p/q");
  verify_cmd->add_option("p", o.p)->required();
  verify_cmd->add_option("q", o.q)->required();
  verify_cmd->add_option("pattern", o.pattern_words)->required();
  verify_cmd->add_flag("--json", o.json);

  auto* knead_cmd = app.add_subcommand("knead", "Kneading sequence nu_{p/q} (or nu'_{p/q} with --strongest)");
  knead_cmd->add_option("p", o.p)->required();
  knead_cmd->add_option("q", o.q)->required();
  knead_cmd->add_option("--terms", o.terms, "Print the first N symbols")->check(CLI::PositiveNumber);
  knead_cmd->add_flag("--strongest", o.strongest);

  auto* forced_cmd = app.add_subcommand("forced", "Patterns of periodic orbits of the P-linear map");
  forced_cmd->add_option("pattern", o.pattern_words)->required();
  forced_cmd->add_option("--max-period", o.max_period)->check(CLI::PositiveNumber);
  forced_cmd->add_flag("--json", o.json);

  auto* shark_cmd = app.add_subcommand("sharkovsky", "Compare two periods in the Sharkovsky ordering");
  shark_cmd->add_option("m", o.m)->required()->check(CLI::PositiveNumber);
  shark_cmd->add_option("n", o.n)->required()->check(CLI::PositiveNumber);

  auto* markov_cmd = app.add_subcommand("markov", "Markov graph and over-rotation interval");
  markov_cmd->add_option("pattern", o.pattern_words)->required();
  markov_cmd->add_option("--dot", o.dot_path, "Write Graphviz output to PATH (- for stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Build and verify vbo(k, p, q) over a parameter range");
  sweep_cmd->add_option("--kmax", o.kmax)->check(CLI::Range(2, 64));
  sweep_cmd->add_option("--qmax", o.qmax)->check(CLI::Range(3, 64));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (gamma_cmd->parsed()) {
      out << gamma(o.p, o.q).str() << "\n";
      return 0;
    }
    if (vbo_cmd->parsed()) {
      out << vbo_build(o.k, o.p, o.q).str() << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (knead_cmd->parsed()) return cmd_knead(o, out);
    if (forced_cmd->parsed()) return cmd_forced(o, out);
    if (shark_cmd->parsed()) return cmd_sharkovsky(o, out);
    if (markov_cmd->parsed()) return cmd_markov(o, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(o, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace overtwist::cli
