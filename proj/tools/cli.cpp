#include "cli.hpp"

#include <iomanip>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetgames/enumeration.hpp"
#include "posetgames/game_sequence.hpp"
#include "posetgames/normal_play.hpp"
#include "posetgames/notation.hpp"
#include "posetgames/relations.hpp"

namespace pgames::cli {

namespace {

struct Config {
  std::string poset = "L5";
  bool json = false;
  std::uint64_t seed = 1;
  std::uint32_t n_max = 10;
  bool negate = false;
  std::uint32_t max_rounds = 64;
  std::size_t max_values = 100000;
  double time_limit = 600.0;
  std::uint64_t max_candidates = 2'000'000'000ULL;
  bool full_subsets = false;
  std::uint64_t domination_trials = 2000;
  std::string expr_g, expr_h;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string verdict(bool leq, bool geq) {
  if (leq && geq) return "equivalent";
  if (leq) return "<";
  if (geq) return ">";
  return "incomparable";
}

GameRef parse_or_report(const std::string& text, TermStore& store, const char* what) {
  try {
    return parse(text, store);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), std::string(what) + ": " + e.message());
  }
}

int cmd_compare(const Config& c, std::ostream& out) {
  TermStore store(Poset::from_spec(c.poset));
  const GameRef g = parse_or_report(c.expr_g, store, "first game");
  const GameRef h = parse_or_report(c.expr_h, store, "second game");
  const Relations rel(store);
  const bool leq = rel.leq(g, h), geq = rel.leq(h, g);
  const bool tri = rel.tri(g, h), tri_rev = rel.tri(h, g);
  if (c.json) {
    nlohmann::ordered_json j;
    j["g"] = print(store, g);
    j["h"] = print(store, h);
    j["leq"] = leq;
    j["geq"] = geq;
    j["tri"] = tri;
    j["tri_rev"] = tri_rev;
    j["verdict"] = verdict(leq, geq);
    out << j.dump() << '\n';
  } else {
    out << "G = " << print(store, g) << '\n'
        << "H = " << print(store, h) << '\n'
        << "G <= H: " << yes_no(leq) << '\n'
        << "H <= G: " << yes_no(geq) << '\n'
        << "G <| H: " << yes_no(tri) << '\n'
        << "H <| G: " << yes_no(tri_rev) << '\n'
        << "verdict: " << verdict(leq, geq) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Config& c, std::ostream& out) {
  TermStore store(Poset::from_spec(c.poset));
  GameSequence seq(store);
  const Relations rel(store);
  const VerifyOptions opts{c.n_max, c.negate};
  auto reports = verify_claims(seq, rel, opts);
  auto lemmas = verify_lemmas(seq, rel, opts);
  reports.insert(reports.end(), lemmas.begin(), lemmas.end());

  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports) {
    switch (r.status()) {
      case ClaimReport::Status::Pass: ++passed; break;
      case ClaimReport::Status::Fail: ++failed; break;
      case ClaimReport::Status::Skipped: ++skipped; break;
    }
  }
  if (c.json) {
    for (const auto& r : reports) out << r.to_json_line() << '\n';
  } else {
    out << std::left << std::setw(8) << "claim" << std::setw(5) << "n" << std::setw(10) << "expected"
        << std::setw(10) << "actual" << std::setw(9) << "status" << "micros\n";
    for (const auto& r : reports) {
      const char* status = r.status() == ClaimReport::Status::Pass   ? "ok"
                           : r.status() == ClaimReport::Status::Fail ? "FAIL"
                                                                     : "skipped";
      out << std::setw(8) << r.claim << std::setw(5) << r.n << std::setw(10) << yes_no(r.expected) << std::setw(10)
          << (r.actual ? yes_no(*r.actual) : "-") << std::setw(9) << status << r.micros << '\n';
    }
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

int cmd_enumerate(const Config& c, std::ostream& out, std::ostream& err) {
  TermStore store(Poset::from_spec(c.poset));
  EnumerationOptions opts;
  opts.budget = {c.max_rounds, c.max_values, c.time_limit, c.max_candidates};
  opts.option_sets = c.full_subsets ? OptionSets::AllSubsets : OptionSets::Antichains;

  if (!c.full_subsets && c.domination_trials > 0) {
    const Relations rel(store);
    const auto report = check_domination(store, rel, c.domination_trials, c.seed);
    if (!report.passed()) {
      err << "warning: domination check found " << report.counterexamples.size()
          << " counterexample(s), e.g. " << report.counterexamples.front().first << " vs "
          << report.counterexamples.front().second << "; using full option subsets\n";
      opts.option_sets = OptionSets::AllSubsets;
    }
  }

  const ValueTable table = enumerate_monotone_values(store, opts);
  const bool expected_finite = store.poset().is_chain() && store.poset().size() <= 4;
  if (c.json) {
    out << table_to_json(store, table) << '\n';
  } else {
    out << "poset " << store.poset().name() << '\n';
    for (std::size_t r = 0; r < table.counts_per_round.size(); ++r)
      out << "round " << r << ": " << table.counts_per_round[r] << " values\n";
    out << "final: " << table.size() << " values, " << (table.saturated ? "saturated" : "not saturated") << " ("
        << to_string(table.stop_reason) << ")\n";
  }
  if (expected_finite && !table.saturated) {
    err << "error: budget exhausted (" << to_string(table.stop_reason) << ") before saturation on "
        << store.poset().name() << ", which has finitely many values\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_np(const Config& c, std::ostream& out, std::ostream& err) {
  TermStore store(Poset::from_spec(c.poset));
  const GameRef g = parse_or_report(c.expr_g, store, "first game");
  const GameRef h = parse_or_report(c.expr_h, store, "second game");
  const Relations rel(store);
  NormalPlay normal(store);

  const MeanValue mg = mean_value(store, g), mh = mean_value(store, h);
  if (!mg) err << "warning: G does not have constant temperature 1; the correspondence is not claimed\n";
  if (!mh) err << "warning: H does not have constant temperature 1; the correspondence is not claimed\n";
  if (mg && mh && *mg != *mh)
    err << "warning: G and H have different mean values (" << *mg << ", " << *mh
        << "); the correspondence is only claimed for equal means\n";

  const NormalRef ng = normal.np(g), nh = normal.np(h);
  const bool leq = rel.leq(g, h);
  const bool np_leq = normal.np_leq(ng, nh);
  const auto& ns = normal.normal_store();
  if (c.json) {
    nlohmann::ordered_json j;
    j["g"] = print(store, g);
    j["h"] = print(store, h);
    j["np_g"] = ns.print(ng);
    j["np_h"] = ns.print(nh);
    j["mean_g"] = mg ? nlohmann::ordered_json(*mg) : nlohmann::ordered_json(nullptr);
    j["mean_h"] = mh ? nlohmann::ordered_json(*mh) : nlohmann::ordered_json(nullptr);
    j["leq"] = leq;
    j["np_leq"] = np_leq;
    j["agree"] = leq == np_leq;
    out << j.dump() << '\n';
  } else {
    out << "np(G) = " << ns.print(ng) << '\n'
        << "np(H) = " << ns.print(nh) << '\n'
        << "G <= H: " << yes_no(leq) << '\n'
        << "np(G) <= np(H): " << yes_no(np_leq) << '\n'
        << "agree: " << yes_no(leq == np_leq) << '\n';
  }
  return kExitOk;
}

int cmd_parse(const Config& c, std::ostream& out) {
  TermStore store(Poset::from_spec(c.poset));
  const GameRef g = parse_or_report(c.expr_g, store, "game");
  const Relations rel(store);
  const MeanValue m = mean_value(store, g);
  const bool monotone = rel.is_monotone(g);
  const std::size_t positions = store.positions(g).size();
  if (c.json) {
    nlohmann::ordered_json j;
    j["game"] = print(store, g);
    j["size"] = store.size(g);
    j["depth"] = store.depth(g);
    j["positions"] = positions;
    j["mean"] = m ? nlohmann::ordered_json(*m) : nlohmann::ordered_json(nullptr);
    j["monotone"] = monotone;
    out << j.dump() << '\n';
  } else {
    out << print(store, g) << '\n'
        << "size " << store.size(g) << ", depth " << store.depth(g) << ", " << positions << " positions\n"
        << "mean value: " << (m ? std::to_string(*m) : std::string("none")) << '\n'
        << "monotone: " << yes_no(monotone) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Games over partially ordered atom sets"};
  app.require_subcommand(1);
  app.add_option("--poset", c.poset, "Atom poset, L<n> for the n-element chain")->capture_default_str();
  app.add_flag("--json", c.json, "Machine-readable output");
  app.add_option("--seed", c.seed, "Seed for random sampling")->capture_default_str();

  auto* compare = app.add_subcommand("compare", "Compare two games");
  compare->add_option("G", c.expr_g)->required();
  compare->add_option("H", c.expr_h)->required();

  auto* verify = app.add_subcommand("verify", "Check the claims about the sequence G_n");
  verify->add_option("--n-max", c.n_max, "Largest n to check")->capture_default_str();
  verify->add_flag("--negate-expectations", c.negate, "Flip expected values (harness self-test)");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate monotone game values");
  enumerate->add_option("--max-rounds", c.max_rounds)->capture_default_str()->check(CLI::PositiveNumber);
  enumerate->add_option("--max-values", c.max_values)->capture_default_str()->check(CLI::PositiveNumber);
  enumerate->add_option("--time-limit", c.time_limit, "Seconds")->capture_default_str()->check(CLI::PositiveNumber);
  enumerate->add_option("--max-candidates", c.max_candidates, "Candidate pairs per round")->capture_default_str();
  enumerate->add_flag("--full-subsets", c.full_subsets, "Use every option subset instead of antichains");
  enumerate->add_option("--domination-trials", c.domination_trials, "Random checks before pruning (0 skips)")
      ->capture_default_str();

  auto* np = app.add_subcommand("np", "Compare games and their normal-play images");
  np->add_option("G", c.expr_g)->required();
  np->add_option("H", c.expr_h)->required();

  auto* parse_cmd = app.add_subcommand("parse", "Parse and describe a game");
  parse_cmd->add_option("G", c.expr_g)->required();

  for (auto* sub : {compare, verify, enumerate, np, parse_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*compare) return cmd_compare(c, out);
    if (*verify) return cmd_verify(c, out);
    if (*enumerate) return cmd_enumerate(c, out, err);
    if (*np) return cmd_np(c, out, err);
    return cmd_parse(c, out);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pgames::cli
