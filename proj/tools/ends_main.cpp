// ends: command-line front end for the relative-ends toolkit.
//
// Exit codes: 0 success (including an "infinite" verdict), 1 bad input or
// usage, 2 uncertified or undecided, 3 node budget exceeded.

#include "ends/cayley.hpp"
#include "ends/constants.hpp"
#include "ends/ends.hpp"
#include "ends/errors.hpp"
#include "ends/export.hpp"
#include "ends/oracle.hpp"
#include "ends/rips.hpp"
#include "ends/schreier.hpp"
#include "ends/word_engine.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace ends;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUncertified = 2;
constexpr int kExitBudget = 3;

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw PreconditionError("cannot write '" + path + "'");
  out << text;
}

void emit_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("not an integer list: '" + text + "'");
    }
  }
  if (out.empty()) throw PreconditionError("empty integer list");
  return out;
}

json subgroup_json(const Instance& inst, bool used) {
  json gens = json::array();
  if (used) {
    for (const auto& w : inst.subgroup.generators) gens.push_back(inst.group.format_word(w));
  }
  return gens;
}

json verdict_json(const Verdict& v) {
  if (v.kind == Verdict::Kind::finite) return v.count;
  return v.to_string();
}

struct ConstantsFlags {
  std::string delta;
  std::string epsilon;
  std::string diam_core;
  int n0 = 1;
  std::string mode = "empirical";
  std::optional<long> r0;
  std::string inner_offset = "3/2";
  std::optional<long> outer_radius;
  long outer_gap = 2;
  bool adjusted = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--delta", delta, "hyperbolicity constant of the Cayley graph (rational)");
    cmd->add_option("--epsilon", epsilon, "quasi-convexity constant of H (rational)");
    cmd->add_option("--diam-core", diam_core, "diameter of the core (default: estimated from the ball)");
    cmd->add_option("--n0", n0, "power n0 used for alpha")->capture_default_str()->check(CLI::PositiveNumber);
    cmd->add_option("--mode", mode, "certified or empirical")->capture_default_str()->check(CLI::IsMember({"certified", "empirical"}));
    cmd->add_option("--r0", r0, "single probe radius (empirical mode)");
    cmd->add_option("--inner-offset", inner_offset, "R0 minus the radius of the removed inner ball")->capture_default_str();
    cmd->add_option("--outer-radius", outer_radius, "outer radius for --r0 (empirical mode)");
    cmd->add_option("--outer-gap", outer_gap, "outer radius minus R0 for every probe")->capture_default_str();
    cmd->add_flag("--geodesic-extension-adjusted", adjusted, "certified mode: replace delta_XH by 4 delta_XH + delta_X");
  }

  Estimates estimates() const {
    Estimates e;
    if (!delta.empty()) {
      e.delta_X = parse_rational(delta);
      e.delta_source = Provenance::user;
    }
    if (!epsilon.empty()) {
      e.epsilon = parse_rational(epsilon);
      e.epsilon_source = Provenance::user;
    }
    if (!diam_core.empty()) {
      e.diam_core = parse_rational(diam_core);
      e.diam_source = Provenance::user;
    }
    return e;
  }
};

SchreierBall build_schreier(const Instance& inst, const SubgroupSpec& h, int radius, std::optional<int> slack,
                            std::size_t budget) {
  if (slack) return enumerate_cosets(inst.group, h, radius, *slack, budget);
  return enumerate_stable(inst.group, h, radius, {0, 4, budget});
}

class Cli {
 public:
  int run(int argc, char** argv) {
    CLI::App app{"Relative ends of a hyperbolic group and a quasi-convex subgroup"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ends 1.0");
    std::size_t budget = default_node_budget();
    app.add_option("--node-budget", budget, "maximum live coset-table cells (env ENDS_NODE_BUDGET)")->capture_default_str();

    std::string file;
    std::string json_out;
    std::string dot_out;
    bool use_subgroup = false;
    int radius = 0;
    std::optional<int> slack;
    std::string word;
    int radius_cap = 8;
    bool want_delta = false;
    std::uint64_t delta_sample = 0;
    std::string probes = "2,3,4,5";
    int window = 3;
    std::uint64_t seed = 1;
    std::size_t trials = 1000;
    long M = 4;
    long K = 1;
    std::string dag_offset = "1";
    std::string radii;
    int block_length = 16;
    std::string output = "-";
    ConstantsFlags constants;

    const auto add_json = [&](CLI::App* cmd) {
      cmd->add_option("--json", json_out, "write JSON to a path, or stdout when no path is given")->expected(0, 1)->default_str("-");
    };
    const auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", file, "presentation file")->required(); };
    const auto add_budget = [&](CLI::App* cmd) { cmd->add_option("--node-budget", budget, "maximum live coset-table cells"); };

    auto* parse = app.add_subcommand("parse", "echo the normalized presentation as text and JSON");
    add_file(parse);

    auto* reduce = app.add_subcommand("word-reduce", "reduce a word and decide whether it is trivial");
    add_file(reduce);
    reduce->add_option("word", word, "word, uppercase for inverses")->required();
    reduce->add_option("--radius-cap", radius_cap, "ball radius for presentations that are not C'(1/6)")->capture_default_str();
    add_budget(reduce);

    auto* ball = app.add_subcommand("ball", "Cayley graph ball");
    add_file(ball);
    ball->add_option("--radius", radius, "ball radius")->required()->check(CLI::NonNegativeNumber);
    ball->add_option("--dot", dot_out, "write a DOT drawing");
    ball->add_flag("--delta", want_delta, "estimate the four-point hyperbolicity constant");
    ball->add_option("--sample", delta_sample, "random quadruples for --delta instead of all of them")->capture_default_str();
    ball->add_option("--seed", seed, "seed for --sample")->capture_default_str();
    add_json(ball);
    add_budget(ball);

    auto* schreier = app.add_subcommand("schreier", "Schreier graph ball of the file's subgroup");
    add_file(schreier);
    schreier->add_option("--radius", radius, "ball radius")->required()->check(CLI::NonNegativeNumber);
    schreier->add_option("--slack", slack, "fixed enumeration slack (default: escalate until stable)");
    schreier->add_option("--dot", dot_out, "write a DOT drawing");
    add_json(schreier);
    add_budget(schreier);

    auto* count = app.add_subcommand("count", "count relative ends");
    add_file(count);
    count->add_flag("--subgroup-from-file", use_subgroup, "use the file's subgroup (default: trivial subgroup)");
    count->add_option("--probe-r0", probes, "comma separated ascending probe radii")->capture_default_str();
    count->add_option("--window", window, "stabilization window")->capture_default_str()->check(CLI::PositiveNumber);
    count->add_option("--seed", seed, "seed for the shadow consistency sample")->capture_default_str();
    count->add_option("--shadow-trials", trials, "sampled pairs for the shadow check")->capture_default_str();
    constants.attach(count);
    add_json(count);
    add_budget(count);

    auto* ddag = app.add_subcommand("check-ddag", "annulus condition on the Cayley ball");
    add_file(ddag);
    ddag->add_option("--radius", radius, "ball radius")->required();
    ddag->add_option("--M", M, "pair distance bound")->capture_default_str();
    ddag->add_option("--K", K, "band half-width")->capture_default_str();
    ddag->add_option("--delta", constants.delta, "hyperbolicity constant (default: estimated)");
    add_json(ddag);
    add_budget(ddag);

    auto* dag = app.add_subcommand("check-dag", "sphere condition on the Schreier ball of the file's subgroup");
    add_file(dag);
    dag->add_option("--radius", radius, "ball radius")->required();
    dag->add_option("--M", M, "pair distance bound")->capture_default_str();
    dag->add_option("--dag-offset", dag_offset, "R minus the radius of the avoided ball")->capture_default_str();
    add_json(dag);
    add_budget(dag);

    auto* empirical = app.add_subcommand("empirical", "count frontier components outside balls");
    add_file(empirical);
    empirical->add_flag("--subgroup-from-file", use_subgroup, "use the file's subgroup (default: trivial subgroup)");
    empirical->add_option("--radius", radius, "ball radius")->required();
    empirical->add_option("--radii", radii, "comma separated radii (default: 0 .. radius-4)");
    empirical->add_option("--window", window, "stabilization window")->capture_default_str();
    add_json(empirical);
    add_budget(empirical);

    auto* rips = app.add_subcommand("rips", "Rips construction over the presentation of Q");
    add_file(rips);
    rips->add_option("--block-length", block_length, "starting length of the fresh words")->capture_default_str();
    rips->add_option("--seed", seed, "rotation of the word source")->capture_default_str();
    rips->add_option("-o,--output", output, "output presentation file")->capture_default_str();

    auto* fold = app.add_subcommand("oracle-fold", "Stallings folding of the file's subgroup");
    add_file(fold);
    fold->add_option("--dot", dot_out, "write a DOT drawing");

    auto* compare = app.add_subcommand("oracle-compare", "compare coset enumeration with the folding oracle");
    add_file(compare);
    compare->add_option("--radius", radius, "ball radius")->required();
    add_budget(compare);

    try {
      app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e);
      return code == 0 ? kExitOk : kExitInput;
    }

    try {
      const auto started = std::chrono::steady_clock::now();
      const Instance inst = load_instance(file);
      const auto elapsed_ms = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
      };

      if (parse->parsed()) {
        std::cout << to_text(inst);
        json j = to_json(inst.group);
        j["subgroup"] = subgroup_json(inst, true);
        j["hash"] = presentation_hash(inst);
        std::cout << j.dump(2) << "\n";
        return kExitOk;
      }

      if (reduce->parsed()) {
        const Word w = inst.group.parse_word(word);
        const WordProblemStrategy strategy = choose_strategy(inst.group, radius_cap);
        if (strategy.kind == WordProblemStrategy::Kind::dehn) {
          const Word r = dehn_reduce(w, inst.group);
          std::cout << "strategy: dehn\nreduced: " << inst.group.format_word(r) << "\ntrivial: " << (r.empty() ? "yes" : "no") << "\n";
        } else {
          const CayleyBall b = build_ball(inst.group, radius_cap, strategy, {4, budget});
          const auto v = b.graph.trace(0, free_reduce(w));
          const bool trivial = is_identity(w, inst.group, strategy);
          std::cout << "strategy: bounded_bfs (radius " << radius_cap << ")\nreduced: "
                    << (v ? inst.group.format_word(b.graph.normal_form(*v)) : inst.group.format_word(free_reduce(w)))
                    << "\ntrivial: " << (trivial ? "yes" : "no") << "\n";
        }
        return kExitOk;
      }

      if (ball->parsed()) {
        const CayleyBall b = build_ball(inst.group, radius, choose_strategy(inst.group, std::max(radius, 1)), {4, budget});
        std::cout << "radius " << radius << ": " << b.size() << " vertices, slack " << b.slack
                  << (b.stable ? ", stable" : ", UNSTABLE") << "\n";
        for (int r = 0; r <= radius; ++r) std::cout << "  sphere " << r << ": " << b.graph.sphere(r).size() << "\n";
        json j = ball_to_json(b.graph, inst.group);
        j["stable"] = b.stable;
        j["slack"] = b.slack;
        if (want_delta) {
          const Rational d = estimate_delta(b.graph, {std::nullopt, delta_sample, seed});
          std::cout << "delta estimate: " << to_string(d) << "\n";
          j["delta_estimate"] = to_string(d);
        }
        if (!dot_out.empty()) write_text(dot_out, to_dot(b.graph, inst.group, "cayley"));
        if (!json_out.empty()) emit_json(json_out, j);
        return b.stable ? kExitOk : kExitUncertified;
      }

      if (schreier->parsed()) {
        const SchreierBall b = build_schreier(inst, inst.subgroup, radius, slack, budget);
        std::cout << "radius " << radius << ": " << b.size() << " cosets, slack " << b.slack
                  << (b.stable ? ", stable" : ", UNSTABLE") << (b.finite_index ? ", finite index" : "") << "\n";
        json j = ball_to_json(b.graph, inst.group);
        j["stable"] = b.stable;
        j["slack"] = b.slack;
        j["finite_index"] = b.finite_index;
        if (!dot_out.empty()) write_text(dot_out, to_dot(b.graph, inst.group, "schreier"));
        if (!json_out.empty()) emit_json(json_out, j);
        return b.stable ? kExitOk : kExitUncertified;
      }

      if (count->parsed()) return run_count(inst, use_subgroup, constants, probes, window, seed, trials, budget, json_out, elapsed_ms);

      if (ddag->parsed()) {
        const CayleyBall b = build_ball(inst.group, radius, choose_strategy(inst.group, std::max(radius, 1)), {4, budget});
        const Rational delta = constants.delta.empty() ? estimate_delta(b.graph, {std::min(radius, 3)}) : parse_rational(constants.delta);
        const ConditionReport r = check_ddag(b.graph, M, K, delta);
        print_condition("ddag", r);
        json j = condition_json(r);
        j["delta"] = to_string(delta);
        if (!json_out.empty()) emit_json(json_out, j);
        return b.stable ? kExitOk : kExitUncertified;
      }

      if (dag->parsed()) {
        const SchreierBall b = build_schreier(inst, inst.subgroup, radius, std::nullopt, budget);
        EmpiricalRadii radii_in{std::max<long>(M, 1), Rational(0), std::max<long>(M, 1) + 1, M, parse_rational(dag_offset)};
        const ConstantsLedger ledger = empirical_ledger(radii_in, {});
        const ConditionReport r = check_dag(b.graph, M, ledger);
        print_condition("dag", r);
        if (!json_out.empty()) emit_json(json_out, condition_json(r));
        return b.stable ? kExitOk : kExitUncertified;
      }

      if (empirical->parsed()) {
        const SchreierBall b = build_schreier(inst, use_subgroup ? inst.subgroup : SubgroupSpec{}, radius, std::nullopt, budget);
        std::vector<long> rs;
        if (radii.empty()) {
          for (long r = 0; r <= radius - 4; ++r) rs.push_back(r);
        } else {
          rs = parse_list(radii);
        }
        const EmpiricalEndsReport r = empirical_ends(b.graph, rs, window, b.stable);
        for (std::size_t i = 0; i < r.radii.size(); ++i) std::cout << "  r=" << r.radii[i] << ": " << r.counts[i] << "\n";
        std::cout << "verdict: " << r.verdict.to_string() << "\n";
        if (!json_out.empty()) {
          emit_json(json_out, {{"radii", r.radii}, {"counts", r.counts}, {"verdict", verdict_json(r.verdict)}, {"stable", b.stable}});
        }
        return r.verdict.kind == Verdict::Kind::uncertified ? kExitUncertified : kExitOk;
      }

      if (rips->parsed()) {
        RipsOptions opts;
        opts.seed = seed;
        const RipsOutput out = rips_construct(inst.group, block_length, opts);
        const RipsReport rep = verify_rips(out);
        write_text(output, to_text(out.instance()));
        std::cerr << "block length " << out.block_length << ", max piece " << rep.max_piece_len << ", shortest relator "
                  << rep.min_relator_len << ", checks " << (rep.passes() ? "pass" : "FAIL") << "\n";
        return rep.passes() ? kExitOk : kExitUncertified;
      }

      if (fold->parsed()) {
        const CoreGraph core = stallings_fold(inst.group, inst.subgroup);
        std::cout << "core graph: " << core.size() << " vertices\n";
        for (Vertex v = 0; static_cast<std::size_t>(v) < core.size(); ++v) {
          for (int g = 0; g < inst.group.generator_count(); ++g) {
            const Vertex t = core.target(v, 2 * g);
            if (t != kOutside) std::cout << "  " << v << " -" << inst.group.generator_names()[static_cast<std::size_t>(g)] << "-> " << t << "\n";
          }
        }
        if (!dot_out.empty()) {
          const auto g = BallGraph::from_table(core.letter_count, core.table, 0, static_cast<int>(core.size()));
          write_text(dot_out, to_dot(g, inst.group, "core"));
        }
        return kExitOk;
      }

      if (compare->parsed()) {
        const SchreierBall oracle = free_schreier_ball(stallings_fold(inst.group, inst.subgroup), radius);
        const SchreierBall enumerated = enumerate_stable(inst.group, inst.subgroup, radius, {0, 4, budget});
        const bool same = graphs_isomorphic(oracle, enumerated);
        std::cout << "oracle " << oracle.size() << " cosets, enumeration " << enumerated.size() << " cosets: "
                  << (same ? "isomorphic" : "NOT isomorphic") << "\n";
        return same ? kExitOk : kExitUncertified;
      }
    } catch (const BudgetExceeded& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitBudget;
    } catch (const UndecidedError& e) {
      std::cerr << "undecided: " << e.what() << "\n";
      return kExitUncertified;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitInput;
    }
    return kExitInput;
  }

 private:
  template <class Clock>
  int run_count(const Instance& inst, bool use_subgroup, const ConstantsFlags& c, const std::string& probes, int window,
                std::uint64_t seed, std::size_t trials, std::size_t budget, const std::string& json_out, Clock elapsed_ms) {
    const SubgroupSpec h = use_subgroup ? inst.subgroup : SubgroupSpec{};
    json report;
    report["presentation_hash"] = presentation_hash(inst);
    report["subgroup"] = subgroup_json(inst, use_subgroup);

    if (c.mode == "certified") {
      CertifiedInputs in;
      in.delta_X = c.delta.empty() ? Rational(0) : parse_rational(c.delta);
      in.epsilon = c.epsilon.empty() ? Rational(0) : parse_rational(c.epsilon);
      in.diam_core = c.diam_core.empty() ? Rational(0) : parse_rational(c.diam_core);
      in.n0 = c.n0;
      in.generator_count = inst.group.generator_count();
      in.geodesic_extension_adjusted = c.adjusted;
      const ConstantsLedger ledger = derive_certified(in);
      report["ledger"] = to_json(ledger);
      report["class_history"] = json::array();
      report["stable"] = false;
      report["verdict"] = "uncertified";
      report["note"] = "certified radii are not enumerable; ledger only";
      std::cout << "certified R0 = " << ledger.R0 << ", outer radius has "
                << (ledger.outer_radius ? std::to_string(ledger.outer_radius->str().size()) + " digits" : std::string("too many digits"))
                << "\nverdict: uncertified\n";
      report["runtime_ms"] = elapsed_ms();
      if (!json_out.empty()) emit_json(json_out, report);
      return kExitUncertified;
    }

    CountConfig config;
    config.probe_r0 = parse_list(probes);
    config.window = window;
    config.inner_offset = parse_rational(c.inner_offset);
    config.outer_gap = c.outer_gap;
    if (c.r0) {
      config.probe_r0 = {*c.r0};
      if (c.outer_radius) config.outer_gap = *c.outer_radius - *c.r0;
    } else if (c.outer_radius) {
      throw PreconditionError("--outer-radius needs --r0; use --outer-gap with probe lists");
    }
    config.estimates = c.estimates();
    config.stability = {0, 4, budget};

    const long radius = config.probe_r0.back() + config.outer_gap;
    const SchreierBall ball = enumerate_stable(inst.group, h, static_cast<int>(radius), config.stability);
    if (config.estimates.diam_source == Provenance::default_value) {
      config.estimates.diam_core = estimate_diam_core(ball.graph, h);
      config.estimates.diam_source = Provenance::estimated;
    }
    const EndsReport r = count_on_ball(ball.graph, ball.stable, config);
    const ShadowReport shadow = shadow_consistency_check(ball.graph, r.ledgers.back(), trials, seed);

    report["ledger"] = to_json(r.ledgers.back());
    report["probe_r0"] = config.probe_r0;
    report["class_history"] = r.class_history;
    report["verdict"] = verdict_json(r.verdict);
    report["stable"] = ball.stable;
    report["slack"] = ball.slack;
    report["ball_size"] = ball.size();
    report["shadow"] = {{"pairs_checked", shadow.pairs_checked}, {"violations", shadow.violations.size()}};

    std::cout << "probe R0:";
    for (long x : config.probe_r0) std::cout << " " << x;
    std::cout << "\nclasses: ";
    for (long x : r.class_history) std::cout << " " << x;
    std::cout << "\nball: " << ball.size() << " cosets, radius " << radius << ", slack " << ball.slack
              << (ball.stable ? ", stable" : ", UNSTABLE") << "\nverdict: " << r.verdict.to_string() << "\n";
    report["runtime_ms"] = elapsed_ms();
    if (!json_out.empty()) emit_json(json_out, report);
    return r.verdict.kind == Verdict::Kind::uncertified ? kExitUncertified : kExitOk;
  }

  static void print_condition(const char* name, const ConditionReport& r) {
    std::cout << name << ": R in [" << r.min_R << ", " << r.max_R << "], " << r.pairs_checked << " pairs, ";
    if (r.holds_within_ball) {
      std::cout << "holds with L = " << *r.witness_L << "\n";
    } else {
      std::cout << "fails at pair (" << r.counterexample->first << ", " << r.counterexample->second << ")\n";
    }
  }

  static json condition_json(const ConditionReport& r) {
    json j{{"holds_within_ball", r.holds_within_ball}, {"pairs_checked", r.pairs_checked}, {"min_R", r.min_R}, {"max_R", r.max_R}};
    j["witness_L"] = r.witness_L ? json(*r.witness_L) : json(nullptr);
    j["counterexample"] = r.counterexample ? json({r.counterexample->first, r.counterexample->second}) : json(nullptr);
    return j;
  }
};

}  // namespace

int main(int argc, char** argv) { return Cli().run(argc, argv); }
