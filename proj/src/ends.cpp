#include "ends/ends.hpp"

#include "ends/errors.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>

namespace ends {

namespace {

using DisjointSets = boost::disjoint_sets_with_storage<>;

long to_long(const BigInt& z, const char* what) {
  if (z > std::numeric_limits<long>::max() || z < std::numeric_limits<long>::min()) {
    throw PreconditionError(std::string(what) + " is too large for an enumerated ball");
  }
  return z.convert_to<long>();
}

// Connected components of the vertices accepted by `keep`, labelled by the
// smallest vertex of each component; -1 for rejected vertices.
template <class Keep>
std::vector<Vertex> components(const BallGraph& ball, Keep keep) {
  std::vector<Vertex> label(ball.size(), kOutside);
  std::vector<Vertex> queue;
  for (Vertex s = 0; static_cast<std::size_t>(s) < ball.size(); ++s) {
    if (label[static_cast<std::size_t>(s)] != kOutside || !keep(s)) continue;
    label[static_cast<std::size_t>(s)] = s;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex t : ball.row(queue[head])) {
        if (t == kOutside || label[static_cast<std::size_t>(t)] != kOutside || !keep(t)) continue;
        label[static_cast<std::size_t>(t)] = s;
        queue.push_back(t);
      }
    }
  }
  return label;
}

// Reusable BFS scratch space. A vertex counts as visited (or as a target)
// when its stamp matches the current round, so nothing is cleared between
// searches.
class LocalSearch {
 public:
  explicit LocalSearch(const BallGraph& ball)
      : ball_(ball), stamp_(ball.size(), 0), target_(ball.size(), 0), depth_(ball.size(), 0) {}

  void set_targets(std::span<const Vertex> targets) {
    ++target_round_;
    for (Vertex v : targets) target_[static_cast<std::size_t>(v)] = target_round_;
    targets_ = targets.size();
  }

  // Vertices within `limit` steps of `source` through vertices with
  // dist > excluded, in BFS order. Stops once every target has been reached.
  const std::vector<Vertex>& run(Vertex source, long excluded, int limit) {
    ++round_;
    order_.clear();
    if (ball_.dist(source) <= excluded) return order_;
    visit(source, 0);
    std::size_t found = 0;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      const Vertex v = order_[head];
      if (targets_ != 0 && target_[static_cast<std::size_t>(v)] == target_round_ && ++found == targets_) break;
      const int d = depth(v);
      if (d == limit) continue;
      for (Vertex t : ball_.row(v)) {
        if (t == kOutside || seen(t) || ball_.dist(t) <= excluded) continue;
        visit(t, d + 1);
      }
    }
    return order_;
  }

  bool seen(Vertex v) const { return stamp_[static_cast<std::size_t>(v)] == round_; }
  int depth(Vertex v) const { return depth_[static_cast<std::size_t>(v)]; }

 private:
  void visit(Vertex v, int d) {
    stamp_[static_cast<std::size_t>(v)] = round_;
    depth_[static_cast<std::size_t>(v)] = d;
    order_.push_back(v);
  }

  const BallGraph& ball_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> target_;
  std::vector<int> depth_;
  std::vector<Vertex> order_;
  std::uint32_t round_ = 0;
  std::uint32_t target_round_ = 0;
  std::size_t targets_ = 0;
};

ConditionReport check_pairs(const BallGraph& ball, long M, ConditionReport::Condition condition, long min_R, long max_R,
                            long band, const std::function<long(long)>& excluded_for, int max_path_length) {
  ConditionReport report;
  report.condition = condition;
  report.min_R = min_R;
  report.max_R = max_R;
  LocalSearch near(ball);
  LocalSearch avoid(ball);
  std::vector<Vertex> partners;
  int witness = 0;
  for (long R = min_R; R <= max_R; ++R) {
    const long excluded = excluded_for(R);
    for (Vertex x : sphere(ball, R)) {
      partners.clear();
      for (Vertex y : near.run(x, -1, static_cast<int>(M))) {
        if (y == x || std::labs(ball.dist(y) - R) > band) continue;
        if (ball.dist(y) == R && y < x) continue;
        // In-ball distance is only trusted when a geodesic cannot leave the ball.
        if (ball.dist(x) + ball.dist(y) + near.depth(y) > 2 * ball.radius()) continue;
        partners.push_back(y);
      }
      if (partners.empty()) continue;
      avoid.set_targets(partners);
      avoid.run(x, excluded, max_path_length);
      for (Vertex y : partners) {
        ++report.pairs_checked;
        if (!avoid.seen(y)) {
          report.holds_within_ball = false;
          report.counterexample = std::make_pair(x, y);
          return report;
        }
        witness = std::max(witness, avoid.depth(y));
      }
    }
  }
  report.holds_within_ball = true;
  report.witness_L = witness;
  return report;
}

}  // namespace

std::vector<Vertex> sphere(const BallGraph& ball, long R) {
  if (R > ball.radius()) {
    throw PreconditionError("sphere radius " + std::to_string(R) + " exceeds ball radius " + std::to_string(ball.radius()));
  }
  if (R < 0) return {};
  return ball.sphere(static_cast<int>(R));
}

SphereClasses sphere_classes(const BallGraph& ball, const ConstantsLedger& ledger, bool stable,
                             std::optional<std::uint64_t> shuffle_seed) {
  if (!ledger.outer_radius) throw PreconditionError("ledger has no finite outer radius");
  SphereClasses out;
  out.R0 = to_long(ledger.R0, "R0");
  out.inner_radius = ledger.inner_radius();
  out.outer_radius = to_long(*ledger.outer_radius, "outer radius");
  out.certified = stable;
  if (out.inner_radius < 0 || out.inner_radius >= out.R0 || out.outer_radius < out.R0) {
    throw PreconditionError("sphere classes need R0 - inner_offset in [0, R0) and outer radius >= R0");
  }
  if (out.outer_radius > ball.radius()) {
    throw PreconditionError("outer radius " + std::to_string(out.outer_radius) + " exceeds ball radius " +
                            std::to_string(ball.radius()));
  }
  // dist > inner_radius for integer dist is dist >= floor(inner_radius) + 1.
  const long lowest = to_long(floor(out.inner_radius), "inner radius") + 1;
  const auto in_annulus = [&](Vertex v) { return ball.dist(v) >= lowest && ball.dist(v) <= out.outer_radius; };

  std::vector<Vertex> order(ball.size());
  std::iota(order.begin(), order.end(), 0);
  if (shuffle_seed) std::shuffle(order.begin(), order.end(), std::mt19937_64(*shuffle_seed));

  DisjointSets sets(ball.size());
  for (Vertex v : order) {
    if (!in_annulus(v)) continue;
    for (Vertex t : ball.row(v)) {
      if (t != kOutside && in_annulus(t)) sets.union_set(v, t);
    }
  }
  std::map<std::size_t, std::size_t> class_of_root;
  for (Vertex v : sphere(ball, out.R0)) {
    const std::size_t root = sets.find_set(v);
    auto [it, inserted] = class_of_root.try_emplace(root, out.classes.size());
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(v);
  }
  for (const auto& c : out.classes) out.representative.push_back(c.front());
  return out;
}

Vertex project_to_sphere(const BallGraph& ball, Vertex v, long R0) {
  if (v < 0 || static_cast<std::size_t>(v) >= ball.size()) throw OutsideBallError("vertex " + std::to_string(v) + " not in ball");
  while (ball.dist(v) > R0) v = ball.parent(v);
  return v;
}

ShadowReport shadow_consistency_check(const BallGraph& ball, const ConstantsLedger& ledger, std::size_t trials,
                                      std::uint64_t seed) {
  const SphereClasses classes = sphere_classes(ball, ledger);
  std::vector<std::size_t> class_of(ball.size(), SIZE_MAX);
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    for (Vertex v : classes.classes[c]) class_of[static_cast<std::size_t>(v)] = c;
  }
  const long lowest = to_long(floor(classes.inner_radius), "inner radius") + 1;
  const std::vector<Vertex> region = components(ball, [&](Vertex v) { return ball.dist(v) >= lowest; });

  std::vector<Vertex> beyond;
  for (Vertex v = 0; static_cast<std::size_t>(v) < ball.size(); ++v) {
    if (ball.dist(v) > classes.R0) beyond.push_back(v);
  }
  std::vector<std::size_t> shadow(beyond.size());
  for (std::size_t i = 0; i < beyond.size(); ++i) {
    shadow[i] = class_of[static_cast<std::size_t>(project_to_sphere(ball, beyond[i], classes.R0))];
  }
  ShadowReport report;
  const auto check = [&](std::size_t i, std::size_t j) {
    ++report.pairs_checked;
    const Vertex v = beyond[i];
    const Vertex w = beyond[j];
    if (shadow[i] == shadow[j] && region[static_cast<std::size_t>(v)] != region[static_cast<std::size_t>(w)]) {
      report.violations.emplace_back(v, w);
    }
  };
  const std::size_t n = beyond.size();
  if (n < 2) return report;
  if (trials >= n * (n - 1) / 2) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) check(i, j);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t i = pick(rng);
      std::size_t j = pick(rng);
      if (i == j) j = (j + 1) % n;
      check(i, j);
    }
  }
  return report;
}

std::string Verdict::to_string() const {
  switch (kind) {
    case Kind::finite: return std::to_string(count);
    case Kind::infinite: return "infinite (non-stabilizing)";
    case Kind::uncertified: return "uncertified";
  }
  return "uncertified";
}

Verdict stabilization_verdict(std::span<const long> counts, int window, bool stable) {
  if (window < 1) throw PreconditionError("stabilization window must be positive");
  const auto w = static_cast<std::size_t>(window);
  if (!stable || counts.size() < w) return {};
  const auto tail = counts.subspan(counts.size() - w);
  if (std::all_of(tail.begin(), tail.end(), [&](long c) { return c == tail.front(); })) {
    return {Verdict::Kind::finite, tail.front()};
  }
  if (w >= 2 && std::adjacent_find(tail.begin(), tail.end(), [](long a, long b) { return b <= a; }) == tail.end()) {
    return {Verdict::Kind::infinite, 0};
  }
  return {};
}

EndsReport count_on_ball(const BallGraph& ball, bool stable, const CountConfig& config) {
  if (config.probe_r0.empty()) throw PreconditionError("no probe radii given");
  if (!std::is_sorted(config.probe_r0.begin(), config.probe_r0.end()) ||
      std::adjacent_find(config.probe_r0.begin(), config.probe_r0.end()) != config.probe_r0.end()) {
    throw PreconditionError("probe radii must be strictly ascending");
  }
  EndsReport report;
  report.stable_ball = stable;
  report.ball_size = ball.size();
  for (long r0 : config.probe_r0) {
    EmpiricalRadii radii{r0, config.inner_offset, r0 + config.outer_gap, std::nullopt, std::nullopt};
    ConstantsLedger ledger = empirical_ledger(radii, config.estimates);
    report.class_history.push_back(static_cast<long>(sphere_classes(ball, ledger, stable).count()));
    report.ledgers.push_back(std::move(ledger));
  }
  report.verdict = stabilization_verdict(report.class_history, config.window, stable);
  return report;
}

EndsReport count_relative_ends(const Presentation& p, const SubgroupSpec& h, const CountConfig& config) {
  if (config.probe_r0.empty()) throw PreconditionError("no probe radii given");
  if (config.outer_gap < 1) throw PreconditionError("outer gap must be positive");
  const long radius = config.probe_r0.back() + config.outer_gap;
  if (radius > std::numeric_limits<int>::max()) throw PreconditionError("probe radius too large");
  const SchreierBall ball = enumerate_stable(p, h, static_cast<int>(radius), config.stability);
  CountConfig effective = config;
  if (effective.estimates.diam_source == Provenance::default_value) {
    effective.estimates.diam_core = estimate_diam_core(ball.graph, h);
    effective.estimates.diam_source = Provenance::estimated;
  }
  EndsReport report = count_on_ball(ball.graph, ball.stable, effective);
  report.slack = ball.slack;
  return report;
}

ConditionReport check_ddag(const BallGraph& ball, long M, long K, const Rational& delta_X, const ConditionOptions& options) {
  if (M < 0 || K < 0 || delta_X < 0) throw PreconditionError("M, K and delta must be nonnegative");
  const long min_R = to_long(ceil(Rational(K) + 2 * delta_X), "K + 2 delta");
  const long max_R = options.max_R.value_or(ball.radius() - K - 1);
  // Open ball: the boundary sphere of radius R - K - 2 delta stays usable.
  const auto excluded = [&](long R) { return to_long(ceil(Rational(R - K) - 2 * delta_X), "exclusion radius") - 1; };
  return check_pairs(ball, M, ConditionReport::Condition::ddag, std::max<long>(min_R, 1), max_R, K, excluded,
                     options.max_path_length);
}

ConditionReport check_dag(const BallGraph& ball, long M, const ConstantsLedger& ledger, const ConditionOptions& options) {
  if (M < 0) throw PreconditionError("M must be nonnegative");
  const long min_R = std::max(M, to_long(ceil(ledger.dag_offset), "dag offset"));
  const long max_R = options.max_R.value_or(ball.radius() - 1);
  const auto excluded = [&](long R) { return to_long(ceil(Rational(R) - ledger.dag_offset), "exclusion radius") - 1; };
  return check_pairs(ball, M, ConditionReport::Condition::dag, std::max<long>(min_R, 1), max_R, 0, excluded,
                     options.max_path_length);
}

EmpiricalEndsReport empirical_ends(const BallGraph& ball, std::span<const long> radii, int window, bool stable) {
  EmpiricalEndsReport report;
  for (long r : radii) {
    if (r >= ball.radius()) throw PreconditionError("empirical radius must be below the ball radius");
    const std::vector<Vertex> label = components(ball, [&](Vertex v) { return ball.dist(v) > r; });
    std::vector<Vertex> reaching;
    for (Vertex v = 0; static_cast<std::size_t>(v) < ball.size(); ++v) {
      if (ball.dist(v) == ball.radius()) reaching.push_back(label[static_cast<std::size_t>(v)]);
    }
    std::sort(reaching.begin(), reaching.end());
    reaching.erase(std::unique(reaching.begin(), reaching.end()), reaching.end());
    report.radii.push_back(r);
    report.counts.push_back(static_cast<long>(reaching.size()));
  }
  report.verdict = stabilization_verdict(report.counts, window, stable);
  return report;
}

}  // namespace ends
