#ifndef ENDS_ENDS_HPP
#define ENDS_ENDS_HPP

#include "ends/ball.hpp"
#include "ends/constants.hpp"
#include "ends/presentation.hpp"
#include "ends/schreier.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ends {

/// Vertices at distance exactly R; throws PreconditionError if R > radius.
std::vector<Vertex> sphere(const BallGraph& ball, long R);

struct SphereClasses {
  long R0 = 0;
  Rational inner_radius;
  long outer_radius = 0;
  std::vector<std::vector<Vertex>> classes;  ///< sorted, ordered by smallest member
  std::vector<Vertex> representative;        ///< smallest member = shortlex-least coset
  bool certified = true;                     ///< false when computed on an unstable ball

  std::size_t count() const { return classes.size(); }
};

/// Partitions S(R0) by connectivity inside the annulus
/// inner_radius < dist <= outer_radius, where inner_radius = R0 - inner_offset.
/// `shuffle_seed` permutes the order in which vertices are merged.
SphereClasses sphere_classes(const BallGraph& ball, const ConstantsLedger& ledger, bool stable = true,
                             std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// v itself inside the closed ball of radius R0, otherwise the vertex at
/// distance R0 on the BFS parent chain of v.
Vertex project_to_sphere(const BallGraph& ball, Vertex v, long R0);

struct ShadowReport {
  std::size_t pairs_checked = 0;
  std::vector<std::pair<Vertex, Vertex>> violations;
  bool passes() const { return violations.empty(); }
};

/// Samples pairs beyond R0 (all pairs when `trials` covers them) and checks
/// that equivalent projections imply connectivity outside the inner ball.
ShadowReport shadow_consistency_check(const BallGraph& ball, const ConstantsLedger& ledger, std::size_t trials,
                                      std::uint64_t seed = 1);

struct Verdict {
  enum class Kind { finite, infinite, uncertified };
  Kind kind = Kind::uncertified;
  long count = 0;

  std::string to_string() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Finite n when the last `window` counts all equal n on a stable ball,
/// infinite when they strictly increase, uncertified otherwise.
Verdict stabilization_verdict(std::span<const long> counts, int window, bool stable);

struct CountConfig {
  std::vector<long> probe_r0{2, 3, 4, 5};
  Rational inner_offset{3, 2};
  long outer_gap = 2;
  int window = 3;
  Estimates estimates;
  StabilityOptions stability;
};

struct EndsReport {
  Verdict verdict;
  std::vector<long> class_history;
  std::vector<ConstantsLedger> ledgers;  ///< one per probe
  bool stable_ball = false;
  int slack = 0;
  std::size_t ball_size = 0;
};

/// Builds one Schreier ball out to the largest probe's outer radius and
/// counts sphere classes at every probe.
EndsReport count_relative_ends(const Presentation& p, const SubgroupSpec& h, const CountConfig& config);

/// Same on a ball that is already built, e.g. an exact oracle ball.
EndsReport count_on_ball(const BallGraph& ball, bool stable, const CountConfig& config);

struct ConditionReport {
  enum class Condition { ddag, dag };
  Condition condition = Condition::ddag;
  bool holds_within_ball = false;
  std::optional<int> witness_L;
  std::optional<std::pair<Vertex, Vertex>> counterexample;
  std::size_t pairs_checked = 0;
  long min_R = 0;
  long max_R = -1;
};

struct ConditionOptions {
  int max_path_length = 64;
  std::optional<long> max_R;  ///< defaults to the largest R whose band fits strictly inside the ball
};

/// For every admissible R and every pair x on S(R), y with |dist(y) - R| <= K
/// and in-ball d(x,y) <= M, looks for a path avoiding the open ball of
/// radius R - K - 2 delta_X. Returns the smallest uniform L or a counterexample.
ConditionReport check_ddag(const BallGraph& ball, long M, long K, const Rational& delta_X,
                           const ConditionOptions& options = {});

/// Pairs on the same sphere S(R) with d <= M joined outside the open ball
/// of radius R - dag_offset, for R >= max(M, dag_offset).
ConditionReport check_dag(const BallGraph& ball, long M, const ConstantsLedger& ledger,
                          const ConditionOptions& options = {});

struct EmpiricalEndsReport {
  std::vector<long> radii;
  std::vector<long> counts;
  Verdict verdict;
};

/// Counts components of {dist > r} that reach the frontier dist = radius.
EmpiricalEndsReport empirical_ends(const BallGraph& ball, std::span<const long> radii, int window = 3,
                                   bool stable = true);

}  // namespace ends

#endif  // ENDS_ENDS_HPP
