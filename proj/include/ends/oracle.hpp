#ifndef ENDS_ORACLE_HPP
#define ENDS_ORACLE_HPP

#include "ends/ball.hpp"
#include "ends/presentation.hpp"
#include "ends/schreier.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ends {

/// Folded labelled graph of a subgroup of a free group. Stored like a coset
/// table: row v, column = letter code, kOutside where no edge exists.
struct CoreGraph {
  int letter_count = 0;
  std::vector<Vertex> table;  ///< vertex 0 is the base
  std::size_t size() const { return letter_count == 0 ? 0 : table.size() / static_cast<std::size_t>(letter_count); }
  Vertex target(Vertex v, int code) const {
    return table[static_cast<std::size_t>(v) * static_cast<std::size_t>(letter_count) + static_cast<std::size_t>(code)];
  }
  /// Membership: w traces a closed loop at the base.
  bool accepts(std::span<const Letter> w) const;
};

/// Wedge of the generator loops folded to a fixpoint. `shuffle_seed` permutes
/// the order in which edges are glued in. Throws PreconditionError if the
/// ambient presentation has relators.
CoreGraph stallings_fold(const Presentation& p, const SubgroupSpec& h,
                         std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// The core with hanging trees attached for every missing letter, cut at `radius`.
SchreierBall free_schreier_ball(const CoreGraph& core, int radius);

/// Base- and label-preserving isomorphism via canonical BFS codes.
bool graphs_isomorphic(const BallGraph& a, const BallGraph& b);
bool graphs_isomorphic(const SchreierBall& a, const SchreierBall& b);

/// Canonical code: letter count followed by the shortlex-renumbered table.
std::vector<std::int32_t> canonical_code(const BallGraph& g);

}  // namespace ends

#endif  // ENDS_ORACLE_HPP
