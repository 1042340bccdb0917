#ifndef ENDS_WORD_ENGINE_HPP
#define ENDS_WORD_ENGINE_HPP

#include "ends/presentation.hpp"

#include <memory>
#include <vector>

namespace ends {

class BallGraph;

struct WordProblemStrategy {
  enum class Kind { dehn, bounded_bfs };
  Kind kind = Kind::dehn;
  int radius_cap = 0;  ///< bounded_bfs only

  static WordProblemStrategy dehn() { return {Kind::dehn, 0}; }
  static WordProblemStrategy bounded_bfs(int radius_cap) { return {Kind::bounded_bfs, radius_cap}; }
  friend bool operator==(const WordProblemStrategy&, const WordProblemStrategy&) = default;
};

/// Dehn when the presentation is C'(1/6), bounded BFS with `radius_cap` otherwise.
WordProblemStrategy choose_strategy(const Presentation& p, int radius_cap);

/// Dehn's algorithm over a fixed C'(1/6) presentation. The symmetrized
/// relators are indexed by first letter once, so repeated reductions are cheap.
class DehnReducer {
 public:
  /// Throws StrategyError unless p passes C'(1/6).
  explicit DehnReducer(const Presentation& p);

  /// Replaces the leftmost, then longest, subword u with 2|u| > |r| for a
  /// symmetrized relator r = u s by s^-1, freely reduces, and repeats.
  Word reduce(std::span<const Letter> w) const;
  bool is_identity(std::span<const Letter> w) const { return reduce(w).empty(); }

 private:
  struct Match {
    std::size_t start = 0;
    std::size_t length = 0;
    const Word* relator = nullptr;
  };
  std::optional<Match> find(const Word& w) const;

  std::vector<std::vector<const Word*>> by_first_;
  std::vector<Word> symmetrized_;
};

Word dehn_reduce(std::span<const Letter> w, const Presentation& p);

/// Decides w = 1 in G. Under bounded_bfs a word whose path leaves the
/// radius-cap ball, and is too long for that to prove w != 1, raises
/// UndecidedError.
bool is_identity(std::span<const Letter> w, const Presentation& p, const WordProblemStrategy& strategy);

/// Shortlex-least word for the element of w, read off the ball's BFS tree.
/// Throws OutsideBallError when the path of the freely reduced w leaves the ball.
Word shortlex_normal_form(std::span<const Letter> w, const BallGraph& ball);

}  // namespace ends

#endif  // ENDS_WORD_ENGINE_HPP
