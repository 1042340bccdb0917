#ifndef ENDS_BALL_HPP
#define ENDS_BALL_HPP

#include "ends/word.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace ends {

using Vertex = std::int32_t;
inline constexpr Vertex kOutside = -1;

/// A bounded ball of a deterministic labeled graph (Cayley or Schreier):
/// every letter acts as a partial injection on vertices. Vertex 0 is the
/// base point and vertices are numbered in shortlex BFS order, so the BFS
/// parent chain of a vertex spells its shortlex-least word and two balls are
/// isomorphic (preserving base and labels) iff they compare equal.
class BallGraph {
 public:
  BallGraph() = default;

  /// Canonicalizes an arbitrary table (rows of `letter_count` entries,
  /// kOutside for undefined) around `base`, keeping vertices within `radius`.
  static BallGraph from_table(int letter_count, std::span<const Vertex> table, Vertex base, int radius);

  int letter_count() const { return letters_; }
  int radius() const { return radius_; }
  std::size_t size() const { return dist_.size(); }

  Vertex target(Vertex v, Letter x) const { return table_[index(v, x.code())]; }
  Vertex target(Vertex v, int code) const { return table_[index(v, code)]; }
  std::span<const Vertex> row(Vertex v) const {
    return {table_.data() + index(v, 0), static_cast<std::size_t>(letters_)};
  }
  int dist(Vertex v) const { return dist_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& distances() const { return dist_; }
  Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
  Letter parent_letter(Vertex v) const { return Letter::from_code(parent_letter_[static_cast<std::size_t>(v)]); }

  /// Shortlex-least word from the base to v.
  Word normal_form(Vertex v) const;

  /// Follows w from `from`; nullopt if the path leaves the ball.
  std::optional<Vertex> trace(Vertex from, std::span<const Letter> w) const;

  /// Vertices at distance exactly r, in increasing (shortlex) order.
  std::vector<Vertex> sphere(int r) const;

  /// Ball of radius r <= radius() around the same base.
  BallGraph truncated(int r) const;

  /// Restricts the labels to the letters of the listed generators (in that
  /// order) and re-canonicalizes around the base.
  BallGraph restricted_to(std::span<const int> generators) const;

  friend bool operator==(const BallGraph&, const BallGraph&) = default;

 private:
  std::size_t index(Vertex v, int code) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(letters_) + static_cast<std::size_t>(code);
  }

  int letters_ = 0;
  int radius_ = 0;
  std::vector<Vertex> table_;
  std::vector<int> dist_;
  std::vector<Vertex> parent_;
  std::vector<std::int16_t> parent_letter_;
};

/// BFS distances from `source` using only edges inside the ball and only
/// vertices accepted by `allowed` (all vertices when empty). Unreached
/// vertices get -1.
std::vector<int> bfs_from(const BallGraph& ball, Vertex source, const std::vector<char>& allowed = {});

}  // namespace ends

#endif  // ENDS_BALL_HPP
