#include "ends/ball.hpp"

#include "ends/errors.hpp"

#include <algorithm>
#include <string>

namespace ends {

BallGraph BallGraph::from_table(int letter_count, std::span<const Vertex> table, Vertex base, int radius) {
  if (letter_count <= 0 || letter_count % 2 != 0) throw PreconditionError("letter count must be positive and even");
  if (radius < 0) throw PreconditionError("radius must be nonnegative");
  const std::size_t rows = table.size() / static_cast<std::size_t>(letter_count);
  if (base < 0 || static_cast<std::size_t>(base) >= rows) throw PreconditionError("base vertex out of range");

  BallGraph ball;
  ball.letters_ = letter_count;
  ball.radius_ = radius;

  std::vector<Vertex> new_id(rows, kOutside);
  std::vector<Vertex> order{base};
  new_id[static_cast<std::size_t>(base)] = 0;
  ball.dist_.push_back(0);
  ball.parent_.push_back(kOutside);
  ball.parent_letter_.push_back(-1);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex old = order[head];
    const int d = ball.dist_[head];
    if (d == radius) continue;
    for (int x = 0; x < letter_count; ++x) {
      const Vertex t = table[static_cast<std::size_t>(old) * static_cast<std::size_t>(letter_count) + static_cast<std::size_t>(x)];
      if (t == kOutside || new_id[static_cast<std::size_t>(t)] != kOutside) continue;
      new_id[static_cast<std::size_t>(t)] = static_cast<Vertex>(order.size());
      order.push_back(t);
      ball.dist_.push_back(d + 1);
      ball.parent_.push_back(static_cast<Vertex>(head));
      ball.parent_letter_.push_back(static_cast<std::int16_t>(x));
    }
  }

  ball.table_.assign(order.size() * static_cast<std::size_t>(letter_count), kOutside);
  for (std::size_t v = 0; v < order.size(); ++v) {
    const std::size_t old_row = static_cast<std::size_t>(order[v]) * static_cast<std::size_t>(letter_count);
    for (int x = 0; x < letter_count; ++x) {
      const Vertex t = table[old_row + static_cast<std::size_t>(x)];
      ball.table_[v * static_cast<std::size_t>(letter_count) + static_cast<std::size_t>(x)] =
          t == kOutside ? kOutside : new_id[static_cast<std::size_t>(t)];
    }
  }
  return ball;
}

Word BallGraph::normal_form(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= size()) throw OutsideBallError("vertex " + std::to_string(v) + " not in ball");
  Word w;
  for (Vertex u = v; u != 0; u = parent(u)) w.push_back(parent_letter(u));
  std::reverse(w.begin(), w.end());
  return w;
}

std::optional<Vertex> BallGraph::trace(Vertex from, std::span<const Letter> w) const {
  Vertex v = from;
  for (Letter x : w) {
    if (x.code() >= letters_) return std::nullopt;
    v = target(v, x);
    if (v == kOutside) return std::nullopt;
  }
  return v;
}

std::vector<Vertex> BallGraph::sphere(int r) const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < size(); ++v) {
    if (dist_[v] == r) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

BallGraph BallGraph::truncated(int r) const {
  if (r > radius_) throw PreconditionError("cannot truncate a ball of radius " + std::to_string(radius_) + " to " + std::to_string(r));
  return from_table(letters_, table_, 0, r);
}

BallGraph BallGraph::restricted_to(std::span<const int> generators) const {
  const int letters = 2 * static_cast<int>(generators.size());
  std::vector<Vertex> table(size() * static_cast<std::size_t>(letters), kOutside);
  for (std::size_t v = 0; v < size(); ++v) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      for (int sign = 0; sign < 2; ++sign) {
        table[v * static_cast<std::size_t>(letters) + 2 * k + static_cast<std::size_t>(sign)] =
            target(static_cast<Vertex>(v), 2 * generators[k] + sign);
      }
    }
  }
  // Distances in the restricted graph may exceed the original radius; keep
  // everything that is reachable.
  BallGraph out = from_table(letters, table, 0, static_cast<int>(size()));
  out.radius_ = out.dist_.empty() ? 0 : *std::max_element(out.dist_.begin(), out.dist_.end());
  return out;
}

std::vector<int> bfs_from(const BallGraph& ball, Vertex source, const std::vector<char>& allowed) {
  std::vector<int> d(ball.size(), -1);
  if (!allowed.empty() && !allowed[static_cast<std::size_t>(source)]) return d;
  std::vector<Vertex> queue{source};
  d[static_cast<std::size_t>(source)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (Vertex t : ball.row(v)) {
      if (t == kOutside || d[static_cast<std::size_t>(t)] >= 0) continue;
      if (!allowed.empty() && !allowed[static_cast<std::size_t>(t)]) continue;
      d[static_cast<std::size_t>(t)] = d[static_cast<std::size_t>(v)] + 1;
      queue.push_back(t);
    }
  }
  return d;
}

}  // namespace ends
