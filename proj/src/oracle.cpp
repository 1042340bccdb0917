#include "ends/oracle.hpp"

#include "ends/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace ends {

namespace {

// Folding is coincidence processing on a table with a forwarding array.
class Folder {
 public:
  explicit Folder(int letters) : letters_(letters) {}

  Vertex add_vertex() {
    forward_.push_back(static_cast<Vertex>(forward_.size()));
    table_.resize(table_.size() + static_cast<std::size_t>(letters_), kOutside);
    return forward_.back();
  }

  void add_edge(Vertex u, int x, Vertex v) {
    u = rep(u);
    v = rep(v);
    if (entry(u, x) != kOutside) {
      merge(entry(u, x), v);
    } else if (entry(v, x ^ 1) != kOutside) {
      merge(entry(v, x ^ 1), u);
    } else {
      entry(u, x) = v;
      entry(v, x ^ 1) = u;
    }
    drain();
  }

  CoreGraph finish() {
    CoreGraph out;
    out.letter_count = letters_;
    std::vector<Vertex> id(forward_.size(), kOutside);
    Vertex next = 0;
    for (std::size_t v = 0; v < forward_.size(); ++v) {
      if (forward_[v] == static_cast<Vertex>(v)) id[v] = next++;
    }
    for (std::size_t v = 0; v < forward_.size(); ++v) {
      if (forward_[v] != static_cast<Vertex>(v)) continue;
      for (int x = 0; x < letters_; ++x) {
        const Vertex t = entry(static_cast<Vertex>(v), x);
        out.table.push_back(t == kOutside ? kOutside : id[static_cast<std::size_t>(rep(t))]);
      }
    }
    return out;
  }

 private:
  Vertex& entry(Vertex v, int x) {
    return table_[static_cast<std::size_t>(v) * static_cast<std::size_t>(letters_) + static_cast<std::size_t>(x)];
  }

  Vertex rep(Vertex v) {
    while (forward_[static_cast<std::size_t>(v)] != v) {
      forward_[static_cast<std::size_t>(v)] = forward_[static_cast<std::size_t>(forward_[static_cast<std::size_t>(v)])];
      v = forward_[static_cast<std::size_t>(v)];
    }
    return v;
  }

  void merge(Vertex a, Vertex b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[static_cast<std::size_t>(b)] = a;
    pending_.push_back(b);
  }

  void drain() {
    while (!pending_.empty()) {
      const Vertex e = pending_.front();
      pending_.pop_front();
      for (int x = 0; x < letters_; ++x) {
        const Vertex f = entry(e, x);
        if (f == kOutside) continue;
        entry(f, x ^ 1) = kOutside;
        entry(e, x) = kOutside;
        const Vertex e1 = rep(e);
        const Vertex f1 = rep(f);
        if (entry(e1, x) != kOutside) {
          merge(f1, entry(e1, x));
        } else if (entry(f1, x ^ 1) != kOutside) {
          merge(e1, entry(f1, x ^ 1));
        } else {
          entry(e1, x) = f1;
          entry(f1, x ^ 1) = e1;
        }
      }
    }
  }

  int letters_;
  std::vector<Vertex> table_;
  std::vector<Vertex> forward_;
  std::deque<Vertex> pending_;
};

struct Edge {
  Vertex from;
  int letter;
  Vertex to;
};

}  // namespace

bool CoreGraph::accepts(std::span<const Letter> w) const {
  Vertex v = 0;
  for (Letter x : free_reduce(w)) {
    if (x.code() >= letter_count) return false;
    v = target(v, x.code());
    if (v == kOutside) return false;
  }
  return v == 0;
}

CoreGraph stallings_fold(const Presentation& p, const SubgroupSpec& h, std::optional<std::uint64_t> shuffle_seed) {
  if (!p.relators().empty()) throw PreconditionError("Stallings folding needs a free ambient group");
  Folder folder(p.letter_count());
  folder.add_vertex();
  std::vector<Edge> edges;
  for (const auto& w : h.generators) {
    const Word g = free_reduce(w);
    Vertex at = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].code() >= p.letter_count()) throw PreconditionError("subgroup generator uses an unknown letter");
      const Vertex next = i + 1 == g.size() ? 0 : folder.add_vertex();
      edges.push_back({at, g[i].code(), next});
      at = next;
    }
  }
  if (shuffle_seed) std::shuffle(edges.begin(), edges.end(), std::mt19937_64(*shuffle_seed));
  for (const auto& e : edges) folder.add_edge(e.from, e.letter, e.to);
  return folder.finish();
}

SchreierBall free_schreier_ball(const CoreGraph& core, int radius) {
  if (radius < 0) throw PreconditionError("radius must be nonnegative");
  const int letters = core.letter_count;
  std::vector<Vertex> table = core.table;
  std::vector<int> dist(core.size(), -1);
  bool complete = true;
  std::vector<Vertex> queue{0};
  dist[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    const int d = dist[static_cast<std::size_t>(v)];
    for (int x = 0; x < letters; ++x) {
      const std::size_t cell = static_cast<std::size_t>(v) * static_cast<std::size_t>(letters) + static_cast<std::size_t>(x);
      Vertex t = table[cell];
      if (t == kOutside) {
        complete = false;
        if (d >= radius) continue;
        // Start of a hanging tree branch.
        t = static_cast<Vertex>(dist.size());
        dist.push_back(-1);
        table.resize(table.size() + static_cast<std::size_t>(letters), kOutside);
        table[cell] = t;
        table[static_cast<std::size_t>(t) * static_cast<std::size_t>(letters) + static_cast<std::size_t>(x ^ 1)] = v;
      }
      if (dist[static_cast<std::size_t>(t)] >= 0) continue;
      dist[static_cast<std::size_t>(t)] = d + 1;
      queue.push_back(t);
    }
  }
  SchreierBall ball;
  ball.graph = BallGraph::from_table(letters, table, 0, radius);
  ball.stable = true;
  ball.finite_index = complete;
  ball.cosets_defined = dist.size();
  return ball;
}

std::vector<std::int32_t> canonical_code(const BallGraph& g) {
  // BallGraph vertices are already numbered by shortlex BFS from the base.
  std::vector<std::int32_t> code{g.letter_count()};
  for (Vertex v = 0; static_cast<std::size_t>(v) < g.size(); ++v) {
    for (Vertex t : g.row(v)) code.push_back(t);
  }
  return code;
}

bool graphs_isomorphic(const BallGraph& a, const BallGraph& b) { return canonical_code(a) == canonical_code(b); }

bool graphs_isomorphic(const SchreierBall& a, const SchreierBall& b) { return graphs_isomorphic(a.graph, b.graph); }

}  // namespace ends
