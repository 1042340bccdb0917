#include "ends/coset_enumeration.hpp"

#include "ends/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

namespace ends {

std::size_t default_node_budget() {
  if (const char* env = std::getenv("ENDS_NODE_BUDGET"); env != nullptr && *env != '\0') {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw PreconditionError(std::string("ENDS_NODE_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultNodeBudget;
}

namespace {

using Code = int;

class Enumerator {
 public:
  Enumerator(const Presentation& p, const EnumerationLimits& limits)
      : letters_(p.letter_count()), limits_(limits), by_first_(static_cast<std::size_t>(letters_)) {
    for (const auto& r : p.symmetrized()) {
      std::vector<Code> codes;
      codes.reserve(r.size());
      for (Letter x : r) codes.push_back(x.code());
      by_first_[static_cast<std::size_t>(codes.front())].push_back(std::move(codes));
    }
    new_coset(0);
  }

  void add_subgroup_generator(std::span<const Letter> w) {
    std::vector<Code> codes;
    for (Letter x : w) codes.push_back(x.code());
    if (codes.empty()) return;
    scan_and_fill(0, codes);
    process_deductions();
  }

  void run() {
    for (Vertex c = 0; static_cast<std::size_t>(c) < forward_.size(); ++c) expand(c);
    // Coincidences can shorten the distance of a coset that was already
    // passed over at the depth limit; expand those until nothing changes.
    for (bool changed = true; changed;) {
      changed = false;
      const std::vector<int> d = distances();
      for (Vertex c = 0; static_cast<std::size_t>(c) < d.size(); ++c) {
        if (!alive(c) || d[static_cast<std::size_t>(c)] < 0) continue;
        if (d[static_cast<std::size_t>(c)] < depth_[static_cast<std::size_t>(c)]) depth_[static_cast<std::size_t>(c)] = d[static_cast<std::size_t>(c)];
        if (depth_[static_cast<std::size_t>(c)] < limits_.depth_limit && has_gap(c)) {
          expand(c);
          changed = true;
        }
      }
    }
  }

  EnumerationOutcome take_outcome() {
    EnumerationOutcome out;
    out.letter_count = letters_;
    out.cosets_defined = forward_.size();
    out.coincidences = coincidences_;
    if (live_ == forward_.size()) {
      out.closed = std::find(table_.begin(), table_.end(), kOutside) == table_.end();
      out.table = std::move(table_);
      return out;
    }
    std::vector<Vertex> id(forward_.size(), kOutside);
    Vertex next = 0;
    for (Vertex c = 0; static_cast<std::size_t>(c) < forward_.size(); ++c) {
      if (alive(c)) id[static_cast<std::size_t>(c)] = next++;
    }
    out.table.reserve(static_cast<std::size_t>(next) * static_cast<std::size_t>(letters_));
    out.closed = true;
    for (Vertex c = 0; static_cast<std::size_t>(c) < forward_.size(); ++c) {
      if (!alive(c)) continue;
      for (Code x = 0; x < letters_; ++x) {
        const Vertex t = entry(c, x);
        if (t == kOutside) out.closed = false;
        out.table.push_back(t == kOutside ? kOutside : id[static_cast<std::size_t>(t)]);
      }
    }
    return out;
  }

 private:
  Vertex& entry(Vertex c, Code x) {
    return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(letters_) + static_cast<std::size_t>(x)];
  }
  Vertex entry(Vertex c, Code x) const {
    return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(letters_) + static_cast<std::size_t>(x)];
  }
  bool alive(Vertex c) const { return forward_[static_cast<std::size_t>(c)] == c; }

  bool has_gap(Vertex c) const {
    for (Code x = 0; x < letters_; ++x) {
      if (entry(c, x) == kOutside) return true;
    }
    return false;
  }

  Vertex new_coset(int depth) {
    ++live_;
    if (live_ * static_cast<std::size_t>(letters_) > limits_.node_budget) {
      throw BudgetExceeded("coset enumeration exceeded the node budget of " + std::to_string(limits_.node_budget) +
                           " table cells");
    }
    const auto c = static_cast<Vertex>(forward_.size());
    forward_.push_back(c);
    depth_.push_back(depth);
    table_.resize(table_.size() + static_cast<std::size_t>(letters_), kOutside);
    return c;
  }

  Vertex rep(Vertex c) {
    Vertex root = c;
    while (forward_[static_cast<std::size_t>(root)] != root) root = forward_[static_cast<std::size_t>(root)];
    while (forward_[static_cast<std::size_t>(c)] != root) {
      const Vertex next = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void set_edge(Vertex c, Code x, Vertex d) {
    entry(c, x) = d;
    entry(d, x ^ 1) = c;
    deductions_.emplace_back(c, x);
  }

  void expand(Vertex c) {
    if (!alive(c) || depth_[static_cast<std::size_t>(c)] >= limits_.depth_limit) return;
    for (Code x = 0; x < letters_ && alive(c); ++x) {
      if (entry(c, x) != kOutside) continue;
      const Vertex d = new_coset(depth_[static_cast<std::size_t>(c)] + 1);
      set_edge(c, x, d);
      process_deductions();
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c, x] = deductions_.back();
      deductions_.pop_back();
      if (!alive(c) || entry(c, x) == kOutside) continue;
      for (const auto& r : by_first_[static_cast<std::size_t>(x)]) {
        scan(c, r);
        if (!alive(c)) break;
      }
    }
  }

  // Scans relator r at coset c without defining new cosets: closes a single
  // gap by deduction and reports a coincidence when both ends meet.
  void scan(Vertex c, const std::vector<Code>& r) {
    const auto n = static_cast<int>(r.size());
    Vertex f = c;
    int i = 0;
    while (i < n) {
      const Vertex t = entry(f, r[static_cast<std::size_t>(i)]);
      if (t == kOutside) break;
      f = t;
      ++i;
    }
    if (i == n) {
      if (f != c) coincidence(f, c);
      return;
    }
    Vertex b = c;
    int j = n - 1;
    while (j >= i) {
      const Vertex t = entry(b, r[static_cast<std::size_t>(j)] ^ 1);
      if (t == kOutside) break;
      b = t;
      --j;
    }
    if (j < i) {
      coincidence(f, b);
    } else if (j == i) {
      set_edge(f, r[static_cast<std::size_t>(i)], b);
    }
  }

  // HLT-style scan that defines cosets to complete the trace of w at c.
  void scan_and_fill(Vertex c, const std::vector<Code>& w) {
    const auto n = static_cast<int>(w.size());
    Vertex f = c;
    int i = 0;
    Vertex b = c;
    int j = n - 1;
    for (;;) {
      while (i <= j) {
        const Vertex t = entry(f, w[static_cast<std::size_t>(i)]);
        if (t == kOutside) break;
        f = t;
        ++i;
      }
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i) {
        const Vertex t = entry(b, w[static_cast<std::size_t>(j)] ^ 1);
        if (t == kOutside) break;
        b = t;
        --j;
      }
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (j == i) {
        set_edge(f, w[static_cast<std::size_t>(i)], b);
        return;
      }
      const Vertex d = new_coset(depth_[static_cast<std::size_t>(f)] + 1);
      set_edge(f, w[static_cast<std::size_t>(i)], d);
    }
  }

  void merge(Vertex a, Vertex b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[static_cast<std::size_t>(b)] = a;
    depth_[static_cast<std::size_t>(a)] = std::min(depth_[static_cast<std::size_t>(a)], depth_[static_cast<std::size_t>(b)]);
    --live_;
    ++coincidences_;
    queue_.push_back(b);
  }

  void coincidence(Vertex a, Vertex b) {
    merge(a, b);
    while (!queue_.empty()) {
      const Vertex e = queue_.front();
      queue_.pop_front();
      for (Code x = 0; x < letters_; ++x) {
        const Vertex f = entry(e, x);
        if (f == kOutside) continue;
        entry(f, x ^ 1) = kOutside;
        const Vertex e1 = rep(e);
        const Vertex f1 = rep(f);
        if (entry(e1, x) != kOutside) {
          merge(f1, entry(e1, x));
        } else if (entry(f1, x ^ 1) != kOutside) {
          merge(e1, entry(f1, x ^ 1));
        } else {
          set_edge(e1, x, f1);
        }
      }
    }
  }

  std::vector<int> distances() const {
    std::vector<int> d(forward_.size(), -1);
    std::vector<Vertex> queue{0};
    d[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Code x = 0; x < letters_; ++x) {
        const Vertex t = entry(v, x);
        if (t == kOutside || d[static_cast<std::size_t>(t)] >= 0) continue;
        d[static_cast<std::size_t>(t)] = d[static_cast<std::size_t>(v)] + 1;
        queue.push_back(t);
      }
    }
    return d;
  }

  int letters_;
  EnumerationLimits limits_;
  std::vector<std::vector<std::vector<Code>>> by_first_;
  std::vector<Vertex> table_;
  std::vector<Vertex> forward_;
  std::vector<int> depth_;
  std::vector<std::pair<Vertex, Code>> deductions_;
  std::deque<Vertex> queue_;
  std::size_t live_ = 0;
  std::size_t coincidences_ = 0;
};

}  // namespace

EnumerationOutcome enumerate_bounded(const Presentation& p, std::span<const Word> subgroup_generators,
                                     const EnumerationLimits& limits) {
  if (limits.depth_limit < 0) throw PreconditionError("depth limit must be nonnegative");
  Enumerator e(p, limits);
  for (const auto& w : subgroup_generators) {
    for (Letter x : w) {
      if (x.code() >= p.letter_count()) throw PreconditionError("subgroup generator uses an unknown letter");
    }
    e.add_subgroup_generator(w);
  }
  e.run();
  return e.take_outcome();
}

}  // namespace ends
