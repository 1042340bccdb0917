#include "ends/rips.hpp"

#include "ends/errors.hpp"

#include <algorithm>
#include <set>

namespace ends {

std::vector<int> de_bruijn(int n) {
  if (n < 1 || n > 24) throw PreconditionError("de Bruijn order out of range");
  // Concatenation of Lyndon words whose length divides n, in lexicographic order.
  std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> out;
  const auto step = [&](auto&& self, int t, int p) -> void {
    if (t > n) {
      if (n % p == 0) out.insert(out.end(), a.begin() + 1, a.begin() + p + 1);
      return;
    }
    a[static_cast<std::size_t>(t)] = a[static_cast<std::size_t>(t - p)];
    self(self, t + 1, p);
    for (int b = a[static_cast<std::size_t>(t - p)] + 1; b < 2; ++b) {
      a[static_cast<std::size_t>(t)] = b;
      self(self, t + 1, t);
    }
  };
  step(step, 1, 1);
  return out;
}

std::pair<std::string, std::string> fresh_generator_names(const Presentation& q) {
  const std::set<std::string> used(q.generator_names().begin(), q.generator_names().end());
  std::vector<std::string> picked;
  if (q.compact_names()) {
    for (char c = 'a'; c <= 'z' && picked.size() < 2; ++c) {
      if (!used.contains(std::string(1, c))) picked.emplace_back(1, c);
    }
  }
  for (int i = 1; picked.size() < 2; ++i) {
    const std::string name = "h" + std::to_string(i);
    if (!used.contains(name)) picked.push_back(name);
  }
  return {picked[0], picked[1]};
}

namespace {

struct Layout {
  std::vector<std::string> names;
  int a1 = 0;
  int a2 = 0;
};

Layout layout_for(const Presentation& q) {
  Layout l;
  l.names = q.generator_names();
  const auto [n1, n2] = fresh_generator_names(q);
  l.a1 = static_cast<int>(l.names.size());
  l.a2 = l.a1 + 1;
  l.names.push_back(n1);
  l.names.push_back(n2);
  return l;
}

Presentation build(const Presentation& q, const Layout& l, int block_length, std::uint64_t seed) {
  const std::size_t words = q.relators().size() + 4 * static_cast<std::size_t>(q.generator_count());
  int order = 1;
  while ((std::size_t{1} << order) < words * static_cast<std::size_t>(block_length)) ++order;
  const std::vector<int> bits = de_bruijn(order);
  const std::size_t offset = static_cast<std::size_t>(seed % bits.size());
  std::size_t cursor = 0;
  const auto next_word = [&] {
    Word w;
    for (int i = 0; i < block_length; ++i, ++cursor) {
      w.push_back(Letter::positive(bits[(offset + cursor) % bits.size()] == 0 ? l.a1 : l.a2));
    }
    return w;
  };

  std::vector<Word> relators;
  for (const auto& r : q.relators()) relators.push_back(r * next_word());
  for (int x = 0; x < q.generator_count(); ++x) {
    for (int k : {l.a1, l.a2}) {
      for (Letter e : {Letter::positive(x), Letter::negative(x)}) {
        Word conj{e, Letter::positive(k), e.inverse()};
        const Word v = next_word();
        const Word v_inv = inverse(v);
        conj.insert(conj.end(), v_inv.begin(), v_inv.end());
        relators.push_back(std::move(conj));
      }
    }
  }
  return Presentation(l.names, relators);
}

}  // namespace

RipsOutput rips_construct(const Presentation& q, int block_length, const RipsOptions& options) {
  if (q.generator_count() == 0) throw PreconditionError("Q needs at least one generator");
  if (block_length < 1) throw PreconditionError("block length must be positive");
  const Layout l = layout_for(q);
  for (int b = block_length; b <= options.max_block_length; b += std::max(1, b / 4)) {
    Presentation g = build(q, l, b, options.seed);
    if (check_small_cancellation(g, Rational(1, 6)).passes) {
      RipsOutput out;
      out.g_presentation = std::move(g);
      out.h_generators.generators = {Word{Letter::positive(l.a1)}, Word{Letter::positive(l.a2)}};
      out.q_presentation = q;
      out.block_length = b;
      return out;
    }
  }
  throw PreconditionError("no block length up to " + std::to_string(options.max_block_length) + " gives C'(1/6)");
}

RipsReport verify_rips(const RipsOutput& out) {
  RipsReport report;
  const Presentation& g = out.g_presentation;
  const Presentation& q = out.q_presentation;
  const auto sc = check_small_cancellation(g, Rational(1, 6));
  report.small_cancellation = sc.passes;
  report.max_piece_len = sc.max_piece_len;
  report.min_relator_len = sc.min_relator_len;

  const int n = q.generator_count();
  bool alphabet_ok = g.generator_count() == n + 2 &&
                     std::equal(q.generator_names().begin(), q.generator_names().end(), g.generator_names().begin());
  std::set<int> fresh;
  for (const auto& w : out.h_generators.generators) {
    if (w.size() != 1 || w.front().is_inverse() || w.front().generator() < n) alphabet_ok = false;
    if (!w.empty()) fresh.insert(w.front().generator());
  }
  alphabet_ok = alphabet_ok && fresh.size() == 2;
  if (!alphabet_ok) return report;

  // (b) delete the fresh letters and compare with Q's relators.
  for (const auto& r : g.relators()) {
    Word killed;
    for (Letter x : r) {
      if (x.generator() < n) killed.push_back(x);
    }
    killed = cyclically_reduce(killed);
    if (!killed.empty()) report.recovered_relators.push_back(std::move(killed));
  }
  std::vector<Word> expected = q.relators();
  std::vector<Word> got = report.recovered_relators;
  const auto order = [](const Word& a, const Word& b) { return shortlex_less(a, b); };
  std::sort(expected.begin(), expected.end(), order);
  std::sort(got.begin(), got.end(), order);
  report.quotient_recovered = expected == got;

  // (c) x^e a x^-e followed by a word in the fresh letters only, up to rotation.
  std::set<std::pair<int, int>> covered;  // (letter of x, fresh generator)
  for (const auto& r : g.relators()) {
    for (std::size_t s = 0; s < r.size(); ++s) {
      const Word w = rotate(r, s);
      if (w.size() < 3 || w[0].generator() >= n || !fresh.contains(w[1].generator()) || w[1].is_inverse() ||
          w[2] != w[0].inverse()) {
        continue;
      }
      if (std::all_of(w.begin() + 3, w.end(), [&](Letter x) { return fresh.contains(x.generator()); })) {
        covered.insert({w[0].code(), w[1].generator()});
        ++report.conjugation_relators_found;
        break;
      }
    }
  }
  report.conjugation_relators_ok = covered.size() == 4 * static_cast<std::size_t>(n);
  return report;
}

}  // namespace ends
