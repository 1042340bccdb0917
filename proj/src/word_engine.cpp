#include "ends/word_engine.hpp"

#include "ends/ball.hpp"
#include "ends/cayley.hpp"
#include "ends/errors.hpp"

namespace ends {

WordProblemStrategy choose_strategy(const Presentation& p, int radius_cap) {
  if (check_small_cancellation(p, Rational(1, 6)).passes) return WordProblemStrategy::dehn();
  if (radius_cap <= 0) throw PreconditionError("bounded BFS needs a positive radius cap");
  return WordProblemStrategy::bounded_bfs(radius_cap);
}

DehnReducer::DehnReducer(const Presentation& p) : by_first_(static_cast<std::size_t>(p.letter_count())), symmetrized_(p.symmetrized()) {
  if (!check_small_cancellation(p, Rational(1, 6)).passes) {
    throw StrategyError("presentation is not C'(1/6); Dehn's algorithm does not apply");
  }
  for (const auto& r : symmetrized_) by_first_[static_cast<std::size_t>(r.front().code())].push_back(&r);
}

std::optional<DehnReducer::Match> DehnReducer::find(const Word& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::optional<Match> best;
    for (const Word* r : by_first_[static_cast<std::size_t>(w[i].code())]) {
      std::size_t k = 0;
      while (k < r->size() && i + k < w.size() && w[i + k] == (*r)[k]) ++k;
      if (2 * k > r->size() && (!best || k > best->length)) best = Match{i, k, r};
    }
    if (best) return best;
  }
  return std::nullopt;
}

Word DehnReducer::reduce(std::span<const Letter> input) const {
  Word w = free_reduce(input);
  while (auto m = find(w)) {
    const std::span<const Letter> rest(m->relator->begin() + static_cast<std::ptrdiff_t>(m->length), m->relator->end());
    Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(m->start));
    const Word replacement = inverse(rest);
    next.insert(next.end(), replacement.begin(), replacement.end());
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(m->start + m->length), w.end());
    w = free_reduce(next);
  }
  return w;
}

Word dehn_reduce(std::span<const Letter> w, const Presentation& p) { return DehnReducer(p).reduce(w); }

bool is_identity(std::span<const Letter> w, const Presentation& p, const WordProblemStrategy& strategy) {
  const Word reduced = free_reduce(w);
  if (reduced.empty()) return true;
  if (strategy.kind == WordProblemStrategy::Kind::dehn) return DehnReducer(p).is_identity(reduced);

  if (strategy.radius_cap <= 0) throw PreconditionError("bounded BFS needs a positive radius cap");
  const CayleyBall ball = build_ball(p, strategy.radius_cap, strategy);
  if (const auto v = ball.graph.trace(0, reduced)) return *v == 0;
  // A closed path of length n never gets further than n/2 from its start.
  if (reduced.size() <= 2 * static_cast<std::size_t>(strategy.radius_cap) + 1) return false;
  throw UndecidedError("word of length " + std::to_string(reduced.size()) + " leaves the Cayley ball of radius " +
                       std::to_string(strategy.radius_cap));
}

Word shortlex_normal_form(std::span<const Letter> w, const BallGraph& ball) {
  const Word reduced = free_reduce(w);
  const auto v = ball.trace(0, reduced);
  if (!v) throw OutsideBallError("the path of the word leaves the ball of radius " + std::to_string(ball.radius()));
  return ball.normal_form(*v);
}

}  // namespace ends
