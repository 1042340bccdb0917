#ifndef ENDS_COSET_ENUMERATION_HPP
#define ENDS_COSET_ENUMERATION_HPP

#include "ends/ball.hpp"
#include "ends/presentation.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace ends {

inline constexpr std::size_t kDefaultNodeBudget = 5'000'000;

/// Reads ENDS_NODE_BUDGET if set, otherwise kDefaultNodeBudget.
std::size_t default_node_budget();

struct EnumerationLimits {
  int depth_limit = 0;                          ///< cosets at depth < limit get full rows
  std::size_t node_budget = kDefaultNodeBudget; ///< max live table cells
};

struct EnumerationOutcome {
  int letter_count = 0;
  std::vector<Vertex> table;  ///< live cosets only, coset 0 = H
  bool closed = false;        ///< no undefined entries left: H has finite index
  std::size_t cosets_defined = 0;
  std::size_t coincidences = 0;
};

/// Bounded coset enumeration of H in G = <S | R>.
///
/// Cosets are defined breadth first out to `depth_limit`; every new edge is
/// pushed as a deduction and all relator cycles through it are scanned, so a
/// relator trace with a single gap is completed and a fully traced relator
/// that does not close produces a coincidence. Coincidences are resolved with
/// a union-find forwarding array and a FIFO queue of merged cosets. Subgroup
/// generator words are traced (and completed) at the base coset only.
///
/// Throws BudgetExceeded when the live table would exceed the node budget.
EnumerationOutcome enumerate_bounded(const Presentation& p, std::span<const Word> subgroup_generators,
                                     const EnumerationLimits& limits);

}  // namespace ends

#endif  // ENDS_COSET_ENUMERATION_HPP
