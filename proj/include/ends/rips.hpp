#ifndef ENDS_RIPS_HPP
#define ENDS_RIPS_HPP

#include "ends/presentation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ends {

struct RipsOutput {
  Presentation g_presentation;
  SubgroupSpec h_generators;  ///< the two fresh generators
  Presentation q_presentation;
  int block_length = 0;       ///< length of every positive word in the fresh generators

  Instance instance() const { return {g_presentation, h_generators, true}; }
};

struct RipsOptions {
  int max_block_length = 4096;
  std::uint64_t seed = 0;  ///< rotates the word source; any value gives a valid output
};

/// G on the generators of Q plus two fresh ones a1, a2 with relators
///   r_j w_j                       for every relator r_j of Q,
///   x^e a_k x^-e  v^-1            for every generator x, k in {1,2}, e = +-1,
/// where w_j and v are positive words of length block_length in a1, a2 cut
/// from one binary de Bruijn sequence, so no two share a long subword. The
/// block length is raised until the result is C'(1/6); PreconditionError if
/// that needs more than max_block_length.
RipsOutput rips_construct(const Presentation& q, int block_length, const RipsOptions& options = {});

struct RipsReport {
  bool small_cancellation = false;
  int max_piece_len = 0;
  int min_relator_len = 0;
  bool quotient_recovered = false;
  std::vector<Word> recovered_relators;  ///< relators of G with a1, a2 deleted, in Q's alphabet
  bool conjugation_relators_ok = false;
  int conjugation_relators_found = 0;

  bool passes() const { return small_cancellation && quotient_recovered && conjugation_relators_ok; }
};

RipsReport verify_rips(const RipsOutput& out);

/// Names for the fresh generators: the first two unused single letters when
/// Q's names are single letters, otherwise unused names of the form hN.
std::pair<std::string, std::string> fresh_generator_names(const Presentation& q);

/// Binary de Bruijn sequence of order n (every n-bit string occurs once cyclically).
std::vector<int> de_bruijn(int n);

}  // namespace ends

#endif  // ENDS_RIPS_HPP
