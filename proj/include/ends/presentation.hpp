#ifndef ENDS_PRESENTATION_HPP
#define ENDS_PRESENTATION_HPP

#include "ends/rational.hpp"
#include "ends/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ends {

/// A finite presentation <S | R>. Relators are stored freely and cyclically
/// reduced; the symmetrized closure (all rotations of every relator and of
/// its inverse) is computed once at construction and kept in shortlex order.
///
/// Generator names are either single lowercase ASCII letters, in which case
/// words may be written without separators ("abAB"), or longer identifiers
/// such as g1, g2 that must be separated by whitespace. The inverse of a
/// generator is written with its first character in uppercase.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  int generator_count() const { return static_cast<int>(names_.size()); }
  int letter_count() const { return 2 * generator_count(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<Word>& symmetrized() const { return symmetrized_; }
  bool compact_names() const { return compact_; }

  std::string letter_name(Letter x) const;
  std::optional<Letter> find_letter(std::string_view token) const;

  /// Parses a word in this presentation's alphabet; "1" and "" denote the empty word.
  Word parse_word(std::string_view text) const;
  std::string format_word(std::span<const Letter> w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<Word> symmetrized_;
  bool compact_ = true;
};

/// Generators of a subgroup H as words in the ambient generators.
struct SubgroupSpec {
  std::vector<Word> generators;
  std::optional<int> declared_epsilon;

  bool is_trivial() const { return generators.empty(); }
  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

/// A presentation file: the group and an optional subgroup section.
struct Instance {
  Presentation group;
  SubgroupSpec subgroup;
  bool has_subgroup = false;

  friend bool operator==(const Instance&, const Instance&) = default;
};

Instance parse_instance(std::string_view text);
Presentation parse_presentation(std::string_view text);
Instance load_instance(const std::string& path);

/// Canonical text form; parse_instance(to_text(i)) == i.
std::string to_text(const Instance& instance);
std::string to_text(const Presentation& p);

/// All cyclic rotations of each relator and its inverse, deduplicated, in shortlex order.
std::vector<Word> symmetrize(const std::vector<Word>& relators);

struct SmallCancellationReport {
  bool passes = false;
  bool vacuous = false;
  int max_piece_len = 0;
  int min_relator_len = 0;
};

/// A piece is a maximal common prefix of two distinct symmetrized relators.
/// The presentation passes iff max_piece_len < lambda * min_relator_len.
SmallCancellationReport check_small_cancellation(const Presentation& p, const Rational& lambda);

}  // namespace ends

#endif  // ENDS_PRESENTATION_HPP
