#include "ends/presentation.hpp"

#include "ends/errors.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace ends {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

void validate_name(const std::string& name) {
  if (name.empty() || !is_lower(name.front())) {
    throw ParseError("generator name must start with a lowercase letter: '" + name + "'");
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') {
      throw ParseError("invalid character in generator name '" + name + "'");
    }
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

bool is_none(std::string_view s) { return s == "none" || s == "(none)" || s == "trivial"; }

}  // namespace

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  if (names_.empty()) throw ParseError("empty generator list");
  std::set<std::string> seen;
  for (const auto& name : names_) {
    validate_name(name);
    if (!seen.insert(name).second) throw ParseError("duplicate generator name '" + name + "'");
    if (name.size() != 1) compact_ = false;
  }
  for (const auto& r : relators) {
    for (Letter x : r) {
      if (x.generator() >= generator_count()) throw ParseError("relator letter outside the generator range");
    }
    Word reduced = cyclically_reduce(r);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
  symmetrized_ = symmetrize(relators_);
}

std::string Presentation::letter_name(Letter x) const {
  std::string name = names_.at(static_cast<std::size_t>(x.generator()));
  if (x.is_inverse()) name.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(name.front())));
  return name;
}

std::optional<Letter> Presentation::find_letter(std::string_view token) const {
  if (token.empty()) return std::nullopt;
  std::string lowered(token);
  const bool inverse = std::isupper(static_cast<unsigned char>(lowered.front())) != 0;
  if (inverse) lowered.front() = static_cast<char>(std::tolower(static_cast<unsigned char>(lowered.front())));
  for (int g = 0; g < generator_count(); ++g) {
    if (names_[static_cast<std::size_t>(g)] == lowered) return inverse ? Letter::negative(g) : Letter::positive(g);
  }
  return std::nullopt;
}

Word Presentation::parse_word(std::string_view text) const {
  std::vector<std::string> tokens;
  if (compact_) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) tokens.emplace_back(1, c);
    }
  } else {
    tokens = split_ws(text);
  }
  Word w;
  for (const auto& tok : tokens) {
    if (tok == "1") continue;
    auto x = find_letter(tok);
    if (!x) throw ParseError("unknown generator symbol '" + tok + "'");
    w.push_back(*x);
  }
  return w;
}

std::string Presentation::format_word(std::span<const Letter> w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact_ && i > 0) out += ' ';
    out += letter_name(w[i]);
  }
  return out;
}

std::vector<Word> symmetrize(const std::vector<Word>& relators) {
  std::vector<Word> out;
  for (const auto& r : relators) {
    const Word inv = inverse(r);
    for (std::size_t k = 0; k < r.size(); ++k) {
      out.push_back(rotate(r, k));
      out.push_back(rotate(inv, k));
    }
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SmallCancellationReport check_small_cancellation(const Presentation& p, const Rational& lambda) {
  SmallCancellationReport report;
  const auto& sym = p.symmetrized();
  if (sym.empty()) {
    report.passes = true;
    report.vacuous = true;
    return report;
  }
  // The longest common prefix over all pairs is attained by a pair that is
  // adjacent in lexicographic order.
  std::vector<const Word*> sorted;
  sorted.reserve(sym.size());
  for (const auto& w : sym) sorted.push_back(&w);
  std::sort(sorted.begin(), sorted.end(), [](const Word* a, const Word* b) {
    return std::lexicographical_compare(a->begin(), a->end(), b->begin(), b->end());
  });
  report.min_relator_len = static_cast<int>(sorted.front()->size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    report.min_relator_len = std::min(report.min_relator_len, static_cast<int>(sorted[i]->size()));
    if (i == 0) continue;
    const Word& a = *sorted[i - 1];
    const Word& b = *sorted[i];
    const auto mismatch = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    report.max_piece_len = std::max(report.max_piece_len, static_cast<int>(mismatch.first - a.begin()));
  }
  report.passes = Rational(report.max_piece_len) < lambda * report.min_relator_len;
  return report;
}

Instance parse_instance(std::string_view text) {
  enum class Section { none, relators, subgroup };
  std::vector<std::string> names;
  std::vector<std::string> relator_texts;
  std::vector<std::string> subgroup_texts;
  std::optional<int> epsilon;
  bool saw_generators = false;
  bool has_subgroup = false;
  Section section = Section::none;

  std::istringstream in{std::string(text)};
  int lineno = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    const bool indented = std::isspace(static_cast<unsigned char>(line.front())) != 0;
    if (indented) {
      std::string_view body = trim(line);
      if (body.starts_with("- ")) body = trim(body.substr(2));
      switch (section) {
        case Section::relators: relator_texts.emplace_back(body); break;
        case Section::subgroup: subgroup_texts.emplace_back(body); break;
        case Section::none:
          throw ParseError("line " + std::to_string(lineno) + ": indented word outside a relators/subgroup section");
      }
      continue;
    }
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key:'");
    std::string_view key = trim(line.substr(0, colon));
    std::string_view rest = trim(line.substr(colon + 1));
    section = Section::none;
    if (key == "generators") {
      names = split_ws(rest);
      saw_generators = true;
    } else if (key == "relators") {
      section = Section::relators;
      if (!rest.empty() && !is_none(rest)) {
        std::string item;
        std::istringstream parts{std::string(rest)};
        while (std::getline(parts, item, ',')) {
          if (!trim(item).empty()) relator_texts.emplace_back(trim(item));
        }
      }
    } else if (key == "subgroup") {
      section = Section::subgroup;
      has_subgroup = true;
      if (!rest.empty() && !is_none(rest)) {
        std::string item;
        std::istringstream parts{std::string(rest)};
        while (std::getline(parts, item, ',')) {
          if (!trim(item).empty()) subgroup_texts.emplace_back(trim(item));
        }
      }
    } else if (key == "epsilon") {
      try {
        epsilon = std::stoi(std::string(rest));
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": epsilon must be an integer");
      }
      if (*epsilon < 0) throw ParseError("epsilon must be nonnegative");
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + std::string(key) + "'");
    }
  }
  if (!saw_generators || names.empty()) throw ParseError("empty generator list");

  // Build the alphabet first so that words can be tokenized against it.
  Presentation alphabet(names, {});
  std::vector<Word> relators;
  for (const auto& t : relator_texts) relators.push_back(alphabet.parse_word(t));

  Instance instance;
  instance.group = Presentation(names, relators);
  instance.has_subgroup = has_subgroup;
  instance.subgroup.declared_epsilon = epsilon;
  for (const auto& t : subgroup_texts) {
    Word w = free_reduce(alphabet.parse_word(t));
    if (w.empty()) throw ParseError("subgroup generator '" + t + "' reduces to the empty word");
    instance.subgroup.generators.push_back(std::move(w));
  }
  return instance;
}

Presentation parse_presentation(std::string_view text) { return parse_instance(text).group; }

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string to_text(const Presentation& p) {
  std::string out = "generators:";
  for (const auto& n : p.generator_names()) out += " " + n;
  out += "\n";
  if (p.relators().empty()) {
    out += "relators: none\n";
  } else {
    out += "relators:\n";
    for (const auto& r : p.relators()) out += "  " + p.format_word(r) + "\n";
  }
  return out;
}

std::string to_text(const Instance& instance) {
  std::string out = to_text(instance.group);
  if (instance.has_subgroup) {
    if (instance.subgroup.generators.empty()) {
      out += "subgroup: none\n";
    } else {
      out += "subgroup:\n";
      for (const auto& w : instance.subgroup.generators) out += "  " + instance.group.format_word(w) + "\n";
    }
  }
  if (instance.subgroup.declared_epsilon) out += "epsilon: " + std::to_string(*instance.subgroup.declared_epsilon) + "\n";
  return out;
}

}  // namespace ends
