#ifndef ENDS_TESTS_FIXTURES_HPP
#define ENDS_TESTS_FIXTURES_HPP

#include "ends/presentation.hpp"

#include <string>

namespace ends::testing {

inline Instance instance(const char* text) { return parse_instance(text); }

inline Presentation genus2() { return parse_presentation("generators: a b c d\nrelators:\n  a b A B c d C D\n"); }
inline Presentation f2() { return parse_presentation("generators: a b\nrelators: none\n"); }
inline Presentation z() { return parse_presentation("generators: a\nrelators: none\n"); }

inline SubgroupSpec subgroup(const Presentation& p, std::initializer_list<const char*> words) {
  SubgroupSpec h;
  for (const char* w : words) h.generators.push_back(p.parse_word(w));
  return h;
}

inline std::string data_path(const std::string& name) { return std::string(ENDS_DATA_DIR) + "/" + name; }

}  // namespace ends::testing

#endif  // ENDS_TESTS_FIXTURES_HPP
