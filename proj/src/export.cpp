#include "ends/export.hpp"

#include <cstdint>
#include <cstdio>

namespace ends {

std::string to_dot(const BallGraph& ball, const Presentation& p, const std::string& graph_name) {
  std::string out = "digraph " + graph_name + " {\n  node [shape=circle];\n";
  for (Vertex v = 0; static_cast<std::size_t>(v) < ball.size(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + p.format_word(ball.normal_form(v)) + "\"";
    if (v == 0) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (Vertex v = 0; static_cast<std::size_t>(v) < ball.size(); ++v) {
    for (int g = 0; g < p.generator_count(); ++g) {
      const Vertex t = ball.target(v, 2 * g);
      if (t == kOutside) continue;
      out += "  " + std::to_string(v) + " -> " + std::to_string(t) + " [label=\"" +
             p.generator_names()[static_cast<std::size_t>(g)] + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

nlohmann::json ball_to_json(const BallGraph& ball, const Presentation& p) {
  nlohmann::json vertices = nlohmann::json::array();
  nlohmann::json table = nlohmann::json::array();
  for (Vertex v = 0; static_cast<std::size_t>(v) < ball.size(); ++v) {
    vertices.push_back({{"id", v}, {"dist", ball.dist(v)}, {"word", p.format_word(ball.normal_form(v))}});
    nlohmann::json row = nlohmann::json::array();
    for (Vertex t : ball.row(v)) row.push_back(t == kOutside ? nlohmann::json(nullptr) : nlohmann::json(t));
    table.push_back(std::move(row));
  }
  nlohmann::json letters = nlohmann::json::array();
  for (int x = 0; x < p.letter_count(); ++x) letters.push_back(p.letter_name(Letter::from_code(x)));
  return {{"radius", ball.radius()}, {"size", ball.size()}, {"letters", letters}, {"vertices", vertices}, {"table", table}};
}

nlohmann::json to_json(const Presentation& p) {
  nlohmann::json relators = nlohmann::json::array();
  for (const auto& r : p.relators()) relators.push_back(p.format_word(r));
  return {{"generators", p.generator_names()}, {"relators", relators}, {"symmetrized_count", p.symmetrized().size()}};
}

std::string presentation_hash(const Instance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_text(instance)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ends
