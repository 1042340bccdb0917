#ifndef ENDS_EXPORT_HPP
#define ENDS_EXPORT_HPP

#include "ends/ball.hpp"
#include "ends/presentation.hpp"

#include <json.hpp>

#include <string>

namespace ends {

/// Undirected DOT drawing; one edge per generator edge, labelled by its name.
std::string to_dot(const BallGraph& ball, const Presentation& p, const std::string& graph_name = "ball");

/// {radius, size, vertices: [{id, dist, word}], table: [[targets per letter]]}
nlohmann::json ball_to_json(const BallGraph& ball, const Presentation& p);

nlohmann::json to_json(const Presentation& p);

/// FNV-1a of the canonical text of the instance, as 16 hex digits.
std::string presentation_hash(const Instance& instance);

}  // namespace ends

#endif  // ENDS_EXPORT_HPP
