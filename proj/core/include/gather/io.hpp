#pragma once

#include <iosfwd>
#include <string>

#include "gather/swarm.hpp"

namespace gather {

// Text-map format: '#' robot, '.' empty; row 0 is the top line, y grows
// downward, x rightward. parse places the top-left of the map at (0,0).
Swarm parse_text_map(const std::string& text);

// Render the bounding box of s as a text map (rows top to bottom). The
// output is normalized: the swarm's min corner maps to the top-left cell.
std::string render_text_map(const Swarm& s);

// JSON format: array of [x, y] pairs.
Swarm parse_swarm_json(const std::string& text);
std::string swarm_to_json(const Swarm& s);

// Load either format by file extension (.json vs anything else = map).
Swarm load_swarm_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace gather
