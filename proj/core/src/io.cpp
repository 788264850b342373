#include "gather/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gather/error.hpp"

namespace gather {

Swarm parse_text_map(const std::string& text) {
  std::vector<Coord> cells;
  std::int64_t y = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line); ++y) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    for (std::size_t x = 0; x < line.size(); ++x) {
      const char ch = line[x];
      if (ch == '#')
        cells.push_back({static_cast<std::int64_t>(x), y});
      else if (ch != '.')
        throw invalid_input("text map: unexpected character '" +
                            std::string(1, ch) + "'");
    }
  }
  if (cells.empty()) throw invalid_input("text map: no robots");
  return Swarm(std::move(cells));
}

std::string render_text_map(const Swarm& s) {
  if (s.empty()) throw invalid_input("render: empty swarm");
  const Coord lo = s.min_corner();
  const Coord hi = s.max_corner();
  std::string out;
  for (std::int64_t y = lo.y; y <= hi.y; ++y) {
    for (std::int64_t x = lo.x; x <= hi.x; ++x)
      out.push_back(s.contains({x, y}) ? '#' : '.');
    out.push_back('\n');
  }
  return out;
}

Swarm parse_swarm_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw invalid_input("swarm json: expected an array");
  std::vector<Coord> cells;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw invalid_input("swarm json: expected [x, y] pairs");
    cells.push_back({item[0].get<std::int64_t>(), item[1].get<std::int64_t>()});
  }
  if (cells.empty()) throw invalid_input("swarm json: no robots");
  return Swarm(std::move(cells));
}

std::string swarm_to_json(const Swarm& s) {
  nlohmann::json j = nlohmann::json::array();
  for (Coord c : s.cells()) j.push_back({c.x, c.y});
  return j.dump();
}

Swarm load_swarm_file(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
    return parse_swarm_json(text);
  return parse_text_map(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input("cannot write file: " + path);
  out << content;
}

}  // namespace gather
