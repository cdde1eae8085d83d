#include "irts/skyline_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "irts/path_format.hpp"

namespace irts {

std::string join_path(const RoadNetwork& net, std::span<const VertexId> path) {
  return join_path(&net, path);
}

std::string join_path(const RoadNetwork* net, std::span<const VertexId> path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(net ? net->external_id(path[i]) : ExternalId{path[i]});
  }
  return out;
}

void write_skyline_text(std::ostream& os, const SkylineSet& skyline, const RoadNetwork& net) {
  for (const SkylinePoint& p : skyline.points()) {
    os << format_real(p.detour) << ' ' << format_real(p.travel) << ' ' << format_real(p.reward);
    for (VertexId v : p.path) os << ' ' << net.external_id(v);
    os << '\n';
  }
}

void write_skyline_json(std::ostream& os, const SkylineSet& skyline, const RoadNetwork& net) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SkylinePoint& p : skyline.points()) {
    nlohmann::ordered_json path = nlohmann::ordered_json::array();
    for (VertexId v : p.path) path.push_back(net.external_id(v));
    arr.push_back({{"detour", p.detour},
                   {"travel", p.travel},
                   {"reward", p.reward},
                   {"path", std::move(path)}});
  }
  os << arr.dump(2) << '\n';
}

std::vector<SkylineRecord> read_skyline(std::istream& is) {
  std::stringstream buf;
  buf << is.rdbuf();
  std::string text = buf.str();
  std::vector<SkylineRecord> out;

  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json arr;
    try {
      arr = nlohmann::json::parse(text);
      for (const auto& o : arr) {
        out.push_back({o.at("detour").get<double>(), o.at("travel").get<double>(),
                       o.at("reward").get<double>(),
                       o.at("path").get<std::vector<ExternalId>>()});
      }
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("bad skyline JSON: ") + e.what());
    }
    return out;
  }

  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream in(line);
    SkylineRecord r;
    if (!(in >> r.detour >> r.travel >> r.reward)) {
      throw InputError("skyline line " + std::to_string(line_no) +
                       ": expected `detour travel reward id...`");
    }
    ExternalId id;
    while (in >> id) r.path.push_back(id);
    if (!in.eof()) throw InputError("skyline line " + std::to_string(line_no) + ": bad vertex id");
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SkylineRecord> read_skyline_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open skyline file " + path);
  try {
    return read_skyline(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

SkylineSet to_skyline(const std::vector<SkylineRecord>& records) {
  std::vector<SkylinePoint> pts;
  for (const auto& r : records) pts.push_back({r.detour, r.travel, r.reward, {}});
  SkylineSet out;
  for (SkylinePoint& p : non_dominated(std::move(pts))) out.insert(std::move(p));
  return out;
}

}  // namespace irts
