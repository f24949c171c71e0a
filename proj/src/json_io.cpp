#include "biorder/json_io.hpp"

#include <fstream>
#include <sstream>

#include "biorder/check_report.hpp"
#include "biorder/errors.hpp"

namespace biorder {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

std::vector<std::pair<int, int>> pair_list(const json& j, const char* key) {
  std::vector<std::pair<int, int>> out;
  if (!j.contains(key)) return out;
  const json& list = j.at(key);
  if (!list.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
  for (const json& item : list) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      throw InputError(std::string("entries of '") + key + "' must be [int, int] pairs");
    }
    out.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

void require_object(const json& j, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + " JSON must be an object");
}

}  // namespace

void to_json(json& j, const BiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back({{"dx", m.dx},
                     {"dy", m.dy},
                     {"num", c.numerator().get_str(10)},
                     {"den", c.denominator().get_str(10)}});
  }
  j = json{{"terms", std::move(terms)}};
}

BiPoly bipoly_from_json(const json& j) {
  require_object(j, "polynomial");
  if (!j.contains("terms") || !j.at("terms").is_array()) throw InputError("polynomial needs a 'terms' array");
  BiPoly p;
  for (const json& t : j.at("terms")) {
    require_object(t, "term");
    if (!t.contains("num") || !t.contains("den") || !t.at("num").is_string() || !t.at("den").is_string()) {
      throw InputError("term needs string fields 'num' and 'den'");
    }
    p += BiPoly::term(require_int(t, "dx"), require_int(t, "dy"),
                      Rational::from_parts(t.at("num").get<std::string>(), t.at("den").get<std::string>()));
  }
  return p;
}

void to_json(json& j, const BicoloredPoset& p) {
  json covers = json::array();
  for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
  j = json{{"n", p.size()}, {"covers", std::move(covers)}, {"celeste", p.celeste()}};
}

BicoloredPoset poset_from_json(const json& j) {
  require_object(j, "poset");
  std::vector<int> celeste;
  if (j.contains("celeste")) {
    const json& c = j.at("celeste");
    if (!c.is_array()) throw InputError("field 'celeste' must be an array");
    for (const json& v : c) {
      if (!v.is_number_integer()) throw InputError("celeste entries must be integers");
      celeste.push_back(v.get<int>());
    }
  }
  return BicoloredPoset::build(require_int(j, "n"), pair_list(j, "covers"), celeste);
}

void to_json(json& j, const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j = json{{"n", g.size()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
  require_object(j, "graph");
  return Graph::build(require_int(j, "n"), pair_list(j, "edges"));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

void to_json(json& j, const CheckReport& report) {
  j = json{{"name", report.name}, {"passed", report.passed}};
  j["witness"] = report.witness ? *report.witness : json(nullptr);
  if (!report.details.empty()) j["details"] = report.details;
}

std::optional<std::pair<long, long>> find_difference_point(const BiPoly& a, const BiPoly& b) {
  if (a == b) return std::nullopt;
  const long d = std::max({a.total_degree(), b.total_degree(), 0});
  for (long x = 0; x <= d; ++x) {
    for (long y = 0; y <= d; ++y) {
      if (!(a.evaluate(x, y) == b.evaluate(x, y))) return std::make_pair(x, y);
    }
  }
  return std::nullopt;  // unreachable: a nonzero polynomial of degree d has a nonroot in {0..d}^2
}

}  // namespace biorder
