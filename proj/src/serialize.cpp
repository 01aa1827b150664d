#include "slider/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace slider {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Digraph& g) {
  std::string out = "digraph " + quoted(g.name()) + " {\n";
  for (const auto& key : g.keys()) {
    out += "  " + quoted(key) + ";\n";
  }
  for (const auto& a : g.arrows()) {
    out += "  " + quoted(g.key(a.src)) + " -> " + quoted(g.key(a.dst));
    if (a.label) {
      out += " [label=" + quoted(*a.label) + "]";
    }
    out += ";\n";
  }
  return out + "}\n";
}

std::string export_json(const Digraph& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name();
  j["vertices"] = g.keys();
  j["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : g.arrows()) {
    nlohmann::ordered_json arrow;
    arrow["src"] = g.key(a.src);
    arrow["dst"] = g.key(a.dst);
    if (a.label) {
      arrow["label"] = *a.label;
    }
    j["arrows"].push_back(std::move(arrow));
  }
  return j.dump(2) + "\n";
}

Digraph parse_digraph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("digraph json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("name") || !j.contains("vertices") ||
      !j.contains("arrows")) {
    throw std::invalid_argument(
        "digraph json: expected an object with name, vertices and arrows");
  }
  std::vector<std::string> keys = j["vertices"].get<std::vector<std::string>>();
  std::vector<KeyArrow> arrows;
  for (const auto& arrow : j["arrows"]) {
    KeyArrow ka;
    ka.src = arrow.at("src").get<std::string>();
    ka.dst = arrow.at("dst").get<std::string>();
    if (arrow.contains("label") && !arrow["label"].is_null()) {
      ka.label = arrow["label"].get<std::string>();
    }
    arrows.push_back(std::move(ka));
  }
  return Digraph(j["name"].get<std::string>(), std::move(keys),
                 std::move(arrows));
}

}  // namespace slider
