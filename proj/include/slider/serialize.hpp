#ifndef SLIDER_SERIALIZE_HPP_
#define SLIDER_SERIALIZE_HPP_

// Byte-deterministic DOT and JSON renderings of digraphs, plus the JSON
// parser (round trip: parse_digraph_json(export_json(g)) == g).

#include <string>

#include "slider/digraph.hpp"

namespace slider {

std::string export_dot(const Digraph& g);
std::string export_json(const Digraph& g);
Digraph parse_digraph_json(const std::string& text);

}  // namespace slider

#endif  // SLIDER_SERIALIZE_HPP_
