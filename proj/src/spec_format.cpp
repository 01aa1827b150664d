#include "slider/spec_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slider {

namespace {

struct Line {
  std::string key;
  std::string value;
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string piece;
  while (in >> piece) {
    out.push_back(piece);
  }
  return out;
}

// key: value lines; blank lines and lines starting with '#' are ignored.
std::vector<Line> parse_lines(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("spec line " + std::to_string(lineno) +
                                  ": expected 'key: value', got '" + line +
                                  "'");
    }
    lines.push_back(
        Line{trim(line.substr(0, colon)), trim(line.substr(colon + 1))});
  }
  return lines;
}

std::string first_value(const std::vector<Line>& lines, const std::string& key) {
  for (const auto& l : lines) {
    if (l.key == key) return l.value;
  }
  throw std::invalid_argument("spec: missing required key '" + key + "'");
}

std::vector<std::string> all_values(const std::vector<Line>& lines,
                                    const std::string& key) {
  std::vector<std::string> out;
  for (const auto& l : lines) {
    if (l.key == key) out.push_back(l.value);
  }
  return out;
}

Alphabet parse_alphabet(const std::vector<Line>& lines) {
  auto labels = split_ws(first_value(lines, "alphabet"));
  if (labels.empty()) {
    throw std::invalid_argument("spec: alphabet line lists no labels");
  }
  return Alphabet(std::move(labels));
}

Symbol label_index(const Alphabet& a, const std::string& label) {
  auto idx = a.index_of(label);
  if (!idx) {
    throw std::invalid_argument("spec: unknown label '" + label + "'");
  }
  return *idx;
}

std::size_t parse_count(const std::string& value, const std::string& what) {
  std::size_t n = 0;
  if (value.empty()) {
    throw std::invalid_argument("spec: empty " + what);
  }
  for (char c : value) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("spec: " + what + " must be a number, got '" +
                                  value + "'");
    }
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  return n;
}

std::string alphabet_line(const Alphabet& a) {
  std::string out = "alphabet:";
  for (const auto& label : a.labels) {
    out += " " + label;
  }
  return out + "\n";
}

}  // namespace

LanguageSpec parse_language_spec(const std::string& text) {
  auto lines = parse_lines(text);
  std::string kind = first_value(lines, "kind");
  Alphabet alphabet = parse_alphabet(lines);

  if (kind == "tmc") {
    std::set<std::pair<Symbol, Symbol>> pairs;
    for (const auto& value : all_values(lines, "pair")) {
      auto parts = split_ws(value);
      if (parts.size() != 2) {
        throw std::invalid_argument("spec: pair line needs two labels, got '" +
                                    value + "'");
      }
      pairs.emplace(label_index(alphabet, parts[0]),
                    label_index(alphabet, parts[1]));
    }
    return TMCSpec(std::move(alphabet), std::move(pairs));
  }
  if (kind == "sft") {
    std::vector<Word> forbidden;
    for (const auto& value : all_values(lines, "forbidden")) {
      forbidden.push_back(parse_word(value, alphabet));
    }
    return SFTSpec(std::move(alphabet), std::move(forbidden));
  }
  if (kind == "sofic") {
    std::uint32_t states = static_cast<std::uint32_t>(
        parse_count(first_value(lines, "states"), "state count"));
    std::vector<SoficEdge> edges;
    for (const auto& value : all_values(lines, "edge")) {
      auto parts = split_ws(value);
      if (parts.size() != 3) {
        throw std::invalid_argument(
            "spec: edge line needs 'from to label', got '" + value + "'");
      }
      edges.push_back(SoficEdge{
          static_cast<std::uint32_t>(parse_count(parts[0], "edge state")),
          static_cast<std::uint32_t>(parse_count(parts[1], "edge state")),
          label_index(alphabet, parts[2])});
    }
    return SoficSpec(std::move(alphabet), states, std::move(edges));
  }
  if (kind == "word") {
    Word w = parse_word(first_value(lines, "word"), alphabet);
    return FiniteWordSpec(std::move(alphabet), std::move(w));
  }
  if (kind == "explicit") {
    std::vector<Word> words;
    for (const auto& value : all_values(lines, "word")) {
      words.push_back(parse_word(value, alphabet));
    }
    return ExplicitSpec(std::move(alphabet), std::move(words));
  }
  throw std::invalid_argument("spec: unknown kind '" + kind + "'");
}

std::string print_language_spec(const LanguageSpec& spec) {
  std::string out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TMCSpec>) {
          out += "kind: tmc\n";
          out += alphabet_line(s.alphabet);
          for (const auto& [u, v] : s.admissible) {
            out += "pair: " + s.alphabet.label(u) + " " + s.alphabet.label(v) +
                   "\n";
          }
        } else if constexpr (std::is_same_v<T, SFTSpec>) {
          out += "kind: sft\n";
          out += alphabet_line(s.alphabet);
          for (const auto& w : s.forbidden) {
            out += "forbidden: " + word_text(w, s.alphabet) + "\n";
          }
        } else if constexpr (std::is_same_v<T, SoficSpec>) {
          out += "kind: sofic\n";
          out += alphabet_line(s.alphabet);
          out += "states: " + std::to_string(s.states) + "\n";
          for (const auto& e : s.edges) {
            out += "edge: " + std::to_string(e.from) + " " +
                   std::to_string(e.to) + " " + s.alphabet.label(e.symbol) +
                   "\n";
          }
        } else if constexpr (std::is_same_v<T, FiniteWordSpec>) {
          out += "kind: word\n";
          out += alphabet_line(s.alphabet);
          out += "word: " + word_text(s.word, s.alphabet) + "\n";
        } else {
          static_assert(std::is_same_v<T, ExplicitSpec>);
          out += "kind: explicit\n";
          out += alphabet_line(s.alphabet);
          for (const auto& w : s.words) {
            out += "word: " + word_text(w, s.alphabet) + "\n";
          }
        }
      },
      spec);
  return out;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

LanguageSpec load_language_spec(const std::string& path) {
  return parse_language_spec(read_file(path));
}

GroupTable parse_group_table(const std::string& text) {
  auto lines = parse_lines(text);
  std::size_t order = parse_count(first_value(lines, "order"), "group order");
  std::optional<std::vector<std::string>> labels;
  for (const auto& l : lines) {
    if (l.key == "labels") {
      labels = split_ws(l.value);
    }
  }
  std::vector<Symbol> mult;
  mult.reserve(order * order);
  auto rows = all_values(lines, "row");
  if (rows.size() != order) {
    throw std::invalid_argument("group table: expected " +
                                std::to_string(order) + " rows, got " +
                                std::to_string(rows.size()));
  }
  for (const auto& row : rows) {
    auto parts = split_ws(row);
    if (parts.size() != order) {
      throw std::invalid_argument("group table: row '" + row + "' has " +
                                  std::to_string(parts.size()) +
                                  " entries, expected " +
                                  std::to_string(order));
    }
    for (const auto& p : parts) {
      mult.push_back(
          static_cast<Symbol>(parse_count(p, "group table entry")));
    }
  }
  return GroupTable(order, std::move(mult), std::move(labels));
}

std::string print_group_table(const GroupTable& g) {
  std::string out = "order: " + std::to_string(g.order()) + "\n";
  out += "labels:";
  for (const auto& label : g.alphabet().labels) {
    out += " " + label;
  }
  out += "\n";
  for (std::size_t a = 0; a < g.order(); ++a) {
    out += "row:";
    for (std::size_t b = 0; b < g.order(); ++b) {
      out += " " + std::to_string(g.mul(static_cast<Symbol>(a),
                                        static_cast<Symbol>(b)));
    }
    out += "\n";
  }
  return out;
}

GroupTable load_group_table(const std::string& path) {
  return parse_group_table(read_file(path));
}

SubstitutionSpec parse_substitution_spec(const std::string& text) {
  auto lines = parse_lines(text);
  SubstitutionSpec spec;
  spec.alphabet = parse_alphabet(lines);
  spec.seed = label_index(spec.alphabet, first_value(lines, "seed"));
  spec.length = parse_count(first_value(lines, "length"), "length");
  spec.rules.assign(spec.alphabet.size(),
                    Word({}, static_cast<std::uint32_t>(spec.alphabet.size())));
  std::vector<bool> given(spec.alphabet.size(), false);
  for (const auto& value : all_values(lines, "rule")) {
    // rule: <letter> -> <word>
    std::size_t arrow = value.find("->");
    if (arrow == std::string::npos) {
      throw std::invalid_argument(
          "substitution: rule line needs '<letter> -> <word>', got '" + value +
          "'");
    }
    Symbol s = label_index(spec.alphabet, trim(value.substr(0, arrow)));
    spec.rules[s] = parse_word(trim(value.substr(arrow + 2)), spec.alphabet);
    given[s] = true;
  }
  for (std::size_t s = 0; s < spec.alphabet.size(); ++s) {
    if (!given[s]) {
      throw std::invalid_argument("substitution: no rule for letter '" +
                                  spec.alphabet.label(static_cast<Symbol>(s)) +
                                  "'");
    }
  }
  return spec;
}

SubstitutionSpec load_substitution_spec(const std::string& path) {
  return parse_substitution_spec(read_file(path));
}

}  // namespace slider
