#include "slider/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "slider/language.hpp"
#include "slider/lamplighter.hpp"
#include "slider/serialize.hpp"
#include "slider/slider_graphs.hpp"
#include "slider/spec_format.hpp"
#include "slider/theorems.hpp"

namespace slider {

namespace {

constexpr const char* kUsage =
    "slider - circular slider graph toolkit\n"
    "\n"
    "graph commands (emit a digraph; --format dot|json, -o FILE):\n"
    "  debruijn -m M -n N                 full de Bruijn graph of span N\n"
    "  kautz -m M -n N                    Kautz graph (no repeated letters)\n"
    "  rauzy --word W -n N                Rauzy graph of a finite word\n"
    "  rauzy --substitution FILE -n N     Rauzy graph of a substitution word\n"
    "  factorial --spec FILE -n N         factorial slider graph of a language\n"
    "  periodic --spec FILE -n N          periodic slider graph of a subshift\n"
    "  trans-markov --spec FILE -n N [--restrict admissible|circular|FILE]\n"
    "  cayley-slider --group zM|FILE --k LIST -n N\n"
    "  lamplighter-cayley --n N --group zM|FILE --gens standard|wrs|swl --k LIST\n"
    "  lamplighter-schreier --n N --group zM|FILE --gens standard|wrs|swl --k LIST\n"
    "  spider --cycle K <graph command ...>    tensor with a directed cycle\n"
    "  collatz -n N                       Collatz encoding graph (= B_2^N)\n"
    "\n"
    "other commands:\n"
    "  verify sch|schc|spider --n N --group zM|FILE [--k LIST] [--json]\n"
    "  min-step --spec FILE -n N [--mode weak|strong] [--cutoff D] [--json]\n"
    "  sequence -m M -n N [--count]\n"
    "\n"
    "exit codes: 0 ok, 1 verification failed, 2 usage or input error\n";

struct OutputOpts {
  std::string format = "dot";
  std::string out_path;
};

void parse_reversed(CLI::App& app, std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  app.parse(args);
}

GroupTable resolve_group(const std::string& name) {
  if (auto cyclic = parse_cyclic_name(name)) {
    return *cyclic;
  }
  return load_group_table(name);
}

std::vector<Symbol> resolve_k(const GroupTable& g, const std::string& list) {
  std::vector<Symbol> k;
  if (list == "all") {
    for (std::size_t i = 0; i < g.order(); ++i) {
      k.push_back(static_cast<Symbol>(i));
    }
    return k;
  }
  std::stringstream in(list);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    auto idx = g.alphabet().index_of(piece);
    if (!idx) {
      throw std::invalid_argument("--k: unknown group element '" + piece +
                                  "'");
    }
    k.push_back(*idx);
  }
  if (k.empty()) {
    throw std::invalid_argument("--k: empty element list");
  }
  return k;
}

GeneratorFamily resolve_family(const std::string& gens,
                               const GroupTable& g, const std::string& k) {
  GeneratorKind kind;
  if (gens == "standard") {
    kind = GeneratorKind::kStandard;
  } else if (gens == "wrs") {
    kind = GeneratorKind::kWalkRightSwitch;
  } else if (gens == "swl") {
    kind = GeneratorKind::kSwitchWalkLeft;
  } else {
    throw std::invalid_argument("--gens: expected standard, wrs or swl");
  }
  return GeneratorFamily{kind, resolve_k(g, k)};
}

// Alphabet of the distinct characters of a CLI word argument.
Alphabet inferred_alphabet(const std::string& word) {
  std::set<char> chars(word.begin(), word.end());
  if (chars.empty()) {
    throw std::invalid_argument("--word: empty word");
  }
  std::vector<std::string> labels;
  for (char c : chars) {
    labels.emplace_back(1, c);
  }
  return Alphabet(std::move(labels));
}

Digraph parse_graph_args(std::vector<std::string> args, OutputOpts& output);

// Registers every graph-producing subcommand on `app`. The result lands in
// `*result`; output options are shared with the caller so that format flags
// survive the spider recursion.
void register_graph_commands(CLI::App& app, OutputOpts& output,
                             std::optional<Digraph>& result) {
  app.add_option("--format", output.format, "output format: dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  app.add_option("-o,--output", output.out_path, "write to a file");

  struct Shared {
    std::size_t m = 2;
    std::size_t n = 1;
    std::size_t cycle_k = 1;
    std::string word;
    std::string subst_path;
    std::string spec_path;
    std::string group = "z2";
    std::string k_list = "all";
    std::string gens = "wrs";
    std::string restrict_mode;
  };
  auto opts = std::make_shared<Shared>();

  auto add_graph_subcommand = [&app](const std::string& name,
                                     const std::string& description) {
    auto* sub = app.add_subcommand(name, description);
    sub->fallthrough();
    return sub;
  };

  auto* debruijn = add_graph_subcommand("debruijn", "full de Bruijn graph");
  debruijn->add_option("-m", opts->m, "alphabet size")->required();
  debruijn->add_option("-n", opts->n, "span")->required();
  debruijn->callback([opts, &result] {
    result = full_debruijn(opts->m, opts->n);
  });

  auto* kautz = add_graph_subcommand("kautz", "Kautz graph");
  kautz->add_option("-m", opts->m, "alphabet size")->required();
  kautz->add_option("-n", opts->n, "span")->required();
  kautz->callback([opts, &result] {
    Digraph g = factorial_slider(make_kautz_tmc(opts->m), opts->n);
    g.set_name("kautz_" + std::to_string(opts->m) + "_" +
               std::to_string(opts->n));
    result = std::move(g);
  });

  auto* rauzy = add_graph_subcommand("rauzy", "Rauzy graph of a word");
  auto* rauzy_word = rauzy->add_option("--word", opts->word, "finite word");
  auto* rauzy_subst = rauzy->add_option("--substitution", opts->subst_path,
                                        "substitution spec file");
  rauzy->add_option("-n", opts->n, "span")->required();
  rauzy_word->excludes(rauzy_subst);
  rauzy->callback([opts, &result] {
    Word w;
    Alphabet a;
    if (!opts->word.empty()) {
      a = inferred_alphabet(opts->word);
      w = parse_word(opts->word, a);
    } else if (!opts->subst_path.empty()) {
      SubstitutionSpec spec = load_substitution_spec(opts->subst_path);
      a = spec.alphabet;
      w = substitution_fixed_point(spec.rules, spec.seed, spec.length);
    } else {
      throw std::invalid_argument("rauzy: need --word or --substitution");
    }
    Digraph g = factorial_slider(FiniteWordSpec(a, w), opts->n);
    g.set_name("rauzy_" + std::to_string(opts->n));
    result = std::move(g);
  });

  auto* factorial = add_graph_subcommand(
      "factorial", "factorial slider graph of a language");
  factorial->add_option("--spec", opts->spec_path, "language spec file")
      ->required();
  factorial->add_option("-n", opts->n, "span")->required();
  factorial->callback([opts, &result] {
    result = factorial_slider(load_language_spec(opts->spec_path), opts->n);
  });

  auto* periodic = add_graph_subcommand(
      "periodic", "periodic slider graph of a subshift");
  periodic->add_option("--spec", opts->spec_path, "language spec file")
      ->required();
  periodic->add_option("-n", opts->n, "span")->required();
  periodic->callback([opts, &result] {
    result = periodic_slider(load_language_spec(opts->spec_path), opts->n);
  });

  auto* tm = add_graph_subcommand("trans-markov",
                                  "transversally Markov slider graph");
  tm->add_option("--spec", opts->spec_path, "tmc spec file")->required();
  tm->add_option("-n", opts->n, "span")->required();
  tm->add_option("--restrict", opts->restrict_mode,
                 "admissible, circular, or an explicit spec file");
  tm->callback([opts, &result] {
    LanguageSpec spec = load_language_spec(opts->spec_path);
    const auto* tmc = std::get_if<TMCSpec>(&spec);
    if (tmc == nullptr) {
      throw std::invalid_argument("trans-markov: spec file must have kind tmc");
    }
    if (opts->restrict_mode.empty()) {
      result = trans_markov_slider(*tmc, opts->n);
      return;
    }
    std::set<Word> keep;
    if (opts->restrict_mode == "admissible") {
      keep = factors(spec, opts->n);
    } else if (opts->restrict_mode == "circular") {
      keep = circular_admissible(spec, opts->n);
    } else {
      LanguageSpec explicit_spec = load_language_spec(opts->restrict_mode);
      const auto* ex = std::get_if<ExplicitSpec>(&explicit_spec);
      if (ex == nullptr) {
        throw std::invalid_argument(
            "trans-markov: --restrict file must have kind explicit");
      }
      keep = std::set<Word>(ex->words.begin(), ex->words.end());
    }
    result = trans_markov_slider(*tmc, opts->n, &keep);
  });

  auto* cayley =
      add_graph_subcommand("cayley-slider", "Cayley circular slider graph");
  cayley->add_option("--group", opts->group, "zM or a group table file")
      ->required();
  cayley->add_option("--k", opts->k_list, "comma separated elements, or all")
      ->required();
  cayley->add_option("-n", opts->n, "span")->required();
  cayley->callback([opts, &result] {
    GroupTable g = resolve_group(opts->group);
    result = cayley_slider(g, resolve_k(g, opts->k_list), opts->n);
  });

  auto* lc = add_graph_subcommand("lamplighter-cayley",
                                  "Cayley digraph of Z_n wr B");
  lc->add_option("--n", opts->n, "cycle length")->required();
  lc->add_option("--group", opts->group, "zM or a group table file")
      ->required();
  lc->add_option("--gens", opts->gens, "standard, wrs or swl");
  lc->add_option("--k", opts->k_list, "comma separated elements, or all");
  lc->callback([opts, &result] {
    GroupTable g = resolve_group(opts->group);
    result = lamplighter_cayley_digraph(
        opts->n, g, resolve_family(opts->gens, g, opts->k_list));
  });

  auto* ls = add_graph_subcommand("lamplighter-schreier",
                                  "Schreier digraph of Z_n wr B on B^n");
  ls->add_option("--n", opts->n, "cycle length")->required();
  ls->add_option("--group", opts->group, "zM or a group table file")
      ->required();
  ls->add_option("--gens", opts->gens, "standard, wrs or swl");
  ls->add_option("--k", opts->k_list, "comma separated elements, or all");
  ls->callback([opts, &result] {
    GroupTable g = resolve_group(opts->group);
    result = lamplighter_schreier_digraph(
        opts->n, g, resolve_family(opts->gens, g, opts->k_list));
  });

  auto* collatz = add_graph_subcommand("collatz", "Collatz encoding graph");
  collatz->add_option("-n", opts->n, "span (1..20)")->required();
  collatz->callback([opts, &result] { result = collatz_slider(opts->n); });

  auto* spider = app.add_subcommand(
      "spider", "tensor product of a directed cycle with a graph command");
  spider->add_option("--cycle", opts->cycle_k, "cycle length")->required();
  spider->prefix_command();
  spider->callback([opts, &output, &result, spider] {
    std::vector<std::string> rest = spider->remaining();
    if (rest.empty()) {
      throw std::invalid_argument("spider: missing the inner graph command");
    }
    Digraph inner = parse_graph_args(rest, output);
    result = tensor_product(cycle_digraph(opts->cycle_k), inner);
  });
}

Digraph parse_graph_args(std::vector<std::string> args, OutputOpts& output) {
  CLI::App app{"slider graph command"};
  app.require_subcommand(1);
  std::optional<Digraph> result;
  register_graph_commands(app, output, result);
  parse_reversed(app, std::move(args));
  if (!result) {
    throw std::invalid_argument("no graph was produced");
  }
  return *std::move(result);
}

void write_output(const std::string& text, const OutputOpts& output,
                  std::ostream& out) {
  if (output.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output.out_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot write to '" + output.out_path + "'");
  }
  file << text;
}

int run_graph_command(std::vector<std::string> args, std::ostream& out) {
  OutputOpts output;
  Digraph g = parse_graph_args(std::move(args), output);
  write_output(output.format == "json" ? export_json(g) : export_dot(g),
               output, out);
  return 0;
}

int run_verify(std::vector<std::string> args, std::ostream& out) {
  CLI::App app{"verify a structural theorem"};
  app.require_subcommand(1);
  std::size_t n = 1;
  std::string group = "z2";
  std::string k_list = "all";
  bool as_json = false;
  std::string which;
  for (const char* name : {"sch", "schc", "spider"}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
    sub->callback([&which, name] { which = name; });
  }
  app.add_option("--n", n, "span / cycle length")->required();
  app.add_option("--group", group, "zM or a group table file")->required();
  app.add_option("--k", k_list, "comma separated elements, or all");
  app.add_flag("--json", as_json, "structured report");
  parse_reversed(app, std::move(args));

  GroupTable b = resolve_group(group);
  std::vector<Symbol> k = resolve_k(b, k_list);
  TheoremReport report;
  if (which == "sch") {
    report = verify_thm_sch(n, b);
  } else if (which == "schc") {
    report = verify_thm_schc(n, b, k);
  } else {
    report = verify_thm_spider(n, b, k);
  }
  out << (as_json ? report.json_text() : report.text());
  return report.pass ? 0 : 1;
}

int run_min_step(std::vector<std::string> args, std::ostream& out) {
  CLI::App app{"minimal connecting step search"};
  std::size_t n = 1;
  std::string spec_path;
  std::string mode = "weak";
  std::optional<std::size_t> cutoff;
  bool as_json = false;
  app.add_option("--spec", spec_path, "language spec file")->required();
  app.add_option("-n", n, "span")->required();
  app.add_option("--mode", mode, "weak or strong")
      ->check(CLI::IsMember({"weak", "strong"}));
  app.add_option("--cutoff", cutoff, "largest step to try");
  app.add_flag("--json", as_json, "structured report");
  parse_reversed(app, std::move(args));

  StepSearchResult result = minimal_connecting_step(
      load_language_spec(spec_path), n,
      mode == "weak" ? Connectivity::kWeak : Connectivity::kStrong, cutoff);
  out << (as_json ? result.json_text() : result.text());
  return 0;
}

int run_sequence(std::vector<std::string> args, std::ostream& out) {
  CLI::App app{"de Bruijn sequences"};
  std::size_t m = 2;
  std::size_t n = 1;
  bool count = false;
  app.add_option("-m", m, "alphabet size")->required();
  app.add_option("-n", n, "window length")->required();
  app.add_flag("--count", count, "count sequences up to rotation");
  parse_reversed(app, std::move(args));

  if (count) {
    out << count_debruijn_sequences(m, n) << "\n";
  } else {
    out << word_text(debruijn_sequence(m, n), Alphabet(m)) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  if (args.empty() || args[0] == "-h" || args[0] == "--help" ||
      args[0] == "help") {
    out << kUsage;
    return args.empty() ? 2 : 0;
  }
  const std::string cmd = args[0];
  try {
    if (cmd == "verify") {
      return run_verify({args.begin() + 1, args.end()}, out);
    }
    if (cmd == "min-step") {
      return run_min_step({args.begin() + 1, args.end()}, out);
    }
    if (cmd == "sequence") {
      return run_sequence({args.begin() + 1, args.end()}, out);
    }
    return run_graph_command(std::move(args), out);
  } catch (const CLI::CallForHelp&) {
    out << kUsage;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << kUsage;
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace slider
