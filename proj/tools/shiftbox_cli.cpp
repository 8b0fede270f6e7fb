// Command-line front end: coset enumeration, generating transversals,
// chessboard decompositions, primitive-element scans, and the brute-force
// oracle, all driven by presentation files. Output is deterministic;
// words are printed freely reduced and shortlex-sorted wherever the order
// is not semantically fixed.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shiftbox/shiftbox.hpp"

namespace {

using namespace shiftbox;

struct CommonOpts {
  std::string presentation_file;
  std::string tuple_text;
  std::size_t max_cosets = EnumLimits{}.max_cosets;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ParsedPresentation load(const std::string& path) {
  ParsedPresentation parsed = parse_presentation(read_file(path));
  for (const std::string& w : parsed.warnings) std::cerr << "warning: " << w << "\n";
  return parsed;
}

GeneratingTuple tuple_from(const ParsedPresentation& parsed, const std::string& text) {
  GeneratingTuple s;
  const Alphabet& a = parsed.presentation.alphabet;
  if (text.empty()) {
    for (int g = 0; g < a.size(); ++g) s.entries.push_back(Word({{g, +1}}));
    return s;
  }
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    s.entries.push_back(parse_word(item, a));
  }
  return s;
}

std::vector<Word> shortlex_sorted(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), shortlex_less);
  return words;
}

void print_transversal_result(const Alphabet& a, const GeneratingTuple& tuple,
                              const MoveLog& log, const Transversal& tr) {
  for (const Word& w : shortlex_sorted(tr.words)) std::cout << to_string(w, a) << "\n";
  for (const NielsenMove& m : log) std::cout << to_string(m) << "\n";
  bool contains = true;
  for (const Word& w : tuple.entries)
    if (std::find(tr.words.begin(), tr.words.end(), w) == tr.words.end()) contains = false;
  std::cout << "contains-tuple: " << (contains ? "yes" : "no") << "\n";
}

int run_enumerate(const CommonOpts& opt) {
  ParsedPresentation parsed = load(opt.presentation_file);
  CosetTable t = todd_coxeter(parsed.presentation, parsed.subgroup, {opt.max_cosets});
  std::cout << t.dump_tsv();
  return 0;
}

int run_transversal(const CommonOpts& opt, bool left_right) {
  ParsedPresentation parsed = load(opt.presentation_file);
  CosetTable t = todd_coxeter(parsed.presentation, parsed.subgroup, {opt.max_cosets});
  GeneratingTuple s = tuple_from(parsed, opt.tuple_text);
  const Alphabet& a = parsed.presentation.alphabet;
  if (left_right) {
    Rank3Result res = lr_generating_transversal_rank3(t, s);
    print_transversal_result(a, res.tuple, res.log, res.transversal);
  } else {
    TransversalResult res = generating_left_transversal(t, s);
    print_transversal_result(a, res.tuple, res.log, res.transversal);
  }
  return 0;
}

int run_chessboard(const CommonOpts& opt, const std::string& second_file) {
  ParsedPresentation parsed = load(opt.presentation_file);
  CosetTable tH = todd_coxeter(parsed.presentation, parsed.subgroup, {opt.max_cosets});
  CosetTable tK = tH;
  if (!second_file.empty()) {
    ParsedPresentation second = load(second_file);
    tK = todd_coxeter(second.presentation, second.subgroup, {opt.max_cosets});
  }
  ChessboardDecomposition d = decompose(tH, tK);
  const Alphabet& a = parsed.presentation.alphabet;
  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    const Block& block = d.blocks[i];
    if (i) std::cout << "\n";
    std::cout << "block " << (i + 1) << ": " << block.columns.size() << " x "
              << block.rows.size() << "\n";
    for (int r : block.rows) {
      bool first = true;
      for (int c : block.columns) {
        if (!first) std::cout << "\t";
        first = false;
        std::cout << to_string(block.witness.at({c, r}), a);
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int run_primitive_scan(const CommonOpts& opt) {
  ParsedPresentation parsed = load(opt.presentation_file);
  CosetTable t = todd_coxeter(parsed.presentation, parsed.subgroup, {opt.max_cosets});
  GeneratingTuple s = tuple_from(parsed, opt.tuple_text);
  const Alphabet& a = parsed.presentation.alphabet;
  PrimitivityReport report = scan_subgroup(t, s);
  switch (report.subgroup_has_primitive) {
    case PrimitiveAnswer::yes:
      std::cout << "subgroup: yes " << to_string(report.witness, a) << "\n";
      break;
    case PrimitiveAnswer::no:
      std::cout << "subgroup: no (exceptional, m=" << report.quotient_rank << ")\n";
      break;
    case PrimitiveAnswer::unknown: std::cout << "subgroup: unknown\n"; break;
  }
  if (s.size() >= 2 && t.num_cosets() <= s.size() + 2) {
    PrimitivityReport per = primitive_in_each_coset(t, s);
    for (const auto& [coset, w] : per.per_coset)
      std::cout << "coset " << coset << ": " << to_string(w, a) << "\n";
  }
  return 0;
}

int run_oracle_order(const CommonOpts& opt) {
  ParsedPresentation parsed = load(opt.presentation_file);
  FiniteGroup g = materialize(parsed.presentation, {opt.max_cosets});
  std::cout << "order: " << g.order() << "\n";
  return 0;
}

int run_oracle_primitives(const CommonOpts& opt, int n, std::optional<unsigned> seed) {
  ParsedPresentation parsed = load(opt.presentation_file);
  FiniteGroup g = materialize(parsed.presentation, {opt.max_cosets});
  if (n >= 4 && !seed) fail(errc::search_too_large, "n >= 4 needs an explicit --seed");
  const Alphabet& a = parsed.presentation.alphabet;
  for (int id : primitive_elements(g, n, seed)) std::cout << to_string(g.rep(id), a) << "\n";
  return 0;
}

int run_oracle_subgroups(const CommonOpts& opt) {
  ParsedPresentation parsed = load(opt.presentation_file);
  FiniteGroup g = materialize(parsed.presentation, {opt.max_cosets});
  const Alphabet& a = parsed.presentation.alphabet;
  auto subgroups = all_subgroups(g);
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    const SubgroupInfo& info = subgroups[i];
    std::cout << "subgroup " << (i + 1) << ": order " << info.elements.size() << " index "
              << g.order() / info.elements.size() << " gens:";
    for (const Word& w : info.generator_words) std::cout << " " << to_string(w, a);
    std::cout << "\n";
  }
  return 0;
}

int run_oracle_verify(const CommonOpts& opt, const std::string& words_file) {
  ParsedPresentation parsed = load(opt.presentation_file);
  CosetTable t = todd_coxeter(parsed.presentation, parsed.subgroup, {opt.max_cosets});
  FiniteGroup g = materialize(parsed.presentation, {opt.max_cosets});
  std::vector<Word> words;
  std::istringstream in(read_file(words_file));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    words.push_back(parse_word(line, parsed.presentation.alphabet));
  }
  std::cout << "left-transversal: " << (is_left_transversal(t, words) ? "yes" : "no") << "\n";
  std::cout << "right-transversal: " << (is_right_transversal(t, words) ? "yes" : "no") << "\n";
  std::cout << "generates: " << (generates(g, words) ? "yes" : "no") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-index subgroup toolkit: coset tables, generating transversals, "
               "chessboards, primitive elements"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::string second_file;
  int prim_n = 1;
  std::optional<unsigned> seed;
  std::string verify_file;

  auto add_common = [&](CLI::App* cmd, bool with_tuple) {
    cmd->add_option("-p,--presentation", opt.presentation_file, "presentation file")->required();
    cmd->add_option("--max-cosets", opt.max_cosets, "enumeration limit");
    if (with_tuple)
      cmd->add_option("--tuple", opt.tuple_text,
                      "comma-separated generating tuple (default: the presentation's generators)");
  };

  CLI::App* enumerate = app.add_subcommand("enumerate", "coset table of the subgroup");
  add_common(enumerate, false);
  CLI::App* transversal =
      app.add_subcommand("transversal", "left transversal containing a generating tuple");
  add_common(transversal, true);
  CLI::App* lr = app.add_subcommand(
      "lr-transversal", "left-right transversal containing a generating tuple (rank <= 3)");
  add_common(lr, true);
  CLI::App* chessboard =
      app.add_subcommand("chessboard", "double-coset chessboard decomposition");
  add_common(chessboard, false);
  chessboard->add_option("--second-subgroup", second_file,
                         "presentation file supplying the row subgroup K (default: K = H)");
  CLI::App* scan = app.add_subcommand("primitive-scan", "primitive elements in and around H");
  add_common(scan, true);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force checks on the materialized group");
  oracle->require_subcommand(1);
  CLI::App* o_order = oracle->add_subcommand("order", "group order");
  add_common(o_order, false);
  CLI::App* o_prim = oracle->add_subcommand("primitives", "elements lying in a generating n-tuple");
  add_common(o_prim, false);
  o_prim->add_option("-n", prim_n, "tuple size")->required();
  unsigned seed_value = 0;
  CLI::Option* seed_opt = o_prim->add_option("--seed", seed_value, "seed for sampled search");
  CLI::App* o_sub = oracle->add_subcommand("subgroups", "complete subgroup list");
  add_common(o_sub, false);
  CLI::App* o_verify =
      oracle->add_subcommand("verify-transversal", "check a word list against the subgroup");
  add_common(o_verify, false);
  o_verify->add_option("file", verify_file, "file with one word per line")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 4;
  }

  try {
    if (seed_opt->count()) seed = seed_value;
    if (enumerate->parsed()) return run_enumerate(opt);
    if (transversal->parsed()) return run_transversal(opt, false);
    if (lr->parsed()) return run_transversal(opt, true);
    if (chessboard->parsed()) return run_chessboard(opt, second_file);
    if (scan->parsed()) return run_primitive_scan(opt);
    if (oracle->parsed()) {
      if (o_order->parsed()) return run_oracle_order(opt);
      if (o_prim->parsed()) return run_oracle_primitives(opt, prim_n, seed);
      if (o_sub->parsed()) return run_oracle_subgroups(opt);
      if (o_verify->parsed()) return run_oracle_verify(opt, verify_file);
    }
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == errc::limit_exceeded) return 2;
    if (e.code() == errc::parse_error) return 4;
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
