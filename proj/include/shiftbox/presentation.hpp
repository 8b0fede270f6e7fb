#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "shiftbox/word.hpp"

namespace shiftbox {

/// A finite presentation <X | R>. Relators are kept freely reduced, exactly
/// as given; no cyclic reduction or symmetrization happens at this layer.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// A finitely generated subgroup, given by generator words. An empty list
/// is the trivial subgroup.
struct SubgroupSpec {
  std::vector<Word> generators;

  friend bool operator==(const SubgroupSpec&, const SubgroupSpec&) = default;
};

struct ParsedPresentation {
  Presentation presentation;
  SubgroupSpec subgroup;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

/// Parses the line-oriented presentation format:
///
///   generators: <name> <name> ...
///   relators: <word> <word> ...
///   subgroup: <word> <word> ...
///
/// The generators line is required; relators and subgroup are optional.
/// Relators that reduce to the identity are dropped with a warning.
inline ParsedPresentation parse_presentation(const std::string& text) {
  std::string gens_line, relators_line, subgroup_line;
  bool saw_gens = false, saw_relators = false, saw_subgroup = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty()) continue;
    auto take = [&](const char* key, std::string& dst, bool& seen) {
      std::size_t len = std::string(key).size();
      if (trimmed.compare(0, len, key) != 0) return false;
      if (seen) fail(errc::parse_error, std::string("duplicate ") + key + " line");
      seen = true;
      dst = trimmed.substr(len);
      return true;
    };
    if (take("generators:", gens_line, saw_gens)) continue;
    if (take("relators:", relators_line, saw_relators)) continue;
    if (take("subgroup:", subgroup_line, saw_subgroup)) continue;
    fail(errc::parse_error, "unrecognized line " + std::to_string(lineno) + ": " + trimmed);
  }
  if (!saw_gens) fail(errc::parse_error, "missing generators line");

  ParsedPresentation out;
  out.presentation.alphabet = Alphabet(detail::split_tokens(gens_line));
  for (const std::string& tok : detail::split_tokens(relators_line)) {
    Word w = parse_word(tok, out.presentation.alphabet);
    if (w.empty())
      out.warnings.push_back("relator '" + tok + "' reduces to the identity; dropped");
    else
      out.presentation.relators.push_back(std::move(w));
  }
  for (const std::string& tok : detail::split_tokens(subgroup_line))
    out.subgroup.generators.push_back(parse_word(tok, out.presentation.alphabet));
  return out;
}

inline std::string serialize(const Presentation& p, const SubgroupSpec& h) {
  std::string out = "generators:";
  for (const auto& name : p.alphabet.names()) out += " " + name;
  out += "\nrelators:";
  for (const Word& r : p.relators) out += " " + to_string(r, p.alphabet);
  out += "\nsubgroup:";
  for (const Word& y : h.generators) out += " " + to_string(y, p.alphabet);
  out += "\n";
  return out;
}

}  // namespace shiftbox
