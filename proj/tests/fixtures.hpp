#pragma once

// Inline presentation texts for the fixture groups, shared across the unit
// tests. The permutation representations in perm_group.hpp are the
// independent ground truth for these.

#include <random>
#include <string>
#include <vector>

#include "shiftbox/shiftbox.hpp"

namespace fixtures {

inline const char* s3 = "generators: a b\nrelators: aa bb ababab\nsubgroup: a\n";
inline const char* s3_b = "generators: a b\nrelators: aa bb ababab\nsubgroup: b\n";
inline const char* s3_ab = "generators: a b\nrelators: aa bb ababab\nsubgroup: ab\n";
inline const char* k4 = "generators: x y\nrelators: xx yy xyXY\nsubgroup:\n";
inline const char* k4_x = "generators: x y\nrelators: xx yy xyXY\nsubgroup: x\n";
inline const char* k4_xy = "generators: x y\nrelators: xx yy xyXY\nsubgroup: xy\n";
inline const char* c2c2c2 = "generators: x y z\nrelators: xx yy zz xyXY xzXZ yzYZ\nsubgroup:\n";
inline const char* c2c2c2_z = "generators: x y z\nrelators: xx yy zz xyXY xzXZ yzYZ\nsubgroup: z\n";
inline const char* c3c3 = "generators: x y\nrelators: xxx yyy xyXY\nsubgroup:\n";
inline const char* c6 = "generators: c\nrelators: cccccc\nsubgroup:\n";
inline const char* c6_cc = "generators: c\nrelators: cccccc\nsubgroup: cc\n";
inline const char* c6_ccc = "generators: c\nrelators: cccccc\nsubgroup: ccc\n";
inline const char* free1_a3 = "generators: a\nrelators:\nsubgroup: aaa\n";
inline const char* f2_index2 = "generators: a b\nrelators:\nsubgroup: b aa abA\n";

inline shiftbox::CosetTable table(const char* text) {
  auto parsed = shiftbox::parse_presentation(text);
  return shiftbox::todd_coxeter(parsed.presentation, parsed.subgroup);
}

inline shiftbox::Word w(const char* text, const shiftbox::Alphabet& a) {
  return shiftbox::parse_word(text, a);
}

inline shiftbox::GeneratingTuple tuple(const shiftbox::Alphabet& a,
                                       const std::vector<const char*>& words) {
  shiftbox::GeneratingTuple s;
  for (const char* text : words) s.entries.push_back(shiftbox::parse_word(text, a));
  return s;
}

inline shiftbox::GeneratingTuple generator_tuple(const shiftbox::Alphabet& a) {
  shiftbox::GeneratingTuple s;
  for (int g = 0; g < a.size(); ++g) s.entries.push_back(shiftbox::Word({{g, +1}}));
  return s;
}

/// Fixed-seed random words for the property tests.
struct WordGen {
  std::mt19937 rng{12345};

  shiftbox::Word next(int ngens, int max_len = 8) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> gen(0, ngens - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<shiftbox::Letter> letters;
    int n = len(rng);
    for (int i = 0; i < n; ++i) letters.push_back({gen(rng), sign(rng) ? +1 : -1});
    return shiftbox::Word(letters);
  }
};

}  // namespace fixtures
