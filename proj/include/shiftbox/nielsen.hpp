#pragma once

#include <string>
#include <vector>

#include "shiftbox/word.hpp"

namespace shiftbox {

/// Ordered tuple of words whose entries are meant to generate the group.
/// The tuple length never changes under Nielsen moves.
struct GeneratingTuple {
  std::vector<Word> entries;

  int size() const { return static_cast<int>(entries.size()); }

  friend bool operator==(const GeneratingTuple&, const GeneratingTuple&) = default;
};

/// A single Nielsen move. Indices are 1-based. LeftMultiply/RightMultiply
/// replace entry `target` by s_other^sign * s_target (resp. s_target *
/// s_other^sign); Invert and Swap are the extended moves. Moves reference
/// entries by index so duplicate entries stay unambiguous.
struct NielsenMove {
  enum class Kind { left_multiply, right_multiply, invert, swap };

  Kind kind;
  int target = 0;
  int other = 0;  // unused for invert
  int sign = +1;  // unused for invert/swap

  static NielsenMove lmul(int target, int by, int sign) {
    return {Kind::left_multiply, target, by, sign};
  }
  static NielsenMove rmul(int target, int by, int sign) {
    return {Kind::right_multiply, target, by, sign};
  }
  static NielsenMove inv(int target) { return {Kind::invert, target, 0, +1}; }
  static NielsenMove swap(int i, int j) { return {Kind::swap, i, j, +1}; }

  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

using MoveLog = std::vector<NielsenMove>;

inline std::string to_string(const NielsenMove& m) {
  switch (m.kind) {
    case NielsenMove::Kind::left_multiply:
      return "Lmul " + std::to_string(m.target) + " " + std::to_string(m.other) + " " +
             (m.sign > 0 ? "+" : "-");
    case NielsenMove::Kind::right_multiply:
      return "Rmul " + std::to_string(m.target) + " " + std::to_string(m.other) + " " +
             (m.sign > 0 ? "+" : "-");
    case NielsenMove::Kind::invert: return "Inv " + std::to_string(m.target);
    case NielsenMove::Kind::swap:
      return "Swap " + std::to_string(m.target) + " " + std::to_string(m.other);
  }
  return {};
}

/// The move undoing m; applying m then inverse_move(m) restores the tuple.
inline NielsenMove inverse_move(const NielsenMove& m) {
  NielsenMove out = m;
  if (m.kind == NielsenMove::Kind::left_multiply || m.kind == NielsenMove::Kind::right_multiply)
    out.sign = -m.sign;
  return out;
}

inline GeneratingTuple apply_move(const GeneratingTuple& s, const NielsenMove& m) {
  int n = s.size();
  auto check_index = [&](int i) {
    if (i < 1 || i > n)
      fail(errc::invalid_move, "move index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
  };
  check_index(m.target);
  GeneratingTuple out = s;
  switch (m.kind) {
    case NielsenMove::Kind::invert:
      out.entries[m.target - 1] = invert(s.entries[m.target - 1]);
      break;
    case NielsenMove::Kind::swap:
      check_index(m.other);
      if (m.target == m.other) fail(errc::invalid_move, "swap needs two distinct entries");
      std::swap(out.entries[m.target - 1], out.entries[m.other - 1]);
      break;
    case NielsenMove::Kind::left_multiply: {
      check_index(m.other);
      if (m.target == m.other) fail(errc::invalid_move, "multiply needs two distinct entries");
      const Word& by = s.entries[m.other - 1];
      out.entries[m.target - 1] =
          concat(m.sign > 0 ? by : invert(by), s.entries[m.target - 1]);
      break;
    }
    case NielsenMove::Kind::right_multiply: {
      check_index(m.other);
      if (m.target == m.other) fail(errc::invalid_move, "multiply needs two distinct entries");
      const Word& by = s.entries[m.other - 1];
      out.entries[m.target - 1] =
          concat(s.entries[m.target - 1], m.sign > 0 ? by : invert(by));
      break;
    }
  }
  return out;
}

/// Left fold of apply_move; replaying the log certifies Nielsen equivalence
/// of the endpoints.
inline GeneratingTuple replay(GeneratingTuple s, const MoveLog& log) {
  for (const NielsenMove& m : log) s = apply_move(s, m);
  return s;
}

}  // namespace shiftbox
