#pragma once

#include <vector>

#include "shiftbox/coset_table.hpp"

namespace shiftbox {

enum class TransversalKind { left, right, left_right };

/// One representative per coset: per left coset, per right coset, or per
/// both at once (left-right).
struct Transversal {
  std::vector<Word> words;
  TransversalKind kind = TransversalKind::left;
};

namespace detail {

inline bool hits_each_coset_once(const CosetTable& t, const std::vector<Word>& words, bool left) {
  if (static_cast<int>(words.size()) != t.num_cosets()) return false;
  std::vector<bool> seen(t.num_cosets() + 1, false);
  for (const Word& w : words) {
    int id = left ? t.left_coset_id(w) : t.right_coset_id(w);
    if (seen[id]) return false;
    seen[id] = true;
  }
  return true;
}

}  // namespace detail

inline bool is_left_transversal(const CosetTable& t, const std::vector<Word>& words) {
  return detail::hits_each_coset_once(t, words, true);
}

inline bool is_right_transversal(const CosetTable& t, const std::vector<Word>& words) {
  return detail::hits_each_coset_once(t, words, false);
}

/// Checks the bijectivity invariant demanded by the transversal's kind.
inline bool verify(const CosetTable& t, const Transversal& tr) {
  switch (tr.kind) {
    case TransversalKind::left: return is_left_transversal(t, tr.words);
    case TransversalKind::right: return is_right_transversal(t, tr.words);
    case TransversalKind::left_right:
      return is_left_transversal(t, tr.words) && is_right_transversal(t, tr.words);
  }
  return false;
}

/// The choice-free left transversal: inverses of the shortlex Schreier
/// representatives. Contains the identity and is fully determined by the
/// table.
inline Transversal canonical_left_transversal(const CosetTable& t) {
  Transversal out;
  out.kind = TransversalKind::left;
  out.words.reserve(t.num_cosets());
  for (int c = 1; c <= t.num_cosets(); ++c) out.words.push_back(invert(t.schreier_rep(c)));
  return out;
}

/// The unique element of the left transversal tr lying in the coset wH.
inline Word locate_in_transversal(const CosetTable& t, const Transversal& tr, const Word& w) {
  std::vector<const Word*> by_coset(t.num_cosets() + 1, nullptr);
  for (const Word& u : tr.words) {
    int id = t.left_coset_id(u);
    if (by_coset[id]) fail(errc::not_a_transversal, "two words in the same left coset");
    by_coset[id] = &u;
  }
  if (static_cast<int>(tr.words.size()) != t.num_cosets())
    fail(errc::not_a_transversal, "word list does not cover every left coset");
  return *by_coset[t.left_coset_id(w)];
}

}  // namespace shiftbox
