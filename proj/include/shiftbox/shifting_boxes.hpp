#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "shiftbox/chessboard.hpp"
#include "shiftbox/nielsen.hpp"
#include "shiftbox/transversal.hpp"

namespace shiftbox {

struct CleanResult {
  GeneratingTuple tuple;
  MoveLog log;
};

struct Extraction {
  int j = 0;  // 1-based entry indices
  int k = 0;
  int sign = +1;
};

struct TransversalResult {
  GeneratingTuple tuple;
  MoveLog log;
  Transversal transversal;
};

enum class Rank3Path { direct_extend, case1, case2, case3 };

struct Rank3Result {
  GeneratingTuple tuple;
  MoveLog log;
  Transversal transversal;
  Rank3Path path = Rank3Path::direct_extend;
};

namespace detail {

inline void require_nonempty(const GeneratingTuple& s) {
  if (s.entries.empty()) fail(errc::invalid_tuple, "tuple must have at least one entry");
}

inline std::vector<int> left_ids(const CosetTable& t, const GeneratingTuple& s) {
  std::vector<int> out;
  out.reserve(s.entries.size());
  for (const Word& w : s.entries) out.push_back(t.left_coset_id(w));
  return out;
}

inline std::vector<int> right_ids(const CosetTable& t, const GeneratingTuple& s) {
  std::vector<int> out;
  out.reserve(s.entries.size());
  for (const Word& w : s.entries) out.push_back(t.right_coset_id(w));
  return out;
}

inline bool no_repeats_outside_identity(const std::vector<int>& ids) {
  for (std::size_t p = 0; p < ids.size(); ++p)
    for (std::size_t q = p + 1; q < ids.size(); ++q)
      if (ids[p] == ids[q] && ids[p] != 1) return false;
  return true;
}

inline void push_move(const CosetTable&, GeneratingTuple& s, MoveLog& log, NielsenMove m) {
  s = apply_move(s, m);
  log.push_back(m);
}

}  // namespace detail

/// Left-cleaning: after this, no non-identity left coset of H holds two
/// entries (the identity coset may hold many). Scan order is fixed: targets
/// ascending, donors after the target ascending; a collision moves the
/// target into H via s_p <- s_i^-1 s_p, repeated until stable.
inline CleanResult left_clean(const CosetTable& t, GeneratingTuple s) {
  detail::require_nonempty(s);
  int n = s.size();
  MoveLog log;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 1; p <= n; ++p)
      for (int i = p + 1; i <= n; ++i) {
        if (t.is_member(s.entries[p - 1])) break;  // already in the identity coset
        if (t.is_member(concat(invert(s.entries[i - 1]), s.entries[p - 1]))) {
          detail::push_move(t, s, log, NielsenMove::lmul(p, i, -1));
          changed = true;
        }
      }
  }
  return {std::move(s), std::move(log)};
}

/// Mirror of left_clean for right cosets: collisions move the target into H
/// via s_p <- s_p s_i^-1.
inline CleanResult right_clean(const CosetTable& t, GeneratingTuple s) {
  detail::require_nonempty(s);
  int n = s.size();
  MoveLog log;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int p = 1; p <= n; ++p)
      for (int i = p + 1; i <= n; ++i) {
        if (t.is_member(s.entries[p - 1])) break;
        if (t.is_member(concat(s.entries[p - 1], invert(s.entries[i - 1])))) {
          detail::push_move(t, s, log, NielsenMove::rmul(p, i, -1));
          changed = true;
        }
      }
  }
  return {std::move(s), std::move(log)};
}

/// Finds entries s_j, s_k (possibly the same) and a sign such that
/// s_j^sign * s_k lies in an empty non-identity left coset. The scan over
/// (j, k, sign) is lexicographic with +1 before -1, so the result is
/// deterministic.
inline Extraction find_extraction(const CosetTable& t, const GeneratingTuple& s) {
  detail::require_nonempty(s);
  std::vector<int> ids = detail::left_ids(t, s);
  std::vector<bool> full(t.num_cosets() + 1, false);
  for (int id : ids) full[id] = true;
  bool have_empty = false;
  for (int c = 2; c <= t.num_cosets(); ++c)
    if (!full[c]) have_empty = true;
  if (!have_empty)
    fail(errc::no_empty_coset, "every non-identity left coset already holds an entry");

  int n = s.size();
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      for (int sign : {+1, -1}) {
        Word w = concat(sign > 0 ? s.entries[j - 1] : invert(s.entries[j - 1]), s.entries[k - 1]);
        int id = t.left_coset_id(w);
        if (id != 1 && !full[id]) return {j, k, sign};
      }
  fail(errc::no_extraction, "no entry takes a full left coset to an empty one; tuple cannot generate");
}

/// Left-extraction: moves one entry lying in H into a previously empty left
/// coset, leaving every other entry's left coset unchanged. The case split
/// follows the membership pattern of the extraction pair: donor in H,
/// recipient in H, or neither (the two-move case).
inline CleanResult left_extract(const CosetTable& t, GeneratingTuple s) {
  detail::require_nonempty(s);
  int in_h = 0;
  for (const Word& w : s.entries)
    if (t.is_member(w)) ++in_h;
  if (in_h == 0) fail(errc::no_entry_in_subgroup, "no entry lies in the subgroup");

  Extraction ex = find_extraction(t, s);
  bool mj = t.is_member(s.entries[ex.j - 1]);
  bool mk = t.is_member(s.entries[ex.k - 1]);
  MoveLog log;
  if (mj && mk) throw std::logic_error("extraction target would be the full identity coset");
  if (!mj && mk) {
    // s_k <- s_j^-1 s_k; the +1 subcase cannot reach an empty coset
    if (ex.sign != -1) throw std::logic_error("extraction into s_j s_k H with s_k in H");
    detail::push_move(t, s, log, NielsenMove::lmul(ex.k, ex.j, -1));
  } else if (mj && !mk) {
    // s_j <- s_j^sign s_k
    if (ex.sign < 0) detail::push_move(t, s, log, NielsenMove::inv(ex.j));
    detail::push_move(t, s, log, NielsenMove::rmul(ex.j, ex.k, +1));
  } else {
    // neither in H: shift the smallest-index H-entry by s_j^sign s_k
    int i = 0;
    for (int p = 1; p <= s.size(); ++p)
      if (t.is_member(s.entries[p - 1])) {
        i = p;
        break;
      }
    detail::push_move(t, s, log, NielsenMove::lmul(i, ex.k, +1));
    detail::push_move(t, s, log, NielsenMove::lmul(i, ex.j, ex.sign));
  }
  return {std::move(s), std::move(log)};
}

/// Clean, then keep extracting surplus entries out of H until all n entries
/// lie in pairwise distinct left cosets. Needs n <= [G:H].
inline CleanResult clean_extract(const CosetTable& t, GeneratingTuple s) {
  detail::require_nonempty(s);
  if (s.size() > t.num_cosets())
    fail(errc::tuple_larger_than_index,
         "tuple of size " + std::to_string(s.size()) + " cannot spread over " +
             std::to_string(t.num_cosets()) + " cosets");
  CleanResult res = left_clean(t, std::move(s));
  auto surplus_in_h = [&]() {
    int count = 0;
    for (const Word& w : res.tuple.entries)
      if (t.is_member(w)) ++count;
    return count >= 2;
  };
  while (surplus_in_h()) {
    CleanResult step = left_extract(t, std::move(res.tuple));
    res.tuple = std::move(step.tuple);
    res.log.insert(res.log.end(), step.log.begin(), step.log.end());
  }
  return res;
}

/// Shifts the tuple so its entries occupy distinct left cosets, then pads
/// with canonical representatives of the untouched cosets. The result is a
/// left transversal containing every entry of the output tuple.
inline TransversalResult generating_left_transversal(const CosetTable& t, GeneratingTuple s) {
  CleanResult res = clean_extract(t, std::move(s));
  std::vector<bool> covered(t.num_cosets() + 1, false);
  TransversalResult out;
  out.transversal.kind = TransversalKind::left;
  for (const Word& w : res.tuple.entries) {
    covered[t.left_coset_id(w)] = true;
    out.transversal.words.push_back(w);
  }
  for (int c = 1; c <= t.num_cosets(); ++c)
    if (!covered[c]) out.transversal.words.push_back(invert(t.schreier_rep(c)));
  out.tuple = std::move(res.tuple);
  out.log = std::move(res.log);
  if (!verify(t, out.transversal))
    throw std::logic_error("generating_left_transversal produced a non-transversal");
  return out;
}

/// Left-cleaning followed by right-cleaning. Right-cleaning only ever moves
/// entries into H, so the left-cleaned property survives.
inline CleanResult left_right_clean(const CosetTable& t, GeneratingTuple s) {
  CleanResult left = left_clean(t, std::move(s));
  CleanResult right = right_clean(t, std::move(left.tuple));
  left.tuple = std::move(right.tuple);
  left.log.insert(left.log.end(), right.log.begin(), right.log.end());
  if (!detail::no_repeats_outside_identity(detail::left_ids(t, left.tuple)) ||
      !detail::no_repeats_outside_identity(detail::right_ids(t, left.tuple)))
    throw std::logic_error("tuple is not left-right-cleaned after cleaning");
  return left;
}

/// Extends a left-right-cleaned tuple with at most one entry in H to a
/// left-right transversal containing it. Every entry keeps its tile: within
/// each chessboard the entries sit in distinct columns and rows, so rows can
/// be permuted to put them on the diagonal, and each unoccupied diagonal
/// tile takes the block's witness word.
inline Transversal extend_left_right(const CosetTable& t, const GeneratingTuple& s) {
  detail::require_nonempty(s);
  std::vector<int> lids = detail::left_ids(t, s);
  std::vector<int> rids = detail::right_ids(t, s);
  if (!detail::no_repeats_outside_identity(lids) || !detail::no_repeats_outside_identity(rids))
    fail(errc::not_lr_cleaned, "tuple is not left-right-cleaned");
  int in_h = static_cast<int>(std::count(lids.begin(), lids.end(), 1));
  if (in_h > 1) fail(errc::multiple_entries_in_subgroup, "more than one entry lies in H");

  ChessboardDecomposition boards = decompose(t, t);
  Transversal out;
  out.kind = TransversalKind::left_right;
  for (const Block& block : boards.blocks) {
    std::vector<int> free_cols = block.columns;
    std::vector<int> free_rows = block.rows;
    for (int p = 0; p < s.size(); ++p) {
      if (!std::binary_search(block.columns.begin(), block.columns.end(), lids[p])) continue;
      out.words.push_back(s.entries[p]);
      auto col_it = std::find(free_cols.begin(), free_cols.end(), lids[p]);
      auto row_it = std::find(free_rows.begin(), free_rows.end(), rids[p]);
      if (col_it == free_cols.end() || row_it == free_rows.end())
        throw std::logic_error("entry tile is missing from its chessboard");
      free_cols.erase(col_it);
      free_rows.erase(row_it);
    }
    for (std::size_t i = 0; i < free_cols.size(); ++i)
      out.words.push_back(block.witness.at({free_cols[i], free_rows[i]}));
  }
  if (!verify(t, out)) throw std::logic_error("extend_left_right produced a non-transversal");
  return out;
}

namespace detail {

/// Column orbit of the left coset `cid` under left multiplication by H:
/// the set of left cosets inside the double coset H g H.
inline std::set<int> double_coset_columns(const CosetTable& t, int cid) {
  std::set<int> orbit = {cid};
  std::vector<int> queue = {cid};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const Word& y : t.subgroup().generators)
      for (const Word& step : {invert(y), y}) {
        int next = t.trace(queue[head], step);
        if (orbit.insert(next).second) queue.push_back(next);
      }
  return orbit;
}

}  // namespace detail

/// Left-right generating transversal for tuples of size at most 3.
/// After left-right cleaning, a tuple with at most one entry in H extends
/// directly. With n = 3 and two entries h1, h2 in H, one entry is shifted
/// out of H by the three-way case split on where g^2 sits: a different
/// chessboard, the chessboard of g, or H itself.
inline Rank3Result lr_generating_transversal_rank3(const CosetTable& t, GeneratingTuple s) {
  detail::require_nonempty(s);
  int n = s.size();
  if (n > 3) fail(errc::rank_too_large, "left-right construction only handles tuples of size <= 3");
  if (n > t.num_cosets())
    fail(errc::tuple_larger_than_index,
         "tuple of size " + std::to_string(n) + " cannot spread over " +
             std::to_string(t.num_cosets()) + " cosets");

  CleanResult cleaned = left_right_clean(t, std::move(s));
  Rank3Result out;
  out.tuple = std::move(cleaned.tuple);
  out.log = std::move(cleaned.log);

  std::vector<int> h_pos;
  for (int p = 1; p <= n; ++p)
    if (t.is_member(out.tuple.entries[p - 1])) h_pos.push_back(p);

  if (h_pos.size() <= 1) {
    out.transversal = extend_left_right(t, out.tuple);
    out.path = Rank3Path::direct_extend;
    return out;
  }
  if (h_pos.size() != 2 || n != 3)
    fail(errc::invalid_tuple,
         "cleaning left " + std::to_string(h_pos.size()) + " of " + std::to_string(n) +
             " entries in H; the tuple cannot generate at this index");

  int hp1 = h_pos[0], hp2 = h_pos[1];
  int gp = 1 + 2 + 3 - hp1 - hp2;
  const Word& g = out.tuple.entries[gp - 1];
  Word gg = concat(g, g);
  int g_col = t.left_coset_id(g);
  int gg_col = t.left_coset_id(gg);

  if (t.is_member(gg)) {
    // g^2 in H: push one h across g's column and g across its row
    out.path = Rank3Path::case3;
    int i = 0, eps = 0;
    for (int cand : {hp1, hp2}) {
      for (int sign : {+1, -1}) {
        Word moved = concat(sign > 0 ? out.tuple.entries[cand - 1] : invert(out.tuple.entries[cand - 1]), g);
        if (t.left_coset_id(moved) != g_col) {
          i = cand;
          eps = sign;
          break;
        }
      }
      if (i) break;
    }
    int j = 0, delta = 0;
    int g_row = t.right_coset_id(g);
    for (int cand : {hp1, hp2}) {
      for (int sign : {+1, -1}) {
        Word moved = concat(g, sign > 0 ? out.tuple.entries[cand - 1] : invert(out.tuple.entries[cand - 1]));
        if (t.right_coset_id(moved) != g_row) {
          j = cand;
          delta = sign;
          break;
        }
      }
      if (j) break;
    }
    if (!i || !j)
      fail(errc::invalid_tuple, "no subgroup entry moves g's coset; the tuple cannot generate");
    if (i != j) {
      if (eps < 0) detail::push_move(t, out.tuple, out.log, NielsenMove::inv(i));
      detail::push_move(t, out.tuple, out.log, NielsenMove::rmul(i, gp, +1));
      detail::push_move(t, out.tuple, out.log, NielsenMove::rmul(gp, j, delta));
    } else {
      int other = (i == hp1) ? hp2 : hp1;
      Word z = concat(out.tuple.entries[other - 1], concat(g, delta > 0 ? out.tuple.entries[i - 1] : invert(out.tuple.entries[i - 1])));
      detail::push_move(t, out.tuple, out.log, NielsenMove::rmul(other, gp, +1));
      detail::push_move(t, out.tuple, out.log, NielsenMove::rmul(other, i, delta));
      if (t.left_coset_id(z) == g_col) {
        // h_other g h_i^delta landed in g's column; move g off it instead
        detail::push_move(t, out.tuple, out.log, NielsenMove::lmul(gp, i, eps));
      }
    }
  } else if (detail::double_coset_columns(t, g_col).count(gg_col)) {
    // g^2 in HgH: h_i g^2 sits in g^2's row; adjust if it hits g's column
    out.path = Rank3Path::case2;
    int i = 0;
    for (int cand : {hp1, hp2}) {
      if (t.left_coset_id(concat(out.tuple.entries[cand - 1], gg)) != g_col) {
        i = cand;
        break;
      }
    }
    if (i) {
      detail::push_move(t, out.tuple, out.log, NielsenMove::rmul(i, gp, +1));
      detail::push_move(t, out.tuple, out.log, NielsenMove::rmul(i, gp, +1));
    } else {
      detail::push_move(t, out.tuple, out.log, NielsenMove::rmul(hp1, gp, +1));
      detail::push_move(t, out.tuple, out.log, NielsenMove::rmul(hp1, gp, +1));
      detail::push_move(t, out.tuple, out.log, NielsenMove::lmul(hp1, hp2, -1));
    }
  } else {
    // g^2 in a chessboard disjoint from both g's and H's
    out.path = Rank3Path::case1;
    detail::push_move(t, out.tuple, out.log, NielsenMove::lmul(hp1, gp, +1));
    detail::push_move(t, out.tuple, out.log, NielsenMove::lmul(hp1, gp, +1));
  }

  out.transversal = extend_left_right(t, out.tuple);
  return out;
}

}  // namespace shiftbox
