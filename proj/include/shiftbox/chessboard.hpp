#pragma once

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "shiftbox/transversal.hpp"

namespace shiftbox {

/// One chessboard: the double-partitioning of a double coset KgH into its
/// left cosets of H (columns) and right cosets of K (rows). Every tile holds
/// a witness word in the corresponding intersection, so each block is
/// complete bipartite.
struct Block {
  std::vector<int> columns;  // left-coset ids of H, ascending
  std::vector<int> rows;     // right-coset ids of K, ascending
  std::map<std::pair<int, int>, Word> witness;
};

struct ChessboardDecomposition {
  std::vector<Block> blocks;
  int columns_total = 0;  // [G:H]
  int rows_total = 0;     // [G:K]
  bool same_subgroup = false;
};

namespace detail {

/// Orbit partition of 1..k under a list of id permutations, each orbit
/// reported sorted, orbits ordered by smallest member.
inline std::vector<std::vector<int>> orbits(int k, const std::vector<std::vector<int>>& actions) {
  std::vector<bool> seen(k + 1, false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= k; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit = {start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& act : actions) {
        int next = act[orbit[head]];
        if (!seen[next]) {
          seen[next] = true;
          orbit.push_back(next);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace detail

/// Decomposes G into chessboards for the pair (H, K), where tH enumerates H
/// and tK enumerates K over the same presentation. Columns are grouped as
/// orbits of left cosets of H under left multiplication by K's generators,
/// rows dually; the two orbit families are paired through a shared element.
/// Witnesses are grown breadth-first inside each block, multiplying by
/// subgroup generators on the matching side.
inline ChessboardDecomposition decompose(const CosetTable& tH, const CosetTable& tK) {
  if (!(tH.presentation() == tK.presentation()))
    fail(errc::presentation_mismatch, "chessboard tables must share one presentation");

  ChessboardDecomposition out;
  out.columns_total = tH.num_cosets();
  out.rows_total = tK.num_cosets();

  const auto& h_gens = tH.subgroup().generators;
  const auto& k_gens = tK.subgroup().generators;

  out.same_subgroup = true;
  for (const Word& y : k_gens)
    if (!tH.is_member(y)) out.same_subgroup = false;
  for (const Word& y : h_gens)
    if (!tK.is_member(y)) out.same_subgroup = false;

  // Left multiplication by y sends the left coset with id c to the one with
  // id trace(c, y^-1); right multiplication acts on right-coset ids by plain
  // tracing.
  std::vector<std::vector<int>> col_actions, row_actions;
  for (const Word& y : k_gens) {
    std::vector<int> act(out.columns_total + 1, 0);
    Word yi = invert(y);
    for (int c = 1; c <= out.columns_total; ++c) act[c] = tH.trace(c, yi);
    col_actions.push_back(std::move(act));
  }
  for (const Word& y : h_gens) {
    std::vector<int> act(out.rows_total + 1, 0);
    for (int r = 1; r <= out.rows_total; ++r) act[r] = tK.trace(r, y);
    row_actions.push_back(std::move(act));
  }

  auto col_orbits = detail::orbits(out.columns_total, col_actions);
  auto row_orbits = detail::orbits(out.rows_total, row_actions);

  std::vector<bool> row_used(row_orbits.size(), false);
  for (const auto& cols : col_orbits) {
    Block block;
    block.columns = cols;

    // a word sitting in the block: the canonical representative of the
    // smallest column
    Word w0 = invert(tH.schreier_rep(cols[0]));
    int r0 = tK.right_coset_id(w0);
    std::size_t row_orbit_index = row_orbits.size();
    for (std::size_t i = 0; i < row_orbits.size(); ++i)
      if (std::binary_search(row_orbits[i].begin(), row_orbits[i].end(), r0)) {
        row_orbit_index = i;
        break;
      }
    if (row_orbit_index == row_orbits.size() || row_used[row_orbit_index])
      throw std::logic_error("chessboard row orbit pairing failed");
    row_used[row_orbit_index] = true;
    block.rows = row_orbits[row_orbit_index];

    // fill every tile: left-mult by K generators moves along columns within
    // a row, right-mult by H generators moves along rows within a column
    std::vector<std::pair<std::pair<int, int>, Word>> queue;
    queue.push_back({{tH.left_coset_id(w0), r0}, w0});
    block.witness[queue[0].first] = w0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [tile, w] = queue[head];
      auto visit = [&](std::pair<int, int> next_tile, Word next_word) {
        if (block.witness.count(next_tile)) return;
        block.witness[next_tile] = next_word;
        queue.push_back({next_tile, std::move(next_word)});
      };
      for (const Word& y : k_gens) {
        visit({tH.trace(tile.first, invert(y)), tile.second}, concat(y, w));
        visit({tH.trace(tile.first, y), tile.second}, concat(invert(y), w));
      }
      for (const Word& y : h_gens) {
        visit({tile.first, tK.trace(tile.second, y)}, concat(w, y));
        visit({tile.first, tK.trace(tile.second, invert(y))}, concat(w, invert(y)));
      }
    }
    if (block.witness.size() != block.columns.size() * block.rows.size())
      throw std::logic_error("chessboard block is not complete bipartite");

    out.blocks.push_back(std::move(block));
  }
  return out;
}

/// With H = K every block is square; picking one witness from each diagonal
/// tile yields a left-right transversal for H.
inline Transversal diagonal_transversal(const ChessboardDecomposition& d, const CosetTable& tH) {
  if (!d.same_subgroup)
    fail(errc::non_square_blocks, "diagonal transversal needs H = K");
  Transversal out;
  out.kind = TransversalKind::left_right;
  for (const Block& block : d.blocks) {
    if (block.columns.size() != block.rows.size())
      throw std::logic_error("H = K chessboard has a non-square block");
    for (std::size_t i = 0; i < block.columns.size(); ++i)
      out.words.push_back(block.witness.at({block.columns[i], block.rows[i]}));
  }
  if (!verify(tH, out)) throw std::logic_error("diagonal picks are not a left-right transversal");
  return out;
}

}  // namespace shiftbox
