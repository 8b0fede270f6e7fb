#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "shiftbox/shifting_boxes.hpp"

namespace shiftbox {

/// A word together with its formal spelling over the tuple entries
/// ((entry index, sign) pairs, freely reduced over the entry alphabet).
/// A candidate whose spelling uses some entry exactly once is reachable
/// from that entry by Nielsen moves, hence primitive whenever the tuple
/// generates.
struct Candidate {
  Word word;
  std::vector<std::pair<int, int>> spelling;
};

/// The n + 2^n candidate words derived from an n-tuple: the entries, the
/// identity, and for every nonempty subset of entries the product in
/// decreasing index order followed by the first entry.
struct CandidateList {
  std::vector<Candidate> items;

  std::vector<Word> words() const {
    std::vector<Word> out;
    out.reserve(items.size());
    for (const Candidate& c : items) out.push_back(c.word);
    return out;
  }
};

enum class PrimitiveAnswer { yes, no, unknown };

/// How a witness was certified: by Nielsen-move construction (the production
/// route) or by an exhaustive search (the test-side route).
enum class WitnessCertificate { none, construction, exhaustive };

struct PrimitivityReport {
  PrimitiveAnswer subgroup_has_primitive = PrimitiveAnswer::unknown;
  Word witness;  // meaningful when the answer is yes
  WitnessCertificate certificate = WitnessCertificate::none;
  bool exceptional = false;  // H normal with G/H elementary abelian of rank m
  int quotient_rank = 0;
  std::map<int, Word> per_coset;  // left-coset id -> primitive witness
};

namespace detail {

inline std::vector<std::pair<int, int>> reduce_spelling(std::vector<std::pair<int, int>> in) {
  std::vector<std::pair<int, int>> out;
  for (auto [idx, sign] : in) {
    if (!out.empty() && out.back().first == idx && out.back().second == -sign)
      out.pop_back();
    else
      out.emplace_back(idx, sign);
  }
  return out;
}

/// True when some entry index occurs exactly once in the reduced spelling.
inline bool has_singleton_index(const std::vector<std::pair<int, int>>& spelling) {
  std::map<int, int> count;
  for (auto [idx, sign] : spelling) ++count[idx];
  for (auto [idx, c] : count)
    if (c == 1) return true;
  return false;
}

inline Candidate combine(const GeneratingTuple& s, const std::vector<int>& indices_desc,
                         bool append_first) {
  Candidate out;
  for (int idx : indices_desc) {
    out.word = concat(out.word, s.entries[idx - 1]);
    out.spelling.emplace_back(idx, +1);
  }
  if (append_first) {
    out.word = concat(out.word, s.entries[0]);
    out.spelling.emplace_back(1, +1);
  }
  out.spelling = reduce_spelling(std::move(out.spelling));
  return out;
}

}  // namespace detail

/// Candidate list in the fixed order: g_1..g_n, e, then for k = 1..n every
/// k-subset (in lexicographic order) multiplied in decreasing index order
/// with g_1 appended. The list has exactly n + 2^n members.
inline CandidateList build_candidate_list(const GeneratingTuple& s) {
  detail::require_nonempty(s);
  int n = s.size();
  CandidateList out;
  for (int i = 1; i <= n; ++i) out.items.push_back(detail::combine(s, {i}, false));
  out.items.push_back(detail::combine(s, {}, false));  // identity
  for (int k = 1; k <= n; ++k) {
    // k-subsets of 1..n in lexicographic order
    std::vector<int> subset(k);
    for (int i = 0; i < k; ++i) subset[i] = i + 1;
    while (true) {
      std::vector<int> desc(subset.rbegin(), subset.rend());
      out.items.push_back(detail::combine(s, desc, true));
      int pos = k - 1;
      while (pos >= 0 && subset[pos] == n - (k - 1 - pos)) --pos;
      if (pos < 0) break;
      ++subset[pos];
      for (int q = pos + 1; q < k; ++q) subset[q] = subset[q - 1] + 1;
    }
  }
  return out;
}

/// Certifies H normal with elementary abelian 2-group quotient, returning
/// the rank m with [G:H] = 2^m. The test reads everything off the table:
/// subgroup generators must fix every coset (H equals its core), and the
/// squares and commutators of the presentation generators must act
/// trivially.
inline std::pair<bool, int> is_exceptional(const CosetTable& t) {
  int k = t.num_cosets();
  for (const Word& y : t.subgroup().generators)
    for (int c = 1; c <= k; ++c)
      if (t.trace(c, y) != c) return {false, 0};
  int n = t.presentation().alphabet.size();
  for (int a = 0; a < n; ++a) {
    Word square({{a, +1}, {a, +1}});
    for (int c = 1; c <= k; ++c)
      if (t.trace(c, square) != c) return {false, 0};
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Word commutator({{a, -1}, {b, -1}, {a, +1}, {b, +1}});
      for (int c = 1; c <= k; ++c)
        if (t.trace(c, commutator) != c) return {false, 0};
    }
  int m = 0;
  while ((1 << m) < k) ++m;
  if ((1 << m) != k)
    throw std::logic_error("exponent-2 abelian quotient with non-power-of-2 order");
  return {true, m};
}

/// Searches H for a primitive element via the candidate list of a
/// left-cleaned tuple. Any two candidates landing in the same left coset
/// combine to a word in H; if its spelling keeps some entry index unique the
/// word is primitive by construction. When no witness appears and the index
/// is below n + 2^n, the exceptional certificate is checked and a definite
/// "no" is reported; past the bound the honest answer is unknown.
inline PrimitivityReport scan_subgroup(const CosetTable& t, GeneratingTuple s) {
  detail::require_nonempty(s);
  int n = s.size();
  PrimitivityReport report;
  auto [exc, m] = is_exceptional(t);
  report.exceptional = exc;
  report.quotient_rank = m;

  GeneratingTuple cleaned = left_clean(t, std::move(s)).tuple;
  for (const Word& w : cleaned.entries)
    if (t.is_member(w)) {
      report.subgroup_has_primitive = PrimitiveAnswer::yes;
      report.witness = w;
      report.certificate = WitnessCertificate::construction;
      return report;
    }

  CandidateList cands = build_candidate_list(cleaned);
  std::vector<int> ids;
  ids.reserve(cands.items.size());
  for (const Candidate& c : cands.items) ids.push_back(t.left_coset_id(c.word));

  for (std::size_t b = 1; b < cands.items.size(); ++b)
    for (std::size_t a = 0; a < b; ++a) {
      if (ids[a] != ids[b]) continue;
      std::vector<std::pair<int, int>> spelling;
      for (auto it = cands.items[a].spelling.rbegin(); it != cands.items[a].spelling.rend(); ++it)
        spelling.emplace_back(it->first, -it->second);
      spelling.insert(spelling.end(), cands.items[b].spelling.begin(),
                      cands.items[b].spelling.end());
      spelling = detail::reduce_spelling(std::move(spelling));
      if (!detail::has_singleton_index(spelling)) continue;  // a g_1^2-type collision
      Word witness = concat(invert(cands.items[a].word), cands.items[b].word);
      if (!t.is_member(witness)) throw std::logic_error("collision witness left the subgroup");
      report.subgroup_has_primitive = PrimitiveAnswer::yes;
      report.witness = witness;
      report.certificate = WitnessCertificate::construction;
      return report;
    }

  bool below_bound = t.num_cosets() < n + (1LL << n);
  if (below_bound && exc && m == n) {
    report.subgroup_has_primitive = PrimitiveAnswer::no;
  } else {
    report.subgroup_has_primitive = PrimitiveAnswer::unknown;
  }
  return report;
}

/// Produces a primitive witness in every left coset of H when the index is
/// at most n + 2: indexes up to n are filled by extraction alone, n + 1
/// adds a subgroup scan for H, and n + 2 locates a witness for the last
/// empty coset by testing where each entry pushes it. The single exception
/// is H = [G,G]G^2 with quotient C_2^2, where H itself has no witness.
inline PrimitivityReport primitive_in_each_coset(const CosetTable& t, GeneratingTuple s) {
  detail::require_nonempty(s);
  int n = s.size();
  int k = t.num_cosets();
  if (n < 2) fail(errc::invalid_tuple, "per-coset witnesses need a tuple of size at least 2");
  if (k > n + 2)
    fail(errc::index_too_large, "index " + std::to_string(k) + " exceeds n + 2 = " +
                                    std::to_string(n + 2));

  GeneratingTuple work = left_clean(t, std::move(s)).tuple;
  PrimitivityReport report;
  report.certificate = WitnessCertificate::construction;

  auto entries_in_h = [&]() {
    int count = 0;
    for (const Word& w : work.entries)
      if (t.is_member(w)) ++count;
    return count;
  };
  auto fill_from_entries = [&]() {
    for (const Word& w : work.entries) {
      int id = t.left_coset_id(w);
      if (!report.per_coset.count(id)) report.per_coset[id] = w;
    }
  };

  if (k <= n) {
    // extract until every left coset is full
    auto some_empty = [&]() {
      std::vector<bool> full(k + 1, false);
      for (const Word& w : work.entries) full[t.left_coset_id(w)] = true;
      for (int c = 2; c <= k; ++c)
        if (!full[c]) return true;
      return false;
    };
    while (some_empty()) work = left_extract(t, std::move(work)).tuple;
    fill_from_entries();
    report.subgroup_has_primitive = PrimitiveAnswer::yes;
    report.witness = report.per_coset.at(1);
    return report;
  }

  while (entries_in_h() > 0) work = left_extract(t, std::move(work)).tuple;
  fill_from_entries();

  if (k == n + 2) {
    // exactly one non-identity coset is still empty; some entry must push it
    // onto a full coset or onto H
    int empty_id = 0;
    for (int c = 2; c <= k; ++c)
      if (!report.per_coset.count(c)) empty_id = c;
    Word x = invert(t.schreier_rep(empty_id));
    bool found = false;
    for (int i = 0; i < n && !found; ++i) {
      int target = t.left_coset_id(concat(work.entries[i], x));
      if (target == 1) {
        report.per_coset[empty_id] = invert(work.entries[i]);
        found = true;
      } else if (target != empty_id) {
        for (int j = 0; j < n && !found; ++j) {
          if (j == i) continue;
          if (t.left_coset_id(work.entries[j]) == target) {
            report.per_coset[empty_id] = concat(invert(work.entries[i]), work.entries[j]);
            found = true;
          }
        }
      }
    }
    if (!found)
      fail(errc::invalid_tuple, "every entry stabilises the empty coset; the tuple cannot generate");
  }

  // the identity coset: the classification settles it
  auto [exc, m] = is_exceptional(t);
  if (exc && m == n) {
    report.subgroup_has_primitive = PrimitiveAnswer::no;
    report.exceptional = true;
    report.quotient_rank = m;
    return report;
  }
  PrimitivityReport scan = scan_subgroup(t, work);
  if (scan.subgroup_has_primitive != PrimitiveAnswer::yes)
    throw std::logic_error("subgroup scan found no witness below the n + 2^n bound");
  report.per_coset[1] = scan.witness;
  report.subgroup_has_primitive = PrimitiveAnswer::yes;
  report.witness = scan.witness;
  return report;
}

/// For normal N containing the entry at position n_index, produces one
/// primitive witness per coset: a word over the other entries reaching the
/// coset, with the N-entry appended.
inline std::map<int, Word> normal_coset_primitives(const CosetTable& t, const GeneratingTuple& s,
                                                   int n_index) {
  detail::require_nonempty(s);
  if (n_index < 1 || n_index > s.size())
    fail(errc::invalid_tuple, "entry index out of range");
  for (const Word& y : t.subgroup().generators)
    for (int c = 1; c <= t.num_cosets(); ++c)
      if (t.trace(c, y) != c) fail(errc::not_normal, "subgroup is not normal in the group");
  if (!t.is_member(s.entries[n_index - 1]))
    fail(errc::entry_not_in_subgroup, "designated entry does not lie in the subgroup");

  // reach every coset by left-multiplying with the other entries
  std::map<int, Word> reach = {{1, Word()}};
  std::vector<int> queue = {1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int c = queue[head];
    for (int i = 1; i <= s.size(); ++i) {
      if (i == n_index) continue;
      for (int sign : {+1, -1}) {
        Word step = sign > 0 ? s.entries[i - 1] : invert(s.entries[i - 1]);
        int next = t.trace(c, invert(step));
        if (reach.count(next)) continue;
        reach[next] = concat(step, reach[c]);
        queue.push_back(next);
      }
    }
  }
  if (static_cast<int>(reach.size()) != t.num_cosets())
    fail(errc::invalid_tuple, "entries other than the designated one do not reach every coset");

  std::map<int, Word> out;
  for (const auto& [coset, prefix] : reach) out[coset] = concat(prefix, s.entries[n_index - 1]);
  return out;
}

/// Checks d(G/N) < n concretely: the quotient is materialized from the
/// table (trace multiplication on coset ids, valid once N is verified
/// normal) and some n-1 of the entry images must generate it.
inline bool quotient_rank_bound_check(const CosetTable& t, const GeneratingTuple& s,
                                      const Word& witness) {
  detail::require_nonempty(s);
  for (const Word& y : t.subgroup().generators)
    for (int c = 1; c <= t.num_cosets(); ++c)
      if (t.trace(c, y) != c) fail(errc::not_normal, "subgroup is not normal in the group");
  if (!t.is_member(witness))
    fail(errc::entry_not_in_subgroup, "witness does not lie in the subgroup");

  int k = t.num_cosets();
  auto quotient_mul = [&](int c1, int c2) { return t.trace(c1, t.schreier_rep(c2)); };

  int n = s.size();
  for (int drop = 1; drop <= n; ++drop) {
    std::vector<bool> seen(k + 1, false);
    seen[1] = true;
    std::vector<int> closure = {1};
    for (std::size_t head = 0; head < closure.size(); ++head)
      for (int i = 1; i <= n; ++i) {
        if (i == drop) continue;
        int next = quotient_mul(closure[head], t.right_coset_id(s.entries[i - 1]));
        if (!seen[next]) {
          seen[next] = true;
          closure.push_back(next);
        }
      }
    if (static_cast<int>(closure.size()) == k) return true;
  }
  return false;
}

}  // namespace shiftbox
