#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "shiftbox/coset_table.hpp"

namespace shiftbox {

/// Brute-force ground truth for small finite groups. The group is the
/// regular representation read off the trivial-subgroup coset table:
/// element ids are 0..order-1 with 0 the identity, multiplication traces
/// the representative word of the right factor.
class FiniteGroup {
public:
  int order() const { return table_.num_cosets(); }

  int mul(int a, int b) const { return table_.trace(a + 1, table_.schreier_rep(b + 1)) - 1; }

  int inverse(int a) const { return inv_[a]; }

  /// Homomorphic evaluation of a word to an element id.
  int id_of_word(const Word& w) const { return table_.trace(1, w) - 1; }

  /// Shortlex-minimal word evaluating to the element.
  const Word& rep(int id) const { return table_.schreier_rep(id + 1); }

  const Presentation& presentation() const { return table_.presentation(); }

  friend FiniteGroup materialize(const Presentation& p, EnumLimits limits);

private:
  CosetTable table_;
  std::vector<int> inv_;
};

inline FiniteGroup materialize(const Presentation& p, EnumLimits limits = {}) {
  FiniteGroup g;
  g.table_ = todd_coxeter(p, SubgroupSpec{}, limits);
  g.inv_.resize(g.order());
  for (int a = 0; a < g.order(); ++a) g.inv_[a] = g.id_of_word(invert(g.rep(a)));
  return g;
}

/// Subgroup generated by the given element ids, as a sorted id list.
inline std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<bool> seen(g.order(), false);
  seen[0] = true;
  std::vector<int> closure = {0};
  for (std::size_t head = 0; head < closure.size(); ++head)
    for (int x : gens) {
      int next = g.mul(closure[head], x);
      if (!seen[next]) {
        seen[next] = true;
        closure.push_back(next);
      }
    }
  std::sort(closure.begin(), closure.end());
  return closure;
}

inline bool generates_ids(const FiniteGroup& g, const std::vector<int>& ids) {
  return static_cast<int>(subgroup_closure(g, ids).size()) == g.order();
}

/// Whether the words generate the whole group.
inline bool generates(const FiniteGroup& g, const std::vector<Word>& words) {
  std::vector<int> ids;
  ids.reserve(words.size());
  for (const Word& w : words) ids.push_back(g.id_of_word(w));
  return generates_ids(g, ids);
}

namespace detail {

constexpr int oracle_order_cap = 5040;
constexpr long long oracle_tuple_cap = 20'000'000;

inline void check_feasible(const FiniteGroup& g, int n) {
  if (g.order() > oracle_order_cap)
    fail(errc::search_too_large, "group order exceeds the brute-force cap");
  long long tuples = 1;
  for (int i = 0; i < n; ++i) {
    tuples *= g.order();
    if (tuples > oracle_tuple_cap)
      fail(errc::search_too_large, "tuple search space is too large");
  }
}

}  // namespace detail

/// Exhaustive set of elements appearing in some generating n-tuple, for
/// n <= 3. For n = 4 the search is sampled and a seed is mandatory; larger
/// n is rejected.
inline std::set<int> primitive_elements(const FiniteGroup& g, int n,
                                        std::optional<unsigned> seed = std::nullopt) {
  if (n < 1) return {};
  std::set<int> out;
  if (n <= 3) {
    detail::check_feasible(g, n);
    std::vector<int> tuple(n, 0);
    while (true) {
      if (generates_ids(g, tuple))
        for (int x : tuple) out.insert(x);
      int pos = n - 1;
      while (pos >= 0 && tuple[pos] == g.order() - 1) tuple[pos--] = 0;
      if (pos < 0) break;
      ++tuple[pos];
      if (static_cast<int>(out.size()) == g.order()) break;
    }
    return out;
  }
  if (n == 4) {
    if (!seed) fail(errc::search_too_large, "sampled search needs an explicit seed");
    if (g.order() > detail::oracle_order_cap)
      fail(errc::search_too_large, "group order exceeds the brute-force cap");
    std::mt19937 rng(*seed);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    std::vector<int> tuple(4);
    for (int round = 0; round < 100'000; ++round) {
      for (int& x : tuple) x = pick(rng);
      if (generates_ids(g, tuple))
        for (int x : tuple) out.insert(x);
    }
    return out;
  }
  fail(errc::search_too_large, "primitive search is limited to tuples of size 4");
}

/// Minimal size of a generating tuple, by exhaustive search.
inline int rank(const FiniteGroup& g) {
  if (g.order() == 1) return 0;
  for (int n = 1;; ++n) {
    detail::check_feasible(g, n);
    std::vector<int> tuple(n, 0);
    while (true) {
      if (generates_ids(g, tuple)) return n;
      int pos = n - 1;
      while (pos >= 0 && tuple[pos] == g.order() - 1) tuple[pos--] = 0;
      if (pos < 0) break;
      ++tuple[pos];
    }
  }
}

struct SubgroupInfo {
  std::vector<int> elements;          // sorted element ids
  std::vector<Word> generator_words;  // shortlex representatives of a chain of generators
};

/// Complete subgroup list, grown by repeatedly adjoining one element and
/// closing (every subgroup is reachable through such a chain). Deterministic
/// order: sorted by order, then by element list.
inline std::vector<SubgroupInfo> all_subgroups(const FiniteGroup& g) {
  if (g.order() > detail::oracle_order_cap)
    fail(errc::search_too_large, "group order exceeds the brute-force cap");
  std::map<std::vector<int>, std::vector<int>> found;  // elements -> generator ids
  std::vector<std::vector<int>> queue;
  found[{0}] = {};
  queue.push_back({0});
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> elements = queue[head];
    std::vector<int> gens = found.at(elements);
    for (int x = 1; x < g.order(); ++x) {
      if (std::binary_search(elements.begin(), elements.end(), x)) continue;
      std::vector<int> bigger_gens = gens;
      bigger_gens.push_back(x);
      std::vector<int> closure = subgroup_closure(g, bigger_gens);
      if (found.count(closure)) continue;
      found[closure] = bigger_gens;
      queue.push_back(closure);
    }
  }
  std::vector<SubgroupInfo> out;
  for (const auto& [elements, gens] : found) {
    SubgroupInfo info;
    info.elements = elements;
    for (int id : gens) info.generator_words.push_back(g.rep(id));
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(), [](const SubgroupInfo& a, const SubgroupInfo& b) {
    if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

inline bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
  for (int h : elements)
    for (int x = 0; x < g.order(); ++x) {
      int conj = g.mul(g.inverse(x), g.mul(h, x));
      if (!std::binary_search(elements.begin(), elements.end(), conj)) return false;
    }
  return true;
}

}  // namespace shiftbox
