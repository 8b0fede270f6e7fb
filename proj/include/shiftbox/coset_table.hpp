#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "shiftbox/presentation.hpp"

namespace shiftbox {

struct EnumLimits {
  std::size_t max_cosets = 1'000'000;
};

namespace detail {

/// HLT-style Todd-Coxeter working state. Cosets are 1-based; 0 in the table
/// means undefined. Columns come in pairs: 2g for generator g, 2g+1 for its
/// inverse. Coincidences are resolved by a union-find collapse that always
/// keeps the smaller coset number, so coset 1 never dies and the surviving
/// numbering follows discovery order.
struct Enumerator {
  int ngens;
  std::size_t limit;
  std::vector<std::vector<int>> tab;  // tab[0] unused
  std::vector<int> parent;
  std::size_t created = 1;
  std::vector<int> dead_queue;
  std::size_t dead_head = 0;

  Enumerator(int n, std::size_t max_cosets) : ngens(n), limit(max_cosets) {
    tab.assign(2, std::vector<int>(2 * n, 0));
    parent = {0, 1};
  }

  static int col(Letter l) { return 2 * l.gen + (l.sign < 0); }
  static int inv_col(int x) { return x ^ 1; }

  int rep(int c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  }

  bool live(int c) { return parent[c] == c; }

  int define(int c, int x) {
    if (created >= limit)
      fail(errc::limit_exceeded,
           "coset limit of " + std::to_string(limit) + " reached; index may be infinite");
    tab.emplace_back(2 * ngens, 0);
    int d = static_cast<int>(tab.size()) - 1;
    parent.push_back(d);
    ++created;
    tab[c][x] = d;
    tab[d][inv_col(x)] = c;
    return d;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    dead_queue.push_back(b);
  }

  /// Standard coincidence processing: drain the dead queue, transferring each
  /// dead coset's edges to its representative. The table stays involutive, so
  /// every edge touching a dead coset is found through that coset's own row.
  void coincidence(int a, int b) {
    merge(a, b);
    while (dead_head < dead_queue.size()) {
      int e = dead_queue[dead_head++];
      for (int x = 0; x < 2 * ngens; ++x) {
        int f = tab[e][x];
        if (!f) continue;
        tab[f][inv_col(x)] = 0;
        int m = rep(e);
        int v = rep(f);
        if (tab[m][x])
          merge(v, tab[m][x]);
        else if (tab[v][inv_col(x)])
          merge(m, tab[v][inv_col(x)]);
        else {
          tab[m][x] = v;
          tab[v][inv_col(x)] = m;
        }
      }
    }
    dead_queue.clear();
    dead_head = 0;
  }

  /// Scans word w from coset c, defining cosets to close any interior gap
  /// (HLT). A one-entry gap becomes a deduction; a clash of the forward and
  /// backward scans becomes a coincidence.
  void scan_and_fill(int c, const Word& w) {
    const auto& L = w.letters();
    int i = 0;
    int r = static_cast<int>(L.size()) - 1;
    int f = c, b = c;
    while (true) {
      while (i <= r && tab[f][col(L[i])]) {
        f = tab[f][col(L[i])];
        ++i;
      }
      if (i > r) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (r >= i && tab[b][inv_col(col(L[r]))]) {
        b = tab[b][inv_col(col(L[r]))];
        --r;
      }
      if (r < i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (r == i) {
        tab[f][col(L[i])] = b;
        tab[b][inv_col(col(L[i]))] = f;
        return;
      }
      define(f, col(L[i]));
    }
  }
};

}  // namespace detail

/// Complete right-action table of the cosets Hg under the generators,
/// produced by Todd-Coxeter enumeration. Coset 1 is H. Immutable once built;
/// all queries are read-only and safe to run concurrently.
class CosetTable {
public:
  int num_cosets() const { return k_; }
  const Presentation& presentation() const { return pres_; }
  const SubgroupSpec& subgroup() const { return sub_; }

  int act(int c, Letter l) const {
    check_coset(c);
    return tab_[c][detail::Enumerator::col(l)];
  }

  /// Image of coset c under the right action of w.
  int trace(int c, const Word& w) const {
    check_coset(c);
    for (Letter l : w.letters()) c = tab_[c][detail::Enumerator::col(l)];
    return c;
  }

  /// w is in H iff it fixes coset 1.
  bool is_member(const Word& w) const { return trace(1, w) == 1; }

  /// Identifies the left coset wH through the bijection wH <-> Hw^-1.
  int left_coset_id(const Word& w) const { return trace(1, invert(w)); }

  int right_coset_id(const Word& w) const { return trace(1, w); }

  /// Shortlex-minimal word with trace(1, rep) = c; rep(1) is the identity.
  const Word& schreier_rep(int c) const {
    check_coset(c);
    return reps_[c];
  }

  /// TSV dump: header "coset g g^-1 ...", one row per coset, then a final
  /// "index: k" line.
  std::string dump_tsv() const {
    std::string out = "coset";
    for (const auto& name : pres_.alphabet.names()) out += "\t" + name + "\t" + name + "^-1";
    out += "\n";
    for (int c = 1; c <= k_; ++c) {
      out += std::to_string(c);
      for (int x = 0; x < 2 * pres_.alphabet.size(); ++x) out += "\t" + std::to_string(tab_[c][x]);
      out += "\n";
    }
    out += "index: " + std::to_string(k_) + "\n";
    return out;
  }

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

  friend CosetTable todd_coxeter(const Presentation& p, const SubgroupSpec& h, EnumLimits limits);

private:
  void check_coset(int c) const {
    if (c < 1 || c > k_)
      fail(errc::bad_coset,
           "coset index " + std::to_string(c) + " out of range 1.." + std::to_string(k_));
  }

  void check_words_in_range(const std::vector<Word>& words) const {
    for (const Word& w : words)
      for (Letter l : w.letters())
        if (l.gen < 0 || l.gen >= pres_.alphabet.size())
          fail(errc::presentation_mismatch, "word uses a generator outside the alphabet");
  }

  /// Verifies the table invariants; a failure here is an enumerator bug.
  void validate() const {
    int cols = 2 * pres_.alphabet.size();
    for (int c = 1; c <= k_; ++c)
      for (int x = 0; x < cols; ++x) {
        int d = tab_[c][x];
        if (d < 1 || d > k_) throw std::logic_error("coset table incomplete after enumeration");
        if (tab_[d][detail::Enumerator::inv_col(x)] != c)
          throw std::logic_error("coset table action is not bijective");
      }
    for (const Word& rel : pres_.relators)
      for (int c = 1; c <= k_; ++c)
        if (trace(c, rel) != c) throw std::logic_error("relator does not close in coset table");
    for (const Word& y : sub_.generators)
      if (trace(1, y) != 1) throw std::logic_error("subgroup generator moves coset 1");
    for (int c = 1; c <= k_; ++c)
      if (trace(1, reps_[c]) != c)
        throw std::logic_error("Schreier representative does not reach its coset");
  }

  Presentation pres_;
  SubgroupSpec sub_;
  int k_ = 0;
  std::vector<std::vector<int>> tab_;  // row 0 unused
  std::vector<Word> reps_;             // index 0 unused
};

/// Enumerates the cosets of <h> in the group presented by p. Deterministic:
/// subgroup generators are scanned at coset 1 first, then each live coset
/// scans the relators in file order and fills its remaining row entries,
/// cosets numbered by discovery order. Throws limit_exceeded once max_cosets
/// cosets have been created; the caller cannot distinguish that from an
/// infinite index.
inline CosetTable todd_coxeter(const Presentation& p, const SubgroupSpec& h,
                               EnumLimits limits = {}) {
  if (limits.max_cosets < 1) fail(errc::limit_exceeded, "max_cosets must be at least 1");

  CosetTable result;
  result.pres_ = p;
  result.sub_ = h;
  result.check_words_in_range(p.relators);
  result.check_words_in_range(h.generators);

  detail::Enumerator e(p.alphabet.size(), limits.max_cosets);
  for (const Word& y : h.generators) e.scan_and_fill(1, y);
  for (int c = 1; c < static_cast<int>(e.tab.size()); ++c) {
    if (!e.live(c)) continue;
    bool died = false;
    for (const Word& rel : p.relators) {
      e.scan_and_fill(c, rel);
      if (!e.live(c)) {
        died = true;
        break;
      }
    }
    if (died) continue;
    for (int x = 0; x < 2 * p.alphabet.size(); ++x)
      if (!e.tab[c][x]) e.define(c, x);
  }

  // compact live cosets, keeping discovery order
  std::vector<int> new_id(e.tab.size(), 0);
  int k = 0;
  for (int c = 1; c < static_cast<int>(e.tab.size()); ++c)
    if (e.live(c)) new_id[c] = ++k;
  result.k_ = k;
  result.tab_.assign(k + 1, std::vector<int>(2 * p.alphabet.size(), 0));
  for (int c = 1; c < static_cast<int>(e.tab.size()); ++c) {
    if (!e.live(c)) continue;
    for (int x = 0; x < 2 * p.alphabet.size(); ++x) {
      int d = e.tab[c][x];
      result.tab_[new_id[c]][x] = d ? new_id[e.rep(d)] : 0;
    }
  }

  // shortlex Schreier representatives by breadth-first search from coset 1
  result.reps_.assign(k + 1, Word());
  std::vector<bool> seen(k + 1, false);
  seen[1] = true;
  std::vector<int> queue = {1};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int c = queue[head];
    for (int x = 0; x < 2 * p.alphabet.size(); ++x) {
      int d = result.tab_[c][x];
      if (seen[d]) continue;
      seen[d] = true;
      Letter step{x / 2, (x & 1) ? -1 : +1};
      result.reps_[d] = concat(result.reps_[c], Word({step}));
      queue.push_back(d);
    }
  }

  result.validate();
  return result;
}

}  // namespace shiftbox
