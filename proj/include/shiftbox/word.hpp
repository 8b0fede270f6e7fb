#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "shiftbox/errors.hpp"

namespace shiftbox {

/// One signed generator occurrence; sign is +1 or -1.
struct Letter {
  int gen;
  int sign;

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

/// Ordering used everywhere a letter order is needed (shortlex, table
/// columns, breadth-first searches): generators ascending, and for each
/// generator the positive letter before the inverse.
inline bool letter_less(Letter a, Letter b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.sign > b.sign;
}

/// Ordered list of distinct generator names. Names start with a lowercase
/// letter so that the uppercase form can denote the inverse of a
/// single-letter generator.
class Alphabet {
public:
  Alphabet() = default;

  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) fail(errc::parse_error, "alphabet needs at least one generator");
    for (const auto& name : names_) {
      if (name.empty()) fail(errc::parse_error, "empty generator name");
      if (!std::islower(static_cast<unsigned char>(name[0])))
        fail(errc::parse_error, "generator name '" + name + "' must start with a lowercase letter");
      for (char ch : name) {
        if (!std::islower(static_cast<unsigned char>(ch)) &&
            !std::isdigit(static_cast<unsigned char>(ch)) && ch != '_')
          fail(errc::parse_error, "generator name '" + name + "' has an invalid character");
      }
    }
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          fail(errc::parse_error, "duplicate generator name '" + names_[i] + "'");
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a name, or -1.
  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    return -1;
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> names_;
};

/// A freely reduced word over some alphabet. The empty word is the identity.
/// Construction reduces eagerly, so adjacent inverse pairs never survive.
class Word {
public:
  Word() = default;

  explicit Word(std::vector<Letter> letters) {
    letters_.reserve(letters.size());
    for (Letter l : letters) push_reduced(l);
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  friend bool operator==(const Word&, const Word&) = default;

private:
  void push_reduced(Letter l) {
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().sign == -l.sign)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  friend Word concat(const Word& u, const Word& v);

  std::vector<Letter> letters_;
};

inline Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
    out.push_back(inverse(*it));
  return Word(std::move(out));
}

inline Word concat(const Word& u, const Word& v) {
  Word out = u;
  for (Letter l : v.letters()) out.push_reduced(l);
  return out;
}

inline Word concat(const Word& u, const Word& v, const Word& w) {
  return concat(concat(u, v), w);
}

inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.letters()[i] == b.letters()[i]) continue;
    return letter_less(a.letters()[i], b.letters()[i]);
  }
  return false;
}

/// Parses the classical one-line word syntax: generator names juxtaposed,
/// an uppercase letter for the inverse of a single-letter generator, and
/// name^-1 for any generator. '1' stands for the identity.
inline Word parse_word(const std::string& text, const Alphabet& alphabet) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    // longest generator-name match first
    int best = -1;
    std::size_t best_len = 0;
    for (int g = 0; g < alphabet.size(); ++g) {
      const std::string& name = alphabet.name(g);
      if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
        best = g;
        best_len = name.size();
      }
    }
    int sign = +1;
    if (best < 0) {
      char ch = text[pos];
      if (std::isupper(static_cast<unsigned char>(ch))) {
        std::string lower(1, static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        best = alphabet.index_of(lower);
        if (best >= 0) {
          sign = -1;
          best_len = 1;
        }
      } else if (ch == '1') {
        ++pos;
        continue;
      }
    }
    if (best < 0)
      fail(errc::parse_error, std::string("unknown letter '") + text[pos] + "' at position " +
                                  std::to_string(pos + 1));
    pos += best_len;
    if (text.compare(pos, 3, "^-1") == 0) {
      sign = -sign;
      pos += 3;
    }
    letters.push_back({best, sign});
  }
  return Word(std::move(letters));
}

inline std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w.letters()) {
    const std::string& name = alphabet.name(l.gen);
    if (l.sign > 0) {
      out += name;
    } else if (name.size() == 1) {
      out += static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    } else {
      out += name;
      out += "^-1";
    }
  }
  return out;
}

}  // namespace shiftbox
