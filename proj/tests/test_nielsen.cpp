#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "shiftbox/nielsen.hpp"

using namespace shiftbox;

namespace {
Alphabet ab() { return Alphabet({"a", "b"}); }
GeneratingTuple pair_ab() {
  Alphabet a = ab();
  return fixtures::tuple(a, {"a", "b"});
}
}  // namespace

TEST_CASE("single moves", "[nielsen]") {
  Alphabet a = ab();
  GeneratingTuple s = pair_ab();
  CHECK(apply_move(s, NielsenMove::lmul(1, 2, +1)) == fixtures::tuple(a, {"ba", "b"}));
  CHECK(apply_move(s, NielsenMove::inv(2)) == fixtures::tuple(a, {"a", "B"}));
  CHECK(apply_move(s, NielsenMove::swap(1, 2)) == fixtures::tuple(a, {"b", "a"}));
  CHECK(apply_move(s, NielsenMove::rmul(1, 2, -1)) == fixtures::tuple(a, {"aB", "b"}));
}

TEST_CASE("results stay freely reduced", "[nielsen]") {
  Alphabet a = ab();
  GeneratingTuple s = fixtures::tuple(a, {"ab", "b"});
  GeneratingTuple moved = apply_move(s, NielsenMove::rmul(1, 2, -1));
  CHECK(moved == fixtures::tuple(a, {"a", "b"}));
}

TEST_CASE("replay folds the log", "[nielsen]") {
  Alphabet a = ab();
  GeneratingTuple s = pair_ab();
  CHECK(replay(s, {}) == s);
  MoveLog log = {NielsenMove::lmul(1, 2, +1), NielsenMove::inv(1)};
  CHECK(replay(s, log) == fixtures::tuple(a, {"AB", "b"}));
  MoveLog twice = {NielsenMove::swap(1, 2), NielsenMove::swap(1, 2)};
  CHECK(replay(s, twice) == s);
}

TEST_CASE("every move has an inverse move", "[nielsen][property]") {
  Alphabet a3({"a", "b", "c"});
  fixtures::WordGen gen;
  for (int round = 0; round < 200; ++round) {
    GeneratingTuple s;
    for (int i = 0; i < 3; ++i) s.entries.push_back(gen.next(3));
    for (NielsenMove m : {NielsenMove::lmul(1, 3, +1), NielsenMove::lmul(2, 1, -1),
                          NielsenMove::rmul(3, 2, +1), NielsenMove::rmul(1, 2, -1),
                          NielsenMove::inv(2), NielsenMove::swap(1, 3)}) {
      CHECK(apply_move(apply_move(s, m), inverse_move(m)) == s);
    }
  }
}

TEST_CASE("invalid moves are rejected", "[nielsen]") {
  GeneratingTuple s = pair_ab();
  auto code_of = [&](NielsenMove m) {
    try {
      apply_move(s, m);
    } catch (const error& e) {
      return e.code();
    }
    return errc::parse_error;
  };
  CHECK(code_of(NielsenMove::lmul(1, 1, +1)) == errc::invalid_move);
  CHECK(code_of(NielsenMove::swap(2, 2)) == errc::invalid_move);
  CHECK(code_of(NielsenMove::lmul(0, 2, +1)) == errc::invalid_move);
  CHECK(code_of(NielsenMove::rmul(1, 3, +1)) == errc::invalid_move);
  CHECK(code_of(NielsenMove::inv(5)) == errc::invalid_move);
}

TEST_CASE("move serialization", "[nielsen]") {
  CHECK(to_string(NielsenMove::lmul(1, 2, +1)) == "Lmul 1 2 +");
  CHECK(to_string(NielsenMove::rmul(3, 1, -1)) == "Rmul 3 1 -");
  CHECK(to_string(NielsenMove::inv(2)) == "Inv 2");
  CHECK(to_string(NielsenMove::swap(1, 3)) == "Swap 1 3");
}
