#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "igcert/error.hpp"
#include "igcert/search.hpp"

using namespace igcert;

namespace {
  Budget const small{8, 2000};
  Budget const roomy{10, 200000};

  //! Replays the path and checks it never leaves the length budget.
  void check_proof(BiorderedSet const& E, Word const& w1, Word const& w2, Verdict const& v,
                   Budget const& b) {
    REQUIRE(is_proved(v));
    TransitionPath const& p = std::get<Proved>(v).path;
    CHECK(p.start == w1);
    CHECK(replay_path(E, p) == w2);
    Word cur = p.start;
    for (auto const& t : p.steps) {
      cur = apply_transition(E, cur, t);
      CHECK(cur.size() <= b.max_len);
    }
  }
}  // namespace

TEST_CASE("budget errors") {
  BiorderedSet const E = test::corpus_biorder("rz");
  CHECK_THROWS_AS(prove_equiv(E, {0}, {1}, {0, 10}), BudgetError);
  CHECK_THROWS_AS(prove_equiv(E, {0}, {1}, {4, 0}), BudgetError);
  CHECK_THROWS_AS(prove_equiv(E, {0, 1, 0}, {1}, {2, 10}), BudgetError);
  CHECK_NOTHROW(check_budget({3, 1}, 3));
}

TEST_CASE("reflexivity gives the empty path") {
  BiorderedSet const E = test::corpus_biorder("m2f2");
  Verdict const      v = prove_equiv(E, {1, 4, 2}, {1, 4, 2}, small);
  check_proof(E, {1, 4, 2}, {1, 4, 2}, v, small);
  CHECK(std::get<Proved>(v).path.steps.empty());
}

TEST_CASE("right-zero: e f = f in one step") {
  BiorderedSet const E = test::corpus_biorder("rz");
  Verdict const      v = prove_equiv(E, {0, 1}, {1}, small);
  check_proof(E, {0, 1}, {1}, v, small);
  CHECK(std::get<Proved>(v).path.steps.size() == 1);
}

TEST_CASE("rectangular band") {
  BiorderedSet const E = test::corpus_biorder("rb22");
  SUBCASE("different images are refuted") {
    // (1,1)(2,2) = (1,2) in the band, which is not (2,1).
    Verdict const v = prove_equiv(E, {0, 3}, {2}, small);
    REQUIRE(is_refuted(v));
    CHECK(std::get<Refuted>(v).lhs_image != std::get<Refuted>(v).rhs_image);
  }
  SUBCASE("equal images are not enough") {
    // Same image in the band, but distinct in IG(E): never refuted.
    Verdict const v = prove_equiv(E, {0, 3}, {1}, small);
    REQUIRE(is_unknown(v));
    CHECK(std::get<Unknown>(v).nodes <= small.max_nodes);
    CHECK(std::get<Unknown>(v).max_len == small.max_len);
    CHECK_FALSE(std::get<Unknown>(v).separated);
  }
}

TEST_CASE("words with different ideal supports are separated without search") {
  BiorderedSet const E = test::corpus_biorder("m2f2");
  std::size_t        separated = 0;
  test::for_each_word(E.size(), 2, [&](Word const& a) {
    test::for_each_word(E.size(), 2, [&](Word const& b) {
      if (eval_image(E, a) != eval_image(E, b) || E.ideal_support(a) == E.ideal_support(b)) {
        return;
      }
      Verdict const v = prove_equiv(E, a, b, small);
      REQUIRE(is_unknown(v));
      CHECK(std::get<Unknown>(v).separated);
      CHECK(std::get<Unknown>(v).nodes == 0);
      ++separated;
    });
  });
  CHECK(separated > 0);
}

TEST_CASE("symmetry, determinism and agreement with images") {
  std::mt19937_64 rng(5);
  for (auto name : {"rz", "t2", "rb22", "m2f2"}) {
    CAPTURE(name);
    BiorderedSet const E = test::corpus_biorder(name);
    for (int trial = 0; trial < 60; ++trial) {
      Word const a = test::random_word(E.size(), 1 + trial % 3, rng);
      Word const b = test::random_word(E.size(), 1 + (trial / 3) % 3, rng);
      Verdict const ab = prove_equiv(E, a, b, small);
      Verdict const ba = prove_equiv(E, b, a, small);
      CHECK(ab.index() == ba.index());
      CHECK(is_refuted(ab) == (eval_image(E, a) != eval_image(E, b)));
      if (is_proved(ab)) {
        check_proof(E, a, b, ab, small);
        check_proof(E, b, a, ba, small);
        CHECK(E.ideal_support(a) == E.ideal_support(b));
        Verdict const again = prove_equiv(E, a, b, small);
        CHECK(std::get<Proved>(again).path == std::get<Proved>(ab).path);
      }
    }
  }
}

TEST_CASE("random walks are recovered, and proofs compose") {
  std::mt19937_64 rng(17);
  for (auto name : {"rz", "t2", "t3", "m2f2"}) {
    CAPTURE(name);
    BiorderedSet const E = test::corpus_biorder(name);
    for (int trial = 0; trial < 30; ++trial) {
      Word const a = test::random_word(E.size(), 2, rng);
      Word const b = replay_path(E, test::random_path(E, a, 3, 4, rng));
      Word const c = replay_path(E, test::random_path(E, b, 3, 4, rng));
      Verdict const ab = prove_equiv(E, a, b, roomy);
      Verdict const bc = prove_equiv(E, b, c, roomy);
      check_proof(E, a, b, ab, roomy);
      check_proof(E, b, c, bc, roomy);
      TransitionPath const ac = concat(std::get<Proved>(ab).path, std::get<Proved>(bc).path);
      CHECK(replay_path(E, ac) == c);
      CHECK(is_proved(prove_equiv(E, a, c, roomy)));
    }
  }
}

TEST_CASE("search invocations are counted") {
  BiorderedSet const E      = test::corpus_biorder("rz");
  std::size_t const  before = search_invocations();
  prove_equiv(E, {0}, {0}, small);
  prove_equiv(E, {0, 1}, {1}, small);
  CHECK(search_invocations() == before + 2);
}
