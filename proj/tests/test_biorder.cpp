#include <doctest.h>

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "igcert/biorder.hpp"

using namespace igcert;

TEST_CASE("right-zero biordered set") {
  BiorderedSet const E = test::corpus_biorder("rz");
  REQUIRE(E.size() == 2);
  for (letter_type e = 0; e < 2; ++e) {
    for (letter_type f = 0; f < 2; ++f) {
      REQUIRE(E.product(e, f));
      CHECK(*E.product(e, f) == f);
    }
  }
  CHECK(E.tags(0, 1).list() == std::vector<int>{2, 3});
  CHECK(E.tags(0, 0).list() == std::vector<int>{1, 2, 3, 4});
  auto const bp = basic_product(E, 0, 1);
  REQUIRE(bp);
  CHECK(bp->value == 1);
  CHECK(presentation(E).size() == 4);
}

TEST_CASE("rectangular band: basic iff same row or column") {
  BiorderedSet const E = test::corpus_biorder("rb22");
  REQUIRE(E.size() == 4);
  // letter 2(i-1) + (j-1) is (i, j)
  auto row = [](letter_type e) { return e / 2; };
  auto col = [](letter_type e) { return e % 2; };
  for (letter_type e = 0; e < 4; ++e) {
    for (letter_type f = 0; f < 4; ++f) {
      CHECK(E.defined(e, f) == (row(e) == row(f) || col(e) == col(f)));
    }
  }
  CHECK_FALSE(basic_product(E, 0, 3));
  CHECK(presentation(E).size() == 12);
}

TEST_CASE("T_2: every pair of idempotents is basic") {
  BiorderedSet const E = test::corpus_biorder("t2");
  REQUIRE(E.size() == 3);
  for (letter_type e = 0; e < 3; ++e) {
    for (letter_type f = 0; f < 3; ++f) {
      CHECK(E.defined(e, f));
    }
  }
}

TEST_CASE("singleton biordered set has one relation") {
  auto const S = std::make_shared<FiniteSemigroup const>(build_semigroup(CayleySpec{{{0}}}));
  auto const rel = presentation(extract_biorder(S));
  REQUIRE(rel.size() == 1);
  CHECK(rel[0].lhs == Word{0, 0});
  CHECK(rel[0].rhs == Word{0});
}

TEST_CASE("biorder invariants on every corpus semigroup") {
  for (auto name : {"rz", "t2", "t3", "rb22", "m2f2"}) {
    CAPTURE(name);
    BiorderedSet const     E = test::corpus_biorder(name);
    FiniteSemigroup const& S = E.source();
    CHECK(E.to_source() == idempotents(S));
    std::size_t defined = 0;
    for (letter_type e = 0; e < E.size(); ++e) {
      CHECK(E.letter_of(E.to_source(e)) == e);
      for (letter_type f = 0; f < E.size(); ++f) {
        element_index const se = E.to_source(e), sf = E.to_source(f);
        element_index const ef = S.product(se, sf), fe = S.product(sf, se);
        // Tags straight from the table.
        std::vector<int> expected;
        if (ef == se) expected.push_back(1);
        if (ef == sf) expected.push_back(2);
        if (fe == se) expected.push_back(3);
        if (fe == sf) expected.push_back(4);
        CHECK(E.tags(e, f).list() == expected);
        CHECK(E.defined(e, f) == !expected.empty());
        CHECK(E.defined(e, f) == E.defined(f, e));
        if (auto p = E.product(e, f)) {
          ++defined;
          CHECK(E.to_source(*p) == ef);
          CHECK(S.is_idempotent(ef));
          bool const listed = std::ranges::count(E.preimages(*p), std::pair{e, f}) == 1;
          CHECK(listed);
        }
      }
    }
    std::size_t preimages = 0;
    for (letter_type g = 0; g < E.size(); ++g) {
      preimages += E.preimages(g).size();
      CHECK(std::ranges::is_sorted(E.preimages(g)));
    }
    CHECK(preimages == defined);

    auto const rel = presentation(E);
    CHECK(rel.size() == defined);
    for (letter_type e = 0; e < E.size(); ++e) {
      bool const has_ee = std::ranges::any_of(
          rel, [e](Relation const& r) { return r.lhs == Word{e, e} && r.rhs == Word{e}; });
      CHECK(has_ee);
    }
    CHECK(std::ranges::is_sorted(rel, {}, [](Relation const& r) { return r.lhs; }));
  }
}

TEST_CASE("ideal support of letters") {
  BiorderedSet const E = test::corpus_biorder("m2f2");
  // Letter 0 is the zero matrix: it lies in every ideal, and only the
  // identity (letter 5) generates the whole monoid.
  auto const zero = E.ideal_support({0});
  auto const id   = E.ideal_support({5});
  CHECK(zero[0] == 0xff);
  CHECK(id[0] == (1U << 5));
  CHECK(E.ideal_support({5, 0}) == zero);
  CHECK(E.ideal_support({1, 4}) != zero);
}
