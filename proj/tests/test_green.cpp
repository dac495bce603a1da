#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "igcert/error.hpp"
#include "igcert/green.hpp"

using namespace igcert;

namespace {
  Budget const budget{12, 100000};

  TransitionPath proof(BiorderedSet const& E, Word const& a, Word const& b) {
    Verdict const v = prove_equiv(E, a, b, budget);
    REQUIRE(is_proved(v));
    return std::get<Proved>(v).path;
  }

  //! [0] R [1] in the right-zero case: 0 1 -> 1 and 1 0 -> 0.
  GreenWitness rz_r_witness(BiorderedSet const& E) {
    return {GreenKind::R, {0}, {1}, {1}, {0}, proof(E, {0, 1}, {1}), proof(E, {1, 0}, {0})};
  }

  //! Equal words are related on both sides with empty multipliers.
  GreenWitness from_path(GreenKind kind, TransitionPath const& p) {
    return {kind, p.start, endpoint(p), {}, {}, p, invert(p)};
  }
}  // namespace

TEST_CASE("reflexive and reversed witnesses verify") {
  BiorderedSet const E = test::corpus_biorder("m2f2");
  CHECK(verify_witness(E, reflexive_witness(GreenKind::R, {1, 4})));
  CHECK(verify_witness(E, reflexive_witness(GreenKind::L, {1, 4})));
  CHECK(verify_witness(E, reflexive_h_witness({3})));

  BiorderedSet const rz = test::corpus_biorder("rz");
  GreenWitness const w  = rz_r_witness(rz);
  CHECK(verify_witness(rz, w));
  CHECK(verify_witness(rz, reversed(w)));
  CHECK(reversed(w).a == Word{1});
}

TEST_CASE("tampered witnesses fail with a diagnostic") {
  BiorderedSet const rz = test::corpus_biorder("rz");
  GreenWitness const w  = rz_r_witness(rz);

  GreenWitness bad = w;
  bad.kind         = GreenKind::L;  // multipliers now act on the wrong side
  CHECK_FALSE(verify_witness(rz, bad));

  bad          = w;
  bad.fwd_mult = {0};
  Check const c = verify_witness(rz, bad);
  CHECK_FALSE(c);
  CHECK(c.diagnostic.find("forward") != std::string::npos);

  bad   = w;
  bad.b = {0};
  CHECK_FALSE(verify_witness(rz, bad));

  bad   = w;
  bad.a = {};
  CHECK_FALSE(verify_witness(rz, bad));

  bad          = w;
  bad.bwd_mult = {7};
  CHECK_FALSE(verify_witness(rz, bad));

  // An H-witness whose parts disagree on the pair.
  HWitness h{w, reflexive_witness(GreenKind::L, {0})};
  CHECK_FALSE(verify_witness(rz, h));
  CHECK_FALSE(verify_witness(rz, HWitness{w, w}));
}

TEST_CASE("transport respects the congruence side") {
  BiorderedSet const rz = test::corpus_biorder("rz");
  GreenWitness const r  = rz_r_witness(rz);
  GreenWitness const moved = transport(r, {1, 0}, MultiplySide::left);
  CHECK(moved.a == Word{1, 0, 0});
  CHECK(moved.b == Word{1, 0, 1});
  CHECK(verify_witness(rz, moved));
  CHECK_THROWS_AS(transport(r, {1}, MultiplySide::right), SideError);

  GreenWitness const l = reflexive_witness(GreenKind::L, {0});
  CHECK(verify_witness(rz, transport(l, {1}, MultiplySide::right)));
  CHECK_THROWS_AS(transport(l, {1}, MultiplySide::left), SideError);
}

TEST_CASE("random transported witnesses verify") {
  std::mt19937_64 rng(3);
  for (auto name : {"t2", "t3", "rb22", "m2f2"}) {
    CAPTURE(name);
    BiorderedSet const E = test::corpus_biorder(name);
    for (int trial = 0; trial < 50; ++trial) {
      TransitionPath const p = test::random_path(E, test::random_word(E.size(), 2, rng), 5, 5, rng);
      Word const           x = test::random_word(E.size(), 1 + trial % 3, rng);
      GreenWitness const   r = from_path(GreenKind::R, p);
      GreenWitness const   l = from_path(GreenKind::L, p);
      REQUIRE(verify_witness(E, r));
      REQUIRE(verify_witness(E, l));
      GreenWitness const rx = transport(r, x, MultiplySide::left);
      GreenWitness const lx = transport(l, x, MultiplySide::right);
      CHECK(rx.a == x + p.start);
      CHECK(lx.a == p.start + x);
      CHECK(verify_witness(E, rx));
      CHECK(verify_witness(E, lx));
      CHECK(verify_witness(E, reversed(rx)));
    }
  }
}

TEST_CASE("composition") {
  BiorderedSet const rz = test::corpus_biorder("rz");
  GreenWitness const w  = rz_r_witness(rz);
  GreenWitness const ww = compose_transitive(w, reversed(w));
  CHECK(ww.a == Word{0});
  CHECK(ww.b == Word{0});
  CHECK(verify_witness(rz, ww));
  CHECK_THROWS_AS(compose_transitive(w, w), EndpointMismatch);
  CHECK_THROWS_AS(compose_transitive(w, reflexive_witness(GreenKind::L, {1})), EndpointMismatch);

  // Bridges move the endpoints along a path in IG(E).
  TransitionPath const b = proof(rz, {0, 1}, {1});
  GreenWitness const   moved = with_first_endpoint(reversed(w), b);
  CHECK(moved.a == Word{0, 1});
  CHECK(moved.b == Word{0});
  CHECK(verify_witness(rz, moved));
  GreenWitness const left = with_first_endpoint(w, proof(rz, {1, 0}, {0}));
  CHECK(left.a == Word{1, 0});
  CHECK(verify_witness(rz, left));
  GreenWitness const right = with_second_endpoint(w, invert(b));
  CHECK(right.b == Word{0, 1});
  CHECK(verify_witness(rz, right));
  CHECK_THROWS_AS(with_second_endpoint(w, proof(rz, {0, 1}, {1})), EndpointMismatch);
}

TEST_CASE("lemma1 H-witnesses") {
  BiorderedSet const rz = test::corpus_biorder("rz");
  Word const         w{0, 1};
  // w R [1]: w -> 1 directly, and 1 w = 1 0 1 -> 0 1.
  GreenWitness const rwit{GreenKind::R, w, {1}, {}, w, proof(rz, w, {1}), proof(rz, {1, 0, 1}, w)};
  GreenWitness const lwit{GreenKind::L, w, {1}, {}, {}, proof(rz, w, {1}), proof(rz, {1}, w)};
  REQUIRE(verify_witness(rz, rwit));
  REQUIRE(verify_witness(rz, lwit));
  SUBCASE("p == q") {
    HWitness const h = lemma1_h_witness(rz, w, 1, 1, 1, rwit, proof(rz, w, {1}));
    CHECK(h.a() == w);
    CHECK(h.b() == Word{1});
    CHECK(verify_witness(rz, h));
    CHECK(verify_witness(rz, lemma1_dual_h_witness(rz, w, 1, 1, 1, lwit, proof(rz, w, {1}))));
  }
  SUBCASE("p < q") {
    for (std::size_t q = 2; q <= 4; ++q) {
      CAPTURE(q);
      TransitionPath const rho = proof(rz, power(w, q), {1});
      CHECK(verify_witness(rz, lemma1_h_witness(rz, w, 1, q, 1, rwit, rho)));
      CHECK(verify_witness(rz, lemma1_dual_h_witness(rz, w, 1, q, 1, lwit, rho)));
    }
  }
  SUBCASE("bad inputs are rejected") {
    CHECK_THROWS_AS(lemma1_h_witness(rz, w, 2, 1, 1, rwit, proof(rz, w, {1})), VerificationError);
    CHECK_THROWS_AS(lemma1_h_witness(rz, w, 1, 1, 0, rwit, proof(rz, w, {1})), VerificationError);
    CHECK_THROWS_AS(lemma1_h_witness(rz, w, 1, 2, 1, rwit, proof(rz, w, {1})), VerificationError);
    CHECK_THROWS_AS(lemma1_h_witness(rz, w, 1, 1, 1, lwit, proof(rz, w, {1})), VerificationError);
  }
}

TEST_CASE("idempotent_root") {
  SUBCASE("right-zero") {
    BiorderedSet const   E = test::corpus_biorder("rz");
    IdempotentRoot const r = idempotent_root(E, {0, 1, 0}, budget);
    REQUIRE(r.idempotent);
    CHECK(*r.idempotent == 0);
    CHECK(replay_path(E, std::get<Proved>(r.verdict).path) == Word{0});
  }
  SUBCASE("rectangular band: (1,1)(2,2) has no idempotent root") {
    IdempotentRoot const r = idempotent_root(test::corpus_biorder("rb22"), {0, 3}, {6, 2000});
    CHECK(is_unknown(r.verdict));
    CHECK_FALSE(r.idempotent);
  }
  SUBCASE("non-idempotent images are refuted") {
    BiorderedSet const E     = test::corpus_biorder("t3");
    std::size_t        found = 0;
    test::for_each_word(E.size(), 2, [&](Word const& w) {
      IdempotentRoot const r = idempotent_root(E, w, budget);
      bool const idem = E.source().is_idempotent(eval_image(E, w));
      CHECK(is_refuted(r.verdict) == !idem);
      if (r.idempotent) {
        ++found;
        CHECK(E.to_source(*r.idempotent) == eval_image(E, w));
        CHECK(replay_path(E, std::get<Proved>(r.verdict).path) == Word{*r.idempotent});
      }
    });
    CHECK(found > 0);
  }
}
