#include <doctest.h>

#include "corpus.hpp"
#include "igcert/error.hpp"
#include "igcert/oracle.hpp"
#include "igcert/subgroup.hpp"

using namespace igcert;

namespace {
  BudgetPolicy const policy{std::nullopt, 50000};

  SubgroupCertificate certify(BiorderedSet const& E, Word const& w) {
    auto const pc = find_periodicity(E, w, policy, 6);
    REQUIRE(pc);
    Certification const c = subgroup_certificate(E, w, *pc, policy);
    REQUIRE(c.certificate);
    CHECK(c.stage == "done");
    return *c.certificate;
  }

  //! A certificate with a non-empty grid. Corpus words have minimal pairs
  //! with k = 1, but any proved (h, d) is admissible, so take a larger one.
  SubgroupCertificate grid_certificate(BiorderedSet const& E, Word const& w, std::size_t h,
                                       std::size_t d) {
    Verdict const v = prove_equiv(E, power(w, h), power(w, h + d), policy.for_length(w.size() * (h + d)));
    REQUIRE(is_proved(v));
    PeriodicityCertificate const pc{w, h, d, std::get<Proved>(v).path};
    Certification const          c = subgroup_certificate(E, w, pc, policy);
    REQUIRE(c.certificate);
    CHECK(c.certificate->k == idempotent_power(h, d));
    REQUIRE(c.certificate->k > 1);
    return *c.certificate;
  }
}  // namespace

TEST_CASE("idempotent_power is the least multiple of d at least h") {
  CHECK(idempotent_power(1, 1) == 1);
  CHECK(idempotent_power(2, 1) == 2);
  CHECK(idempotent_power(3, 2) == 4);
  CHECK(idempotent_power(1, 3) == 3);
  CHECK(idempotent_power(4, 4) == 4);
  CHECK(grid_labels().size() == 8);
}

TEST_CASE("a letter has period one and a trivial certificate") {
  BiorderedSet const E  = test::corpus_biorder("m2f2");
  auto const         pc = find_periodicity(E, {2}, policy);
  REQUIRE(pc);
  CHECK(pc->h == 1);
  CHECK(pc->d == 1);
  SubgroupCertificate const c = certify(E, {2});
  CHECK(c.k == 1);
  CHECK(c.e == 2);
  CHECK(c.grid.empty());
  CHECK_FALSE(c.power_hwit);
  CHECK(verify_subgroup_certificate(E, c));
}

TEST_CASE("right-zero: [0,1] is H-related to [1]") {
  BiorderedSet const        E = test::corpus_biorder("rz");
  SubgroupCertificate const c = certify(E, {0, 1});
  CHECK(c.k == 1);
  CHECK(c.e == 1);
  CHECK(verify_subgroup_certificate(E, c));
  CHECK(c.hwit.a() == Word{0, 1});
  CHECK(c.hwit.b() == Word{1});
}

TEST_CASE("rectangular band: (1,1)(2,2) has no period within the budget") {
  BiorderedSet const E = test::corpus_biorder("rb22");
  CHECK_FALSE(find_periodicity(E, {0, 3}, {std::nullopt, 2000}, 4));
  CHECK_THROWS_AS(find_periodicity(E, {0, 3}, {std::nullopt, 0}), BudgetError);
}

TEST_CASE("periodicity and certificates agree with the semigroup") {
  for (auto name : {"t2", "m2f2"}) {
    CAPTURE(name);
    BiorderedSet const     E = test::corpus_biorder(name);
    FiniteSemigroup const& S = E.source();
    GreenStructure const   g = oracle::green_by_definition(S);
    auto const             h = class_lookup(g.h_classes, S.order());
    std::size_t            certified = 0;
    test::for_each_word(E.size(), 3, [&](Word const& w) {
      auto const pc = find_periodicity(E, w, policy, 6);
      if (!pc) {
        return;
      }
      REQUIRE(verify_periodicity(E, *pc));
      // w^h = w^(h+d) in IG(E) forces the same in S.
      element_index const a  = eval_image(E, w);
      auto const          ip = index_period(S, a);
      CHECK(pc->h >= ip.index_h);
      CHECK(pc->d % ip.period_d == 0);
      std::size_t const k = idempotent_power(pc->h, pc->d);
      CHECK(replay_path(E, idempotency_path(*pc, k)) == power(power(w, k), 2));

      Certification const c = subgroup_certificate(E, w, *pc, policy);
      if (!c.certificate) {
        return;
      }
      CHECK(verify_subgroup_certificate(E, *c.certificate));
      CHECK(h[a] == h[E.to_source(c.certificate->e)]);
      CHECK(c.certificate->grid.size() == (c.certificate->k > 1 ? 8u : 0u));
      ++certified;
    });
    CHECK(certified > 0);
  }
}

TEST_CASE("non-minimal periods give a full grid") {
  for (auto name : {"rz", "t2", "m2f2"}) {
    CAPTURE(name);
    BiorderedSet const E = test::corpus_biorder(name);
    std::size_t        built = 0;
    test::for_each_word(E.size(), 2, [&](Word const& w) {
      auto const pc = find_periodicity(E, w, policy, 6);
      if (!pc || pc->d != 1 || pc->h != 1) {
        return;
      }
      for (auto [h, d] : {std::pair<std::size_t, std::size_t>{2, 1}, {1, 2}, {2, 2}, {1, 3}}) {
        CAPTURE(h);
        CAPTURE(d);
        SubgroupCertificate const c = grid_certificate(E, w, h, d);
        CHECK(verify_subgroup_certificate(E, c));
        CHECK(c.grid.size() == 8);
        CHECK(c.power_hwit);
        CHECK(c.ell * c.m + c.i - 1 < c.k * w.size());
        ++built;
      }
    });
    CHECK(built > 0);
  }
}

TEST_CASE("tampered certificates are rejected") {
  BiorderedSet const        E = test::corpus_biorder("m2f2");
  std::optional<Word> w;
  test::for_each_word(E.size(), 2, [&](Word const& x) {
    if (!w && x.size() == 2 && x[0] != x[1] && find_periodicity(E, x, policy, 2)) {
      w = x;
    }
  });
  REQUIRE(w);
  SubgroupCertificate const c = grid_certificate(E, *w, 2, 2);
  REQUIRE(verify_subgroup_certificate(E, c));
  CHECK(c.power_hwit);

  SubgroupCertificate bad = c;
  ++bad.ell;
  CHECK_FALSE(verify_subgroup_certificate(E, bad));

  bad = c;
  bad.grid.pop_back();
  CHECK_FALSE(verify_subgroup_certificate(E, bad));

  bad = c;
  std::swap(bad.grid[0], bad.grid[1]);
  CHECK_FALSE(verify_subgroup_certificate(E, bad));

  for (std::size_t j = 0; j < c.grid.size(); ++j) {
    CAPTURE(j);
    bad = c;
    auto& steps = bad.grid[j].witness.fwd_proof.steps;
    if (steps.empty()) {
      bad.grid[j].witness.fwd_mult.push_back(0);
    } else {
      steps.pop_back();
    }
    Check const r = verify_subgroup_certificate(E, bad);
    CHECK_FALSE(r);
    CHECK_FALSE(r.diagnostic.empty());
  }

  bad   = c;
  bad.e = static_cast<letter_type>((c.e + 1) % E.size());
  CHECK_FALSE(verify_subgroup_certificate(E, bad));

  bad = c;
  bad.idem_path.steps.pop_back();
  CHECK_FALSE(verify_subgroup_certificate(E, bad));

  bad = c;
  bad.hwit = reflexive_h_witness(c.w);
  CHECK_FALSE(verify_subgroup_certificate(E, bad));

  bad = c;
  bad.power_hwit.reset();
  CHECK_FALSE(verify_subgroup_certificate(E, bad));

  bad = c;
  bad.periodicity.d += 1;
  CHECK_FALSE(verify_subgroup_certificate(E, bad));
}

TEST_CASE("a periodicity proof that does not replay is refused") {
  BiorderedSet const     E = test::corpus_biorder("rz");
  PeriodicityCertificate pc{{0, 1}, 1, 1, identity_path({0, 1})};
  CHECK_FALSE(verify_periodicity(E, pc));
  CHECK_THROWS_AS(subgroup_certificate(E, {0, 1}, pc, policy), VerificationError);
}
