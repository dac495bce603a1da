#include "igcert/subgroup.hpp"

#include <utility>

#include "igcert/error.hpp"

namespace igcert {

  namespace {
    std::string replay_error(BiorderedSet const&   E,
                             TransitionPath const& path,
                             Word const&           from,
                             Word const&           to) {
      if (path.start != from) {
        return "does not start at [" + to_string(from) + "]";
      }
      try {
        if (replay_path(E, path) != to) {
          return "does not end at [" + to_string(to) + "]";
        }
      } catch (PatternMismatch const& e) {
        return e.what();
      }
      return {};
    }

    struct ExpectedEdge {
      GreenKind kind;
      Word      a;
      Word      b;
    };

    // Endpoints each grid edge must relate, derived from (w, e, k, ell, i).
    std::vector<ExpectedEdge> expected_grid(SubgroupCertificate const& c) {
      Word const&       w  = c.w;
      std::size_t const n  = w.size();
      Word const        P  = subword(w, 0, c.i - 1);
      Word const        Q  = subword(w, c.i, n);
      Word const        ei{w[c.i - 1]};
      Word const        pre = power(w, c.ell) + P;
      Word const        wl1 = power(w, c.ell + 1);
      return {{GreenKind::L, wl1, ei + Q},
              {GreenKind::R, ei, ei + Q},
              {GreenKind::R, pre + ei, wl1},
              {GreenKind::R, pre + ei, power(w, c.k)},
              {GreenKind::R, wl1, {c.e}},
              {GreenKind::L, ei + Q, w},
              {GreenKind::L, w, wl1},
              {GreenKind::L, w, {c.e}}};
    }
  }  // namespace

  std::vector<std::string> const& grid_labels() {
    static std::vector<std::string> const labels{
        "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"};
    return labels;
  }

  Check verify_periodicity(BiorderedSet const& E, PeriodicityCertificate const& pc) {
    if (pc.w.empty() || !E.valid_word(pc.w)) {
      return Check::fail("periodicity certificate has an invalid word");
    }
    if (pc.h == 0 || pc.d == 0) {
      return Check::fail("index and period must be positive");
    }
    if (auto why = replay_error(E, pc.proof, power(pc.w, pc.h), power(pc.w, pc.h + pc.d));
        !why.empty()) {
      return Check::fail("periodicity proof " + why);
    }
    return Check::pass();
  }

  std::optional<PeriodicityCertificate> find_periodicity(BiorderedSet const& E,
                                                         Word const&         w,
                                                         BudgetPolicy const& policy,
                                                         std::size_t         power_cap) {
    if (w.empty() || !E.valid_word(w)) {
      throw Error("find_periodicity needs a non-empty word over E");
    }
    if (policy.max_nodes == 0 || (policy.max_len && *policy.max_len == 0)) {
      throw BudgetError("budgets must be positive");
    }
    // If w^h ~ w^(h+d) then some power w^k is idempotent in IG(E), hence
    // equal to the letter e with the same image. The ideal support is
    // invariant, so when it differs from that of e no search can succeed.
    FiniteSemigroup const& S   = E.source();
    element_index const    img = eval_image(E, w);
    IndexPeriod const      ip  = index_period(S, img);
    letter_type const      e   = *E.letter_of(S.power(img, idempotent_power(ip.index_h, ip.period_d)));
    if (E.ideal_support(w) != E.ideal_support(Word{e})) {
      return std::nullopt;
    }
    for (std::size_t total = 2; total <= power_cap; ++total) {
      Word const longer = power(w, total);
      Budget const budget = policy.for_length(longer.size());
      if (budget.max_len < longer.size()) {
        continue;
      }
      for (std::size_t h = 1; h < total; ++h) {
        Verdict v = prove_equiv(E, power(w, h), longer, budget);
        if (auto* p = std::get_if<Proved>(&v)) {
          return PeriodicityCertificate{w, h, total - h, std::move(p->path)};
        }
      }
    }
    return std::nullopt;
  }

  std::size_t idempotent_power(std::size_t h, std::size_t d) noexcept {
    return ((h + d - 1) / d) * d;
  }

  TransitionPath idempotency_path(PeriodicityCertificate const& pc, std::size_t k) {
    if (k < pc.h || k % pc.d != 0) {
      throw Error("k must be a multiple of d with k >= h");
    }
    // Each round pads w^h -> w^(h+d) on the right, advancing w^(k+jd) to
    // w^(k+(j+1)d).
    std::vector<TransitionPath> parts;
    for (std::size_t j = 0; j < k / pc.d; ++j) {
      parts.push_back(embed(pc.proof, {}, power(pc.w, k - pc.h + j * pc.d)));
    }
    return concat(parts);
  }

  Certification subgroup_certificate(BiorderedSet const&           E,
                                     Word const&                   w,
                                     PeriodicityCertificate const& pc,
                                     BudgetPolicy const&           policy) {
    if (pc.w != w) {
      throw VerificationError("periodicity certificate is for a different word");
    }
    if (auto c = verify_periodicity(E, pc); !c) {
      throw VerificationError(c.diagnostic);
    }
    SubgroupCertificate cert;
    cert.w                 = w;
    cert.periodicity       = pc;
    cert.k                 = idempotent_power(pc.h, pc.d);
    cert.idempotency_proof = idempotency_path(pc, cert.k);

    Word const     wk   = power(w, cert.k);
    IdempotentRoot root = idempotent_root(E, wk, policy.for_length(wk.size()));
    if (!root.idempotent) {
      return {std::nullopt, "idempotent-root", std::move(root.verdict)};
    }
    cert.e         = *root.idempotent;
    cert.idem_path = std::get<Proved>(root.verdict).path;

    Decomposition const& dec = cert.decomposition = decompose(E, wk, cert.idem_path);
    std::size_t const    n   = w.size();
    cert.ell                 = dec.f_pos / n;
    cert.i                   = dec.f_pos % n + 1;
    cert.m                   = cert.k - cert.ell - 1;

    if (cert.k == 1) {
      // w itself is idempotent in IG(E).
      GreenWitness r{GreenKind::R, w, {cert.e}, {}, {}, cert.idem_path, invert(cert.idem_path)};
      GreenWitness l = r;
      l.kind         = GreenKind::L;
      cert.hwit      = {std::move(r), std::move(l)};
      return {std::move(cert), "done", std::nullopt};
    }

    Word const P  = subword(w, 0, cert.i - 1);
    Word const Q  = subword(w, cert.i, n);
    Word const ei{w[cert.i - 1]};
    Word const wl  = power(w, cert.ell);
    Word const pre = wl + P;

    // w^(ell+1) L (e_i ... e_n)
    GreenWitness e1 = transport(dec.lwit, Q, MultiplySide::right);
    // e_i R (e_i ... e_n): forward by the rest of w, backward by w^m then
    // the backward multiplier of the decomposition's R-witness.
    GreenWitness e2{GreenKind::R,
                    ei,
                    ei + Q,
                    Q,
                    power(w, cert.m) + dec.rwit.bwd_mult,
                    identity_path(ei + Q),
                    dec.rwit.bwd_proof};
    // (w^ell e_1 ... e_i) R w^(ell+1)
    GreenWitness e3 = transport(e2, pre, MultiplySide::left);
    // (w^ell e_1 ... e_i) R w^k
    GreenWitness e4 = transport(dec.rwit, pre, MultiplySide::left);
    // w^(ell+1) R w^k ~ e
    GreenWitness e5 =
        with_second_endpoint(compose_transitive(reversed(e3), e4), cert.idem_path);

    HWitness power_h = lemma1_h_witness(E, w, cert.ell + 1, cert.k, cert.e, e5, cert.idem_path);

    // (e_i ... e_n) L w: forward by e_1 ... e_(i-1) (literally equal),
    // backward through w^(ell+1) using E1's forward multiplier.
    GreenWitness e6{GreenKind::L,
                    ei + Q,
                    w,
                    P,
                    e1.fwd_mult + wl,
                    identity_path(w),
                    e1.fwd_proof};
    GreenWitness e7 = compose_transitive(reversed(e6), reversed(e1));
    GreenWitness e8 = compose_transitive(e7, power_h.l);

    cert.hwit       = lemma1_dual_h_witness(E, w, 1, cert.k, cert.e, e8, cert.idem_path);
    cert.power_hwit = std::move(power_h);
    auto const& labels = grid_labels();
    GreenWitness* edges[] = {&e1, &e2, &e3, &e4, &e5, &e6, &e7, &e8};
    for (std::size_t j = 0; j < labels.size(); ++j) {
      cert.grid.push_back({labels[j], std::move(*edges[j])});
    }
    return {std::move(cert), "done", std::nullopt};
  }

  Check verify_subgroup_certificate(BiorderedSet const& E, SubgroupCertificate const& c) {
    Word const& w = c.w;
    if (w.empty() || !E.valid_word(w) || !E.valid_letter(c.e)) {
      return Check::fail("certificate mentions an invalid word or letter");
    }
    if (c.periodicity.w != w) {
      return Check::fail("periodicity: certificate is for a different word");
    }
    if (auto r = verify_periodicity(E, c.periodicity); !r) {
      return Check::fail("periodicity: " + r.diagnostic);
    }
    std::size_t const n = w.size();
    if (c.k != idempotent_power(c.periodicity.h, c.periodicity.d)) {
      return Check::fail("index arithmetic: k is not the least multiple of d above h");
    }
    if (c.ell >= c.k || c.m >= c.k || c.ell + c.m + 1 != c.k || c.i < 1 || c.i > n) {
      return Check::fail("index arithmetic: need 0 <= ell, m < k = ell + m + 1 and 1 <= i <= |w|");
    }
    if (c.decomposition.f_pos != c.ell * n + (c.i - 1)) {
      return Check::fail("index arithmetic: f_pos != ell |w| + i - 1");
    }
    Word const wk = power(w, c.k);
    if (auto why = replay_error(E, c.idempotency_proof, wk, power(w, 2 * c.k)); !why.empty()) {
      return Check::fail("idempotency_proof " + why);
    }
    if (auto why = replay_error(E, c.idem_path, wk, {c.e}); !why.empty()) {
      return Check::fail("idem_path " + why);
    }
    if (!E.source().is_idempotent(E.to_source(c.e))) {
      return Check::fail("e is not idempotent in the source semigroup");
    }
    if (auto r = verify_decomposition(E, wk, c.decomposition); !r) {
      return Check::fail("decomposition: " + r.diagnostic);
    }
    if (c.k == 1) {
      if (!c.grid.empty() || c.power_hwit) {
        return Check::fail("grid: expected no edges when k = 1");
      }
    } else {
      auto const expected = expected_grid(c);
      auto const& labels  = grid_labels();
      if (c.grid.size() != expected.size()) {
        return Check::fail("grid: expected " + std::to_string(expected.size()) + " edges");
      }
      for (std::size_t j = 0; j < expected.size(); ++j) {
        auto const& edge = c.grid[j];
        if (edge.label != labels[j] || edge.witness.kind != expected[j].kind
            || edge.witness.a != expected[j].a || edge.witness.b != expected[j].b) {
          return Check::fail("grid " + labels[j] + ": wrong label, kind or endpoints");
        }
        if (auto r = verify_witness(E, edge.witness); !r) {
          return Check::fail("grid " + labels[j] + ": " + r.diagnostic);
        }
      }
      if (!c.power_hwit || c.power_hwit->a() != power(w, c.ell + 1)
          || c.power_hwit->b() != Word{c.e}) {
        return Check::fail("power_hwit: missing or wrong endpoints");
      }
      if (auto r = verify_witness(E, *c.power_hwit); !r) {
        return Check::fail("power_hwit: " + r.diagnostic);
      }
    }
    if (c.hwit.a() != w || c.hwit.b() != Word{c.e}) {
      return Check::fail("hwit: endpoints are not (w, e)");
    }
    if (auto r = verify_witness(E, c.hwit); !r) {
      return Check::fail("hwit: " + r.diagnostic);
    }
    return Check::pass();
  }

}  // namespace igcert
