#include "igcert/green.hpp"

#include <utility>

#include "igcert/error.hpp"

namespace igcert {

  namespace {
    // Replays `path` and checks both endpoints; "" on success.
    std::string check_path(BiorderedSet const&   E,
                           TransitionPath const& path,
                           Word const&           from,
                           Word const&           to) {
      if (path.start != from) {
        return "starts at [" + to_string(path.start) + "], expected ["
               + to_string(from) + "]";
      }
      try {
        Word const end = replay_path(E, path);
        if (end != to) {
          return "ends at [" + to_string(end) + "], expected [" + to_string(to)
                 + "]";
        }
      } catch (PatternMismatch const& e) {
        return e.what();
      }
      return {};
    }

    TransitionPath contraction(Word const& w, std::size_t pos, letter_type e) {
      return {w, {{pos, TransitionKind::contract, {e, e, e}}}};
    }

    void require(Check const& c, char const* what) {
      if (!c) {
        throw VerificationError(std::string(what) + ": " + c.diagnostic);
      }
    }

    void require_rho(BiorderedSet const&   E,
                     TransitionPath const& rho,
                     Word const&           wq,
                     letter_type           e) {
      if (auto why = check_path(E, rho, wq, Word{e}); !why.empty()) {
        throw VerificationError("path w^q ~ e: " + why);
      }
    }
  }  // namespace

  std::string to_string(GreenKind kind) {
    return kind == GreenKind::R ? "R" : "L";
  }

  Check verify_witness(BiorderedSet const& E, GreenWitness const& w) {
    if (w.a.empty() || w.b.empty()) {
      return Check::fail("witness endpoints must be non-empty words");
    }
    for (Word const* x : {&w.a, &w.b, &w.fwd_mult, &w.bwd_mult}) {
      if (!E.valid_word(*x)) {
        return Check::fail("witness mentions a letter outside E");
      }
    }
    bool const r       = w.kind == GreenKind::R;
    Word const fwd_src = r ? w.a + w.fwd_mult : w.fwd_mult + w.a;
    Word const bwd_src = r ? w.b + w.bwd_mult : w.bwd_mult + w.b;
    if (auto why = check_path(E, w.fwd_proof, fwd_src, w.b); !why.empty()) {
      return Check::fail(to_string(w.kind) + "-witness forward proof " + why);
    }
    if (auto why = check_path(E, w.bwd_proof, bwd_src, w.a); !why.empty()) {
      return Check::fail(to_string(w.kind) + "-witness backward proof " + why);
    }
    return Check::pass();
  }

  Check verify_witness(BiorderedSet const& E, HWitness const& w) {
    if (w.r.kind != GreenKind::R || w.l.kind != GreenKind::L) {
      return Check::fail("H-witness needs an R-part and an L-part");
    }
    if (w.r.a != w.l.a || w.r.b != w.l.b) {
      return Check::fail("H-witness parts relate different pairs");
    }
    if (auto c = verify_witness(E, w.r); !c) {
      return c;
    }
    return verify_witness(E, w.l);
  }

  GreenWitness reflexive_witness(GreenKind kind, Word const& a) {
    return {kind, a, a, {}, {}, identity_path(a), identity_path(a)};
  }

  HWitness reflexive_h_witness(Word const& a) {
    return {reflexive_witness(GreenKind::R, a), reflexive_witness(GreenKind::L, a)};
  }

  GreenWitness reversed(GreenWitness const& w) {
    return {w.kind, w.b, w.a, w.bwd_mult, w.fwd_mult, w.bwd_proof, w.fwd_proof};
  }

  GreenWitness transport(GreenWitness const& w, Word const& x, MultiplySide side) {
    if (w.kind == GreenKind::L && side == MultiplySide::right) {
      return {w.kind,
              w.a + x,
              w.b + x,
              w.fwd_mult,
              w.bwd_mult,
              embed(w.fwd_proof, {}, x),
              embed(w.bwd_proof, {}, x)};
    }
    if (w.kind == GreenKind::R && side == MultiplySide::left) {
      return {w.kind,
              x + w.a,
              x + w.b,
              w.fwd_mult,
              w.bwd_mult,
              embed(w.fwd_proof, x, {}),
              embed(w.bwd_proof, x, {})};
    }
    throw SideError(to_string(w.kind) + " is not compatible with multiplication on the "
                    + (side == MultiplySide::left ? "left" : "right"));
  }

  GreenWitness compose_transitive(GreenWitness const&   w1,
                                  GreenWitness const&   w2,
                                  TransitionPath const& bridge) {
    if (w1.kind != w2.kind) {
      throw EndpointMismatch("cannot compose an " + to_string(w1.kind)
                             + "-witness with an " + to_string(w2.kind) + "-witness");
    }
    if (bridge.start != w1.b || endpoint(bridge) != w2.a) {
      throw EndpointMismatch("bridge does not join [" + to_string(w1.b) + "] to ["
                             + to_string(w2.a) + "]");
    }
    TransitionPath const back = invert(bridge);
    GreenWitness         out;
    out.kind = w1.kind;
    out.a    = w1.a;
    out.b    = w2.b;
    if (w1.kind == GreenKind::R) {
      // a s1 s2 -> b s2 -> b' s2 -> c ;  c t2 t1 -> b' t1 -> b t1 -> a
      out.fwd_mult  = w1.fwd_mult + w2.fwd_mult;
      out.bwd_mult  = w2.bwd_mult + w1.bwd_mult;
      out.fwd_proof = concat({embed(w1.fwd_proof, {}, w2.fwd_mult),
                              embed(bridge, {}, w2.fwd_mult),
                              w2.fwd_proof});
      out.bwd_proof = concat({embed(w2.bwd_proof, {}, w1.bwd_mult),
                              embed(back, {}, w1.bwd_mult),
                              w1.bwd_proof});
    } else {
      // s2 s1 a -> s2 b -> s2 b' -> c ;  t1 t2 c -> t1 b' -> t1 b -> a
      out.fwd_mult  = w2.fwd_mult + w1.fwd_mult;
      out.bwd_mult  = w1.bwd_mult + w2.bwd_mult;
      out.fwd_proof = concat({embed(w1.fwd_proof, w2.fwd_mult, {}),
                              embed(bridge, w2.fwd_mult, {}),
                              w2.fwd_proof});
      out.bwd_proof = concat({embed(w2.bwd_proof, w1.bwd_mult, {}),
                              embed(back, w1.bwd_mult, {}),
                              w1.bwd_proof});
    }
    return out;
  }

  GreenWitness compose_transitive(GreenWitness const& w1, GreenWitness const& w2) {
    return compose_transitive(w1, w2, identity_path(w1.b));
  }

  GreenWitness with_first_endpoint(GreenWitness const& w, TransitionPath const& bridge) {
    return compose_transitive(reflexive_witness(w.kind, bridge.start), w, bridge);
  }

  GreenWitness with_second_endpoint(GreenWitness const& w, TransitionPath const& bridge) {
    return compose_transitive(w, reflexive_witness(w.kind, endpoint(bridge)), bridge);
  }

  HWitness lemma1_h_witness(BiorderedSet const&   E,
                            Word const&           w,
                            std::size_t           p,
                            std::size_t           q,
                            letter_type           e,
                            GreenWitness const&   rwit,
                            TransitionPath const& rho) {
    if (p == 0 || p > q) {
      throw VerificationError("power H-witness needs 1 <= p <= q");
    }
    Word const wp = power(w, p), wq = power(w, q), ew{e};
    if (rwit.kind != GreenKind::R || rwit.a != wp || rwit.b != ew) {
      throw VerificationError("R-witness does not relate w^p and e");
    }
    require(verify_witness(E, rwit), "R-witness");
    require_rho(E, rho, wq, e);

    GreenWitness l;
    l.kind = GreenKind::L;
    l.a    = wp;
    l.b    = ew;
    if (p == q) {
      l.fwd_proof = rho;
      l.bwd_proof = invert(rho);
      return {rwit, l};
    }
    // s = w^(q-p): s w^p is literally w^q.
    l.fwd_mult  = power(w, q - p);
    l.fwd_proof = rho;
    // t = w^p, proof of w^p e -> w^p.
    Word const& t = rwit.bwd_mult;
    l.bwd_mult    = wp;
    l.bwd_proof   = concat({
        embed(invert(rho), wp, {}),             // w^p e -> w^p w^q
        embed(rho, {}, wp),                     // w^q w^p -> e w^p
        embed(invert(rwit.bwd_proof), ew, {}),  // e w^p -> e e t
        contraction(ew + ew + t, 0, e),         // e e t -> e t
        rwit.bwd_proof                          // e t -> w^p
    });
    return {rwit, l};
  }

  HWitness lemma1_dual_h_witness(BiorderedSet const&   E,
                                 Word const&           w,
                                 std::size_t           p,
                                 std::size_t           q,
                                 letter_type           e,
                                 GreenWitness const&   lwit,
                                 TransitionPath const& rho) {
    if (p == 0 || p > q) {
      throw VerificationError("power H-witness needs 1 <= p <= q");
    }
    Word const wp = power(w, p), wq = power(w, q), ew{e};
    if (lwit.kind != GreenKind::L || lwit.a != wp || lwit.b != ew) {
      throw VerificationError("L-witness does not relate w^p and e");
    }
    require(verify_witness(E, lwit), "L-witness");
    require_rho(E, rho, wq, e);

    GreenWitness r;
    r.kind = GreenKind::R;
    r.a    = wp;
    r.b    = ew;
    if (p == q) {
      r.fwd_proof = rho;
      r.bwd_proof = invert(rho);
      return {r, lwit};
    }
    r.fwd_mult  = power(w, q - p);
    r.fwd_proof = rho;
    Word const& t = lwit.bwd_mult;
    r.bwd_mult    = wp;
    r.bwd_proof   = concat({
        embed(invert(rho), {}, wp),             // e w^p -> w^q w^p
        embed(rho, wp, {}),                     // w^p w^q -> w^p e
        embed(invert(lwit.bwd_proof), {}, ew),  // w^p e -> t e e
        contraction(t + ew + ew, t.size(), e),  // t e e -> t e
        lwit.bwd_proof                          // t e -> w^p
    });
    return {r, lwit};
  }

  IdempotentRoot idempotent_root(BiorderedSet const& E, Word const& w, Budget const& budget) {
    check_budget(budget, w.size());
    FiniteSemigroup const& S     = E.source();
    element_index const    image = eval_image(E, w);
    if (!S.is_idempotent(image)) {
      return {Refuted{image, S.product(image, image)}, std::nullopt};
    }
    letter_type const e = *E.letter_of(image);
    Verdict           v = prove_equiv(E, w, Word{e}, budget);
    if (is_proved(v)) {
      return {std::move(v), e};
    }
    return {std::move(v), std::nullopt};
  }

}  // namespace igcert
