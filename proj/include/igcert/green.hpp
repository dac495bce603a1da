// Certificates for Green's relations between word images in IG(E).
//
// An R-witness for (a, b) stores multipliers s, t in E^* together with paths
//
//   fwd_proof : a s -> b        bwd_proof : b t -> a
//
// so aS^1 = bS^1 in IG(E). An L-witness is the mirror image, with the
// multipliers on the left (s a -> b, t b -> a). An empty multiplier stands for
// the adjoined identity. Checking a witness is pure replay; no search.

#ifndef IGCERT_GREEN_HPP_
#define IGCERT_GREEN_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "igcert/biorder.hpp"
#include "igcert/rewrite.hpp"
#include "igcert/search.hpp"

namespace igcert {

  enum class GreenKind { R, L };

  std::string to_string(GreenKind kind);

  enum class MultiplySide { left, right };

  struct GreenWitness {
    GreenKind      kind = GreenKind::R;
    Word           a;
    Word           b;
    Word           fwd_mult;
    Word           bwd_mult;
    TransitionPath fwd_proof;
    TransitionPath bwd_proof;

    friend bool operator==(GreenWitness const&, GreenWitness const&) = default;
  };

  struct HWitness {
    GreenWitness r;
    GreenWitness l;

    Word const& a() const noexcept {
      return r.a;
    }
    Word const& b() const noexcept {
      return r.b;
    }

    friend bool operator==(HWitness const&, HWitness const&) = default;
  };

  //! Outcome of a replay check; `diagnostic` names the first failure.
  struct Check {
    bool        ok = true;
    std::string diagnostic;

    explicit operator bool() const noexcept {
      return ok;
    }

    static Check pass() {
      return {};
    }
    static Check fail(std::string why) {
      return {false, std::move(why)};
    }
  };

  Check verify_witness(BiorderedSet const& E, GreenWitness const& w);
  Check verify_witness(BiorderedSet const& E, HWitness const& w);

  GreenWitness reflexive_witness(GreenKind kind, Word const& a);
  HWitness     reflexive_h_witness(Word const& a);

  //! The witness for (b, a).
  GreenWitness reversed(GreenWitness const& w);

  //! L is a right congruence and R a left congruence: an L-witness for (a, b)
  //! moves to (a x, b x), an R-witness to (x a, x b). The multipliers are
  //! kept. Throws SideError for the other combinations.
  GreenWitness transport(GreenWitness const& w, Word const& x, MultiplySide side);

  //! Chains (a, b) and (b', c) through a path b -> b'. Throws
  //! EndpointMismatch if the bridge does not join the two witnesses, or if the
  //! kinds differ.
  GreenWitness compose_transitive(GreenWitness const&   w1,
                                  GreenWitness const&   w2,
                                  TransitionPath const& bridge);

  //! Same, when w1.b == w2.a.
  GreenWitness compose_transitive(GreenWitness const& w1, GreenWitness const& w2);

  //! The witness for (a', b) given a path a' -> a.
  GreenWitness with_first_endpoint(GreenWitness const& w, TransitionPath const& bridge);

  //! The witness for (a, b') given a path b -> b'.
  GreenWitness with_second_endpoint(GreenWitness const& w, TransitionPath const& bridge);

  //! If w^p R e and w^q ~ e with p <= q, then w^p H e.
  //!
  //! The R-part is `rwit`, relating w^p and [e]. The L-part uses multipliers w^(q-p) (whose proof is
  //! `rho`) and w^p, whose proof follows the chain
  //!   w^p e ~ w^p w^q = w^q w^p ~ e w^p ~ e e t ~ e t ~ w^p
  //! with t the backward multiplier of rwit. When p == q the L-part is rho and
  //! its inverse. Throws VerificationError if an input does not replay.
  HWitness lemma1_h_witness(BiorderedSet const&   E,
                            Word const&           w,
                            std::size_t           p,
                            std::size_t           q,
                            letter_type           e,
                            GreenWitness const&   rwit,
                            TransitionPath const& rho);

  //! Left-right dual of lemma1_h_witness: from w^p L e and w^q ~ e.
  HWitness lemma1_dual_h_witness(BiorderedSet const&   E,
                                 Word const&           w,
                                 std::size_t           p,
                                 std::size_t           q,
                                 letter_type           e,
                                 GreenWitness const&   lwit,
                                 TransitionPath const& rho);

  struct IdempotentRoot {
    Verdict                    verdict;
    std::optional<letter_type> idempotent;  // set iff verdict is Proved
  };

  //! Looks for a single letter e with w ~ e. Refuted when the image of w in S
  //! is not idempotent. Otherwise the only candidate is the letter whose
  //! image equals that of w (distinct letters have distinct images), and the
  //! search is prove_equiv(w, [e]).
  IdempotentRoot idempotent_root(BiorderedSet const& E, Word const& w, Budget const& budget);

}  // namespace igcert

#endif  // IGCERT_GREEN_HPP_
