// Distinguished-letter decompositions.
//
// Given a path from w to a single letter e, decompose() produces
// w = u f v (f a letter, u and v possibly empty) together with witnesses
//
//   (u f) L f    and    f R (f v)
//
// in IG(E). The construction runs the induction on the path: the last word
// of the path is its own decomposition, and each earlier transition is
// absorbed by a case analysis on where it happens relative to the
// distinguished letter. Every witness is assembled from the transitions of
// the path and fixed short bridges; no search is performed.

#ifndef IGCERT_DECOMPOSITION_HPP_
#define IGCERT_DECOMPOSITION_HPP_

#include <cstddef>

#include "igcert/biorder.hpp"
#include "igcert/green.hpp"
#include "igcert/rewrite.hpp"

namespace igcert {

  struct Decomposition {
    Word         u;
    letter_type  f_letter = 0;
    std::size_t  f_pos    = 0;  // == u.size()
    Word         v;
    GreenWitness lwit;  // L-witness for (u f, f)
    GreenWitness rwit;  // R-witness for (f, f v)

    friend bool operator==(Decomposition const&, Decomposition const&) = default;
  };

  struct DecomposeStats {
    std::size_t depth = 0;  // induction steps taken; equals the path length
    //! How often each case fired: inside prefix, inside suffix, contraction
    //! at the site by tag 1..4, expansion at the site onto e1 or e2.
    std::size_t prefix = 0, suffix = 0;
    std::size_t contract_tag[5]  = {0, 0, 0, 0, 0};
    std::size_t expand_first     = 0;
    std::size_t expand_second    = 0;
  };

  //! Throws PatternMismatch if `path` does not replay from w to a single
  //! letter, and CaseError if a contraction site carries no basic-pair case.
  Decomposition decompose(BiorderedSet const&   E,
                          Word const&           w,
                          TransitionPath const& path,
                          DecomposeStats*       stats = nullptr);

  Check verify_decomposition(BiorderedSet const& E, Word const& w, Decomposition const& d);

  //! The two-step path e1 e2 e1 -> e1 when e1 o e2 = e1 (tag 1) or
  //! e2 o e1 = e1 (tag 3).
  TransitionPath absorb_left_bridge(BiorderedSet const& E,
                                    letter_type         e1,
                                    letter_type         e2,
                                    int                 tag);

  //! The two-step path e2 e1 e2 -> e2 when e1 o e2 = e2 (tag 2) or
  //! e2 o e1 = e2 (tag 4).
  TransitionPath absorb_right_bridge(BiorderedSet const& E,
                                     letter_type         e1,
                                     letter_type         e2,
                                     int                 tag);

}  // namespace igcert

#endif  // IGCERT_DECOMPOSITION_HPP_
