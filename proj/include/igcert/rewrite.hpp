// Elementary transitions of IG(E) and replayable paths.
//
// Two words of E^+ have the same image in IG(E) exactly when they are joined
// by a finite sequence of elementary transitions
//
//   x e1 e2 y  ->  x e3 y     (contract)
//   x e3 y     ->  x e1 e2 y  (expand)
//
// with e1 o e2 = e3 defined in E. A TransitionPath is such a sequence together
// with its start word; replaying it is the certificate check.

#ifndef IGCERT_REWRITE_HPP_
#define IGCERT_REWRITE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "igcert/biorder.hpp"
#include "igcert/word.hpp"

namespace igcert {

  enum class TransitionKind : std::uint8_t { contract, expand };

  std::string to_string(TransitionKind kind);

  struct Transition {
    std::size_t                pos = 0;
    TransitionKind             kind = TransitionKind::contract;
    std::array<letter_type, 3> triple{};  // e1, e2, e3 with e1 o e2 = e3

    //! Same site and triple, opposite direction.
    Transition inverse() const noexcept {
      return {pos,
              kind == TransitionKind::contract ? TransitionKind::expand
                                               : TransitionKind::contract,
              triple};
    }

    friend bool operator==(Transition const&, Transition const&) = default;
  };

  //! Order used for neighbour enumeration: position, contract before expand,
  //! then triple.
  bool operator<(Transition const& a, Transition const& b) noexcept;

  struct TransitionPath {
    Word                    start;
    std::vector<Transition> steps;

    friend bool operator==(TransitionPath const&, TransitionPath const&) = default;
  };

  //! All one-step moves from w, in enumeration order. Expansions are not
  //! length-capped here.
  std::vector<std::pair<Transition, Word>> neighbors(BiorderedSet const& E,
                                                     Word const&         w);

  //! Throws PatternMismatch (step 0) if the letters at t.pos disagree with the
  //! triple or the triple is not a defined product of E.
  Word apply_transition(BiorderedSet const& E, Word const& w, Transition const& t);

  //! Replays every step from path.start; throws PatternMismatch carrying the
  //! index of the first failing step.
  Word replay_path(BiorderedSet const& E, TransitionPath const& path);

  //! Like replay_path, but only checks that letters match the triples; the
  //! products are not looked up. Used by the path combinators, which never
  //! need E.
  Word endpoint(TransitionPath const& path);

  //! Image of w under E^+ -> IG(E) -> S.
  element_index eval_image(BiorderedSet const& E, Word const& w);

  TransitionPath identity_path(Word w);

  //! p followed by q; throws EndpointMismatch unless endpoint(p) == q.start.
  TransitionPath concat(TransitionPath const& p, TransitionPath const& q);

  //! Concatenation of a non-empty sequence of paths.
  TransitionPath concat(std::vector<TransitionPath> const& parts);

  //! The reverse path, from endpoint(p) back to p.start.
  TransitionPath invert(TransitionPath const& p);

  //! The same moves performed inside left * w * right.
  TransitionPath embed(TransitionPath const& p, Word const& left, Word const& right);

}  // namespace igcert

#endif  // IGCERT_REWRITE_HPP_
