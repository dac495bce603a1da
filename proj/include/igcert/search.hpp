// Budgeted search for elementary-transition paths between two words.
//
// The word problem of IG(E) is not decided here. Every search answers with a
// three-valued Verdict:
//
//   Proved   a replayable path from w1 to w2;
//   Refuted  the images of w1 and w2 in the source semigroup differ, which is
//            impossible for equal elements of IG(E) because every defining
//            relation holds in S;
//   Unknown  the budget ran out (or the bounded class was exhausted) without
//            the two searches meeting. Unknown is never upgraded to Refuted.

#ifndef IGCERT_SEARCH_HPP_
#define IGCERT_SEARCH_HPP_

#include <cstddef>
#include <optional>
#include <variant>

#include "igcert/biorder.hpp"
#include "igcert/rewrite.hpp"

namespace igcert {

  struct Budget {
    std::size_t max_len   = 0;  // longest word the search may visit
    std::size_t max_nodes = 0;  // states stored over both search directions
  };

  //! Budget defaults: max_len = 2 * (longest input word) + 8 unless given.
  struct BudgetPolicy {
    static constexpr std::size_t default_max_nodes = 100000;

    std::optional<std::size_t> max_len;
    std::size_t                max_nodes = default_max_nodes;

    Budget for_length(std::size_t longest_input) const noexcept {
      return {max_len.value_or(2 * longest_input + 8), max_nodes};
    }

    BudgetPolicy scaled(std::size_t multiplier) const noexcept {
      return {max_len, max_nodes * multiplier};
    }
  };

  struct Proved {
    TransitionPath path;
  };

  struct Refuted {
    element_index lhs_image = 0;
    element_index rhs_image = 0;
  };

  struct Unknown {
    std::size_t nodes     = 0;  // states stored when the search stopped
    std::size_t max_len   = 0;
    bool        exhausted = false;  // one side ran out of states below max_len
    //! The words have different ideal supports, so no path joins them and no
    //! search was run. Only image mismatches are reported as Refuted.
    bool separated = false;
  };

  using Verdict = std::variant<Proved, Refuted, Unknown>;

  inline bool is_proved(Verdict const& v) noexcept {
    return std::holds_alternative<Proved>(v);
  }
  inline bool is_refuted(Verdict const& v) noexcept {
    return std::holds_alternative<Refuted>(v);
  }
  inline bool is_unknown(Verdict const& v) noexcept {
    return std::holds_alternative<Unknown>(v);
  }

  //! Throws BudgetError when either budget is zero or max_len is shorter than
  //! one of the inputs.
  void check_budget(Budget const& budget, std::size_t longest_input);

  //! Bidirectional breadth-first search. Layers are expanded in shortlex
  //! order, the side with the smaller frontier first, so the result depends
  //! only on the inputs.
  Verdict prove_equiv(BiorderedSet const& E,
                      Word const&         w1,
                      Word const&         w2,
                      Budget const&       budget);

  //! Number of prove_equiv calls made by this process so far.
  std::size_t search_invocations() noexcept;

}  // namespace igcert

#endif  // IGCERT_SEARCH_HPP_
