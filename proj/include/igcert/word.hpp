// Words over a biordered set.
//
// Letters are idempotent indices (positions in the sorted idempotent list of
// the source semigroup). A Word is an element of E^+; the empty word is only
// meaningful as a multiplier, where it stands for the adjoined identity of
// S^1.

#ifndef IGCERT_WORD_HPP_
#define IGCERT_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace igcert {

  using letter_type = std::uint32_t;
  using Word        = std::vector<letter_type>;

  inline Word operator+(Word lhs, Word const& rhs) {
    lhs.insert(lhs.end(), rhs.begin(), rhs.end());
    return lhs;
  }

  //! w repeated n times; the empty word when n == 0.
  Word power(Word const& w, std::size_t n);

  //! w[first, last).
  Word subword(Word const& w, std::size_t first, std::size_t last);

  //! Shorter words first, then lexicographic.
  bool shortlex_less(Word const& a, Word const& b) noexcept;

  //! "0,2,1"; the empty word is "".
  std::string to_string(Word const& w);

  //! Parses a comma-separated list of letters. Throws ParseError on malformed
  //! input (column reported relative to the start of `text`).
  Word parse_word(std::string_view text);

}  // namespace igcert

#endif  // IGCERT_WORD_HPP_
