// Reader for the line-oriented semigroup specification format.
//
//   # comment
//   kind cayley|transformations|matrix
//
//   cayley:           order N, then N lines "row i: v0 ... v(N-1)"
//   transformations:  points N, one "gen: i0 ... i(N-1)" line per generator,
//                     optional "adjoin-identity true|false" (default true)
//   matrix:           dim N, field Q
//
// Parse failures raise ParseError naming the line and column.

#ifndef IGCERT_SPEC_FILE_HPP_
#define IGCERT_SPEC_FILE_HPP_

#include <string>
#include <string_view>

#include "igcert/semigroup.hpp"

namespace igcert {

  SemigroupSpec parse_semigroup_spec(std::string_view text);

  //! Reads and parses a spec file; unreadable files raise SpecError.
  SemigroupSpec load_semigroup_spec(std::string const& path);

}  // namespace igcert

#endif  // IGCERT_SPEC_FILE_HPP_
