// Brute-force oracles used to cross-check the main algorithms.
//
// Each oracle works straight from a definition and shares no code path with
// the routine it checks: idempotents are counted over all maps or all
// matrices without building a semigroup, and Green's classes are computed by
// comparing principal one-sided ideals element by element.

#ifndef IGCERT_ORACLE_HPP_
#define IGCERT_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "igcert/semigroup.hpp"

namespace igcert::oracle {

  //! Number of f : {0..n-1} -> {0..n-1} with f(f(x)) = f(x) for all x.
  std::size_t count_idempotent_maps(std::size_t n);

  //! Number of dim x dim matrices A over GF(q) (q prime) with A A = A.
  std::size_t count_idempotent_matrices(std::size_t dim, std::size_t q);

  //! a R b iff a S^1 = b S^1, and dually; H is the intersection.
  GreenStructure green_by_definition(FiniteSemigroup const& S);

  struct Lemma1Report {
    std::size_t instances  = 0;  // (a, p, q) with a^p R a^q idempotent, p <= q
    std::size_t violations = 0;  // instances where a^p is not H-related to a^q
  };

  //! Runs over every a in S and every 1 <= p <= q <= |S|.
  Lemma1Report check_lemma1(FiniteSemigroup const& S);

  //! `count` subsemigroups of the full transformation monoid on `points`
  //! points, each generated by one to three uniformly random maps, without an
  //! adjoined identity. Deterministic in `seed`.
  std::vector<FiniteSemigroup> random_transformation_semigroups(std::size_t   points,
                                                                std::size_t   count,
                                                                std::uint64_t seed);

}  // namespace igcert::oracle

#endif  // IGCERT_ORACLE_HPP_
