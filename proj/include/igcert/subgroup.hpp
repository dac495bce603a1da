// Certificates that periodic elements of IG(E) lie in subgroups.
//
// Pipeline for a word w:
//   1. find_periodicity   a path w^h ~ w^(h+d);
//   2. k                  the least multiple of d with k >= h, so w^k is
//                         idempotent (the path w^k ~ w^2k is derived from
//                         step 1);
//   3. idempotent root    w^k ~ e for a letter e (bounded search);
//   4. decomposition      w^k = u e_i v with (u e_i) L e_i R (e_i v);
//   5. grid               Green witnesses E1..E8 relating w^(l+1), w^k,
//                         w and e, plus two applications of the R => H
//                         argument (w^(l+1) H e, then w H e).
//
// Only step 1 and step 3 search. A budget that runs out anywhere stops the
// pipeline with a partial report; no certificate is ever produced that does
// not replay.

#ifndef IGCERT_SUBGROUP_HPP_
#define IGCERT_SUBGROUP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "igcert/biorder.hpp"
#include "igcert/decomposition.hpp"
#include "igcert/green.hpp"
#include "igcert/search.hpp"

namespace igcert {

  struct PeriodicityCertificate {
    Word           w;
    std::size_t    h = 1;
    std::size_t    d = 1;
    TransitionPath proof;  // w^h -> w^(h+d)

    friend bool operator==(PeriodicityCertificate const&,
                           PeriodicityCertificate const&) = default;
  };

  Check verify_periodicity(BiorderedSet const& E, PeriodicityCertificate const& pc);

  //! Default cap on h + d.
  inline constexpr std::size_t default_power_cap = 8;

  //! Tries (h, d) in order of increasing h + d, then h, with
  //! prove_equiv(w^h, w^(h+d)); the first Proved pair wins. Pairs whose
  //! longer word exceeds an explicit max_len are skipped. Returns nothing
  //! without searching when the ideal support of w differs from that of the
  //! letter its idempotent power maps to. Throws BudgetError on a zero
  //! budget.
  std::optional<PeriodicityCertificate> find_periodicity(BiorderedSet const& E,
                                                         Word const&         w,
                                                         BudgetPolicy const& policy,
                                                         std::size_t power_cap
                                                         = default_power_cap);

  //! The path w^k -> w^(2k) obtained by padding pc.proof, where k is the
  //! least multiple of pc.d that is at least pc.h.
  TransitionPath idempotency_path(PeriodicityCertificate const& pc, std::size_t k);

  std::size_t idempotent_power(std::size_t h, std::size_t d) noexcept;

  struct GridEdge {
    std::string  label;
    GreenWitness witness;

    friend bool operator==(GridEdge const&, GridEdge const&) = default;
  };

  struct SubgroupCertificate {
    Word                   w;
    letter_type            e = 0;
    std::size_t            k = 1;
    std::size_t            ell = 0;
    std::size_t            m   = 0;
    std::size_t            i   = 1;  // 1-based position of the letter within w
    PeriodicityCertificate periodicity;
    TransitionPath         idempotency_proof;  // w^k -> w^(2k)
    TransitionPath         idem_path;          // w^k -> e
    Decomposition          decomposition;      // of w^k along idem_path
    std::vector<GridEdge>  grid;               // empty when k == 1
    std::optional<HWitness> power_hwit;        // w^(ell+1) H e, when k > 1
    HWitness               hwit;               // w H e

    friend bool operator==(SubgroupCertificate const&,
                           SubgroupCertificate const&) = default;
  };

  //! Either a certificate, or the stage at which the pipeline stopped and the
  //! verdict that stopped it.
  struct Certification {
    std::optional<SubgroupCertificate> certificate;
    std::string                        stage;
    std::optional<Verdict>             verdict;
  };

  //! Throws VerificationError if pc does not replay.
  Certification subgroup_certificate(BiorderedSet const&           E,
                                     Word const&                   w,
                                     PeriodicityCertificate const& pc,
                                     BudgetPolicy const&           policy);

  Check verify_subgroup_certificate(BiorderedSet const& E, SubgroupCertificate const& c);

  //! Labels of the grid edges, in the order they are built.
  std::vector<std::string> const& grid_labels();

}  // namespace igcert

#endif  // IGCERT_SUBGROUP_HPP_
