// Finite semigroups given by Cayley tables.
//
// A FiniteSemigroup is the concrete semigroup S from which a biordered set is
// extracted, and it doubles as the brute-force oracle for everything that is
// later certified symbolically: idempotents, Green's relations, index and
// period of an element, subgroup membership.
//
// Conventions:
//   * transformations compose left to right, (fg)(x) = g(f(x));
//   * elements built by closure are indexed in breadth-first discovery order
//     from the sorted generator list;
//   * Green's relations are computed in S^1 (an identity is always adjoined,
//     even when S is already a monoid).

#ifndef IGCERT_SEMIGROUP_HPP_
#define IGCERT_SEMIGROUP_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace igcert {

  using element_index = std::uint32_t;

  enum class SemigroupSource { cayley_file, transformation_closure, matrix_monoid };

  std::string to_string(SemigroupSource source);

  //! Images of 0, ..., n - 1.
  using Transformation = std::vector<std::uint32_t>;

  //! Left-to-right composition: the result maps x to g(f(x)).
  Transformation compose(Transformation const& f, Transformation const& g);

  struct CayleySpec {
    std::vector<std::vector<element_index>> rows;
  };

  struct TransformationSpec {
    std::size_t                 points = 0;
    std::vector<Transformation> generators;
    bool                        adjoin_identity = true;
  };

  struct MatrixSpec {
    std::size_t dim   = 0;
    std::size_t field = 0;
  };

  using SemigroupSpec = std::variant<CayleySpec, TransformationSpec, MatrixSpec>;

  class FiniteSemigroup {
   public:
    //! `table` is row-major, order * order entries. Throws SpecError when the
    //! table is not square or holds an out-of-range entry. Associativity is
    //! not checked here; see find_nonassociative_triple.
    FiniteSemigroup(std::size_t                order,
                    std::vector<element_index> table,
                    std::vector<std::string>   labels,
                    SemigroupSource            source);

    std::size_t order() const noexcept {
      return _order;
    }

    element_index product(element_index i, element_index j) const noexcept {
      return _table[static_cast<std::size_t>(i) * _order + j];
    }

    std::vector<element_index> const& table() const noexcept {
      return _table;
    }

    //! Empty when the semigroup was given without labels.
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::string label(element_index i) const;

    SemigroupSource source() const noexcept {
      return _source;
    }

    bool is_idempotent(element_index i) const noexcept {
      return product(i, i) == i;
    }

    //! a^n for n >= 1.
    element_index power(element_index a, std::size_t n) const;

   private:
    std::size_t                _order;
    std::vector<element_index> _table;
    std::vector<std::string>   _labels;
    SemigroupSource            _source;
  };

  //! First triple (in lexicographic order) with (ij)k != i(jk), if any.
  std::optional<std::array<element_index, 3>>
  find_nonassociative_triple(FiniteSemigroup const& S);

  //! Builds and validates a semigroup. Throws SpecError for malformed
  //! specifications and AssociativityError for non-associative tables.
  FiniteSemigroup build_semigroup(SemigroupSpec const& spec);

  //! Closure of a set of transformations on `points` points under
  //! composition. The returned list is in canonical discovery order.
  std::vector<Transformation>
  transformation_closure(std::size_t                 points,
                         std::vector<Transformation> generators,
                         bool                        adjoin_identity);

  //! Sorted list of i with ii = i.
  std::vector<element_index> idempotents(FiniteSemigroup const& S);

  //! Classes are sorted by their least element, members ascending.
  using Partition = std::vector<std::vector<element_index>>;

  //! class_of[i] is the position in `p` of the class containing i.
  std::vector<std::size_t> class_lookup(Partition const& p, std::size_t order);

  struct GreenStructure {
    Partition r_classes;
    Partition l_classes;
    Partition h_classes;
  };

  GreenStructure green_classes(FiniteSemigroup const& S);

  //! J-classes (two-sided SCCs, with S^1) and their order.
  struct JOrder {
    Partition                      classes;
    std::vector<std::size_t>       class_of;
    std::vector<std::vector<bool>> below;  // below[c][d] iff class d <=_J class c

    bool leq(element_index x, element_index y) const {
      return below[class_of[y]][class_of[x]];
    }
  };

  JOrder j_order(FiniteSemigroup const& S);

  struct IndexPeriod {
    std::size_t index_h  = 1;
    std::size_t period_d = 1;
  };

  IndexPeriod index_period(FiniteSemigroup const& S, element_index a);

  bool lies_in_subgroup(FiniteSemigroup const& S, element_index a);

}  // namespace igcert

#endif  // IGCERT_SEMIGROUP_HPP_
