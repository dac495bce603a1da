// The biordered set of a finite semigroup.
//
// E is the set of idempotents of S with the multiplication of S restricted
// to basic pairs: (e, f) is basic when ef = e, ef = f, fe = e or fe = f.
// Whenever a pair is basic both ordered products are recorded, and both are
// idempotent.
//
// IG(E) is the semigroup presented by generators E and relations
// ef = e o f for every defined product.

#ifndef IGCERT_BIORDER_HPP_
#define IGCERT_BIORDER_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "igcert/semigroup.hpp"
#include "igcert/word.hpp"

namespace igcert {

  //! Which of the four basic-pair conditions hold for an ordered pair (e, f):
  //! 1 iff ef = e, 2 iff ef = f, 3 iff fe = e, 4 iff fe = f.
  class CaseTags {
   public:
    constexpr CaseTags() noexcept = default;
    constexpr explicit CaseTags(std::uint8_t bits) noexcept : _bits(bits) {}

    constexpr bool has(int tag) const noexcept {
      return (_bits >> (tag - 1)) & 1U;
    }
    constexpr bool empty() const noexcept {
      return _bits == 0;
    }
    //! 0 when empty.
    constexpr int lowest() const noexcept {
      for (int t = 1; t <= 4; ++t) {
        if (has(t)) {
          return t;
        }
      }
      return 0;
    }
    constexpr std::uint8_t bits() const noexcept {
      return _bits;
    }
    std::vector<int> list() const;

    friend constexpr bool operator==(CaseTags, CaseTags) noexcept = default;

   private:
    std::uint8_t _bits = 0;
  };

  struct BasicProduct {
    letter_type value;
    CaseTags    tags;
  };

  class BiorderedSet {
   public:
    using pair_type = std::pair<letter_type, letter_type>;

    explicit BiorderedSet(std::shared_ptr<FiniteSemigroup const> source);

    std::size_t size() const noexcept {
      return _to_source.size();
    }

    //! e o f, or nothing when (e, f) is not basic.
    std::optional<letter_type> product(letter_type e, letter_type f) const noexcept {
      auto const v = _product[index(e, f)];
      return v == undefined ? std::nullopt : std::optional<letter_type>(v);
    }

    bool defined(letter_type e, letter_type f) const noexcept {
      return _product[index(e, f)] != undefined;
    }

    CaseTags tags(letter_type e, letter_type f) const noexcept {
      return CaseTags(_tags[index(e, f)]);
    }

    element_index to_source(letter_type e) const noexcept {
      return _to_source[e];
    }

    std::vector<element_index> const& to_source() const noexcept {
      return _to_source;
    }

    //! The letter whose image is x, if x is idempotent.
    std::optional<letter_type> letter_of(element_index x) const noexcept;

    FiniteSemigroup const& source() const noexcept {
      return *_source;
    }

    std::shared_ptr<FiniteSemigroup const> const& source_ptr() const noexcept {
      return _source;
    }

    //! All (e1, e2) with e1 o e2 = e3, in lexicographic order.
    std::span<pair_type const> preimages(letter_type e3) const noexcept {
      return _preimages[e3];
    }

    bool valid_letter(letter_type e) const noexcept {
      return e < size();
    }

    bool valid_word(Word const& w) const noexcept;

    //! Bit f is set iff some letter of w lies in the ideal generated by f.
    //! Every elementary transition preserves this set: a contraction
    //! e1 e2 -> e3 puts e3 in an ideal exactly when e1 or e2 is in it. The
    //! J-order behind it is computed on first use.
    using Support = std::vector<std::uint64_t>;
    Support ideal_support(Word const& w) const;

   private:
    struct LazyJOrder;

    static constexpr letter_type undefined = static_cast<letter_type>(-1);

    std::size_t index(letter_type e, letter_type f) const noexcept {
      return static_cast<std::size_t>(e) * size() + f;
    }

    std::shared_ptr<FiniteSemigroup const> _source;
    std::vector<element_index>             _to_source;
    std::vector<letter_type>               _from_source;
    std::vector<letter_type>               _product;
    std::vector<std::uint8_t>              _tags;
    std::vector<std::vector<pair_type>>    _preimages;
    std::shared_ptr<LazyJOrder>            _j;
  };

  BiorderedSet extract_biorder(std::shared_ptr<FiniteSemigroup const> S);
  BiorderedSet extract_biorder(FiniteSemigroup S);

  std::optional<BasicProduct>
  basic_product(BiorderedSet const& E, letter_type e, letter_type f);

  //! A defining relation lhs = rhs of IG(E); |lhs| = 2, |rhs| = 1.
  struct Relation {
    Word lhs;
    Word rhs;
  };

  //! One relation per defined ordered pair, sorted by lhs.
  std::vector<Relation> presentation(BiorderedSet const& E);

}  // namespace igcert

#endif  // IGCERT_BIORDER_HPP_
