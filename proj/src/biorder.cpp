#include "igcert/biorder.hpp"

#include <algorithm>
#include <mutex>

namespace igcert {

  std::vector<int> CaseTags::list() const {
    std::vector<int> out;
    for (int t = 1; t <= 4; ++t) {
      if (has(t)) {
        out.push_back(t);
      }
    }
    return out;
  }

  struct BiorderedSet::LazyJOrder {
    std::once_flag                    once;
    std::vector<BiorderedSet::Support> up;  // up[x]: letters f with x <=_J f
  };

  BiorderedSet::Support BiorderedSet::ideal_support(Word const& w) const {
    std::size_t const words = (size() + 63) / 64;
    std::call_once(_j->once, [this, words] {
      JOrder const order = j_order(*_source);
      _j->up.assign(size(), Support(words, 0));
      for (letter_type x = 0; x < size(); ++x) {
        for (letter_type f = 0; f < size(); ++f) {
          if (order.leq(_to_source[x], _to_source[f])) {
            _j->up[x][f / 64] |= std::uint64_t{1} << (f % 64);
          }
        }
      }
    });
    Support out(words, 0);
    for (letter_type x : w) {
      for (std::size_t i = 0; i < words; ++i) {
        out[i] |= _j->up[x][i];
      }
    }
    return out;
  }

  BiorderedSet::BiorderedSet(std::shared_ptr<FiniteSemigroup const> source)
      : _source(std::move(source)), _j(std::make_shared<LazyJOrder>()) {
    FiniteSemigroup const& S = *_source;
    _to_source               = idempotents(S);
    _from_source.assign(S.order(), undefined);
    for (std::size_t e = 0; e < _to_source.size(); ++e) {
      _from_source[_to_source[e]] = static_cast<letter_type>(e);
    }

    std::size_t const n = size();
    _product.assign(n * n, undefined);
    _tags.assign(n * n, 0);
    _preimages.assign(n, {});
    for (letter_type e = 0; e < n; ++e) {
      for (letter_type f = 0; f < n; ++f) {
        element_index const se = _to_source[e], sf = _to_source[f];
        element_index const ef = S.product(se, sf), fe = S.product(sf, se);
        std::uint8_t bits = 0;
        bits |= ef == se ? 1U : 0U;
        bits |= ef == sf ? 2U : 0U;
        bits |= fe == se ? 4U : 0U;
        bits |= fe == sf ? 8U : 0U;
        _tags[index(e, f)] = bits;
        if (bits != 0) {
          // ef is idempotent for a basic pair, so it is a letter.
          _product[index(e, f)] = _from_source[ef];
        }
      }
    }
    for (letter_type e1 = 0; e1 < n; ++e1) {
      for (letter_type e2 = 0; e2 < n; ++e2) {
        if (auto p = product(e1, e2)) {
          _preimages[*p].emplace_back(e1, e2);
        }
      }
    }
  }

  std::optional<letter_type> BiorderedSet::letter_of(element_index x) const noexcept {
    if (x >= _from_source.size() || _from_source[x] == undefined) {
      return std::nullopt;
    }
    return _from_source[x];
  }

  bool BiorderedSet::valid_word(Word const& w) const noexcept {
    return std::all_of(
        w.begin(), w.end(), [this](letter_type e) { return valid_letter(e); });
  }

  BiorderedSet extract_biorder(std::shared_ptr<FiniteSemigroup const> S) {
    return BiorderedSet(std::move(S));
  }

  BiorderedSet extract_biorder(FiniteSemigroup S) {
    return BiorderedSet(std::make_shared<FiniteSemigroup const>(std::move(S)));
  }

  std::optional<BasicProduct>
  basic_product(BiorderedSet const& E, letter_type e, letter_type f) {
    auto const p = E.product(e, f);
    if (!p) {
      return std::nullopt;
    }
    return BasicProduct{*p, E.tags(e, f)};
  }

  std::vector<Relation> presentation(BiorderedSet const& E) {
    std::vector<Relation> out;
    for (letter_type e = 0; e < E.size(); ++e) {
      for (letter_type f = 0; f < E.size(); ++f) {
        if (auto p = E.product(e, f)) {
          out.push_back({{e, f}, {*p}});
        }
      }
    }
    return out;
  }

}  // namespace igcert
