#include "igcert/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "igcert/error.hpp"

namespace igcert {

  namespace {
    std::atomic<std::size_t> invocations{0};

    // Polynomial hash sum (x_i + 1) B^(n-1-i) mod 2^64. It composes over
    // concatenation, so a neighbour's hash follows from prefix and suffix
    // hashes of its parent without building the neighbour.
    constexpr std::uint64_t base = 0x9e3779b97f4a7c15ULL;

    std::uint64_t hash_letters(std::span<letter_type const> w) noexcept {
      std::uint64_t h = 0;
      for (auto x : w) {
        h = h * base + x + 1;
      }
      return h;
    }

    std::size_t slot_of(std::uint64_t h) noexcept {
      h ^= h >> 33;
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
      return static_cast<std::size_t>(h);
    }

    // A word given as prefix + (up to two letters) + suffix of a parent.
    struct Candidate {
      std::span<letter_type const> prefix;
      letter_type                  mid[2];
      std::size_t                  mid_len;
      std::span<letter_type const> suffix;

      std::size_t size() const noexcept {
        return prefix.size() + mid_len + suffix.size();
      }

      bool equals(letter_type const* w) const noexcept {
        if (!std::equal(prefix.begin(), prefix.end(), w)) {
          return false;
        }
        w += prefix.size();
        for (std::size_t i = 0; i < mid_len; ++i) {
          if (w[i] != mid[i]) {
            return false;
          }
        }
        return std::equal(suffix.begin(), suffix.end(), w + mid_len);
      }
    };

    // One direction of the search: every stored word lives in a shared pool
    // and is indexed by an open-addressing table of node ids.
    class Side {
     public:
      static constexpr std::uint32_t none = static_cast<std::uint32_t>(-1);

      struct Node {
        std::uint64_t hash;
        std::uint32_t offset;
        std::uint32_t length;
        std::uint32_t parent;
        Transition    via;  // parent -> this node
      };

      explicit Side(Word const& root) : _slots(1024, Slot{none, 0}) {
        insert(Candidate{root, {0, 0}, 0, {}}, hash_letters(root), none, {});
      }

      std::span<letter_type const> word(std::uint32_t id) const noexcept {
        auto const& n = _nodes[id];
        return {_pool.data() + n.offset, n.length};
      }

      std::size_t size() const noexcept {
        return _nodes.size();
      }

      std::uint32_t find(Candidate const& c, std::uint64_t h) const noexcept {
        std::size_t const mask = _slots.size() - 1;
        std::size_t const len  = c.size();
        std::size_t const   mixed = slot_of(h);
        std::uint32_t const tag   = static_cast<std::uint32_t>(mixed >> 32);
        for (std::size_t i = mixed & mask;; i = (i + 1) & mask) {
          Slot const s = _slots[i];
          if (s.id == none) {
            return none;
          }
          if (s.tag != tag) {
            continue;
          }
          auto const& n = _nodes[s.id];
          if (n.hash == h && n.length == len && c.equals(_pool.data() + n.offset)) {
            return s.id;
          }
        }
      }

      std::uint32_t insert(Candidate const& c,
                           std::uint64_t    h,
                           std::uint32_t    parent,
                           Transition const& via) {
        if (2 * (_nodes.size() + 1) > _slots.size()) {
          grow();
        }
        auto const id = static_cast<std::uint32_t>(_nodes.size());
        _nodes.push_back({h,
                          static_cast<std::uint32_t>(_pool.size()),
                          static_cast<std::uint32_t>(c.size()),
                          parent,
                          via});
        _pool.insert(_pool.end(), c.prefix.begin(), c.prefix.end());
        _pool.insert(_pool.end(), c.mid, c.mid + c.mid_len);
        _pool.insert(_pool.end(), c.suffix.begin(), c.suffix.end());
        place(id);
        return id;
      }

      // Transitions leading from the root to `id`, in order.
      std::vector<Transition> path_from_root(std::uint32_t id) const {
        std::vector<Transition> steps;
        for (; _nodes[id].parent != none; id = _nodes[id].parent) {
          steps.push_back(_nodes[id].via);
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
      }

      bool shortlex_less(std::uint32_t a, std::uint32_t b) const noexcept {
        auto const wa = word(a), wb = word(b);
        if (wa.size() != wb.size()) {
          return wa.size() < wb.size();
        }
        return std::lexicographical_compare(wa.begin(), wa.end(), wb.begin(), wb.end());
      }

     private:
      void place(std::uint32_t id) {
        std::size_t const mask = _slots.size() - 1;
        std::size_t const mixed = slot_of(_nodes[id].hash);
        std::size_t       i     = mixed & mask;
        while (_slots[i].id != none) {
          i = (i + 1) & mask;
        }
        _slots[i] = {id, static_cast<std::uint32_t>(mixed >> 32)};
      }

      void grow() {
        _slots.assign(_slots.size() * 2, Slot{none, 0});
        for (std::uint32_t id = 0; id < _nodes.size(); ++id) {
          place(id);
        }
      }

      // The tag holds high hash bits so most probes never touch _nodes.
      struct Slot {
        std::uint32_t id;
        std::uint32_t tag;
      };

      std::vector<letter_type> _pool;
      std::vector<Node>        _nodes;
      std::vector<Slot>        _slots;
    };

    enum class Step { running, met, budget_exhausted };

    class BidirectionalSearch {
     public:
      BidirectionalSearch(BiorderedSet const& E,
                          Word const&         w1,
                          Word const&         w2,
                          Budget const&       budget)
          : _E(E), _budget(budget), _sides{Side(w1), Side(w2)} {
        _layers[0].push_back(0);
        _layers[1].push_back(0);
        _pow.assign(budget.max_len + 2, 1);
        for (std::size_t i = 1; i < _pow.size(); ++i) {
          _pow[i] = _pow[i - 1] * base;
        }
      }

      Verdict run() {
        while (!_layers[0].empty() && !_layers[1].empty()) {
          int const  side   = _layers[1].size() < _layers[0].size() ? 1 : 0;
          Step const result = expand_layer(side);
          if (result == Step::met) {
            return Proved{meeting_path()};
          }
          if (result == Step::budget_exhausted) {
            return Unknown{stored(), _budget.max_len, false};
          }
        }
        return Unknown{stored(), _budget.max_len, true};
      }

     private:
      std::size_t stored() const noexcept {
        return _sides[0].size() + _sides[1].size();
      }

      Step expand_layer(int side) {
        Side&       mine   = _sides[side];
        Side const& theirs = _sides[1 - side];
        auto        layer  = std::move(_layers[side]);
        std::sort(layer.begin(), layer.end(), [&mine](auto a, auto b) {
          return mine.shortlex_less(a, b);
        });
        std::vector<std::uint32_t> next;

        auto consider = [&](std::uint32_t     parent,
                            Candidate const&  c,
                            std::uint64_t     h,
                            Transition const& t) -> Step {
          if (mine.find(c, h) != Side::none) {
            return Step::running;
          }
          if (stored() >= _budget.max_nodes) {
            return Step::budget_exhausted;
          }
          std::uint32_t const id    = mine.insert(c, h, parent, t);
          std::uint32_t const other = theirs.find(c, h);
          if (other != Side::none) {
            _meet = {side, id, other};
            return Step::met;
          }
          next.push_back(id);
          return Step::running;
        };

        for (std::uint32_t id : layer) {
          // Copy: inserting into `mine` may reallocate its pool.
          auto const span = mine.word(id);
          _current.assign(span.begin(), span.end());
          Word const&       w = _current;
          std::size_t const n = w.size();
          _prefix.assign(n + 1, 0);
          _suffix.assign(n + 1, 0);
          for (std::size_t i = 0; i < n; ++i) {
            _prefix[i + 1] = _prefix[i] * base + w[i] + 1;
          }
          for (std::size_t i = n; i-- > 0;) {
            _suffix[i] = (w[i] + 1) * _pow[n - 1 - i] + _suffix[i + 1];
          }
          std::span<letter_type const> const all(w);
          bool const can_grow = n + 1 <= _budget.max_len;

          for (std::size_t pos = 0; pos < n; ++pos) {
            if (pos + 1 < n) {
              if (auto p = _E.product(w[pos], w[pos + 1])) {
                Candidate const c{all.first(pos), {*p, 0}, 1, all.subspan(pos + 2)};
                std::uint64_t const h = _prefix[pos] * _pow[n - pos - 1]
                                        + (*p + 1) * _pow[n - pos - 2] + _suffix[pos + 2];
                Step s = consider(id, c, h, {pos, TransitionKind::contract, {w[pos], w[pos + 1], *p}});
                if (s != Step::running) {
                  return s;
                }
              }
            }
            if (!can_grow) {
              continue;
            }
            std::uint64_t const outer = _prefix[pos] * _pow[n - pos + 1] + _suffix[pos + 1];
            for (auto [e1, e2] : _E.preimages(w[pos])) {
              Candidate const c{all.first(pos), {e1, e2}, 2, all.subspan(pos + 1)};
              std::uint64_t const h
                  = outer + (e1 + 1) * _pow[n - pos] + (e2 + 1) * _pow[n - pos - 1];
              Step s = consider(id, c, h, {pos, TransitionKind::expand, {e1, e2, w[pos]}});
              if (s != Step::running) {
                return s;
              }
            }
          }
        }
        _layers[side] = std::move(next);
        return Step::running;
      }

      // Forward half-path to the meeting word, then the backward half inverted.
      TransitionPath meeting_path() const {
        auto const [side, mine_id, other_id] = _meet;
        std::uint32_t const fwd_id = side == 0 ? mine_id : other_id;
        std::uint32_t const bwd_id = side == 0 ? other_id : mine_id;

        auto const root = _sides[0].word(0);
        TransitionPath path{Word(root.begin(), root.end()),
                            _sides[0].path_from_root(fwd_id)};
        auto back = _sides[1].path_from_root(bwd_id);
        for (auto it = back.rbegin(); it != back.rend(); ++it) {
          path.steps.push_back(it->inverse());
        }
        return path;
      }

      struct Meeting {
        int           side;
        std::uint32_t mine;
        std::uint32_t other;
      };

      BiorderedSet const&        _E;
      Budget                     _budget;
      Side                       _sides[2];
      std::vector<std::uint32_t> _layers[2];
      std::vector<std::uint64_t> _pow;
      std::vector<std::uint64_t> _prefix;
      std::vector<std::uint64_t> _suffix;
      Word                       _current;
      Meeting                    _meet{0, 0, 0};
    };
  }  // namespace

  void check_budget(Budget const& budget, std::size_t longest_input) {
    if (budget.max_len == 0 || budget.max_nodes == 0) {
      throw BudgetError("budgets must be positive");
    }
    if (budget.max_len < longest_input) {
      throw BudgetError("max_len " + std::to_string(budget.max_len)
                        + " is shorter than an input word of length "
                        + std::to_string(longest_input));
    }
  }

  Verdict prove_equiv(BiorderedSet const& E,
                      Word const&         w1,
                      Word const&         w2,
                      Budget const&       budget) {
    ++invocations;
    check_budget(budget, std::max(w1.size(), w2.size()));
    if (w1.empty() || w2.empty() || !E.valid_word(w1) || !E.valid_word(w2)) {
      throw Error("prove_equiv needs non-empty words over E");
    }
    if (w1 == w2) {
      return Proved{identity_path(w1)};
    }
    element_index const i1 = eval_image(E, w1), i2 = eval_image(E, w2);
    if (i1 != i2) {
      return Refuted{i1, i2};
    }
    if (E.ideal_support(w1) != E.ideal_support(w2)) {
      return Unknown{0, budget.max_len, false, true};
    }
    return BidirectionalSearch(E, w1, w2, budget).run();
  }

  std::size_t search_invocations() noexcept {
    return invocations.load();
  }

}  // namespace igcert
