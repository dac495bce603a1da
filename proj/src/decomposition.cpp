#include "igcert/decomposition.hpp"

#include <string>
#include <vector>

#include "igcert/error.hpp"

namespace igcert {

  namespace {
    TransitionPath one_step(Word start,
                            std::size_t pos,
                            TransitionKind kind,
                            std::array<letter_type, 3> const& triple) {
      return {std::move(start), {{pos, kind, triple}}};
    }

    // Position bookkeeping for one induction step: `cur` is the word before
    // transition t, `d` decomposes the word after it.
    class Step {
     public:
      Step(BiorderedSet const& E, Word const& cur, Transition const& t, DecomposeStats* stats)
          : _E(E), _cur(cur), _t(t), _stats(stats) {}

      Decomposition absorb(Decomposition const& d) const {
        std::size_t const site = _t.pos;
        bool const        contract = _t.kind == TransitionKind::contract;
        if (d.f_pos < site) {
          bump(&DecomposeStats::prefix);
          return inside_prefix(d);
        }
        // Letters of the suffix sit one place further right after an
        // expansion (two letters e1 e2 replace e3).
        if ((contract && d.f_pos > site) || (!contract && d.f_pos > site + 1)) {
          bump(&DecomposeStats::suffix);
          return inside_suffix(d);
        }
        if (contract) {
          return contraction_at_site(d);
        }
        if (d.f_pos == site) {
          bump(&DecomposeStats::expand_first);
          return expansion_onto_first(d);
        }
        bump(&DecomposeStats::expand_second);
        return expansion_onto_second(d);
      }

     private:
      void bump(std::size_t DecomposeStats::*counter) const {
        if (_stats != nullptr) {
          ++(_stats->*counter);
        }
      }

      // The distinguished letter lies left of the site: u and f survive, v
      // changes by the (inverted) transition.
      Decomposition inside_prefix(Decomposition const& d) const {
        Decomposition out = d;
        out.v             = subword(_cur, d.f_pos + 1, _cur.size());
        TransitionPath const bridge{d.rwit.b, {_t.inverse()}};
        out.rwit = with_second_endpoint(
            d.rwit, embed_shift(bridge, d.f_pos));
        return out;
      }

      // Mirror image: f and v survive, u changes.
      Decomposition inside_suffix(Decomposition const& d) const {
        Decomposition out = d;
        out.f_pos = _t.kind == TransitionKind::contract ? d.f_pos + 1 : d.f_pos - 1;
        out.u     = subword(_cur, 0, out.f_pos);
        TransitionPath const bridge{subword(_cur, 0, out.f_pos + 1), {_t}};
        out.lwit = with_first_endpoint(d.lwit, bridge);
        return out;
      }

      Decomposition contraction_at_site(Decomposition const& d) const {
        auto const [e1, e2, e3] = _t.triple;
        std::size_t const site  = _t.pos;
        Word const        x     = subword(_cur, 0, site);
        Word const        y     = subword(_cur, site + 2, _cur.size());
        int const         tag   = _E.tags(e1, e2).lowest();
        if (tag == 0) {
          throw CaseError("no basic-pair case holds for (" + std::to_string(e1) + ", "
                          + std::to_string(e2) + ")");
        }
        if (_stats != nullptr) {
          ++_stats->contract_tag[tag];
        }
        Word const e12{e1, e2};

        // (x e1 e2) L (e1 e2) and (e1 e2) R (e1 e2 y), from the relation
        // e1 e2 = e3.
        GreenWitness l12 = with_second_endpoint(
            d.lwit, one_step({e3}, 0, TransitionKind::expand, _t.triple));
        l12 = with_first_endpoint(
            l12, one_step(x + e12, site, TransitionKind::contract, _t.triple));
        GreenWitness r12 = with_first_endpoint(
            d.rwit, one_step(e12, 0, TransitionKind::contract, _t.triple));
        r12 = with_second_endpoint(
            r12, one_step(Word{e3} + y, 0, TransitionKind::expand, _t.triple));

        Decomposition out;
        if (tag == 1 || tag == 3) {
          // e1 e2 e1 ~ e1: multiply the L-relation on the right by e1.
          TransitionPath const bridge = absorb_left_bridge(_E, e1, e2, tag);
          GreenWitness lw = transport(l12, {e1}, MultiplySide::right);
          lw              = with_second_endpoint(lw, bridge);
          lw              = with_first_endpoint(lw, embed(invert(bridge), x, {}));
          // e1 R e1 e2: forward by e2 (literally equal), backward by e1.
          GreenWitness const r_e1{GreenKind::R,
                                  {e1},
                                  e12,
                                  {e2},
                                  {e1},
                                  identity_path(e12),
                                  bridge};
          out.u        = x;
          out.f_letter = e1;
          out.f_pos    = site;
          out.v        = Word{e2} + y;
          out.lwit     = std::move(lw);
          out.rwit     = compose_transitive(r_e1, r12);
        } else {
          // e2 e1 e2 ~ e2: multiply the R-relation on the left by e2.
          TransitionPath const bridge = absorb_right_bridge(_E, e1, e2, tag);
          GreenWitness rw = transport(r12, {e2}, MultiplySide::left);
          rw              = with_first_endpoint(rw, invert(bridge));
          rw              = with_second_endpoint(rw, embed(bridge, {}, y));
          // e1 e2 L e2: forward by e2 (via the bridge), backward by e1.
          GreenWitness const l_e2{GreenKind::L,
                                  e12,
                                  {e2},
                                  {e2},
                                  {e1},
                                  bridge,
                                  identity_path(e12)};
          out.u        = x + Word{e1};
          out.f_letter = e2;
          out.f_pos    = site + 1;
          out.v        = y;
          out.lwit     = compose_transitive(l12, l_e2);
          out.rwit     = std::move(rw);
        }
        return out;
      }

      // The expansion e3 -> e1 e2 produced the distinguished letter e1.
      Decomposition expansion_onto_first(Decomposition const& d) const {
        auto const [e1, e2, e3] = _t.triple;
        std::size_t const site  = _t.pos;
        Word const        x     = subword(_cur, 0, site);
        Word const        y     = subword(_cur, site + 1, _cur.size());
        Word const        e12{e1, e2};

        // (x e1) L e1, times e2 on the right, then e1 e2 = e3 on both ends.
        GreenWitness lw = transport(d.lwit, {e2}, MultiplySide::right);
        lw = with_second_endpoint(lw, one_step(e12, 0, TransitionKind::contract, _t.triple));
        lw = with_first_endpoint(lw, one_step(x + Word{e3}, site, TransitionKind::expand, _t.triple));

        // e1 R (e3 y) ...
        GreenWitness const r1 = with_second_endpoint(
            d.rwit, one_step(e12 + y, 0, TransitionKind::contract, _t.triple));
        // ... so e1 = e3 (y t) for the stored backward multiplier t, while
        // e3 = e1 e2; hence e3 R e1.
        GreenWitness const r31{GreenKind::R,
                               {e3},
                               {e1},
                               y + r1.bwd_mult,
                               {e2},
                               r1.bwd_proof,
                               one_step(e12, 0, TransitionKind::contract, _t.triple)};

        Decomposition out;
        out.u        = x;
        out.f_letter = e3;
        out.f_pos    = site;
        out.v        = y;
        out.lwit     = std::move(lw);
        out.rwit     = compose_transitive(r31, r1);
        return out;
      }

      // The expansion e3 -> e1 e2 produced the distinguished letter e2.
      Decomposition expansion_onto_second(Decomposition const& d) const {
        auto const [e1, e2, e3] = _t.triple;
        std::size_t const site  = _t.pos;
        Word const        x     = subword(_cur, 0, site);
        Word const        y     = subword(_cur, site + 1, _cur.size());
        Word const        e12{e1, e2};

        // e2 R (e2 y), times e1 on the left, then e1 e2 = e3 on both ends.
        GreenWitness rw = transport(d.rwit, {e1}, MultiplySide::left);
        rw = with_first_endpoint(rw, one_step({e3}, 0, TransitionKind::expand, _t.triple));
        rw = with_second_endpoint(rw, one_step(e12 + y, 0, TransitionKind::contract, _t.triple));

        // (x e3) L e2 ...
        GreenWitness const l1 = with_first_endpoint(
            d.lwit, one_step(x + Word{e3}, site, TransitionKind::expand, _t.triple));
        // ... so e2 = (s x) e3 for the stored forward multiplier s, while
        // e3 = e1 e2; hence e3 L e2.
        GreenWitness const l32{GreenKind::L,
                               {e3},
                               {e2},
                               l1.fwd_mult + x,
                               {e1},
                               l1.fwd_proof,
                               one_step(e12, 0, TransitionKind::contract, _t.triple)};

        Decomposition out;
        out.u        = x;
        out.f_letter = e3;
        out.f_pos    = site;
        out.v        = y;
        out.lwit     = compose_transitive(l1, reversed(l32));
        out.rwit     = std::move(rw);
        return out;
      }

      // `bridge` acts on the suffix of the word starting at `offset`.
      static TransitionPath embed_shift(TransitionPath bridge, std::size_t offset) {
        for (auto& s : bridge.steps) {
          s.pos -= offset;
        }
        return bridge;
      }

      BiorderedSet const& _E;
      Word const&         _cur;
      Transition const&   _t;
      DecomposeStats*     _stats;
    };
  }  // namespace

  TransitionPath absorb_left_bridge(BiorderedSet const& E,
                                    letter_type         e1,
                                    letter_type         e2,
                                    int                 tag) {
    if ((tag != 1 && tag != 3) || !E.tags(e1, e2).has(tag)) {
      throw CaseError("case " + std::to_string(tag) + " does not hold for ("
                      + std::to_string(e1) + ", " + std::to_string(e2) + ")");
    }
    TransitionPath p{{e1, e2, e1}, {}};
    if (tag == 1) {
      p.steps.push_back({0, TransitionKind::contract, {e1, e2, e1}});
    } else {
      p.steps.push_back({1, TransitionKind::contract, {e2, e1, e1}});
    }
    p.steps.push_back({0, TransitionKind::contract, {e1, e1, e1}});
    return p;
  }

  TransitionPath absorb_right_bridge(BiorderedSet const& E,
                                     letter_type         e1,
                                     letter_type         e2,
                                     int                 tag) {
    if ((tag != 2 && tag != 4) || !E.tags(e1, e2).has(tag)) {
      throw CaseError("case " + std::to_string(tag) + " does not hold for ("
                      + std::to_string(e1) + ", " + std::to_string(e2) + ")");
    }
    TransitionPath p{{e2, e1, e2}, {}};
    if (tag == 2) {
      p.steps.push_back({1, TransitionKind::contract, {e1, e2, e2}});
    } else {
      p.steps.push_back({0, TransitionKind::contract, {e2, e1, e2}});
    }
    p.steps.push_back({0, TransitionKind::contract, {e2, e2, e2}});
    return p;
  }

  Decomposition decompose(BiorderedSet const&   E,
                          Word const&           w,
                          TransitionPath const& path,
                          DecomposeStats*       stats) {
    if (path.start != w) {
      throw PatternMismatch("path does not start at the given word", 0);
    }
    std::vector<Word> words{w};
    words.reserve(path.steps.size() + 1);
    for (std::size_t i = 0; i < path.steps.size(); ++i) {
      try {
        words.push_back(apply_transition(E, words.back(), path.steps[i]));
      } catch (PatternMismatch const& e) {
        throw PatternMismatch(e.what(), i);
      }
    }
    if (words.back().size() != 1) {
      throw PatternMismatch("path does not end at a single letter", path.steps.size());
    }

    letter_type const e = words.back()[0];
    Decomposition     d{{},
                    e,
                    0,
                    {},
                    reflexive_witness(GreenKind::L, {e}),
                    reflexive_witness(GreenKind::R, {e})};
    for (std::size_t i = path.steps.size(); i-- > 0;) {
      d = Step(E, words[i], path.steps[i], stats).absorb(d);
      if (stats != nullptr) {
        ++stats->depth;
      }
    }
    return d;
  }

  Check verify_decomposition(BiorderedSet const& E, Word const& w, Decomposition const& d) {
    if (d.u + Word{d.f_letter} + d.v != w) {
      return Check::fail("u f v does not spell the word");
    }
    if (d.f_pos != d.u.size() || d.f_pos >= w.size() || w[d.f_pos] != d.f_letter) {
      return Check::fail("distinguished position is inconsistent");
    }
    Word const f{d.f_letter};
    if (d.lwit.kind != GreenKind::L || d.lwit.a != d.u + f || d.lwit.b != f) {
      return Check::fail("L-witness does not relate (u f, f)");
    }
    if (d.rwit.kind != GreenKind::R || d.rwit.a != f || d.rwit.b != f + d.v) {
      return Check::fail("R-witness does not relate (f, f v)");
    }
    if (auto c = verify_witness(E, d.lwit); !c) {
      return c;
    }
    return verify_witness(E, d.rwit);
  }

}  // namespace igcert
