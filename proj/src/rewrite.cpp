#include "igcert/rewrite.hpp"

#include <algorithm>
#include <tuple>

#include "igcert/error.hpp"

namespace igcert {

  namespace {
    // Applies t to w in place. When E is given the triple must also be a
    // defined product. Returns an empty string on success, otherwise the
    // reason for the mismatch.
    std::string try_apply(Word& w, Transition const& t, BiorderedSet const* E) {
      auto const [e1, e2, e3] = t.triple;
      if (E != nullptr) {
        if (!E->valid_letter(e1) || !E->valid_letter(e2) || !E->valid_letter(e3)) {
          return "triple has a letter outside E";
        }
        auto const p = E->product(e1, e2);
        if (!p || *p != e3) {
          return "triple (" + std::to_string(e1) + ", " + std::to_string(e2)
                 + ", " + std::to_string(e3) + ") is not a defined product";
        }
      }
      if (t.kind == TransitionKind::contract) {
        if (t.pos + 1 >= w.size() || w[t.pos] != e1 || w[t.pos + 1] != e2) {
          return "contraction pattern does not match at position "
                 + std::to_string(t.pos);
        }
        w[t.pos] = e3;
        w.erase(w.begin() + t.pos + 1);
      } else {
        if (t.pos >= w.size() || w[t.pos] != e3) {
          return "expansion pattern does not match at position "
                 + std::to_string(t.pos);
        }
        w[t.pos] = e1;
        w.insert(w.begin() + t.pos + 1, e2);
      }
      return {};
    }

    Word run(TransitionPath const& path, BiorderedSet const* E) {
      Word w = path.start;
      for (std::size_t i = 0; i < path.steps.size(); ++i) {
        if (auto why = try_apply(w, path.steps[i], E); !why.empty()) {
          throw PatternMismatch(why, i);
        }
      }
      return w;
    }
  }  // namespace

  std::string to_string(TransitionKind kind) {
    return kind == TransitionKind::contract ? "contract" : "expand";
  }

  bool operator<(Transition const& a, Transition const& b) noexcept {
    return std::tie(a.pos, a.kind, a.triple) < std::tie(b.pos, b.kind, b.triple);
  }

  std::vector<std::pair<Transition, Word>> neighbors(BiorderedSet const& E,
                                                     Word const&         w) {
    std::vector<std::pair<Transition, Word>> out;
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      if (pos + 1 < w.size()) {
        if (auto p = E.product(w[pos], w[pos + 1])) {
          Transition t{pos, TransitionKind::contract, {w[pos], w[pos + 1], *p}};
          Word       next = w;
          next[pos]       = *p;
          next.erase(next.begin() + pos + 1);
          out.emplace_back(t, std::move(next));
        }
      }
      for (auto [e1, e2] : E.preimages(w[pos])) {
        Transition t{pos, TransitionKind::expand, {e1, e2, w[pos]}};
        Word       next = w;
        next[pos]       = e1;
        next.insert(next.begin() + pos + 1, e2);
        out.emplace_back(t, std::move(next));
      }
    }
    return out;
  }

  Word apply_transition(BiorderedSet const& E, Word const& w, Transition const& t) {
    Word out = w;
    if (auto why = try_apply(out, t, &E); !why.empty()) {
      throw PatternMismatch(why, 0);
    }
    return out;
  }

  Word replay_path(BiorderedSet const& E, TransitionPath const& path) {
    return run(path, &E);
  }

  Word endpoint(TransitionPath const& path) {
    return run(path, nullptr);
  }

  element_index eval_image(BiorderedSet const& E, Word const& w) {
    FiniteSemigroup const& S = E.source();
    element_index          x = E.to_source(w.at(0));
    for (std::size_t i = 1; i < w.size(); ++i) {
      x = S.product(x, E.to_source(w[i]));
    }
    return x;
  }

  TransitionPath identity_path(Word w) {
    return {std::move(w), {}};
  }

  TransitionPath concat(TransitionPath const& p, TransitionPath const& q) {
    if (endpoint(p) != q.start) {
      throw EndpointMismatch("cannot concatenate: path ends at ["
                             + to_string(endpoint(p)) + "] but next starts at ["
                             + to_string(q.start) + "]");
    }
    TransitionPath out = p;
    out.steps.insert(out.steps.end(), q.steps.begin(), q.steps.end());
    return out;
  }

  TransitionPath concat(std::vector<TransitionPath> const& parts) {
    TransitionPath out = parts.at(0);
    Word           end = endpoint(out);
    for (std::size_t k = 1; k < parts.size(); ++k) {
      if (end != parts[k].start) {
        throw EndpointMismatch("cannot concatenate part " + std::to_string(k)
                               + ": previous part ends at [" + to_string(end)
                               + "] but it starts at [" + to_string(parts[k].start)
                               + "]");
      }
      out.steps.insert(out.steps.end(), parts[k].steps.begin(), parts[k].steps.end());
      end = endpoint(parts[k]);
    }
    return out;
  }

  TransitionPath invert(TransitionPath const& p) {
    TransitionPath out{endpoint(p), {}};
    out.steps.reserve(p.steps.size());
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
      out.steps.push_back(it->inverse());
    }
    return out;
  }

  TransitionPath embed(TransitionPath const& p, Word const& left, Word const& right) {
    TransitionPath out{left + p.start + right, p.steps};
    for (auto& t : out.steps) {
      t.pos += left.size();
    }
    return out;
  }

}  // namespace igcert
