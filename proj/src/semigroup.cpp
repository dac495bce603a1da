#include "igcert/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>

#include "igcert/error.hpp"

namespace igcert {

  namespace {
    struct TransformationHash {
      std::size_t operator()(Transformation const& t) const noexcept {
        std::size_t seed = t.size();
        for (auto x : t) {
          seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
        }
        return seed;
      }
    };

    std::string transformation_label(Transformation const& t) {
      std::string out = "[";
      for (std::size_t i = 0; i < t.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(t[i]);
      }
      return out + "]";
    }

    // Strongly connected components of the graph with edges x -> step(x, s)
    // for s < degree. Iterative Tarjan; components are sorted internally and
    // then by least member.
    template <typename Step>
    Partition strongly_connected(std::size_t n, Step&& step, std::size_t degree) {
      constexpr std::size_t      unvisited = static_cast<std::size_t>(-1);
      std::vector<std::size_t>   index(n, unvisited), low(n, 0);
      std::vector<bool>          on_stack(n, false);
      std::vector<element_index> stack;
      Partition                  result;
      std::size_t                counter = 0;

      struct Frame {
        element_index v;
        std::size_t   next;
      };
      std::vector<Frame> call;

      for (element_index root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
          continue;
        }
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
          Frame& fr = call.back();
          if (fr.next < degree) {
            element_index w = step(fr.v, static_cast<element_index>(fr.next));
            ++fr.next;
            if (index[w] == unvisited) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = true;
              call.push_back({w, 0});
            } else if (on_stack[w]) {
              low[fr.v] = std::min(low[fr.v], index[w]);
            }
            continue;
          }
          element_index v = fr.v;
          call.pop_back();
          if (!call.empty()) {
            low[call.back().v] = std::min(low[call.back().v], low[v]);
          }
          if (low[v] == index[v]) {
            std::vector<element_index> comp;
            element_index              w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              comp.push_back(w);
            } while (w != v);
            result.push_back(std::move(comp));
          }
        }
      }
      for (auto& c : result) {
        std::sort(c.begin(), c.end());
      }
      std::sort(result.begin(), result.end());
      return result;
    }

    FiniteSemigroup build(CayleySpec const& spec) {
      std::size_t const n = spec.rows.size();
      if (n == 0) {
        throw SpecError("a Cayley table needs at least one element");
      }
      std::vector<element_index> table;
      table.reserve(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        if (spec.rows[i].size() != n) {
          throw SpecError("row " + std::to_string(i) + " has "
                          + std::to_string(spec.rows[i].size())
                          + " entries, expected " + std::to_string(n));
        }
        table.insert(table.end(), spec.rows[i].begin(), spec.rows[i].end());
      }
      FiniteSemigroup S(n, std::move(table), {}, SemigroupSource::cayley_file);
      if (auto bad = find_nonassociative_triple(S)) {
        throw AssociativityError((*bad)[0], (*bad)[1], (*bad)[2]);
      }
      return S;
    }

    FiniteSemigroup build(TransformationSpec const& spec) {
      auto elements = transformation_closure(
          spec.points, spec.generators, spec.adjoin_identity);
      std::unordered_map<Transformation, element_index, TransformationHash>
          position;
      for (std::size_t i = 0; i < elements.size(); ++i) {
        position.emplace(elements[i], static_cast<element_index>(i));
      }
      std::size_t const          n = elements.size();
      std::vector<element_index> table(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          table[i * n + j] = position.at(compose(elements[i], elements[j]));
        }
      }
      std::vector<std::string> labels;
      labels.reserve(n);
      for (auto const& t : elements) {
        labels.push_back(transformation_label(t));
      }
      return FiniteSemigroup(n,
                             std::move(table),
                             std::move(labels),
                             SemigroupSource::transformation_closure);
    }

    // Matrices are indexed by their row-major entry sequence read as a
    // base-q numeral, most significant digit first.
    FiniteSemigroup build(MatrixSpec const& spec) {
      if (spec.dim < 1 || spec.dim > 3) {
        throw SpecError("matrix dimension must be 1, 2 or 3, got "
                        + std::to_string(spec.dim));
      }
      if (spec.field != 2 && spec.field != 3) {
        throw SpecError("unsupported field size " + std::to_string(spec.field)
                        + " (supported: 2, 3)");
      }
      std::size_t const dim = spec.dim, q = spec.field, cells = dim * dim;
      std::size_t       n = 1;
      for (std::size_t c = 0; c < cells; ++c) {
        n *= q;
      }
      std::vector<std::vector<std::size_t>> entries(n);
      for (std::size_t x = 0; x < n; ++x) {
        entries[x].resize(cells);
        std::size_t code = x;
        for (std::size_t c = cells; c-- > 0;) {
          entries[x][c] = code % q;
          code /= q;
        }
      }
      std::vector<element_index> table(n * n);
      for (std::size_t a = 0; a < n; ++a) {
        auto const& A = entries[a];
        for (std::size_t b = 0; b < n; ++b) {
          auto const& B    = entries[b];
          std::size_t code = 0;
          for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t c = 0; c < dim; ++c) {
              std::size_t sum = 0;
              for (std::size_t k = 0; k < dim; ++k) {
                sum += A[r * dim + k] * B[k * dim + c];
              }
              code = code * q + sum % q;
            }
          }
          table[a * n + b] = static_cast<element_index>(code);
        }
      }
      std::vector<std::string> labels;
      labels.reserve(n);
      for (auto const& m : entries) {
        std::string s = "[";
        for (std::size_t r = 0; r < dim; ++r) {
          s += r == 0 ? "[" : ",[";
          for (std::size_t c = 0; c < dim; ++c) {
            s += (c == 0 ? "" : ",") + std::to_string(m[r * dim + c]);
          }
          s += "]";
        }
        labels.push_back(s + "]");
      }
      return FiniteSemigroup(
          n, std::move(table), std::move(labels), SemigroupSource::matrix_monoid);
    }
  }  // namespace

  std::string to_string(SemigroupSource source) {
    switch (source) {
      case SemigroupSource::cayley_file:
        return "cayley-file";
      case SemigroupSource::transformation_closure:
        return "transformation-closure";
      case SemigroupSource::matrix_monoid:
        return "matrix-monoid";
    }
    return "unknown";
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    Transformation out(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      out[x] = g[f[x]];
    }
    return out;
  }

  FiniteSemigroup::FiniteSemigroup(std::size_t                order,
                                   std::vector<element_index> table,
                                   std::vector<std::string>   labels,
                                   SemigroupSource            source)
      : _order(order),
        _table(std::move(table)),
        _labels(std::move(labels)),
        _source(source) {
    if (_order == 0) {
      throw SpecError("a semigroup needs at least one element");
    }
    if (_table.size() != _order * _order) {
      throw SpecError("Cayley table has " + std::to_string(_table.size())
                      + " entries, expected "
                      + std::to_string(_order * _order));
    }
    for (std::size_t k = 0; k < _table.size(); ++k) {
      if (_table[k] >= _order) {
        throw SpecError("entry (" + std::to_string(k / _order) + ", "
                        + std::to_string(k % _order) + ") = "
                        + std::to_string(_table[k]) + " is out of range");
      }
    }
    if (!_labels.empty() && _labels.size() != _order) {
      throw SpecError("expected one label per element");
    }
  }

  std::string FiniteSemigroup::label(element_index i) const {
    return _labels.empty() ? std::to_string(i) : _labels[i];
  }

  element_index FiniteSemigroup::power(element_index a, std::size_t n) const {
    element_index x = a;
    for (std::size_t k = 1; k < n; ++k) {
      x = product(x, a);
    }
    return x;
  }

  std::optional<std::array<element_index, 3>>
  find_nonassociative_triple(FiniteSemigroup const& S) {
    auto const n = static_cast<element_index>(S.order());
    for (element_index i = 0; i < n; ++i) {
      for (element_index j = 0; j < n; ++j) {
        element_index const ij = S.product(i, j);
        for (element_index k = 0; k < n; ++k) {
          if (S.product(ij, k) != S.product(i, S.product(j, k))) {
            return std::array<element_index, 3>{i, j, k};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Transformation>
  transformation_closure(std::size_t                 points,
                         std::vector<Transformation> generators,
                         bool                        adjoin_identity) {
    if (points == 0) {
      throw SpecError("transformations need at least one point");
    }
    for (std::size_t g = 0; g < generators.size(); ++g) {
      if (generators[g].size() != points) {
        throw SpecError("generator " + std::to_string(g) + " has "
                        + std::to_string(generators[g].size())
                        + " images, expected " + std::to_string(points));
      }
      for (auto x : generators[g]) {
        if (x >= points) {
          throw SpecError("generator " + std::to_string(g) + " has image "
                          + std::to_string(x) + " outside [0, "
                          + std::to_string(points) + ")");
        }
      }
    }
    if (adjoin_identity) {
      Transformation id(points);
      std::iota(id.begin(), id.end(), 0);
      generators.push_back(std::move(id));
    }
    if (generators.empty()) {
      throw SpecError("no generators given");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()),
                     generators.end());

    std::vector<Transformation> elements;
    std::unordered_map<Transformation, std::size_t, TransformationHash> seen;
    for (auto const& g : generators) {
      seen.emplace(g, elements.size());
      elements.push_back(g);
    }
    for (std::size_t next = 0; next < elements.size(); ++next) {
      for (auto const& g : generators) {
        Transformation y = compose(elements[next], g);
        if (seen.emplace(y, elements.size()).second) {
          elements.push_back(std::move(y));
        }
      }
    }
    return elements;
  }

  FiniteSemigroup build_semigroup(SemigroupSpec const& spec) {
    return std::visit([](auto const& s) { return build(s); }, spec);
  }

  std::vector<element_index> idempotents(FiniteSemigroup const& S) {
    std::vector<element_index> out;
    for (element_index i = 0; i < S.order(); ++i) {
      if (S.is_idempotent(i)) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<std::size_t> class_lookup(Partition const& p, std::size_t order) {
    std::vector<std::size_t> out(order, 0);
    for (std::size_t c = 0; c < p.size(); ++c) {
      for (auto x : p[c]) {
        out[x] = c;
      }
    }
    return out;
  }

  GreenStructure green_classes(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    // Every vertex reaches itself, which accounts for the adjoined identity.
    GreenStructure g;
    g.r_classes = strongly_connected(
        n, [&S](element_index a, element_index s) { return S.product(a, s); }, n);
    g.l_classes = strongly_connected(
        n, [&S](element_index a, element_index s) { return S.product(s, a); }, n);

    auto const r = class_lookup(g.r_classes, n);
    auto const l = class_lookup(g.l_classes, n);
    std::vector<std::vector<element_index>> buckets;
    std::unordered_map<std::size_t, std::size_t> key_to_bucket;
    for (element_index a = 0; a < n; ++a) {
      auto [it, fresh] = key_to_bucket.emplace(r[a] * n + l[a], buckets.size());
      if (fresh) {
        buckets.emplace_back();
      }
      buckets[it->second].push_back(a);
    }
    std::sort(buckets.begin(), buckets.end());
    g.h_classes = std::move(buckets);
    return g;
  }

  JOrder j_order(FiniteSemigroup const& S) {
    std::size_t const n = S.order();
    JOrder            out;
    out.classes = strongly_connected(
        n,
        [&S, n](element_index a, element_index s) {
          return s < n ? S.product(a, s) : S.product(s - static_cast<element_index>(n), a);
        },
        2 * n);
    out.class_of          = class_lookup(out.classes, n);
    std::size_t const c   = out.classes.size();
    std::vector<std::vector<bool>> edge(c, std::vector<bool>(c, false));
    for (element_index a = 0; a < n; ++a) {
      for (element_index s = 0; s < n; ++s) {
        edge[out.class_of[a]][out.class_of[S.product(a, s)]] = true;
        edge[out.class_of[a]][out.class_of[S.product(s, a)]] = true;
      }
    }
    out.below.assign(c, std::vector<bool>(c, false));
    for (std::size_t root = 0; root < c; ++root) {
      std::vector<std::size_t> todo{root};
      out.below[root][root] = true;
      while (!todo.empty()) {
        std::size_t x = todo.back();
        todo.pop_back();
        for (std::size_t y = 0; y < c; ++y) {
          if (edge[x][y] && !out.below[root][y]) {
            out.below[root][y] = true;
            todo.push_back(y);
          }
        }
      }
    }
    return out;
  }

  IndexPeriod index_period(FiniteSemigroup const& S, element_index a) {
    // first_seen[x] is the exponent at which x first appeared as a power of a.
    std::vector<std::size_t> first_seen(S.order(), 0);
    element_index            x = a;
    for (std::size_t exponent = 1;; ++exponent) {
      if (first_seen[x] != 0) {
        return {first_seen[x], exponent - first_seen[x]};
      }
      first_seen[x] = exponent;
      x             = S.product(x, a);
    }
  }

  bool lies_in_subgroup(FiniteSemigroup const& S, element_index a) {
    return index_period(S, a).index_h == 1;
  }

}  // namespace igcert
