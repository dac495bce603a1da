#include "igcert/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace igcert::oracle {

  namespace {
    // Odometer over all sequences of `length` digits in base `base`.
    bool next_tuple(std::vector<std::size_t>& digits, std::size_t base) {
      for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < base) {
          return true;
        }
        digits[i] = 0;
      }
      return false;
    }

    // Groups elements with equal keys; classes ordered by least member.
    template <typename Key>
    Partition classes_by_key(std::vector<Key> const& keys) {
      std::map<Key, std::vector<element_index>> groups;
      for (element_index x = 0; x < keys.size(); ++x) {
        groups[keys[x]].push_back(x);
      }
      Partition p;
      for (auto& [key, cls] : groups) {
        p.push_back(std::move(cls));
      }
      std::sort(p.begin(), p.end());
      return p;
    }
  }  // namespace

  std::size_t count_idempotent_maps(std::size_t n) {
    std::vector<std::size_t> f(n, 0);
    std::size_t              count = 0;
    do {
      bool idem = true;
      for (std::size_t x = 0; x < n && idem; ++x) {
        idem = f[f[x]] == f[x];
      }
      count += idem;
    } while (next_tuple(f, n));
    return count;
  }

  std::size_t count_idempotent_matrices(std::size_t dim, std::size_t q) {
    std::vector<std::size_t> a(dim * dim, 0);
    std::size_t              count = 0;
    do {
      bool idem = true;
      for (std::size_t i = 0; i < dim && idem; ++i) {
        for (std::size_t j = 0; j < dim && idem; ++j) {
          std::size_t s = 0;
          for (std::size_t k = 0; k < dim; ++k) {
            s += a[i * dim + k] * a[k * dim + j];
          }
          idem = s % q == a[i * dim + j];
        }
      }
      count += idem;
    } while (next_tuple(a, q));
    return count;
  }

  GreenStructure green_by_definition(FiniteSemigroup const& S) {
    std::size_t const        n = S.order();
    std::vector<std::vector<bool>> right(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> left(n, std::vector<bool>(n, false));
    for (element_index a = 0; a < n; ++a) {
      right[a][a] = left[a][a] = true;  // the adjoined identity
      for (element_index s = 0; s < n; ++s) {
        right[a][S.product(a, s)] = true;
        left[a][S.product(s, a)]  = true;
      }
    }
    std::vector<std::pair<std::vector<bool>, std::vector<bool>>> both;
    for (element_index a = 0; a < n; ++a) {
      both.emplace_back(right[a], left[a]);
    }
    return {classes_by_key(right), classes_by_key(left), classes_by_key(both)};
  }

  Lemma1Report check_lemma1(FiniteSemigroup const& S) {
    GreenStructure const           g   = green_by_definition(S);
    std::vector<std::size_t> const rid = class_lookup(g.r_classes, S.order());
    std::vector<std::size_t> const hid = class_lookup(g.h_classes, S.order());
    Lemma1Report                   report;
    for (element_index a = 0; a < S.order(); ++a) {
      // pow[i] = a^(i+1) for every exponent up to |S|.
      std::vector<element_index> pow{a};
      while (pow.size() < S.order()) {
        pow.push_back(S.product(pow.back(), a));
      }
      for (std::size_t q = 1; q <= pow.size(); ++q) {
        element_index const e = pow[q - 1];
        if (S.product(e, e) != e) {
          continue;
        }
        for (std::size_t p = 1; p <= q; ++p) {
          element_index const ap = pow[p - 1];
          if (rid[ap] != rid[e]) {
            continue;
          }
          ++report.instances;
          report.violations += hid[ap] != hid[e];
        }
      }
    }
    return report;
  }

  std::vector<FiniteSemigroup> random_transformation_semigroups(std::size_t   points,
                                                                std::size_t   count,
                                                                std::uint64_t seed) {
    std::mt19937_64                           rng(seed);
    std::uniform_int_distribution<std::size_t> ngens(1, 3);
    std::uniform_int_distribution<std::uint32_t> image(0, static_cast<std::uint32_t>(points - 1));
    std::vector<FiniteSemigroup>               out;
    for (std::size_t i = 0; i < count; ++i) {
      TransformationSpec spec{points, {}, false};
      for (std::size_t g = ngens(rng); g > 0; --g) {
        Transformation t(points);
        for (auto& x : t) {
          x = image(rng);
        }
        spec.generators.push_back(std::move(t));
      }
      out.push_back(build_semigroup(spec));
    }
    return out;
  }

}  // namespace igcert::oracle
