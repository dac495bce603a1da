#include "igcert/json_io.hpp"

#include <limits>
#include <type_traits>

namespace igcert {

  namespace {
    json const& field(json const& j, char const* key, std::string const& where) {
      if (!j.is_object()) {
        throw FormatError(where + ": expected an object");
      }
      auto it = j.find(key);
      if (it == j.end()) {
        throw FormatError(where + ": missing field \"" + key + "\"");
      }
      return *it;
    }

    template <typename T>
    T as_uint(json const& j, std::string const& where) {
      if (!j.is_number_unsigned()) {
        throw FormatError(where + ": expected a non-negative integer");
      }
      auto const v = j.get<std::uint64_t>();
      if (v > std::numeric_limits<T>::max()) {
        throw FormatError(where + ": integer out of range");
      }
      return static_cast<T>(v);
    }

    template <typename T>
    T uint_field(json const& j, char const* key, std::string const& where) {
      return as_uint<T>(field(j, key, where), where + "/" + key);
    }

    std::string string_field(json const& j, char const* key, std::string const& where) {
      json const& v = field(j, key, where);
      if (!v.is_string()) {
        throw FormatError(where + "/" + key + ": expected a string");
      }
      return v.get<std::string>();
    }

    Word read_word(json const& j, std::string const& where) {
      if (!j.is_array()) {
        throw FormatError(where + ": expected an array of letters");
      }
      Word w;
      w.reserve(j.size());
      for (std::size_t i = 0; i < j.size(); ++i) {
        w.push_back(as_uint<letter_type>(j[i], where + "/" + std::to_string(i)));
      }
      return w;
    }

    Word word_field(json const& j, char const* key, std::string const& where) {
      return read_word(field(j, key, where), where + "/" + key);
    }

    TransitionPath read_path(json const& j, std::string const& where) {
      TransitionPath p;
      p.start            = word_field(j, "start", where);
      json const& steps  = field(j, "steps", where);
      std::string const at = where + "/steps";
      if (!steps.is_array()) {
        throw FormatError(at + ": expected an array");
      }
      for (std::size_t i = 0; i < steps.size(); ++i) {
        std::string const s = at + "/" + std::to_string(i);
        Transition        t;
        t.pos                  = uint_field<std::size_t>(steps[i], "pos", s);
        std::string const kind = string_field(steps[i], "kind", s);
        if (kind == "contract") {
          t.kind = TransitionKind::contract;
        } else if (kind == "expand") {
          t.kind = TransitionKind::expand;
        } else {
          throw FormatError(s + "/kind: expected \"contract\" or \"expand\"");
        }
        Word const triple = word_field(steps[i], "triple", s);
        if (triple.size() != 3) {
          throw FormatError(s + "/triple: expected three letters");
        }
        t.triple = {triple[0], triple[1], triple[2]};
        p.steps.push_back(t);
      }
      return p;
    }

    GreenWitness read_witness(json const& j, std::string const& where) {
      GreenWitness w;
      std::string const kind = string_field(j, "kind", where);
      if (kind == "R") {
        w.kind = GreenKind::R;
      } else if (kind == "L") {
        w.kind = GreenKind::L;
      } else {
        throw FormatError(where + "/kind: expected \"R\" or \"L\"");
      }
      w.a         = word_field(j, "a", where);
      w.b         = word_field(j, "b", where);
      w.fwd_mult  = word_field(j, "fwd_mult", where);
      w.bwd_mult  = word_field(j, "bwd_mult", where);
      w.fwd_proof = read_path(field(j, "fwd_proof", where), where + "/fwd_proof");
      w.bwd_proof = read_path(field(j, "bwd_proof", where), where + "/bwd_proof");
      return w;
    }

    HWitness read_h_witness(json const& j, std::string const& where) {
      if (string_field(j, "kind", where) != "H") {
        throw FormatError(where + "/kind: expected \"H\"");
      }
      return {read_witness(field(j, "r", where), where + "/r"),
              read_witness(field(j, "l", where), where + "/l")};
    }

    Decomposition read_decomposition(json const& j, std::string const& where) {
      Decomposition d;
      d.u        = word_field(j, "u", where);
      d.f_letter = uint_field<letter_type>(j, "f_letter", where);
      d.f_pos    = uint_field<std::size_t>(j, "f_pos", where);
      d.v        = word_field(j, "v", where);
      d.lwit     = read_witness(field(j, "lwit", where), where + "/lwit");
      d.rwit     = read_witness(field(j, "rwit", where), where + "/rwit");
      return d;
    }

    PeriodicityCertificate read_periodicity(json const& j, std::string const& where) {
      PeriodicityCertificate pc;
      pc.w     = word_field(j, "w", where);
      pc.h     = uint_field<std::size_t>(j, "h", where);
      pc.d     = uint_field<std::size_t>(j, "d", where);
      pc.proof = read_path(field(j, "proof", where), where + "/proof");
      return pc;
    }
  }  // namespace

  std::string dump_canonical(json const& j) {
    return j.dump(2) + "\n";
  }

  json parse_json(std::string_view text) {
    try {
      return json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
      throw FormatError(e.what());
    }
  }

  json to_json(Word const& w) {
    json j = json::array();
    for (letter_type x : w) {
      j.push_back(x);
    }
    return j;
  }

  json to_json(Transition const& t) {
    return {{"pos", t.pos},
            {"kind", to_string(t.kind)},
            {"triple", {t.triple[0], t.triple[1], t.triple[2]}}};
  }

  json to_json(TransitionPath const& p) {
    json steps = json::array();
    for (auto const& t : p.steps) {
      steps.push_back(to_json(t));
    }
    return {{"start", to_json(p.start)}, {"steps", std::move(steps)}};
  }

  json to_json(Verdict const& v) {
    return std::visit(
        [](auto const& x) -> json {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Proved>) {
            return {{"verdict", "proved"},
                    {"length", x.path.steps.size()},
                    {"path", to_json(x.path)}};
          } else if constexpr (std::is_same_v<T, Refuted>) {
            return {{"verdict", "refuted"},
                    {"lhs_image", x.lhs_image},
                    {"rhs_image", x.rhs_image}};
          } else {
            return {{"verdict", "unknown"},
                    {"nodes", x.nodes},
                    {"max_len", x.max_len},
                    {"exhausted", x.exhausted},
                    {"separated", x.separated}};
          }
        },
        v);
  }

  json to_json(GreenWitness const& w) {
    return {{"kind", to_string(w.kind)},
            {"a", to_json(w.a)},
            {"b", to_json(w.b)},
            {"fwd_mult", to_json(w.fwd_mult)},
            {"bwd_mult", to_json(w.bwd_mult)},
            {"fwd_proof", to_json(w.fwd_proof)},
            {"bwd_proof", to_json(w.bwd_proof)}};
  }

  json to_json(HWitness const& w) {
    return {{"kind", "H"},
            {"a", to_json(w.a())},
            {"b", to_json(w.b())},
            {"r", to_json(w.r)},
            {"l", to_json(w.l)}};
  }

  json to_json(Decomposition const& d) {
    return {{"u", to_json(d.u)},
            {"f_letter", d.f_letter},
            {"f_pos", d.f_pos},
            {"v", to_json(d.v)},
            {"lwit", to_json(d.lwit)},
            {"rwit", to_json(d.rwit)}};
  }

  json to_json(PeriodicityCertificate const& pc) {
    return {{"w", to_json(pc.w)}, {"h", pc.h}, {"d", pc.d}, {"proof", to_json(pc.proof)}};
  }

  json to_json(SubgroupCertificate const& c) {
    json grid = json::array();
    for (auto const& edge : c.grid) {
      grid.push_back({{"label", edge.label}, {"witness", to_json(edge.witness)}});
    }
    json j = {{"w", to_json(c.w)},
              {"e", c.e},
              {"k", c.k},
              {"ell", c.ell},
              {"m", c.m},
              {"i", c.i},
              {"periodicity", to_json(c.periodicity)},
              {"idempotency_proof", to_json(c.idempotency_proof)},
              {"idem_path", to_json(c.idem_path)},
              {"decomposition", to_json(c.decomposition)},
              {"grid", std::move(grid)},
              {"power_hwit", c.power_hwit ? to_json(*c.power_hwit) : json(nullptr)},
              {"hwit", to_json(c.hwit)}};
    j["metadata"] = {
        {"basic_pair_cases", {"1: e o f = e", "2: e o f = f", "3: f o e = e", "4: f o e = f"}},
        {"grid_edges",
         {"E1: w^(ell+1) L e_i..e_n",
          "E2: e_i R e_i..e_n",
          "E3: w^ell e_1..e_i R w^(ell+1)",
          "E4: w^ell e_1..e_i R w^k",
          "E5: w^(ell+1) R e",
          "E6: e_i..e_n L w",
          "E7: w L w^(ell+1)",
          "E8: w L e"}}};
    return j;
  }

  json to_json(BiorderedSet const& E) {
    json product = json::array();
    for (letter_type e = 0; e < E.size(); ++e) {
      json row = json::array();
      for (letter_type f = 0; f < E.size(); ++f) {
        auto p = E.product(e, f);
        row.push_back(p ? json(*p) : json(nullptr));
      }
      product.push_back(std::move(row));
    }
    json to_source = json::array();
    for (letter_type e = 0; e < E.size(); ++e) {
      to_source.push_back(E.to_source(e));
    }
    return {{"size", E.size()}, {"product", std::move(product)}, {"to_source", std::move(to_source)}};
  }

  json to_json(std::vector<Relation> const& relations) {
    json j = json::array();
    for (auto const& r : relations) {
      j.push_back({{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
    }
    return j;
  }

  json to_json(Partition const& p) {
    json j = json::array();
    for (auto const& cls : p) {
      json c = json::array();
      for (element_index x : cls) {
        c.push_back(x);
      }
      j.push_back(std::move(c));
    }
    return j;
  }

  Word word_from_json(json const& j) {
    return read_word(j, "");
  }

  TransitionPath path_from_json(json const& j) {
    return read_path(j, "");
  }

  GreenWitness witness_from_json(json const& j) {
    return read_witness(j, "");
  }

  HWitness h_witness_from_json(json const& j) {
    return read_h_witness(j, "");
  }

  Decomposition decomposition_from_json(json const& j) {
    return read_decomposition(j, "");
  }

  PeriodicityCertificate periodicity_from_json(json const& j) {
    return read_periodicity(j, "");
  }

  SubgroupCertificate certificate_from_json(json const& j) {
    SubgroupCertificate c;
    c.w                 = word_field(j, "w", "");
    c.e                 = uint_field<letter_type>(j, "e", "");
    c.k                 = uint_field<std::size_t>(j, "k", "");
    c.ell               = uint_field<std::size_t>(j, "ell", "");
    c.m                 = uint_field<std::size_t>(j, "m", "");
    c.i                 = uint_field<std::size_t>(j, "i", "");
    c.periodicity       = read_periodicity(field(j, "periodicity", ""), "/periodicity");
    c.idempotency_proof = read_path(field(j, "idempotency_proof", ""), "/idempotency_proof");
    c.idem_path         = read_path(field(j, "idem_path", ""), "/idem_path");
    c.decomposition     = read_decomposition(field(j, "decomposition", ""), "/decomposition");
    json const& grid    = field(j, "grid", "");
    if (!grid.is_array()) {
      throw FormatError("/grid: expected an array");
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
      std::string const at = "/grid/" + std::to_string(i);
      c.grid.push_back({string_field(grid[i], "label", at),
                        read_witness(field(grid[i], "witness", at), at + "/witness")});
    }
    if (json const& ph = field(j, "power_hwit", ""); !ph.is_null()) {
      c.power_hwit = read_h_witness(ph, "/power_hwit");
    }
    c.hwit = read_h_witness(field(j, "hwit", ""), "/hwit");
    return c;
  }

}  // namespace igcert
