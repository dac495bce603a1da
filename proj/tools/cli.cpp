#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "igcert/biorder.hpp"
#include "igcert/decomposition.hpp"
#include "igcert/error.hpp"
#include "igcert/green.hpp"
#include "igcert/json_io.hpp"
#include "igcert/oracle.hpp"
#include "igcert/search.hpp"
#include "igcert/spec_file.hpp"
#include "igcert/subgroup.hpp"

namespace igcert::cli {

  namespace {
    int code_of(Verdict const& v) {
      return is_proved(v) ? ok : is_refuted(v) ? refuted : unknown;
    }

    std::string summary(Verdict const& v) {
      if (auto p = std::get_if<Proved>(&v)) {
        return "proved, path of " + std::to_string(p->path.steps.size()) + " steps";
      }
      if (auto r = std::get_if<Refuted>(&v)) {
        return "refuted, images " + std::to_string(r->lhs_image) + " and "
               + std::to_string(r->rhs_image) + " differ";
      }
      auto const& u = std::get<Unknown>(v);
      if (u.separated) {
        return "unknown, ideal supports differ (no search run)";
      }
      return "unknown after " + std::to_string(u.nodes) + " states, max_len "
             + std::to_string(u.max_len) + (u.exhausted ? ", one side exhausted" : "");
    }

    std::string path_text(BiorderedSet const& E, TransitionPath const& p) {
      std::ostringstream os;
      Word               w = p.start;
      os << "  [" << to_string(w) << "]\n";
      for (auto const& t : p.steps) {
        w = apply_transition(E, w, t);
        os << "  " << (t.kind == TransitionKind::contract ? "contract" : "expand  ") << " at "
           << t.pos << " (" << t.triple[0] << "," << t.triple[1] << "->" << t.triple[2]
           << ")  [" << to_string(w) << "]\n";
      }
      return os.str();
    }

    class Runner {
     public:
      Runner(RunConfig cfg, std::ostream& out) : _cfg(std::move(cfg)), _out(out) {}

      int dispatch() {
        auto const& c = _cfg.command;
        if (c == "selftest") {
          return selftest();
        }
        load();
        if (c == "extract") {
          return extract();
        }
        if (c == "presentation") {
          return presentation_cmd();
        }
        if (c == "neighbors") {
          return neighbors_cmd();
        }
        if (c == "equiv") {
          return equiv();
        }
        if (c == "idem-root") {
          return idem_root();
        }
        if (c == "decompose") {
          return decompose_cmd();
        }
        if (c == "periodic") {
          return periodic();
        }
        if (c == "certify") {
          return certify();
        }
        return verify();
      }

     private:
      bool json_out() const {
        return _cfg.format == "json";
      }

      void emit(json const& j) {
        _out << dump_canonical(j);
      }

      BudgetPolicy policy() const {
        return {_cfg.max_len, _cfg.max_nodes};
      }

      void load() {
        auto S = std::make_shared<FiniteSemigroup const>(
            build_semigroup(load_semigroup_spec(_cfg.input)));
        _E = std::make_unique<BiorderedSet>(extract_biorder(std::move(S)));
      }

      Word word(std::size_t i) const {
        Word w;
        try {
          w = parse_word(_cfg.words.at(i));
        } catch (ParseError const& e) {
          throw Error("word \"" + _cfg.words.at(i) + "\": " + e.what());
        }
        if (w.empty() || !_E->valid_word(w)) {
          throw SpecError("word [" + _cfg.words.at(i) + "] is empty or mentions a letter >= "
                          + std::to_string(_E->size()));
        }
        return w;
      }

      int extract() {
        if (json_out()) {
          emit(to_json(*_E));
          return ok;
        }
        FiniteSemigroup const& S = _E->source();
        _out << "semigroup of order " << S.order() << " (" << to_string(S.source()) << "), "
             << _E->size() << " idempotents\n";
        for (letter_type e = 0; e < _E->size(); ++e) {
          _out << "  " << e << " = element " << _E->to_source(e) << " " << S.label(_E->to_source(e))
               << "\n";
        }
        return ok;
      }

      int presentation_cmd() {
        auto const rel = presentation(*_E);
        if (json_out()) {
          emit(to_json(rel));
          return ok;
        }
        _out << rel.size() << " relations\n";
        for (auto const& r : rel) {
          _out << "  " << r.lhs[0] << " " << r.lhs[1] << " = " << r.rhs[0] << "\n";
        }
        return ok;
      }

      int neighbors_cmd() {
        Word const w     = word(0);
        json       moves = json::array();
        std::size_t count = 0;
        for (auto const& [t, x] : neighbors(*_E, w)) {
          if (_cfg.max_len && x.size() > *_cfg.max_len) {
            continue;
          }
          ++count;
          if (json_out()) {
            moves.push_back({{"transition", to_json(t)}, {"word", to_json(x)}});
          } else {
            _out << "  " << to_string(t.kind) << " at " << t.pos << " -> [" << to_string(x)
                 << "]\n";
          }
        }
        if (json_out()) {
          emit(moves);
        } else {
          _out << count << " moves\n";
        }
        return ok;
      }

      int equiv() {
        Word const    w1 = word(0), w2 = word(1);
        Verdict const v  = prove_equiv(*_E, w1, w2, policy().for_length(std::max(w1.size(), w2.size())));
        if (json_out()) {
          emit(to_json(v));
        } else {
          _out << summary(v) << "\n";
          if (auto p = std::get_if<Proved>(&v)) {
            _out << path_text(*_E, p->path);
          }
        }
        return code_of(v);
      }

      int idem_root() {
        Word const           w = word(0);
        IdempotentRoot const r = idempotent_root(*_E, w, policy().for_length(w.size()));
        if (json_out()) {
          json j = to_json(r.verdict);
          j["e"] = r.idempotent ? json(*r.idempotent) : json(nullptr);
          emit(j);
        } else {
          _out << summary(r.verdict);
          if (r.idempotent) {
            _out << ", w ~ " << *r.idempotent;
          }
          _out << "\n";
        }
        return code_of(r.verdict);
      }

      int decompose_cmd() {
        Word const           w = word(0);
        IdempotentRoot const r = idempotent_root(*_E, w, policy().for_length(w.size()));
        if (!r.idempotent) {
          report_stop("idempotent-root", r.verdict);
          return code_of(r.verdict);
        }
        TransitionPath const& path = std::get<Proved>(r.verdict).path;
        Decomposition const   d    = decompose(*_E, w, path);
        if (json_out()) {
          emit({{"type", "decomposition"},
                {"w", to_json(w)},
                {"e", *r.idempotent},
                {"idem_path", to_json(path)},
                {"decomposition", to_json(d)}});
        } else {
          _out << "w ~ " << *r.idempotent << " in " << path.steps.size() << " steps\n"
               << "u = [" << to_string(d.u) << "], f = " << d.f_letter << " at " << d.f_pos
               << ", v = [" << to_string(d.v) << "]\n";
        }
        return ok;
      }

      int periodic() {
        Word const w  = word(0);
        auto const pc = find_periodicity(*_E, w, policy(), _cfg.power_cap);
        if (!pc) {
          report_none(w);
          return unknown;
        }
        // The index-collapse consequence w ~ w^(d+1), with a scaled budget.
        Word const    wd = power(w, pc->d + 1);
        Verdict const collapse
            = prove_equiv(*_E, w, wd, policy().scaled(_cfg.budget_multiplier).for_length(wd.size()));
        if (json_out()) {
          emit({{"type", "periodicity"}, {"certificate", to_json(*pc)}, {"collapse", to_json(collapse)}});
        } else {
          _out << "w^" << pc->h << " ~ w^" << pc->h + pc->d << " (h = " << pc->h
               << ", d = " << pc->d << "), proof of " << pc->proof.steps.size() << " steps\n"
               << "w ~ w^" << pc->d + 1 << ": " << summary(collapse) << "\n";
        }
        return ok;
      }

      int certify() {
        Word const w  = word(0);
        auto const pc = find_periodicity(*_E, w, policy(), _cfg.power_cap);
        if (!pc) {
          report_none(w);
          return unknown;
        }
        Certification const c = subgroup_certificate(*_E, w, *pc, policy());
        if (!c.certificate) {
          report_stop(c.stage, *c.verdict);
          return code_of(*c.verdict);
        }
        auto const& cert = *c.certificate;
        if (json_out()) {
          json j    = to_json(cert);
          j["type"] = "subgroup-certificate";
          emit(j);
        } else {
          _out << "w = [" << to_string(w) << "] lies in the subgroup of e = " << cert.e << "\n"
               << "h = " << pc->h << ", d = " << pc->d << ", k = " << cert.k
               << ", ell = " << cert.ell << ", i = " << cert.i << ", m = " << cert.m << "\n"
               << "grid edges: " << cert.grid.size() << "\n";
        }
        return ok;
      }

      int verify() {
        std::ifstream in(_cfg.words.at(0), std::ios::binary);
        if (!in) {
          throw SpecError("cannot read " + _cfg.words.at(0));
        }
        std::ostringstream text;
        text << in.rdbuf();
        json const doc = parse_json(text.str());

        Check result;
        try {
          result = check_document(doc);
        } catch (FormatError const& e) {
          result = Check::fail(std::string("malformed certificate: ") + e.what());
        }
        if (json_out()) {
          emit({{"ok", result.ok}, {"diagnostic", result.diagnostic}});
        } else {
          _out << (result.ok ? "certificate verifies" : "invalid: " + result.diagnostic) << "\n";
        }
        return result.ok ? ok : refuted;
      }

      Check check_document(json const& doc) {
        std::string const type = doc.is_object() && doc.contains("type") && doc["type"].is_string()
                                     ? doc["type"].get<std::string>()
                                     : "";
        if (type == "subgroup-certificate") {
          return verify_subgroup_certificate(*_E, certificate_from_json(doc));
        }
        if (type == "periodicity") {
          Check c = verify_periodicity(*_E, periodicity_from_json(doc.at("certificate")));
          if (!c || !doc.contains("collapse")) {
            return c;
          }
          json const& v = doc["collapse"];
          if (v.contains("path")) {
            PeriodicityCertificate const pc = periodicity_from_json(doc["certificate"]);
            TransitionPath const         p  = path_from_json(v["path"]);
            if (p.start != pc.w || !replays_to(p, power(pc.w, pc.d + 1))) {
              return Check::fail("collapse path does not join w and w^(d+1)");
            }
          }
          return c;
        }
        if (type == "decomposition") {
          Word const           w = word_from_json(doc.at("w"));
          TransitionPath const p = path_from_json(doc.at("idem_path"));
          json const&          e = doc.at("e");
          if (!e.is_number_unsigned() || p.start != w || !replays_to(p, Word{e.get<letter_type>()})) {
            return Check::fail("idem_path does not join w and e");
          }
          return verify_decomposition(*_E, w, decomposition_from_json(doc.at("decomposition")));
        }
        return Check::fail("unknown document type \"" + type + "\"");
      }

      bool replays_to(TransitionPath const& p, Word const& to) const {
        try {
          return replay_path(*_E, p) == to;
        } catch (PatternMismatch const&) {
          return false;
        }
      }

      void report_stop(std::string const& stage, Verdict const& v) {
        if (json_out()) {
          emit({{"stage", stage}, {"verdict", to_json(v)}});
        } else {
          _out << "stopped at " << stage << ": " << summary(v) << "\n";
        }
      }

      void report_none(Word const& w) {
        if (json_out()) {
          emit({{"stage", "periodicity"},
                {"verdict", "unknown"},
                {"w", to_json(w)},
                {"power_cap", _cfg.power_cap}});
        } else {
          _out << "no (h, d) with h + d <= " << _cfg.power_cap << " proved\n";
        }
      }

      int selftest() {
        json checks = json::array();
        bool all    = true;
        auto record = [&](std::string const& name, bool pass, json detail) {
          all = all && pass;
          detail["name"] = name;
          detail["ok"]   = pass;
          checks.push_back(std::move(detail));
          if (!json_out()) {
            _out << (pass ? "pass  " : "FAIL  ") << name << "\n";
          }
        };

        auto const t2 = build_semigroup(TransformationSpec{2, {{1, 0}, {0, 0}}, true});
        auto const t3 = build_semigroup(TransformationSpec{3, {{1, 2, 0}, {1, 0, 2}, {0, 0, 2}}, true});
        auto const m2 = build_semigroup(MatrixSpec{2, 2});

        for (auto const& [name, S, expected] :
             {std::tuple{"idempotents T_2", &t2, oracle::count_idempotent_maps(2)},
              std::tuple{"idempotents T_3", &t3, oracle::count_idempotent_maps(3)},
              std::tuple{"idempotents M_2(GF(2))", &m2, oracle::count_idempotent_matrices(2, 2)}}) {
          std::size_t const got = extract_biorder(*S).size();
          record(name, got == expected, {{"extracted", got}, {"oracle", expected}});
        }
        for (auto const& [name, S] : {std::pair{"green T_3", &t3}, std::pair{"green M_2(GF(2))", &m2}}) {
          GreenStructure const a = green_classes(*S), b = oracle::green_by_definition(*S);
          record(name,
                 a.r_classes == b.r_classes && a.l_classes == b.l_classes
                     && a.h_classes == b.h_classes,
                 {{"h_classes", a.h_classes.size()}});
        }
        oracle::Lemma1Report total = oracle::check_lemma1(t3);
        for (auto const& S : oracle::random_transformation_semigroups(4, 50, _cfg.seed)) {
          auto const r = oracle::check_lemma1(S);
          total.instances += r.instances;
          total.violations += r.violations;
        }
        record("R implies H for powers", total.violations == 0,
               {{"instances", total.instances}, {"violations", total.violations}, {"seed", _cfg.seed}});
        if (json_out()) {
          emit({{"ok", all}, {"checks", std::move(checks)}});
        }
        return all ? ok : refuted;
      }

      RunConfig                     _cfg;
      std::ostream&                 _out;
      std::unique_ptr<BiorderedSet> _E;
    };
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App  app{"Biordered sets, IG(E) rewriting and subgroup certificates", "igcert"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-len", cfg.max_len, "longest word a search may visit (default 2|w| + 8)")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-nodes", cfg.max_nodes, "states stored per search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--power-cap", cfg.power_cap, "largest h + d tried")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}))
        ->capture_default_str();
    app.add_option("--budget-multiplier", cfg.budget_multiplier,
                   "node budget factor for the w ~ w^(d+1) check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "seed for randomized checks")->capture_default_str();

    struct Shape {
      char const* name;
      char const* help;
      std::vector<char const*> positional;
    };
    std::vector<Shape> const shapes{
        {"extract", "biordered set of a semigroup", {}},
        {"presentation", "defining relations of IG(E)", {}},
        {"neighbors", "one-step moves from a word", {"word"}},
        {"equiv", "search for a path between two words", {"w1", "w2"}},
        {"idem-root", "find a letter equal to w", {"word"}},
        {"decompose", "distinguished-letter decomposition of w", {"word"}},
        {"periodic", "find w^h ~ w^(h+d)", {"word"}},
        {"certify", "certificate that w lies in a subgroup", {"word"}},
        {"verify", "replay a certificate file", {"certificate"}},
    };
    // Positionals bind to cfg.words by reference, so size it once up front.
    cfg.words.resize(2);
    for (auto const& s : shapes) {
      auto* sub = app.add_subcommand(s.name, s.help);
      sub->add_option("spec", cfg.input, "semigroup spec file")->required();
      for (std::size_t i = 0; i < s.positional.size(); ++i) {
        sub->add_option(s.positional[i], cfg.words[i])->required();
      }
      sub->callback([&cfg, name = std::string(s.name), k = s.positional.size()] {
        cfg.command = name;
        cfg.words.resize(k);
      });
    }
    app.add_subcommand("selftest", "run the brute-force oracles")->callback([&cfg] {
      cfg.command = "selftest";
      cfg.words.clear();
    });

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int const code = app.exit(e, out, err);
      return code == 0 ? ok : input_error;
    }

    try {
      return Runner(cfg, out).dispatch();
    } catch (ParseError const& e) {
      err << "igcert: " << cfg.input << ": " << e.what() << "\n";
    } catch (Error const& e) {
      err << "igcert: " << e.what() << "\n";
    }
    return input_error;
  }

}  // namespace igcert::cli
