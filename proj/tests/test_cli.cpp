#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "igcert/json_io.hpp"

using namespace igcert;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string corpus(char const* name) {
    return std::string(IGCERT_CORPUS_DIR) + "/" + name + ".sg";
  }

  std::string write_temp(std::string const& name, std::string const& text) {
    auto const path = std::filesystem::temp_directory_path() / ("igcert_test_" + name);
    std::ofstream(path) << text;
    return path.string();
  }
}  // namespace

TEST_CASE("extract and presentation") {
  Result const r = run({"extract", corpus("rz")});
  REQUIRE(r.code == cli::ok);
  json const j = json::parse(r.out);
  CHECK(j["size"] == 2);
  CHECK(run({"presentation", corpus("rb22")}).code == cli::ok);
  CHECK(run({"--format", "text", "extract", corpus("t2")}).code == cli::ok);
}

TEST_CASE("equiv exit codes") {
  CHECK(run({"equiv", corpus("rz"), "0,1", "1"}).code == cli::ok);
  Result const refuted = run({"equiv", corpus("rb22"), "0,3", "2"});
  CHECK(refuted.code == cli::refuted);
  CHECK(json::parse(refuted.out)["verdict"] == "refuted");
  Result const unknown = run({"--max-nodes", "500", "equiv", corpus("rb22"), "0,3", "1"});
  CHECK(unknown.code == cli::unknown);
  CHECK(json::parse(unknown.out)["verdict"] == "unknown");
}

TEST_CASE("idem-root, decompose, periodic") {
  CHECK(run({"idem-root", corpus("rz"), "0,1,0"}).code == cli::ok);
  CHECK(run({"--max-nodes", "500", "idem-root", corpus("rb22"), "0,3"}).code == cli::unknown);
  Result const d = run({"decompose", corpus("rz"), "0,1"});
  REQUIRE(d.code == cli::ok);
  CHECK(json::parse(d.out)["type"] == "decomposition");
  Result const p = run({"periodic", corpus("rz"), "0,1"});
  REQUIRE(p.code == cli::ok);
  CHECK(json::parse(p.out)["type"] == "periodicity");
  CHECK(run({"neighbors", corpus("rz"), "0,1"}).code == cli::ok);
}

TEST_CASE("certify is deterministic and verifies") {
  Result const first = run({"certify", corpus("rz"), "0,1"});
  REQUIRE(first.code == cli::ok);
  for (int i = 0; i < 2; ++i) {
    CHECK(run({"certify", corpus("rz"), "0,1"}).out == first.out);
  }
  std::string const good = write_temp("good.json", first.out);
  CHECK(run({"verify", corpus("rz"), good}).code == cli::ok);

  // Decompositions and periodicity certificates verify through the same door.
  std::string const dec = write_temp("dec.json", run({"decompose", corpus("rz"), "0,1"}).out);
  CHECK(run({"verify", corpus("rz"), dec}).code == cli::ok);
  std::string const per = write_temp("per.json", run({"periodic", corpus("rz"), "0,1"}).out);
  CHECK(run({"verify", corpus("rz"), per}).code == cli::ok);

  json tampered = json::parse(first.out);
  tampered["e"] = 0;
  CHECK(run({"verify", corpus("rz"), write_temp("bad.json", tampered.dump())}).code == cli::refuted);
  tampered = json::parse(first.out);
  tampered["hwit"]["r"]["fwd_proof"]["steps"] = json::array();
  CHECK(run({"verify", corpus("rz"), write_temp("bad2.json", tampered.dump())}).code
        == cli::refuted);
  tampered = json::parse(first.out);
  tampered.erase("hwit");
  CHECK(run({"verify", corpus("rz"), write_temp("bad3.json", tampered.dump())}).code
        == cli::refuted);
  CHECK(run({"verify", corpus("rz"), write_temp("junk.json", "{not json")}).code
        == cli::input_error);
}

TEST_CASE("certify stops with unknown when no period is found") {
  Result const r = run({"--max-nodes", "500", "--power-cap", "3", "certify", corpus("rb22"), "0,3"});
  CHECK(r.code == cli::unknown);
  CHECK(json::parse(r.out)["verdict"] == "unknown");
}

TEST_CASE("input errors exit with 3") {
  CHECK(run({"extract", "/nonexistent.sg"}).code == cli::input_error);
  CHECK(run({"equiv", corpus("rz"), "0,9", "1"}).code == cli::input_error);
  CHECK(run({"equiv", corpus("rz"), "0,x", "1"}).code == cli::input_error);
  CHECK(run({"equiv", corpus("rz"), "0"}).code == cli::input_error);
  CHECK(run({"frobnicate"}).code == cli::input_error);
  CHECK(run({"--format", "xml", "extract", corpus("rz")}).code == cli::input_error);
  CHECK(run({"--power-cap", "1", "periodic", corpus("rz"), "0"}).code == cli::input_error);
  CHECK(run({"--max-nodes", "0", "equiv", corpus("rz"), "0", "1"}).code == cli::input_error);

  Result const bad = run({"extract", write_temp("bad.sg", "kind cayley\norder 2\nrow 0: 0 1\nrow 1: 0 x\n")});
  CHECK(bad.code == cli::input_error);
  CHECK(bad.err.find("line 4") != std::string::npos);
  CHECK(run({"--help"}).code == cli::ok);
}
