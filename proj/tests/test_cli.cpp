#include <catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "conjcheck/arcs.hpp"
#include "conjcheck/commands.hpp"
#include "conjcheck/description.hpp"
#include "conjcheck/report.hpp"

using namespace conjcheck;

namespace {

  std::string const data = CONJCHECK_DATA_DIR;
  std::string const cli  = CONJCHECK_CLI;

  struct Run {
    int         status = -1;
    std::string out;
  };

  Run run(std::string const& args) {
    std::string cmd = "'" + cli + "' " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
      r.out.append(buf.data(), n);
    }
    int st   = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

  std::string file(std::string const& name) {
    return "'" + data + "/" + name + "'";
  }

  bool has(std::string const& text, std::string const& needle) {
    return text.find(needle) != std::string::npos;
  }

  // The first "witness TOKEN" in a report.
  std::string first_witness(std::string const& text) {
    auto pos = text.find("witness ");
    REQUIRE(pos != std::string::npos);
    pos += 8;
    return text.substr(pos, text.find(' ', pos) - pos);
  }

  std::string line_starting(std::string const& text, std::string const& prefix) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (line.rfind(prefix, 0) == 0) {
        return line;
      }
    }
    return {};
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream is(p);
    return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
  }

}  // namespace

TEST_CASE("description errors") {
  CHECK_THROWS_AS(parse_json_text("{\"kind\": ", "x"), ParseError);
  CHECK_THROWS_AS(read_json_file(data + "/missing.json"), IoError);
  CHECK_THROWS_AS(read_json_file(data + "/not-json.json"), ParseError);

  auto table = parse_json_text(R"({"kind": "finite", "name": "T", "elements": ["a", "b"],
                                   "op": [["a", "b"], ["b", "c"]]})", "t");
  CHECK_THROWS_AS(finite_from_json(table), TableError);
  table["op"] = Json::array({Json::array({"a", "b"})});
  CHECK_THROWS_AS(finite_from_json(table), TableError);
  table["op"] = Json::array({Json::array({"a", "b"}), Json::array({"b", "a"})});
  table["conj"] = Json::array({"a"});
  CHECK_THROWS_AS(finite_from_json(table), TableError);
  table.erase("conj");
  auto T = finite_from_json(table);
  CHECK(T.size() == 2);
  CHECK(T.show(T.add(1, 1)) == "a");

  CHECK_THROWS_AS(structure_from_json(parse_json_text(R"({"kind": "builder", "name": "nope"})", "t")),
                  ParseError);
  CHECK_THROWS_AS(structure_from_json(parse_json_text(R"({"kind": "other"})", "t")), ParseError);

  auto Q  = quaternion_group();
  auto Q2 = finite_from_json(finite_to_json(Q));
  REQUIRE(Q2.size() == 8);
  for (auto a : Q.elements()) {
    CHECK(Q2.show(Q2.conj(a)) == Q.show(Q.conj(a)));
    for (auto b : Q.elements()) {
      CHECK(Q2.show(Q2.add(a, b)) == Q.show(Q.add(a, b)));
    }
  }
}

TEST_CASE("exit status follows the row roles") {
  auto ex  = EnumerationPlan::exhaustive();
  auto bad = Verdict::failure("x", "x = y", {"0"}, "1 != 0");
  auto ok  = Verdict::holds(ex, 3);

  Session conditions("c", ex);
  conditions.row("cond", "a", bad, RowRole::condition);
  conditions.row("xfail", "a", bad, RowRole::expected_fail);
  auto r1 = conditions.finish();
  CHECK(r1.exit_status() == 0);
  CHECK(r1.rows[0].status() == "fails");
  CHECK(r1.rows[1].status() == "expected-fail");

  Session regression("r", ex);
  regression.row("xfail", "a", ok, RowRole::expected_fail);
  auto r2 = regression.finish();
  CHECK(r2.exit_status() == 1);
  CHECK(r2.rows[0].status() == "REGRESSION");

  Session law("l", ex);
  law.row("law", "a", bad);
  CHECK(law.finish().exit_status() == 1);

  Session err("e", ex);
  err.row("law", "a", ok);
  err.error("boom");
  auto r4 = err.finish();
  CHECK(r4.exit_status() == 2);
  std::ostringstream os;
  r4.print(os);
  CHECK(has(os.str(), "error: boom"));
  CHECK(has(os.str(), "result: input error (exit 2)"));

  Session replay("p", ex, std::string("nothing:0"));
  CHECK(replay.finish().exit_status() == 2);

  CHECK(effective_plan(std::nullopt, true, 4).mode == PlanMode::exhaustive);
  auto s = effective_plan(std::nullopt, false, 4);
  CHECK(s.mode == PlanMode::sampled);
  CHECK(s.count == 1000);
  CHECK(s.seed == 4);
}

TEST_CASE("verify") {
  auto h = run("verify " + file("hurwitz.json"));
  CHECK(h.status == 0);
  CHECK(has(h.out, "24 elements"));
  CHECK_FALSE(has(h.out, "FAIL"));

  auto b = run("verify " + file("broken-axiom.json"));
  CHECK(b.status == 1);
  CHECK(has(b.out, "witness conj-antihom:0|0"));

  auto e = run("verify " + file("empty.json"));
  CHECK(e.status == 0);
  CHECK(has(e.out, "vacuous"));
}

TEST_CASE("schreier") {
  for (auto const* name : {"z3-x-z2.json", "z3-sd-z2.json", "quaternion-crossed.json"}) {
    INFO(name);
    auto r = run("schreier " + file(name));
    CHECK(r.status == 0);
  }
  auto m = run("schreier " + file("max-chain.json"));
  CHECK(m.status == 1);
  CHECK(has(m.out, "2 decompositions 0 1"));
}

TEST_CASE("classify") {
  auto q = run("classify " + file("q8-over-trivial.json"));
  CHECK(q.status == 0);
  CHECK(has(q.out, "classification PrecrossedSemimodule"));
  CHECK(has(q.out, "witness crossed:i|j"));

  auto z = run("classify " + file("z3-identity.json"));
  CHECK(z.status == 0);
  CHECK(has(z.out, "classification CrossedModule"));

  auto e = run("classify " + file("quaternion-crossed.json"));
  CHECK(e.status == 0);
  CHECK(has(e.out, "classification CrossedSemimodule"));
}

TEST_CASE("admissible") {
  auto z = run("admissible " + file("z4-diagram.json"));
  CHECK(z.status == 0);
  CHECK(has(z.out, "verdict Admissible; oracle agrees"));

  auto s = run("admissible " + file("s3-diagram.json"));
  CHECK(s.status == 0);
  CHECK(has(s.out, "verdict NotAdmissible; oracle agrees"));

  auto t = run("admissible " + file("trivial-diagram.json"));
  CHECK(t.status == 0);
  CHECK(has(t.out, "verdict Admissible"));
}

TEST_CASE("printed witnesses replay to the same verdict") {
  auto b     = run("verify " + file("broken-axiom.json"));
  auto token = first_witness(b.out);
  CHECK(token == "conj-antihom:0|0");
  auto r = run("verify " + file("broken-axiom.json") + " --replay '" + token + "'");
  CHECK(r.status == 1);
  CHECK(has(r.out, "witness " + token + " [1 != 0]"));

  auto q  = run("classify " + file("q8-over-trivial.json"));
  auto qt = first_witness(q.out);
  auto qr = run("classify " + file("q8-over-trivial.json") + " --replay '" + qt + "'");
  CHECK(qr.status == 0);
  CHECK(has(qr.out, "witness " + qt + " [k != -k]"));

  auto m  = run("schreier " + file("max-chain.json"));
  auto mt = first_witness(m.out);
  auto mr = run("schreier " + file("max-chain.json") + " --replay '" + mt + "'");
  CHECK(mr.status == 1);
  CHECK(has(mr.out, "witness " + mt));
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("verify " + file("not-json.json")).status == 2);
  CHECK(run("verify " + file("missing.json")).status == 2);
  CHECK(run("verify " + file("hurwitz.json") + " --plan sampled=0").status == 2);
  CHECK(run("verify " + file("hurwitz.json") + " --replay nope:0").status == 2);
  CHECK(run("verify " + file("hurwitz.json") + " --bogus").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("--out writes the report") {
  auto path = std::filesystem::temp_directory_path() / "conjcheck_report.txt";
  auto r    = run("verify " + file("hurwitz.json") + " --out '" + path.string() + "'");
  CHECK(r.status == 0);
  CHECK(slurp(path) == r.out);
  std::filesystem::remove(path);
}

TEST_CASE("demo-arcs writes a file that validates") {
  auto path = std::filesystem::temp_directory_path() / "conjcheck_arcs_cli.json";
  auto r    = run("demo-arcs --count 1000 --seed 3 --out '" + path.string() + "'");
  CHECK(r.status == 0);
  CHECK(has(r.out, "([0,-2], [0,1])"));
  CHECK(has(r.out, "out of carrier"));
  auto records = read_arc_file(path.string());
  CHECK(records.size() == 1000);
  CHECK(validate_arcs(records).passed());
  std::filesystem::remove(path);
}

TEST_CASE("the gallery outcome does not depend on seed or plan") {
  auto base = run("gallery --seed 1");
  REQUIRE(base.status == 0);
  auto matrix = line_starting(base.out, "matrix:");
  REQUIRE_FALSE(matrix.empty());
  CHECK(has(matrix, "xfail"));
  CHECK_FALSE(has(matrix, "FAIL"));
  for (auto const* args : {"gallery --seed 2", "gallery --seed 3", "gallery --plan exhaustive"}) {
    INFO(args);
    auto r = run(args);
    CHECK(r.status == 0);
    CHECK(line_starting(r.out, "matrix:") == matrix);
    CHECK(line_starting(r.out, "result:") == line_starting(base.out, "result:"));
  }
}
