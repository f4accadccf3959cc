#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "entax/io.hpp"
#include "entax/schmidt.hpp"

using namespace entax;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "entax_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args, const std::string& env = {}) {
  const fs::path out_file = scratch_dir() / "stdout.txt";
  std::string cmd = env.empty() ? std::string() : env + " ";
  cmd += std::string(ENTAX_CLI_PATH) + " " + args + " > " +
         out_file.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::string write_probs(const std::string& name, std::vector<double> probs) {
  const fs::path p = scratch_dir() / name;
  json j;
  j["probs"] = probs;
  std::ofstream(p) << j.dump();
  return p.string();
}

}  // namespace

TEST_CASE("state files round-trip through io") {
  SchmidtVector v({0.5, 0.3, 0.2});
  const fs::path p = scratch_dir() / "roundtrip.json";
  save_state(v, p.string());
  SchmidtVector back = load_state(p.string());
  CHECK(back.probs() == v.probs());
}

TEST_CASE("io parses amplitude form and rejects malformed files") {
  json amp_form;
  amp_form["amps"] = {{{{"re", std::sqrt(0.5)}, {"im", 0.0}},
                       {{"re", 0.0}, {"im", 0.0}}},
                      {{{"re", 0.0}, {"im", 0.0}},
                       {{"re", 0.0}, {"im", std::sqrt(0.5)}}}};
  SchmidtVector v = parse_state(amp_form);
  REQUIRE(v.rank() == 2);
  CHECK(v.probs()[0] == doctest::Approx(0.5).epsilon(1e-10));

  CHECK_THROWS_AS(parse_state(json::object()), ParseError);
  CHECK_THROWS_AS(parse_state(json{{"probs", {0.9, 0.2}}}), ParseError);
  CHECK_THROWS_AS(load_state((scratch_dir() / "missing.json").string()),
                  ParseError);
  const fs::path garbage = scratch_dir() / "garbage.json";
  std::ofstream(garbage) << "not json at all {";
  CHECK_THROWS_AS(load_state(garbage.string()), ParseError);
}

TEST_CASE("convert-check exit codes and output") {
  const std::string a = write_probs("a.json", {0.4, 0.4, 0.1, 0.1});
  const std::string b = write_probs("b.json", {0.5, 0.25, 0.25});
  const std::string cat = write_probs("cat.json", {0.6, 0.4});
  const std::string anc = write_probs("anc.json", {0.25, 0.25, 0.25, 0.25});

  RunResult blocked = run_cli("convert-check " + a + " " + b);
  CHECK(blocked.exit_code == 1);
  json jb = json::parse(blocked.out);
  CHECK_FALSE(jb.at("convertible").get<bool>());
  CHECK(jb.at("failing_prefix").get<int>() == 2);
  CHECK(jb.at("margin").get<double>() == doctest::Approx(-0.05));

  RunResult enabled =
      run_cli("convert-check " + a + " " + b + " --catalyst " + cat);
  CHECK(enabled.exit_code == 0);
  json je = json::parse(enabled.out);
  CHECK(je.at("convertible").get<bool>());
  CHECK(je.at("failing_prefix").is_null());

  RunResult fine = run_cli("convert-check " + anc + " " + b);
  CHECK(fine.exit_code == 0);
}

TEST_CASE("convert-check input errors exit 2") {
  const std::string a = write_probs("a2.json", {0.5, 0.5});
  CHECK(run_cli("convert-check " + a).exit_code == 2);  // missing positional
  CHECK(run_cli("convert-check " + a + " /nonexistent/b.json").exit_code == 2);
  const fs::path bad = scratch_dir() / "bad.json";
  std::ofstream(bad) << "{\"probs\": [0.9, 0.3]}";  // sum off by far
  CHECK(run_cli("convert-check " + a + " " + bad.string()).exit_code == 2);
  CHECK(run_cli("no-such-subcommand").exit_code == 2);
}

TEST_CASE("catalyst-search subcommand") {
  const std::string a = write_probs("a3.json", {0.4, 0.4, 0.1, 0.1});
  const std::string b = write_probs("b3.json", {0.5, 0.25, 0.25});
  RunResult found = run_cli("catalyst-search " + a + " " + b +
                            " --max-dim 2 --grid-points 101");
  CHECK(found.exit_code == 0);
  json jf = json::parse(found.out);
  CHECK(jf.at("found").get<bool>());
  CHECK(jf.at("spectrum").is_array());
  CHECK(jf.at("evaluations").get<std::uint64_t>() > 0);

  const std::string prod = write_probs("prod.json", {1.0});
  const std::string epr = write_probs("epr.json", {0.5, 0.5});
  RunResult none = run_cli("catalyst-search " + prod + " " + epr);
  CHECK(none.exit_code == 1);
  CHECK_FALSE(json::parse(none.out).at("found").get<bool>());
}

TEST_CASE("rate-frontier CSV shape") {
  const std::string a = write_probs("a4.json", {0.9, 0.1});
  const std::string e = write_probs("e4.json", {0.5, 0.5});
  RunResult r = run_cli("rate-frontier --a " + a + " --e " + e +
                        " --nmax 6 --eps 0 --direction dilution");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string header;
  REQUIRE(std::getline(lines, header));
  CHECK(header == "n,m,m_over_n,direction,epsilon,entropy_ref,budget_exceeded");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    ++rows;
    std::istringstream cells(line);
    std::string n_cell, m_cell;
    REQUIRE(std::getline(cells, n_cell, ','));
    REQUIRE(std::getline(cells, m_cell, ','));
    CHECK(std::stoi(n_cell) == rows);
    CHECK(std::stoi(m_cell) == rows);  // exact dilution wall m = n
  }
  CHECK(rows == 6);

  CHECK(run_cli("rate-frontier --a " + a + " --e " + e +
                " --direction sideways")
            .exit_code == 2);
}

TEST_CASE("estimate-e subcommand") {
  const std::string a = write_probs("a5.json", {0.25, 0.25, 0.25, 0.25});
  const std::string e = write_probs("e5.json", {0.5, 0.5});
  RunResult r = run_cli("estimate-e --a " + a + " --e " + e + " --n 6");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("m_over_n").get<double>() == doctest::Approx(2.0));
  CHECK(j.at("entropy_ref").get<double>() == doctest::Approx(2.0));
}

TEST_CASE("internal-check subcommand and budget exit code") {
  const std::string e = write_probs("e6.json", {0.5, 0.5});
  const std::string x = write_probs("x6.json", {0.5, 0.3, 0.2});
  RunResult r = run_cli("internal-check --e " + e + " --x " + x + " --nmax 8");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("contained").get<bool>());
  CHECK(j.at("minimal_n").get<int>() == 2);

  const std::string prod = write_probs("prod6.json", {1.0});
  RunResult neg =
      run_cli("internal-check --e " + prod + " --x " + e + " --nmax 4");
  CHECK(neg.exit_code == 1);

  RunResult blown = run_cli(
      "internal-check --e " + e + " --x " + x + " --nmax 8", "ENTAX_BUDGET=2");
  CHECK(blown.exit_code == 3);
}

TEST_CASE("multipartite-demo always reports the full structure") {
  RunResult r = run_cli("multipartite-demo");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("b_to_c_obstructed").get<bool>());
  CHECK(j.at("c_to_b_obstructed").get<bool>());
  CHECK_FALSE(j.at("ghz_to_b_obstructed").get<bool>());
  CHECK_FALSE(j.at("ghz_to_c_obstructed").get<bool>());
}

TEST_CASE("axiom-suite smoke run with reduced sampling") {
  RunResult r = run_cli(
      "axiom-suite --samples 60 --dims 3 --n 8 --asymptotic-samples 2 "
      "--spectator-samples 1 --schur-pairs 100");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("must_pass_clean").get<bool>());
  CHECK(j.at("reports").is_array());
  CHECK_FALSE(j.at("reports").empty());
}

TEST_CASE("--out and --manifest write files; identical runs match") {
  const std::string a = write_probs("a7.json", {0.4, 0.4, 0.1, 0.1});
  const std::string b = write_probs("b7.json", {0.5, 0.25, 0.25});
  const fs::path out1 = scratch_dir() / "v1.json";
  const fs::path out2 = scratch_dir() / "v2.json";
  const fs::path man = scratch_dir() / "manifest.json";

  RunResult r1 = run_cli("convert-check " + a + " " + b + " --out " +
                         out1.string() + " --manifest " + man.string());
  CHECK(r1.exit_code == 1);
  RunResult r2 =
      run_cli("convert-check " + a + " " + b + " --out " + out2.string());
  CHECK(r2.exit_code == 1);

  std::ifstream f1(out1), f2(out2);
  std::ostringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
  CHECK_FALSE(s1.str().empty());

  json m = json::parse(std::ifstream(man));
  CHECK(m.at("subcommand").get<std::string>() == "convert-check");
  CHECK(m.contains("version"));
  CHECK(m.contains("wall_clock_seconds"));
  const auto& inputs = m.at("inputs");
  REQUIRE(inputs.contains(a));
  CHECK(inputs.at(a).get<std::string>().size() == 64);
}
