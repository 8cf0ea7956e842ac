#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "nestrep/io.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(NESTREP_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string fixture(const char* name) { return std::string(NESTREP_FIXTURE_DIR) + "/" + name + ".graph"; }

struct TempDir {
  std::filesystem::path path = std::filesystem::temp_directory_path() / "nestrep_cli_test";
  TempDir() { std::filesystem::create_directories(path); }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string write(const char* name, const std::string& text) const {
    nestrep::write_text_file(path / name, text);
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("classify") {
  const auto r = run("--json classify " + fixture("case_three"));
  CHECK(r.status == 0);
  const auto j = nestrep::parse_json(r.out);
  CHECK(j.at("schema_version") == 1);
  CHECK(j.at("n_nest").at("case") == "Three");
  CHECK(j.at("faithful_nest").at("holds") == true);
  CHECK(run("classify " + fixture("mixed")).out.find("radical generators     v w") != std::string::npos);
}

TEST_CASE("exit codes") {
  TempDir tmp;
  const auto zero = tmp.write("zero.json", R"({"terms":[]})");
  const auto elem = tmp.write("el.json", R"({"terms":[{"coeff":[1,0],"vertex":"x"}]})");
  CHECK(run("classify " + fixture("bad")).status == 2);
  CHECK(run("classify /nonexistent.graph").status == 3);
  CHECK(run("separate " + fixture("p2") + " " + zero).status == 4);
  CHECK(run("separate --family irreducible " + fixture("mixed") + " " + elem).status == 5);
  CHECK(run("rep " + fixture("c3") + " nnest").status == 5);
  CHECK(run("rep " + fixture("c3") + " phi --cycle e1,zz").status == 2);
  CHECK(run("rep " + fixture("c3") + " phi --cycle e1,e2").status == 5);
  CHECK(run("bogus").status == 2);
  CHECK(run("separate " + fixture("p2") + " " + elem).status == 0);
}

TEST_CASE("recover and separate") {
  TempDir tmp;
  const auto elem = tmp.write("el.json", R"({"terms":[{"coeff":[2,0],"path":["c","v","l"]},)"
                                         R"({"coeff":[0,1],"vertex":"x"},{"coeff":[1,-1],"path":["a","a"]}]})");
  const auto g = fixture("mixed");
  CHECK(run("recover " + g + " " + elem + " c,v,l").out == "2 0\n");
  const auto j = nestrep::parse_json(run("--json recover " + g + " " + elem + " a,a").out);
  CHECK(std::abs(j.at("coefficient")[0].get<double>() - 1.0) < 1e-10);
  CHECK(std::abs(j.at("coefficient")[1].get<double>() + 1.0) < 1e-10);
  CHECK(j.at("agrees") == true);

  const auto psi = nestrep::parse_json(
      run("--json rep " + fixture("loop_rich") + " psi --path e,k --lambda-arg 0.1,0.2,0.3").out);
  CHECK(psi.at("algebra_dimension") == 6);
  CHECK(psi.at("relations").at("row_contractive") == true);

  const auto emitted = (tmp.path / "rep.json").string();
  const auto s = run("--json separate " + g + " " + elem + " --emit " + emitted);
  CHECK(s.status == 0);
  const auto w = nestrep::parse_json(s.out);
  CHECK(w.at("value").get<double>() >= 1e-10);
  CHECK(std::filesystem::exists(emitted));
}

TEST_CASE("repeated runs are byte identical") {
  TempDir tmp;
  const auto elem = tmp.write("el.json", R"({"terms":[{"coeff":[1,0.5],"path":["f","e"]},{"coeff":[-1,0],"path":["m"]}]})");
  const std::vector<std::string> commands = {
      "--json classify " + fixture("loop_rich"),
      "--json --seed 7 rep " + fixture("p2") + " nnest --prefix-len 5",
      "--json rep " + fixture("loop_rich") + " psi --path e,k --lambda-arg 0.1,0.2,0.3",
      "--json rep " + fixture("mixed") + " rho --path c,v,l --lambda-arg 0.25,0.5",
      "--json rep " + fixture("c3") + " phi --cycle e1,e2,e3 --lambda-arg 0.25",
      "--json separate --family upper " + fixture("loop_rich") + " " + elem,
      "--json radical " + fixture("loop_rich") + " --element " + elem,
  };
  for (const auto& c : commands) {
    CAPTURE(c);
    const auto a = run(c), b = run(c);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  CHECK(run("--json --seed 1 rep " + fixture("p2") + " nnest").out !=
        run("--json --seed 2 rep " + fixture("p2") + " nnest").out);
}
