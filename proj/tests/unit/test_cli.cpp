#include "ivagg/cli.hpp"
#include "ivagg/json_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace ivagg;

namespace {

std::string data(std::string const &name)
{
  return std::string(IVAGG_TEST_DATA) + "/" + name;
}

struct Run
{
  int         code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args)
{
  std::ostringstream out, err;
  int const          code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(std::string const &name)
{
  return std::filesystem::temp_directory_path() / ("ivagg_test_" + name);
}

}  // namespace

TEST_CASE("aggregate")
{
  auto r = run({"aggregate", "--rule", "endpoint:2,2", "--profile", data("three_agents.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"lo\":2,\"hi\":5}\n");

  r = run({"aggregate", "--rule", "median", "--profile", data("median_example.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"lo\":2,\"hi\":5}\n");

  r = run({"aggregate", "--rule", "endpoint:3,3", "--profile", data("three_agents.json")});
  CHECK(r.code == 3);
  CHECK_FALSE(r.err.empty());

  CHECK(run({"aggregate", "--rule", "median", "--profile", data("truncated.json")}).code == 2);
  CHECK(run({"aggregate", "--rule", "median", "--profile", data("inverted.json")}).code == 2);
  CHECK(run({"aggregate", "--rule", "bogus", "--profile", data("three_agents.json")}).code == 2);
  CHECK(run({"aggregate", "--rule", "phantoms:" + data("phantoms_bad.json"), "--profile", data("three_agents.json")}).code ==
        3);
  CHECK(run({"aggregate", "--rule", "phantoms:" + data("phantoms_median3.json"), "--profile", data("three_agents.json")})
            .out == "{\"lo\":2,\"hi\":5}\n");
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"aggregate"}).code == 2);
}

TEST_CASE("audit command")
{
  auto const path = temp_file("report.json").string();
  auto       r    = run({"audit", "--rule", "endpoint:1,2", "--n", "4", "--samples", "500", "--seed", "7", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("report: " + path) != std::string::npos);
  auto const j = read_json_file(path);
  CHECK(j["compliant"] == true);
  CHECK(j["seed"] == 7);

  r = run({"audit", "--rule", "averaging", "--n", "3", "--samples", "500", "--seed", "7", "--out", path});
  CHECK(r.code == 1);
  CHECK(r.out.find("WeakNeutrality") != std::string::npos);
  CHECK(r.out.find("OutBetweenness") != std::string::npos);

  r = run({"audit", "--samples", "0", "--out", path});
  CHECK(r.code == 0);

  CHECK(run({"audit", "--axioms", "Nonsense", "--out", path}).code == 2);
  CHECK(run({"audit", "--rule", "endpoint:3,3", "--n", "3", "--out", path}).code == 3);
  CHECK(run({"audit", "--axioms", "Anonymity,Unanimity", "--samples", "10", "--out", path}).code == 0);

  // Bit-reproducible given the seed.
  auto const other = temp_file("report2.json").string();
  run({"audit", "--rule", "averaging", "--samples", "100", "--seed", "5", "--axioms", "all", "--out", path});
  run({"audit", "--rule", "averaging", "--samples", "100", "--seed", "5", "--axioms", "all", "--out", other});
  CHECK(read_json_file(path).dump() == read_json_file(other).dump());
  std::filesystem::remove(path);
  std::filesystem::remove(other);
}

TEST_CASE("identify command")
{
  auto r = run({"identify", "--rule", "median", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("(3,3)") != std::string::npos);
  CHECK(r.out.find("staircase") != std::string::npos);

  r = run({"identify", "--rule", "maximal", "--n", "4"});
  CHECK(r.out.find("(1,1)") != std::string::npos);

  r = run({"identify", "--rule", "averaging", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("not an endpoint rule") != std::string::npos);

  CHECK(run({"identify", "--rule", "median", "--n", "0"}).code != 0);
}

TEST_CASE("manipulate command")
{
  auto r = run({"manipulate", "--rule", "averaging", "--profile", data("two.json"), "--agent", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("found", 0) == 0);
  CHECK(r.out.find("misreport") != std::string::npos);

  r = run({"manipulate", "--rule", "endpoint:2,2", "--profile", data("three_agents.json"), "--agent", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("not found", 0) == 0);

  CHECK(run({"manipulate", "--rule", "median", "--profile", data("three_agents.json"), "--agent", "9"}).code == 2);
  CHECK(run({"manipulate", "--rule", "median", "--profile", data("three_agents.json"), "--agent", "1", "--pref", "l1:0,1"})
            .code == 2);
  CHECK(run({"manipulate", "--rule", "averaging", "--profile", data("two.json"), "--agent", "1", "--pref",
             "penalty:5,6"})
            .code == 0);
}

TEST_CASE("sweep command")
{
  auto const csv = temp_file("sweep.csv").string();
  auto       r   = run({"sweep", "--profile", data("three_agents.json"), "--out", csv});
  CHECK(r.code == 0);
  std::ifstream      in(csv);
  std::stringstream  ss;
  ss << in.rdbuf();
  std::string const text = ss.str();
  CHECK(text.rfind("p,q,lo,hi\n", 0) == 0);
  CHECK(text.find("1,1,1,6\n") != std::string::npos);
  CHECK(text.find("1,3,1,4\n") != std::string::npos);
  CHECK(text.find("2,2,2,5\n") != std::string::npos);
  std::filesystem::remove(csv);

  r = run({"sweep", "--profile", data("single.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("(0, 1)") != std::string::npos);

  CHECK(run({"sweep", "--profile", data("truncated.json")}).code == 2);
}
