#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hrlab_cli/cli.hpp"
#include "hrlab_cli/report.hpp"

using namespace hrlab::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hrlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(HRLAB_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(invoke({"verify", "--check", "ramanujan", "--order", "50"}).code == 0);
  CHECK(invoke({"verify", "--check", "ramanujan", "--order", "-3"}).code == 2);
  CHECK(invoke({"verify", "--check", "nonsense"}).code == 2);
  CHECK(invoke({"verify", "--bogus-flag"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"hilbert", "--d", "4", "--check", "h-map"}).code == 2);
  CHECK(invoke({"periods", "--g", "1", "--tau", "[0,-1]"}).code == 2);
  CHECK(invoke({"periods", "--g", "1", "--tau", "not json"}).code == 2);
  CHECK(invoke({"flow", "--to", "[0,-1]"}).code == 2);
  // A failing verification: the step is too coarse for the default bound.
  CHECK(invoke({"flow", "--step", "0.05"}).code == 1);
  CHECK(invoke({"twist-check", "--tau", "[0,1.2]", "--h", "0.05"}).code == 1);
}

TEST_CASE("documented outputs") {
  const auto e = invoke({"eisenstein", "--k", "4", "--order", "2", "--json"});
  CHECK(e.code == 0);
  CHECK(e.out.find(R"("terms":[[[0],"1"],[[1],"240"],[[2],"2160"]])") != std::string::npos);

  const auto human = invoke({"verify", "--check", "chazy", "--order", "20"});
  CHECK(human.out.rfind("PASS", 0) == 0);
  CHECK(std::count(human.out.begin(), human.out.end(), '\n') == 1);
  const auto fail = invoke({"flow", "--step", "0.05"});
  CHECK(fail.out.rfind("FAIL", 0) == 0);
}

TEST_CASE("golden files") {
  CHECK(invoke({"eisenstein", "--k", "6", "--order", "5", "--json"}).out == golden("eisenstein_k6_n5.json"));
  CHECK(invoke({"verify", "--check", "gm-contract", "--json"}).out == golden("verify_gm_contract.json"));
  CHECK(invoke({"verify", "--check", "delta-transfer", "--json"}).out == golden("verify_delta_transfer.json"));
  CHECK(invoke({"hilbert", "--d", "5", "--check", "qexp-map", "--json"}).out == golden("hilbert_d5_qexp.json"));
  CHECK(invoke({"verify", "--check", "j-relation", "--order", "10", "--json"}).out ==
        golden("verify_j_relation_10.json"));
}

TEST_CASE("determinism and roundtrip") {
  const std::vector<std::string> args{"--seed", "7", "density", "--delta", "J", "--json"};
  const auto a = invoke(args), b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(invoke({"--seed", "8", "density", "--delta", "J", "--json"}).out != a.out);

  const auto periods = invoke({"periods", "--g", "2", "--tau", "[[[0.1,1],[0.2,0.1]],[[0.2,0.1],[0,2]]]", "--json"});
  CHECK(periods.code == 0);
  const auto parsed = report_from_json(nlohmann::json::parse(periods.out));
  CHECK(emit_json(to_json(parsed)) + "\n" == periods.out);
  CHECK(parsed.pass == true);
  CHECK(parsed.payload.contains("Pi"));

  CHECK(invoke({"--timing", "verify", "--check", "chazy", "--order", "5", "--json"}).out.find("wall_time_s") !=
        std::string::npos);
  CHECK(invoke({"verify", "--check", "chazy", "--order", "5", "--json"}).out.find("wall_time_s") == std::string::npos);
}

TEST_CASE("emitter formatting") {
  CHECK(emit_json(nlohmann::json{{"b", 1.0}, {"a", 0.1}}) == R"({"a":0.10000000000000001,"b":1.0})");
  CHECK(emit_json(nlohmann::json::array({1, "x", nullptr, true})) == R"([1,"x",null,true])");
}

TEST_CASE("every subcommand runs") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {"verify", "--check", "all", "--order", "30"},
           {"periods", "--g", "1", "--tau", "[0,1]", "--delta", "[[0,1],[-1,0]]"},
           {"flow", "--chart", "b"},
           {"twist-check", "--delta", "[[0,1],[-1,0]]", "--tau", "[1,2]"},
           {"leaf", "--tau", "[0.3,1.7]", "--delta", "[[0,1],[-1,0]]"},
           {"density"},
           {"hilbert", "--d", "13", "--check", "period-compat", "--tau", "[[0.2,1.1],[-0.4,0.7]]"},
           {"hilbert", "--d", "2", "--check", "dual-bases"},
           {"hilbert", "--d", "3", "--check", "iota"},
       }) {
    const auto r = invoke(args);
    INFO(args[0]);
    INFO(r.out);
    INFO(r.err);
    CHECK(r.code == 0);
  }
}
