#include "ctl/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = ctl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "ctl_unit";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("generate, validate and excess") {
  auto spg = tmp("closed3.spg");
  CHECK(run({"gen", "closed", "--n", "3", "--q", "3", "--out", spg}).code == 0);
  auto v = run({"validate", "--in", spg});
  CHECK(v.code == 0);
  auto m = run({"mean-excess", "--in", spg, "--base", "v0", "--jmax", "4"});
  CHECK(m.code == 0);
  CHECK(m.out.rfind("j,n_j,partial_mean_num,partial_mean_den", 0) == 0);
  CHECK(m.out.find(",2,3\n") != std::string::npos);
}

TEST_CASE("certify t2 with a singleton partition") {
  auto spg = tmp("psc.spg");
  REQUIRE(run({"gen", "punctured-sphere-cover", "--q", "3", "--radius", "2", "--out", spg}).code == 0);
  std::ifstream in(spg);
  std::ostringstream gpt;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string rec, id;
    ls >> rec >> id;
    if (rec == "v") gpt << "piece " << id << " " << id << "\n";
  }
  auto gpt_path = tmp("psc.gpt");
  std::ofstream(gpt_path) << gpt.str();
  auto r = run({"certify", "t2", "--in", spg, "--partition", gpt_path, "--eps", "1", "--M", "1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "hyperbolic");
  CHECK(run({"certify", "t2", "--in", spg, "--partition", gpt_path, "--eps", "2", "--M", "1"}).code == 2);
}

TEST_CASE("tiling checks and exit codes") {
  auto tlg = tmp("d7.tlg");
  REQUIRE(run({"gen", "tiling", "--d", "7", "--radius", "2", "--out", tlg}).code == 0);
  CHECK(run({"check-tiling", "--in", tlg, "--eps", "0.14", "--M", "1"}).code == 0);
  CHECK(run({"check-tiling", "--in", tlg, "--eps", "0.5", "--M", "1"}).code == 2);
  CHECK(run({"check-tiling", "--in", tlg, "--eps", "0.1", "--M", "2", "--theorem", "clusters"}).code == 0);
}

TEST_CASE("input errors exit 1") {
  CHECK(run({"validate", "--in", "/nonexistent/file.spg"}).code == 1);
  auto bad = tmp("bad.spg");
  std::ofstream(bad) << "spg 1 q=3\nv a square\n";
  auto r = run({"validate", "--in", bad});
  CHECK(r.code == 1);
  CHECK(r.err.find("error:") != std::string::npos);
  CHECK(run({"no-such-verb"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("numeric verbs") {
  auto r = run({"rqe", "--q", "2", "--eps", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1.2309594173") != std::string::npos);
  CHECK(run({"identity", "--q", "3", "--m", "2,3,5"}).code == 0);
  CHECK(run({"constants", "--eps-pi", "1/6", "--M", "1", "--k", "0"}).code == 0);
  CHECK(run({"rqe", "--q", "3", "--eps", "5"}).code == 1);
}
