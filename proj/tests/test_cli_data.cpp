#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsym/dataset.hpp"
#include "qsym/error.hpp"

using namespace qsym;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qsym_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(QSYM_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

DatasetConfig small_config() {
  return parse_dataset_config(Json::parse(R"({
    "name": "small", "seed": 5, "restarts": 6, "p_cap": 12,
    "families": [
      {"family": "complete", "n": [3, 12]},
      {"family": "cycle", "n": [3, 8]},
      {"family": "random-regular", "n": [8, 8], "append": [3], "instances": 2}
    ]})"));
}

}  // namespace

TEST_CASE("dataset config parsing") {
  const auto c = small_config();
  CHECK(c.name == "small");
  CHECK(c.seed == 5);
  CHECK(c.pmin.restarts == 6);
  CHECK(c.pmin.p_cap == 12);
  CHECK(c.pmin.target_ratio == 0.95);
  CHECK(c.pmin.p_start == 2);
  REQUIRE(c.families.size() == 3);
  CHECK(c.families[0].params.size() == 10);
  CHECK(c.families[2].params[0] == std::vector<std::int64_t>{8, 3});
  const auto specs = expand_instances(c);
  CHECK(specs.size() == 18);
  CHECK(specs[0].id == "complete:3");
  CHECK(specs[16].id == "random-regular:8x3:0");
  CHECK(specs[17].id == "random-regular:8x3:1");
  CHECK(specs[16].family.seed != specs[17].family.seed);
  CHECK(expand_instances(c)[5].family.seed == specs[5].family.seed);

  const auto bad = [](const char* text) {
    try {
      expand_instances(parse_dataset_config(Json::parse(text)));
    } catch (const Error& e) {
      return e.category() == ErrorCategory::invalid_input;
    }
    return false;
  };
  CHECK(bad(R"({"families": [{"family": "nonsense", "params": [[3]]}]})"));
  CHECK(bad(R"({"families": [{"family": "cycle", "n": [5, 3]}]})"));
  CHECK(bad(R"({"p_start": 5, "p_cap": 3, "families": [{"family": "cycle", "n": [3, 5]}]})"));
  CHECK(bad(R"({"families": [{"family": "cycle", "params": [[4]]}, {"family": "cycle", "params": [[4]]}]})"));
  CHECK_THROWS_AS(load_dataset_config("/nonexistent/config.json"), Error);
}

TEST_CASE("dataset generation, resume and determinism") {
  const auto dir = scratch_dir("gen");
  const auto config = small_config();
  const auto path = (dir / "a.jsonl").string();
  const auto summary = gen_dataset(config, path);
  CHECK(summary.total == 18);
  CHECK(summary.written == 18);
  const auto records = read_dataset(path);
  REQUIRE(records.size() == 18);
  for (const auto& r : records) {
    CAPTURE(r.id);
    if (r.family.name == "complete") {
      REQUIRE(r.p_min.has_value());
      CHECK(*r.p_min == 2);
    }
    CHECK(r.ratio_achieved <= 1.0 + 1e-12);
    CHECK_FALSE(r.timing.has_value());
    CHECK(r.restarts == 6);
    CHECK(r.software_version == software_version());
    if (r.p_min) CHECK(r.ratio_achieved >= 0.95);
    CHECK(r.trace.size() == static_cast<std::size_t>(r.label() - r.p_start + (r.censored() ? 0 : 1)));
  }
  CHECK(records[1].id == "complete:4");
  CHECK(records[1].optimum_cut == 4);
  CHECK(records[1].features.log_aut == doctest::Approx(std::log(24.0)));

  const auto original = slurp(path);
  CHECK(gen_dataset(config, path).written == 0);
  CHECK(slurp(path) == original);

  // Interrupted writer: drop the last line and half of the one before.
  const auto cut = original.rfind('\n', original.size() - 2);
  const auto partial = original.substr(0, cut - 40);
  std::ofstream(path, std::ios::binary | std::ios::trunc) << partial;
  CHECK(read_dataset(path).size() == 16);
  const auto resumed = gen_dataset(config, path);
  CHECK(resumed.existing == 16);
  CHECK(resumed.written == 2);
  CHECK(slurp(path) == original);

  GenerateOptions two;
  two.threads = 2;
  const auto other = (dir / "b.jsonl").string();
  gen_dataset(config, other, two);
  CHECK(slurp(other) == original);
  fs::remove_all(dir);
}

TEST_CASE("record round-trip") {
  const auto dir = scratch_dir("record");
  auto config = small_config();
  config.families.resize(1);
  const auto spec = expand_instances(config)[2];
  const auto r = compute_record(spec, config, {true, 1});
  CHECK(r.timing.has_value());
  const auto line = serialize_record(r);
  CHECK(line.find('\n') == std::string::npos);
  const auto back = parse_record(line);
  CHECK(serialize_record(back) == line);
  CHECK(back.graph == r.graph);
  CHECK(back.features.to_array() == r.features.to_array());
  CHECK(back.best_schedule.gamma_end == r.best_schedule.gamma_end);
  CHECK_THROWS_AS(parse_record("{\"id\": 3}"), Error);
  CHECK_THROWS_AS(parse_record("not json"), Error);
  std::ofstream(dir / "bad.jsonl") << "garbage\n" << line << "\n";
  CHECK_THROWS_AS(read_dataset((dir / "bad.jsonl").string()), Error);
  fs::remove_all(dir);
}

TEST_CASE("stratified split") {
  std::vector<InstanceRecord> records;
  const std::map<std::string, int> counts = {{"complete", 10}, {"cycle", 7}, {"star", 1}, {"wheel", 2}};
  for (const auto& [fam, c] : counts) {
    for (int i = 0; i < c; ++i) {
      InstanceRecord r;
      r.id = fam + std::to_string(i);
      r.family.name = fam;
      records.push_back(r);
    }
  }
  const SplitSpec spec{0.3, 9};
  const auto test = split_dataset(records, spec);
  CHECK(split_dataset(records, spec) == test);
  std::map<std::string, int> in_test;
  for (std::size_t i = 0; i < records.size(); ++i) in_test[records[i].family.name] += test[i];
  CHECK(in_test["complete"] == 3);
  CHECK(in_test["cycle"] == 2);
  CHECK(in_test["star"] == 0);
  CHECK(in_test["wheel"] == 1);
  CHECK(split_dataset(records, SplitSpec{0.3, 10}) != test);
  CHECK_THROWS_AS(split_dataset(records, SplitSpec{1.5, 1}), Error);
}

TEST_CASE("training needs enough records") {
  std::vector<InstanceRecord> few(5);
  CHECK_THROWS_AS(train_models(few, TrainOptions{}), Error);
}

TEST_CASE("command-line exit codes") {
  CHECK(run("--help").code == 0);
  CHECK(run("features /nonexistent/graph.edges").code == 2);
  CHECK(run("features nonsense:3").code == 2);
  CHECK(run("no-such-verb").code == 2);
  CHECK(run("simulate cycle:30 --schedule 1,0.1,0.1,0.2,0.2").code == 3);
  CHECK(run("pmin complete:4 --p-start 5 --p-cap 3").code == 2);
  CHECK(run("verify complete-bipartite:3,3").code == 0);
  CHECK(run("verify cycle:5 --perm 1,2,3,4,0").code == 0);
  CHECK(run("verify cycle:5 --perm 1,0,2,3,4").code == 4);
  CHECK(run("verify cycle:5 --perm 1,1,2,3,4").code == 2);
}

TEST_CASE("command-line outputs") {
  const auto reduce = run("reduce --json complete:8");
  REQUIRE(reduce.code == 0);
  const auto j = Json::parse(reduce.out);
  CHECK(j["flip_off"]["dimension"] == 9);
  CHECK(j["flip_on"]["dimension"] == 5);
  const auto features = run("features --json trivial-aut:9,0:3");
  REQUIRE(features.code == 0);
  const auto f = Json::parse(features.out);
  CHECK(f["log_aut"] == 0.0);
  CHECK(f["n_orbits"] == 9.0);
  CHECK(f["entropy"] == 0.0);
  const auto sim = run("simulate --json 'hand-picked:petersen' --schedule 1,0.3,0.3,0.7,0.7");
  REQUIRE(sim.code == 0);
  CHECK(Json::parse(sim.out)["optimum_cut"] == 12);
  const auto pmin = run("pmin --json complete:4 --restarts 3 --seed 2");
  REQUIRE(pmin.code == 0);
  CHECK(Json::parse(pmin.out)["p_min"] == 2);
  CHECK(run("pmin --json complete:4 --restarts 3 --seed 2").out == pmin.out);
  const auto graphs = run("gen-graphs --family star --params 4");
  CHECK(graphs.out == "4\n0 1\n0 2\n0 3\n");
}
