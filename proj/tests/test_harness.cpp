#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cubetor/sweep.hpp"

using namespace cubetor;

namespace {
std::filesystem::path temp_file(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / "cubetor-harness-test";
  std::filesystem::create_directories(p);
  return p / name;
}
}  // namespace

TEST_CASE("result store round trip and queries") {
  auto path = temp_file("store1.jsonl");
  std::filesystem::remove(path);
  ResultStore store(path);
  ResultRecord r;
  r.graph_hash = "abc";
  r.word = "1 1";
  r.assignment = "00";
  r.k = 1;
  r.nvars = 5;
  r.n_series = "[]";
  r.q_series = "[]";
  r.verdict = "holds";
  r.field = "q";
  r.D = 10;
  r.timestamp = now_iso8601();
  r.runtime_s = 0.25;
  store.append(r);

  auto all = store.query();
  REQUIRE(all.size() == 1);
  CHECK(all[0].graph_hash == "abc");
  CHECK(all[0].verdict == "holds");

  StoreFilter by_hash;
  by_hash.graph_hash = "abc";
  CHECK(store.query(by_hash).size() == 1);
  StoreFilter by_verdict;
  by_verdict.verdict = "fails";
  CHECK(store.query(by_verdict).empty());

  // corrupt lines are skipped with a count
  {
    std::ofstream out(path, std::ios::app);
    out << "this is not json\n";
  }
  ResultStore reread(path);
  CHECK(reread.query().size() == 1);
  CHECK(reread.corrupt_lines_skipped() == 1);
  std::filesystem::remove(path);
}

TEST_CASE("query on an empty store") {
  auto path = temp_file("store-empty.jsonl");
  std::filesystem::remove(path);
  ResultStore store(path);
  CHECK(store.query().empty());
}

TEST_CASE("sweep enumeration dedupes by canonical hash") {
  SweepSpec spec;
  spec.max_strands = 2;
  spec.max_crossings = 3;
  spec.policy = ResolutionPolicy::FullySingularized;
  spec.connected_only = true;
  long dups = 0;
  auto tasks = enumerate_sweep_tasks(spec, &dups);
  // positive patterns on two strands: 1, 11, 111
  CHECK(tasks.size() == 3);
  for (const auto& t : tasks) CHECK(t.graph.connected());
}

TEST_CASE("tiny sweep holds everywhere and is resumable") {
  auto store_path = temp_file("sweep-store.jsonl");
  std::filesystem::remove(store_path);
  ResultStore store(store_path);
  SweepSpec spec;
  spec.max_strands = 2;
  spec.max_crossings = 3;
  spec.D = 8;
  SweepSummary sum = run_sweep(spec, &store, nullptr, 2, nullptr);
  CHECK(sum.checked == 3);
  CHECK(sum.holds == 3);
  CHECK(sum.fails == 0);
  CHECK(sum.skipped == 0);
  CHECK(store.query().size() == 3);

  // rerunning skips everything already recorded
  SweepSummary again = run_sweep(spec, &store, nullptr, 2, nullptr);
  CHECK(again.checked == 0);
  CHECK(store.query().size() == 3);

  // determinism: a fresh run into a fresh store produces identical series
  auto store_path2 = temp_file("sweep-store2.jsonl");
  std::filesystem::remove(store_path2);
  ResultStore store2(store_path2);
  run_sweep(spec, &store2, nullptr, 1, nullptr);
  auto a = store.query();
  auto b = store2.query();
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].graph_hash == b[i].graph_hash);
    CHECK(a[i].n_series == b[i].n_series);
    CHECK(a[i].q_series == b[i].q_series);
    CHECK(a[i].verdict == b[i].verdict);
  }
  std::filesystem::remove(store_path);
  std::filesystem::remove(store_path2);
}

TEST_CASE("empty sweep bounds") {
  SweepSpec spec;
  spec.max_strands = 1;  // no generators available
  spec.max_crossings = 4;
  SweepSummary sum = run_sweep(spec, nullptr, nullptr, 1, nullptr);
  CHECK(sum.checked == 0);
}

TEST_CASE("dedup soundness: same hash means same tables") {
  SweepSpec spec;
  spec.max_strands = 3;
  spec.max_crossings = 3;
  spec.policy = ResolutionPolicy::AllResolutions;
  spec.connected_only = false;
  long dups = 0;
  auto tasks = enumerate_sweep_tasks(spec, &dups);
  CHECK(dups >= 0);  // construction-deterministic hashing may or may not collide
  // spot-check: recompute a few tasks twice
  TorOptions opts;
  opts.D = 6;
  for (size_t i = 0; i < tasks.size(); i += tasks.size() / 5 + 1) {
    TorTable t1 = tor_dims(tasks[i].graph, TorSide::Q, opts);
    TorTable t2 = tor_dims(tasks[i].graph, TorSide::Q, opts);
    CHECK(t1.equal_dims(t2));
  }
}
