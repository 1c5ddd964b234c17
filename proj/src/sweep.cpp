#include "cubetor/sweep.hpp"

#include <atomic>
#include <chrono>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace cubetor {

using nlohmann::json;

namespace {

std::string series_summary(const TorTable& t) {
  json arr = json::array();
  for (int i = 0; i <= t.koszul_rank; ++i)
    arr.push_back({{"i", i}, {"series", t.series[i].to_string()}});
  return arr.dump();
}

void enumerate_words(int strands, int max_crossings, std::function<void(const BraidWord&)> fn) {
  std::vector<int> letters;
  std::function<void()> rec = [&]() {
    if (!letters.empty()) {
      BraidWord w;
      w.strand_count = strands;
      w.letters = letters;
      fn(w);
    }
    if (static_cast<int>(letters.size()) == max_crossings) return;
    for (int g = 1; g < strands; ++g) {
      letters.push_back(g);
      rec();
      letters.pop_back();
    }
  };
  rec();
}

}  // namespace

std::vector<SweepTask> enumerate_sweep_tasks(const SweepSpec& spec, long* deduped) {
  std::vector<SweepTask> tasks;
  std::set<std::string> seen;
  long dups = 0;
  for (int s = 2; s <= spec.max_strands; ++s) {
    enumerate_words(s, spec.max_crossings, [&](const BraidWord& w) {
      DecoratedDiagram d = build_decorated_diagram(w);
      const int n = d.crossing_count();
      long masks = spec.policy == ResolutionPolicy::FullySingularized ? 1 : (1L << n);
      for (long mask = 0; mask < masks; ++mask) {
        ResolutionAssignment I;
        I.bits.resize(n);
        for (int t = 0; t < n; ++t) I.bits[t] = (mask >> t) & 1;
        PartialBraidGraph g = resolve(d, I);
        if (spec.connected_only && !g.connected()) continue;
        std::string h = g.hash();
        if (!seen.insert(h).second) {
          ++dups;
          continue;
        }
        tasks.push_back(SweepTask{w, I, std::move(g)});
      }
    });
  }
  if (deduped) *deduped = dups;
  return tasks;
}

SweepSummary run_sweep(const SweepSpec& spec, ResultStore* store, GBCache* cache, int jobs,
                       std::ostream* log) {
  SweepSummary sum;
  auto tasks = enumerate_sweep_tasks(spec, &sum.deduped);

  // resume: skip graphs already in the store
  std::set<std::string> done;
  if (store) {
    for (const auto& r : store->query()) done.insert(r.graph_hash);
  }

  struct Outcome {
    bool ran = false;
    ResultRecord record;
    std::string verdict;
  };
  std::vector<Outcome> outcomes(tasks.size());

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      size_t idx = next.fetch_add(1);
      if (idx >= tasks.size()) return;
      const SweepTask& task = tasks[idx];
      if (done.count(task.graph.hash())) {
        outcomes[idx].verdict = "resumed";
        continue;
      }
      TorOptions opts;
      opts.D = spec.D;
      opts.field = spec.field;
      opts.cache = cache;
      auto t0 = std::chrono::steady_clock::now();
      Outcome& oc = outcomes[idx];
      try {
        ConjectureReport rep = check_graded_conjecture(task.graph, opts);
        oc.verdict = verdict_name(rep.verdict);
        ResultRecord rec;
        rec.graph_hash = task.graph.hash();
        rec.word = task.word.to_string();
        rec.assignment = task.assignment.to_string();
        rec.k = task.graph.closure_strand_count();
        rec.nvars = task.graph.edge_count;
        rec.n_series = series_summary(rep.n_table);
        rec.q_series = series_summary(rep.q_table);
        rec.verdict = oc.verdict;
        rec.field = spec.field.describe();
        rec.D = spec.D;
        rec.timestamp = now_iso8601();
        rec.runtime_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        oc.record = std::move(rec);
        oc.ran = true;
      } catch (const ResourceError& e) {
        oc.verdict = std::string("skipped: ") + e.what();
      } catch (const std::exception& e) {
        oc.verdict = std::string("skipped: ") + e.what();
      }
    }
  };

  int nthreads = std::max(1, jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  // store appends in task order so reruns produce identical files
  for (size_t i = 0; i < tasks.size(); ++i) {
    const Outcome& oc = outcomes[i];
    if (oc.verdict == "resumed") continue;
    ++sum.checked;
    if (oc.verdict == "holds")
      ++sum.holds;
    else if (oc.verdict == "fails")
      ++sum.fails;
    else if (oc.verdict == "unstable")
      ++sum.unstable;
    else
      ++sum.skipped;
    if (oc.ran && store) store->append(oc.record);
    if (log && oc.verdict != "holds")
      (*log) << "word " << tasks[i].word.to_string() << " assignment "
             << tasks[i].assignment.to_string() << ": " << oc.verdict << "\n";
  }
  return sum;
}

}  // namespace cubetor
