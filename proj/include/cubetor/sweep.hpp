#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cubetor/braid.hpp"
#include "cubetor/koszul.hpp"
#include "cubetor/store.hpp"

namespace cubetor {

enum class ResolutionPolicy { FullySingularized, AllResolutions };

struct SweepSpec {
  int max_strands = 3;  // k+1
  int max_crossings = 5;
  ResolutionPolicy policy = ResolutionPolicy::FullySingularized;
  bool connected_only = true;
  Field field = Field::rationals();
  int D = 10;
};

struct SweepSummary {
  long checked = 0;
  long holds = 0;
  long fails = 0;
  long unstable = 0;
  long skipped = 0;
  long deduped = 0;
};

struct SweepTask {
  BraidWord word;
  ResolutionAssignment assignment;
  PartialBraidGraph graph;
};

/// Enumerates resolution graphs of braid closures up to the bounds. Only
/// positive letter patterns are generated: resolved graphs do not depend on
/// crossing signs, and the checks downstream never read them.
std::vector<SweepTask> enumerate_sweep_tasks(const SweepSpec& spec, long* deduped = nullptr);

SweepSummary run_sweep(const SweepSpec& spec, ResultStore* store, GBCache* cache, int jobs,
                       std::ostream* log = nullptr);

}  // namespace cubetor
