#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace cominimal {

/// Maximum number of worker threads honored by parallel helpers.
/// Reads COMINIMAL_THREADS once; values < 1 fall back to 1.
int thread_cap();

/// Runs fn(i) for i in [0, n). Chunks are assigned to at most thread_cap()
/// workers; chunk boundaries are fixed by n alone, so any merge done per
/// chunk index is deterministic.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

/// Tunables every long-running entry point consults. Values are pinned here
/// so certificate bundles are reproducible; the CLI can override them from a
/// JSON config file and from flags.
struct RunConfig {
  int representation_horizon_slack = 6;  // horizon = bit_length(|y|) + slack
  int tail_span = 16;                    // span used by tail stabilization scans
  int claim_trunc = 14;                  // truncation index for claim suites
  int refine_horizon_slack = 12;         // refine horizon = bit_length(|s0|) + slack
  int default_budget = 200;              // refinement budget when unspecified
};

RunConfig& default_config();

}  // namespace cominimal
