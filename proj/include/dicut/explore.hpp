#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dicut {

struct ExploreParams {
  int problem = 1;
  int max_n = 10;
  std::uint64_t seed = 1;
  int budget = 200;          // random samples
  bool exhaustive = false;   // enumerate all digraphs up to max_n (max_n <= 7) instead
  int k = 3;                 // class for problem 8
};

struct ExploreResult {
  std::vector<std::string> lines;
  bool violated = false;  // the tested inequality failed on some instance
  bool in_scope = true;
};

// Empirical probes of the open problems:
//   1  smallest c_max per m over connected D(1,1) (and a 7/20 check)
//   2  cut >= (2m+s)/5 on connected triangle-free D(1,1), s = sources and sinks
//   3  triangle-free D(1,1) whose maximum cut is exactly 2m/5
//   4  complexity question, not explored
//   5  largest D(1,1) subgraph fraction of D(2,2) samples (3/5 check)
//   6  D(2,2) digraphs needing five or more cuts
//   7  cut >= 2m/7 on D(3,3)
//   8  D(k,k) with c_max < 1/4 + 1/(8k+4)
ExploreResult explore(const ExploreParams& params);

}  // namespace dicut
