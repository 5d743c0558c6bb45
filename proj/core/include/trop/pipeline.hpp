#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trop/weights.hpp"

namespace trop {

/// Batch driver configuration; fully serializable, validated before any
/// stage runs.
struct RunConfig {
  std::string polytope = "simplex:n=1,d=4";
  std::string weights = "canonical";  // canonical | zero | random:<seed> | file:<path>
  std::vector<double> t_schedule = {4.0, 16.0, 64.0, 256.0};
  int samples = 2000;
  std::uint64_t seed = 1;
  double window_lo = -5.0;
  double window_hi = 5.0;
  std::string outdir = "out";
  std::vector<std::string> verify;  // maximal, edges, translate, balanced, homology, coverage, all
  bool run_amoeba = false;
  bool run_forms = false;
  bool render = false;
};

struct StageFailure {
  std::string stage;
  std::string check;
  std::string detail;
};

struct PipelineResult {
  int exit_code = 0;  // 0 ok, 1 verification failure, 2 config error
  std::vector<StageFailure> failures;
  std::vector<std::string> artifacts;  // paths written, in stage order
};

/// Runs enumerate -> subdivide -> dual -> verify -> cycles -> homology ->
/// amoeba -> forms, writing one artifact per stage into config.outdir and a
/// machine-readable failure record when a claim check fails.
PipelineResult run_pipeline(const RunConfig& config);

/// Genus-curve pipeline: builds the target triangulation of box(g+1, 2),
/// realizes it by LP, and reports cycle disjointness.
PipelineResult run_genus(std::int64_t g, const std::string& outdir);

}  // namespace trop
