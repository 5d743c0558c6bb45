#pragma once

#include <string>

#include "trop/amoeba.hpp"
#include "trop/cycles.hpp"
#include "trop/forms.hpp"
#include "trop/weight_finding.hpp"

namespace trop {

// JSON/CSV artifact formats. Every writer produces canonical bytes (sorted
// keys, sorted cells, fixed float formatting), so identical inputs yield
// identical files.

std::string polytope_to_json(const Polytope& p);
Polytope polytope_from_json(const std::string& json_text);

std::string weights_to_json(const Weights& w);
Weights weights_from_json(const std::string& json_text);

std::string subdivision_to_json(const Subdivision& s);
/// Loads polytope + cells; the weights are not part of the format.
struct SubdivisionFile {
  Polytope polytope;
  std::vector<std::vector<int>> cells;
};
SubdivisionFile subdivision_from_json(const std::string& json_text);

std::string complex_to_json(const DualComplex& dc);

std::string cycle_report_to_json(const DualComplex& dc, const CycleFamily& fam);

std::string samples_to_csv(const std::vector<Sample>& samples, double t,
                           const DualComplex* dc = nullptr);

std::string convergence_to_json(const ConvergenceReport& rep);

std::string decay_to_json(const DecayReport& rep);
std::string truncation_to_json(const TruncationReport& rep);
std::string fiber_to_json(const FiberReport& rep);
std::string fiber_to_csv(const FiberReport& rep);

std::string pairwise_to_json(const CycleFamily& fam, const PairwiseReport& rep);

void write_file(const std::string& path, const std::string& bytes);
std::string read_file(const std::string& path);

}  // namespace trop
