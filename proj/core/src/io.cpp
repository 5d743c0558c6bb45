#include "trop/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace trop {

using nlohmann::json;

namespace {

json polytope_json(const Polytope& p) {
  json j;
  if (p.kind() == PolytopeKind::DilatedSimplex) {
    j["kind"] = "simplex";
    j["n"] = p.n();
    j["d"] = p.simplex_degree();
  } else {
    j["kind"] = "box";
    j["a"] = p.box_a();
    j["b"] = p.box_b();
  }
  return j;
}

Polytope polytope_from(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "simplex") return Polytope::simplex(j.at("n"), j.at("d"));
  if (kind == "box") return Polytope::box(j.at("a"), j.at("b"));
  throw std::invalid_argument("unknown polytope kind in JSON: " + kind);
}

// Fixed-precision float formatting: enough digits to round-trip, no
// locale dependence.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string polytope_to_json(const Polytope& p) { return polytope_json(p).dump(2) + "\n"; }

Polytope polytope_from_json(const std::string& text) { return polytope_from(json::parse(text)); }

std::string weights_to_json(const Weights& w) {
  json j;
  j["polytope"] = polytope_json(w.polytope());
  json entries = json::array();
  const auto& pts = w.polytope().points();
  for (size_t i = 0; i < pts.size(); ++i) {
    json e;
    e["point"] = pts[i];
    e["weight"] = rat_to_string(w[static_cast<int>(i)]);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

Weights weights_from_json(const std::string& text) {
  const json j = json::parse(text);
  Polytope p = polytope_from(j.at("polytope"));
  RatVec values(p.points().size(), Rat(0));
  std::vector<bool> seen(values.size(), false);
  for (const auto& e : j.at("entries")) {
    Point pt = e.at("point").get<Point>();
    const int idx = p.index_of(pt);
    if (idx < 0) throw std::invalid_argument("weight entry outside the polytope: " + point_to_string(pt));
    values[idx] = rat_from_string(e.at("weight").get<std::string>());
    seen[idx] = true;
  }
  for (size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw std::invalid_argument("missing weight for lattice point " + point_to_string(p.points()[i]));
  return Weights(std::move(p), std::move(values));
}

std::string subdivision_to_json(const Subdivision& s) {
  json j;
  j["polytope"] = polytope_json(s.polytope());
  json cells = json::array();
  for (const auto& c : s.top_cells()) cells.push_back(c.support);  // already canonical order
  j["cells"] = std::move(cells);
  return j.dump(2) + "\n";
}

SubdivisionFile subdivision_from_json(const std::string& text) {
  const json j = json::parse(text);
  SubdivisionFile out{polytope_from(j.at("polytope")), {}};
  for (const auto& c : j.at("cells")) out.cells.push_back(c.get<std::vector<int>>());
  return out;
}

std::string complex_to_json(const DualComplex& dc) {
  json j;
  j["polytope"] = polytope_json(dc.polytope());
  json cells = json::object();
  for (const auto& cell : dc.cells()) {
    std::ostringstream key;
    for (size_t i = 0; i < cell.support.size(); ++i) key << (i ? "," : "") << cell.support[i];
    json c;
    c["dim"] = cell.dim;
    c["bounded"] = cell.bounded;
    c["vertices"] = cell.vertices;
    if (cell.dim == dc.n()) c["weight"] = cell.weight.str();
    if (!cell.rays.empty()) c["rays"] = cell.rays;
    cells[key.str()] = std::move(c);
  }
  j["cells"] = std::move(cells);
  json verts = json::array();
  for (const auto& pos : dc.vertex_positions()) {
    json coords = json::array();
    for (const auto& c : pos) coords.push_back(rat_to_string(c));
    verts.push_back(std::move(coords));
  }
  j["vertex_positions"] = std::move(verts);
  return j.dump(2) + "\n";
}

std::string cycle_report_to_json(const DualComplex& dc, const CycleFamily& fam) {
  json j;
  j["polytope"] = polytope_json(dc.polytope());
  json members = json::array();
  for (const auto& m : fam.members) {
    json e;
    e["point"] = m.center;
    json sphere = json::array();
    for (int cid : m.sphere.cells) sphere.push_back(dc.cells()[cid].support);
    e["sphere_cells"] = std::move(sphere);
    e["lambda"] = m.lambda;
    e["star_ncells"] = m.star_ncells;
    e["class_matches_sphere"] = m.class_matches_sphere;
    members.push_back(std::move(e));
  }
  j["cycles"] = std::move(members);
  json hom;
  for (int k = 0; k <= dc.n(); ++k) hom["rank_" + std::to_string(k)] = homology_rank_gf2(dc, k);
  j["homology"] = std::move(hom);
  return j.dump(2) + "\n";
}

std::string samples_to_csv(const std::vector<Sample>& samples, double t, const DualComplex* dc) {
  std::ostringstream os;
  const size_t dim = samples.empty() ? 0 : samples[0].logt.size();
  os << "t";
  for (size_t k = 1; k <= dim; ++k) os << ",x_" << k;
  os << ",defect,distance,residual\n";
  for (const auto& s : samples) {
    os << fmt(t);
    for (double c : s.logt) os << "," << fmt(c);
    os << "," << fmt(s.defect) << ",";
    os << fmt(dc ? distance_to_complex(s.logt, *dc) : 0.0);
    os << "," << fmt(s.residual) << "\n";
  }
  return os.str();
}

std::string convergence_to_json(const ConvergenceReport& rep) {
  json j;
  json per = json::array();
  for (const auto& st : rep.per_t) {
    json e;
    e["t"] = st.t;
    e["samples"] = st.samples;
    e["median_distance"] = st.median_distance;
    e["p95_distance"] = st.p95_distance;
    e["coverage"] = st.coverage;
    e["median_defect"] = st.median_defect;
    e["p95_defect"] = st.p95_defect;
    per.push_back(std::move(e));
  }
  j["per_t"] = std::move(per);
  j["distances_non_increasing"] = rep.distances_non_increasing;
  j["coverage_non_increasing"] = rep.coverage_non_increasing;
  j["pass"] = rep.pass;
  return j.dump(2) + "\n";
}

std::string decay_to_json(const DecayReport& rep) {
  json j;
  j["t_schedule"] = rep.t_schedule;
  j["sup_coefficient"] = rep.sup_coefficient;
  j["monotone"] = rep.monotone;
  j["final_ratio"] = rep.final_ratio;
  j["pass"] = rep.pass;
  return j.dump(2) + "\n";
}

std::string truncation_to_json(const TruncationReport& rep) {
  json j;
  j["max_rel_diff"] = rep.max_rel_diff;
  j["min_ratio"] = rep.min_ratio;
  j["samples"] = rep.samples;
  j["pass"] = rep.pass;
  return j.dump(2) + "\n";
}

std::string fiber_to_json(const FiberReport& rep) {
  json j;
  j["t_schedule"] = rep.t_schedule;
  j["max_phase_ratio"] = rep.max_phase_ratio;
  j["max_log_deviation"] = rep.max_log_deviation;
  j["decreasing"] = rep.decreasing;
  j["pass"] = rep.pass;
  return j.dump(2) + "\n";
}

std::string fiber_to_csv(const FiberReport& rep) {
  std::ostringstream os;
  os << "t,max_phase_ratio,max_log_deviation\n";
  for (size_t k = 0; k < rep.t_schedule.size(); ++k)
    os << fmt(rep.t_schedule[k]) << "," << fmt(rep.max_phase_ratio[k]) << ","
       << fmt(rep.max_log_deviation[k]) << "\n";
  return os.str();
}

std::string pairwise_to_json(const CycleFamily& fam, const PairwiseReport& rep) {
  json j;
  json pts = json::array();
  for (const auto& m : fam.members) pts.push_back(m.center);
  j["points"] = std::move(pts);
  auto name = [](ContactKind k) {
    switch (k) {
      case ContactKind::Disjoint: return "disjoint";
      case ContactKind::SingleVertex: return "single_vertex";
      case ContactKind::MultiVertex: return "multi_vertex";
      default: return "overlap";
    }
  };
  json mat = json::array();
  for (size_t a = 0; a < rep.matrix.size(); ++a) {
    json row = json::array();
    for (size_t b = 0; b < rep.matrix.size(); ++b)
      row.push_back(a == b ? "self" : name(rep.matrix[a][b]));
    mat.push_back(std::move(row));
  }
  j["matrix"] = std::move(mat);
  j["at_most_single_contact"] = rep.at_most_single_contact;
  return j.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

}  // namespace trop
