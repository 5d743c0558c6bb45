#pragma once

#include <optional>
#include <string>

#include "trop/amoeba.hpp"
#include "trop/cycles.hpp"

namespace trop {

struct SvgOptions {
  double window_lo = -5.0;
  double window_hi = 5.0;
  bool draw_subdivision = true;
  bool draw_complex = true;
  bool draw_cycles = true;
};

/// Deterministic two-panel figure for curves (n = 1): the lattice
/// subdivision of the Newton polytope on the left, the dual complex clipped
/// to the window on the right, sphere cycles color-coded per interior
/// point, optional sample scatter. Byte-identical output for identical
/// inputs; throws for n > 1.
std::string render_svg(const DualComplex& dc, const CycleFamily* cycles,
                       const std::vector<Sample>* samples, const SvgOptions& opt = {});

}  // namespace trop
