#include "trop/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace trop {

namespace {

const char* kPalette[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad", "#d35400",
                          "#16a085", "#7f8c8d", "#f39c12", "#2c3e50", "#e84393"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

struct Panel {
  double x0, y0, size;       // panel placement in page coordinates
  double lo, hi;             // data window
  double sx(double x) const { return x0 + (x - lo) / (hi - lo) * size; }
  double sy(double y) const { return y0 + (hi - y) / (hi - lo) * size; }
};

void line(std::ostringstream& os, const Panel& p, double x1, double y1, double x2, double y2,
          const std::string& color, double width) {
  os << "<line x1=\"" << num(p.sx(x1)) << "\" y1=\"" << num(p.sy(y1)) << "\" x2=\""
     << num(p.sx(x2)) << "\" y2=\"" << num(p.sy(y2)) << "\" stroke=\"" << color
     << "\" stroke-width=\"" << num(width) << "\"/>\n";
}

void dot(std::ostringstream& os, const Panel& p, double x, double y, double r,
         const std::string& color) {
  os << "<circle cx=\"" << num(p.sx(x)) << "\" cy=\"" << num(p.sy(y)) << "\" r=\"" << num(r)
     << "\" fill=\"" << color << "\"/>\n";
}

// Clip the segment a + s*(b-a), s in [0,1], to the window box; returns
// false when fully outside.
bool clip(double lo, double hi, double& ax, double& ay, double& bx, double& by) {
  double s0 = 0.0, s1 = 1.0;
  const double d[2] = {bx - ax, by - ay};
  const double a[2] = {ax, ay};
  for (int k = 0; k < 2; ++k) {
    if (d[k] == 0.0) {
      if (a[k] < lo || a[k] > hi) return false;
      continue;
    }
    double t0 = (lo - a[k]) / d[k], t1 = (hi - a[k]) / d[k];
    if (t0 > t1) std::swap(t0, t1);
    s0 = std::max(s0, t0);
    s1 = std::min(s1, t1);
  }
  if (s0 > s1) return false;
  const double nax = ax + s0 * d[0], nay = ay + s0 * d[1];
  bx = ax + s1 * d[0];
  by = ay + s1 * d[1];
  ax = nax;
  ay = nay;
  return true;
}

}  // namespace

std::string render_svg(const DualComplex& dc, const CycleFamily* cycles,
                       const std::vector<Sample>* samples, const SvgOptions& opt) {
  if (dc.polytope().ambient_dim() != 2)
    throw std::invalid_argument("render_svg: only curves (n = 1) can be drawn");

  const Subdivision& sub = dc.subdivision();
  const auto& pts = dc.polytope().points();
  const auto& vp = dc.vertex_positions_f();

  const double page_w = opt.draw_subdivision && opt.draw_complex ? 880.0 : 440.0;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(page_w)
     << "\" height=\"440\" viewBox=\"0 0 " << num(page_w) << " 440\">\n";
  os << "<rect width=\"" << num(page_w) << "\" height=\"440\" fill=\"white\"/>\n";

  int panel_index = 0;
  if (opt.draw_subdivision) {
    double span = 1;
    for (const auto& p : pts)
      for (auto c : p) span = std::max(span, static_cast<double>(c));
    Panel panel{20.0 + 440.0 * panel_index, 20.0, 400.0, -0.5, span + 0.5};
    ++panel_index;
    for (int fid : sub.faces_of_dim(1)) {
      const auto [a, b] = sub.edge_endpoints(fid);
      line(os, panel, static_cast<double>(a[0]), static_cast<double>(a[1]),
           static_cast<double>(b[0]), static_cast<double>(b[1]), "#555555", 1.0);
    }
    for (size_t i = 0; i < pts.size(); ++i) {
      const bool interior = dc.polytope().strictly_contains(pts[i]);
      dot(os, panel, static_cast<double>(pts[i][0]), static_cast<double>(pts[i][1]), 3.5,
          interior ? "#c0392b" : "#222222");
    }
  }

  if (opt.draw_complex) {
    Panel panel{20.0 + 440.0 * panel_index, 20.0, 400.0, opt.window_lo, opt.window_hi};
    const double ray_len = 4.0 * (opt.window_hi - opt.window_lo);

    // cycle color per n-cell
    std::vector<int> color_of(dc.cells().size(), -1);
    if (opt.draw_cycles && cycles) {
      for (size_t m = 0; m < cycles->members.size(); ++m)
        for (int cid : cycles->members[m].sphere.cells)
          if (color_of[cid] < 0) color_of[cid] = static_cast<int>(m % 10);
    }

    for (int cid : dc.cells_of_dim(1)) {
      const auto& cell = dc.cells()[cid];
      double ax, ay, bx, by;
      if (cell.bounded) {
        ax = vp[cell.vertices.front()][0];
        ay = vp[cell.vertices.front()][1];
        bx = vp[cell.vertices.back()][0];
        by = vp[cell.vertices.back()][1];
      } else {
        ax = vp[cell.vertices.front()][0];
        ay = vp[cell.vertices.front()][1];
        bx = ax + ray_len * static_cast<double>(cell.rays[0][0]);
        by = ay + ray_len * static_cast<double>(cell.rays[0][1]);
      }
      if (!clip(opt.window_lo, opt.window_hi, ax, ay, bx, by)) continue;
      const int color = color_of[cid];
      line(os, panel, ax, ay, bx, by, color >= 0 ? kPalette[color] : "#333333",
           color >= 0 ? 2.5 : 1.2);
    }
    for (const auto& pos : vp) {
      if (pos[0] < opt.window_lo || pos[0] > opt.window_hi || pos[1] < opt.window_lo ||
          pos[1] > opt.window_hi)
        continue;
      dot(os, panel, pos[0], pos[1], 2.5, "#000000");
    }
    if (samples) {
      for (const auto& s : *samples) {
        if (s.logt[0] < opt.window_lo || s.logt[0] > opt.window_hi || s.logt[1] < opt.window_lo ||
            s.logt[1] > opt.window_hi)
          continue;
        dot(os, panel, s.logt[0], s.logt[1], 1.2, "#2980b9");
      }
    }
  }

  os << "</svg>\n";
  return os.str();
}

}  // namespace trop
