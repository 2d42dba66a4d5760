#include "gazekit/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "gazekit/error.hpp"

namespace gazekit {

namespace {

constexpr double kWidth = 720.0, kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 24.0, kTop = 42.0, kBottom = 56.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd"};

std::string fmt(double v, const char* spec = "%.2f") {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = 0.0, hi = 1.0;
  void expand(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  void pad() {
    if (hi <= lo) {
      lo -= 0.5;
      hi += 0.5;
    } else {
      const double m = 0.04 * (hi - lo);
      lo -= m;
      hi += m;
    }
  }
};

Range data_range(const std::vector<PlotSeries>& series, bool use_x) {
  Range r{std::numeric_limits<double>::infinity(),
          -std::numeric_limits<double>::infinity()};
  for (const auto& s : series)
    for (double v : use_x ? s.x : s.y) r.expand(v);
  if (!std::isfinite(r.lo)) r = {0.0, 1.0};
  r.pad();
  return r;
}

std::vector<double> nice_ticks(double lo, double hi) {
  const double raw = (hi - lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = 10.0 * mag;
  for (double mult : {1.0, 2.0, 5.0}) {
    if (raw <= mult * mag) {
      step = mult * mag;
      break;
    }
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12 * step; t += step)
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  return ticks;
}

class Canvas {
 public:
  Canvas(const std::string& title, const std::string& xlabel,
         const std::string& ylabel, Range xr, Range yr)
      : xr_(xr), yr_(yr) {
    svg_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth, "%.0f") +
            "\" height=\"" + fmt(kHeight, "%.0f") + "\" viewBox=\"0 0 " +
            fmt(kWidth, "%.0f") + " " + fmt(kHeight, "%.0f") + "\">\n";
    svg_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg_ += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" "
            "font-family=\"sans-serif\" font-size=\"16\">" + escape(title) + "</text>\n";
    svg_ += "<text x=\"" + fmt(kLeft + plot_w() / 2) + "\" y=\"" + fmt(kHeight - 12) +
            "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
            escape(xlabel) + "</text>\n";
    svg_ += "<text x=\"18\" y=\"" + fmt(kTop + plot_h() / 2) +
            "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
            "transform=\"rotate(-90 18 " + fmt(kTop + plot_h() / 2) + ")\">" +
            escape(ylabel) + "</text>\n";
  }

  static double plot_w() { return kWidth - kLeft - kRight; }
  static double plot_h() { return kHeight - kTop - kBottom; }

  double px(double x) const {
    return kLeft + (x - xr_.lo) / (xr_.hi - xr_.lo) * plot_w();
  }
  double py(double y) const {
    return kTop + (yr_.hi - y) / (yr_.hi - yr_.lo) * plot_h();
  }

  void axes() {
    svg_ += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" +
            fmt(plot_w()) + "\" height=\"" + fmt(plot_h()) +
            "\" fill=\"none\" stroke=\"#333\"/>\n";
    for (double t : nice_ticks(xr_.lo, xr_.hi)) {
      const double x = px(t);
      svg_ += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(kTop + plot_h()) + "\" x2=\"" +
              fmt(x) + "\" y2=\"" + fmt(kTop + plot_h() + 5) + "\" stroke=\"#333\"/>\n";
      svg_ += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(kTop + plot_h() + 18) +
              "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
              fmt(t, "%.6g") + "</text>\n";
    }
    for (double t : nice_ticks(yr_.lo, yr_.hi)) {
      const double y = py(t);
      svg_ += "<line x1=\"" + fmt(kLeft - 5) + "\" y1=\"" + fmt(y) + "\" x2=\"" +
              fmt(kLeft) + "\" y2=\"" + fmt(y) + "\" stroke=\"#333\"/>\n";
      svg_ += "<text x=\"" + fmt(kLeft - 8) + "\" y=\"" + fmt(y + 4) +
              "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
              fmt(t, "%.6g") + "</text>\n";
    }
  }

  void legend(const std::vector<std::string>& names) {
    double y = kTop + 14.0;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i].empty()) continue;
      const char* color = kPalette[i % 5];
      svg_ += "<rect x=\"" + fmt(kLeft + plot_w() - 150) + "\" y=\"" + fmt(y - 9) +
              "\" width=\"12\" height=\"12\" fill=\"" + color + "\"/>\n";
      svg_ += "<text x=\"" + fmt(kLeft + plot_w() - 133) + "\" y=\"" + fmt(y + 2) +
              "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(names[i]) +
              "</text>\n";
      y += 18.0;
    }
  }

  void raw(const std::string& s) { svg_ += s; }

  std::string finish() {
    svg_ += "</svg>\n";
    return std::move(svg_);
  }

 private:
  Range xr_, yr_;
  std::string svg_;
};

}  // namespace

std::string line_plot_svg(const std::string& title, const std::string& xlabel,
                          const std::string& ylabel,
                          const std::vector<PlotSeries>& series) {
  if (series.empty()) fail(errc::shape_mismatch, "line plot needs at least one series");
  Canvas canvas(title, xlabel, ylabel, data_range(series, true),
                data_range(series, false));
  canvas.axes();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    if (s.x.size() != s.y.size())
      fail(errc::shape_mismatch, "series '" + s.name + "' has uneven x/y");
    std::string pts;
    for (std::size_t p = 0; p < s.x.size(); ++p) {
      if (p) pts += ' ';
      pts += fmt(canvas.px(s.x[p])) + "," + fmt(canvas.py(s.y[p]));
    }
    canvas.raw("<polyline fill=\"none\" stroke=\"" + std::string(kPalette[i % 5]) +
               "\" stroke-width=\"1.2\" points=\"" + pts + "\"/>\n");
    names.push_back(s.name);
  }
  canvas.legend(names);
  return canvas.finish();
}

std::string scatter_plot_svg(const std::string& title, const std::string& xlabel,
                             const std::string& ylabel,
                             const std::vector<PlotSeries>& groups) {
  if (groups.empty()) fail(errc::shape_mismatch, "scatter plot needs at least one group");
  Canvas canvas(title, xlabel, ylabel, data_range(groups, true),
                data_range(groups, false));
  canvas.axes();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto& g = groups[i];
    if (g.x.size() != g.y.size())
      fail(errc::shape_mismatch, "group '" + g.name + "' has uneven x/y");
    for (std::size_t p = 0; p < g.x.size(); ++p)
      canvas.raw("<circle cx=\"" + fmt(canvas.px(g.x[p])) + "\" cy=\"" +
                 fmt(canvas.py(g.y[p])) + "\" r=\"2\" fill=\"" +
                 std::string(kPalette[i % 5]) + "\" fill-opacity=\"0.6\"/>\n");
    names.push_back(g.name);
  }
  canvas.legend(names);
  return canvas.finish();
}

std::string contour_plot_svg(const std::string& title, const std::string& xlabel,
                             const std::string& ylabel, const DecisionGrid& grid,
                             const std::vector<double>& sv_x,
                             const std::vector<double>& sv_y) {
  if (sv_x.size() != sv_y.size())
    fail(errc::shape_mismatch, "support vector x/y sizes differ");
  Range xr{grid.bounds.xmin, grid.bounds.xmax};
  Range yr{grid.bounds.ymin, grid.bounds.ymax};
  Canvas canvas(title, xlabel, ylabel, xr, yr);

  const int res = grid.resolution;
  const double cw = Canvas::plot_w() / res;
  const double ch = Canvas::plot_h() / res;
  double max_abs = 0.0;
  for (double v : grid.values) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs <= 0.0) max_abs = 1.0;
  for (int iy = 0; iy < res; ++iy) {
    for (int ix = 0; ix < res; ++ix) {
      const double v = grid.values[static_cast<std::size_t>(iy) * res + ix];
      const double opacity = 0.15 + 0.55 * std::min(1.0, std::abs(v) / max_abs);
      const double x = canvas.px(grid.x_at(ix)) - cw / 2.0;
      const double y = canvas.py(grid.y_at(iy)) - ch / 2.0;
      canvas.raw("<rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" +
                 fmt(cw + 0.5) + "\" height=\"" + fmt(ch + 0.5) + "\" fill=\"" +
                 (v > 0.0 ? "#fdae6b" : "#9ecae1") + "\" fill-opacity=\"" +
                 fmt(opacity) + "\"/>\n");
    }
  }
  canvas.axes();
  for (std::size_t i = 0; i < sv_x.size(); ++i)
    canvas.raw("<circle cx=\"" + fmt(canvas.px(sv_x[i])) + "\" cy=\"" +
               fmt(canvas.py(sv_y[i])) +
               "\" r=\"2.5\" fill=\"none\" stroke=\"#222\" stroke-width=\"0.8\"/>\n");
  return canvas.finish();
}

std::string matrix_plot_svg(const std::string& title, const Confusion& confusion) {
  const char* klass[2] = {"not-saccade", "saccade"};
  const double total = static_cast<double>(confusion.total());
  std::string svg =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" height=\"380\" "
      "viewBox=\"0 0 420 380\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      "<text x=\"210\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      "font-size=\"16\">" + escape(title) + "</text>\n";
  const double x0 = 120, y0 = 70, cell = 110;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const double count = static_cast<double>(confusion.m[r][c]);
      const double shade = total > 0.0 ? count / total : 0.0;
      svg += "<rect x=\"" + fmt(x0 + c * cell) + "\" y=\"" + fmt(y0 + r * cell) +
             "\" width=\"" + fmt(cell) + "\" height=\"" + fmt(cell) +
             "\" fill=\"#1f77b4\" fill-opacity=\"" + fmt(0.08 + 0.8 * shade) +
             "\" stroke=\"#333\"/>\n";
      svg += "<text x=\"" + fmt(x0 + c * cell + cell / 2) + "\" y=\"" +
             fmt(y0 + r * cell + cell / 2 + 6) +
             "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"18\">" +
             std::to_string(confusion.m[r][c]) + "</text>\n";
    }
  }
  for (int c = 0; c < 2; ++c)
    svg += "<text x=\"" + fmt(x0 + c * cell + cell / 2) + "\" y=\"" +
           fmt(y0 + 2 * cell + 24) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" +
           std::string(klass[c]) + "</text>\n";
  for (int r = 0; r < 2; ++r)
    svg += "<text x=\"" + fmt(x0 - 10) + "\" y=\"" + fmt(y0 + r * cell + cell / 2 + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" +
           std::string(klass[r]) + "</text>\n";
  svg += "<text x=\"" + fmt(x0 + cell) + "\" y=\"" + fmt(y0 + 2 * cell + 46) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
         "predicted</text>\n";
  svg += "<text x=\"" + fmt(x0 - 70) + "\" y=\"" + fmt(y0 + cell) +
         "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
         "transform=\"rotate(-90 " + fmt(x0 - 70) + " " + fmt(y0 + cell) + ")\">"
         "true</text>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace gazekit
