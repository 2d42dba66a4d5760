#pragma once

#include <string>
#include <vector>

#include "gazekit/model_select.hpp"

namespace gazekit {

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

/// Standalone SVG documents (static vector graphics, no display server).
/// All writers are pure functions of their inputs.
std::string line_plot_svg(const std::string& title, const std::string& xlabel,
                          const std::string& ylabel,
                          const std::vector<PlotSeries>& series);

std::string scatter_plot_svg(const std::string& title, const std::string& xlabel,
                             const std::string& ylabel,
                             const std::vector<PlotSeries>& groups);

/// Decision-value grid shaded by sign with support vectors overlaid.
std::string contour_plot_svg(const std::string& title, const std::string& xlabel,
                             const std::string& ylabel, const DecisionGrid& grid,
                             const std::vector<double>& sv_x,
                             const std::vector<double>& sv_y);

std::string matrix_plot_svg(const std::string& title, const Confusion& confusion);

}  // namespace gazekit
