#include <doctest.h>

#include <string>

#include "gazekit/error.hpp"
#include "gazekit/plot.hpp"
#include "gazekit/svm.hpp"
#include "gazekit/table.hpp"

using namespace gazekit;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_SUITE("plot") {

TEST_CASE("line plot has one polyline per series") {
  PlotSeries a{"first", {0, 1, 2}, {1, 0, 1}};
  PlotSeries b{"second", {0, 1, 2}, {2, 2, 2}};
  const auto svg = line_plot_svg("title", "x", "y", {a, b});
  CHECK(count_of(svg, "<polyline") == 2);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("first") != std::string::npos);
}

TEST_CASE("re-rendering identical data is byte-identical") {
  PlotSeries s{"s", {0, 0.5, 1.0}, {0.1, 0.9, 0.4}};
  CHECK(line_plot_svg("t", "x", "y", {s}) == line_plot_svg("t", "x", "y", {s}));
}

TEST_CASE("uneven series is rejected") {
  PlotSeries bad{"bad", {0, 1}, {0}};
  CHECK_THROWS_AS(line_plot_svg("t", "x", "y", {bad}), Error);
}

TEST_CASE("scatter emits one circle per point") {
  PlotSeries g{"pts", {0, 1, 2, 3}, {0, 1, 2, 3}};
  const auto svg = scatter_plot_svg("t", "x", "y", {g});
  CHECK(count_of(svg, "<circle") == 4);
}

TEST_CASE("contour shades every cell and marks support vectors") {
  Eigen::MatrixXd x(4, 2);
  x << 0, 0, 1, 1, 0, 1, 1, 0;
  Eigen::VectorXi y(4);
  y << 1, 1, -1, -1;
  SvmParams params;
  params.C = 10.0;
  const auto model = svm_train(x, y, params);
  const auto grid = decision_grid(model, {-1, 2, -1, 2}, 50);
  std::vector<double> sx, sy;
  for (Eigen::Index i = 0; i < model.support_vectors.rows(); ++i) {
    sx.push_back(model.support_vectors(i, 0));
    sy.push_back(model.support_vectors(i, 1));
  }
  const auto svg = contour_plot_svg("t", "pc1", "pc2", grid, sx, sy);
  CHECK(count_of(svg, "<rect") >= 2500);  // one shaded cell per grid point
  CHECK(count_of(svg, "<circle") == sx.size());
}

TEST_CASE("matrix plot labels all four cells") {
  Confusion conf;
  conf.m = {{{12, 3}, {4, 9}}};
  const auto svg = matrix_plot_svg("confusion", conf);
  for (const char* count : {">12<", ">3<", ">4<", ">9<"})
    CHECK(svg.find(count) != std::string::npos);
  CHECK(count_of(svg, "not-saccade") == 2);
}

TEST_CASE("table rendering uses 9 significant digits and is stable") {
  TextTable t;
  t.header = {"a", "b"};
  t.rows.push_back({1.0 / 3.0, 123456789.123});
  const auto text = render_table(t);
  CHECK(text == "a,b\n0.333333333,123456789\n");
  CHECK(render_table(t) == text);
  t.rows.push_back({1.0, 2.0, 3.0});
  CHECK_THROWS_AS(render_table(t), Error);
}

}  // TEST_SUITE
