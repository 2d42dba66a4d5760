#include <doctest.h>

#include <cmath>
#include <vector>

#include "gazekit/divergence.hpp"
#include "gazekit/error.hpp"
#include "gazekit/rng.hpp"

using namespace gazekit;

namespace {

GazeSample sample_with_dirs(const Vec3& left, const Vec3& right) {
  GazeSample s;
  s.left_gaze_dir = left;
  s.right_gaze_dir = right;
  s.combined_gaze_dir = {0, 0, 1};
  s.left_pupil_diameter = s.right_pupil_diameter = 3.0;
  s.convergence_distance_m = 1.0;
  s.valid_combined = s.valid_left = s.valid_right = true;
  return s;
}

}  // namespace

TEST_SUITE("divergence") {

TEST_CASE("identical gaze gives zero difference") {
  CHECK(per_eye_difference(sample_with_dirs({0, 0, 1}, {0, 0, 1})) == 0.0);
}

TEST_CASE("orthogonal unit vectors give sqrt(2)") {
  CHECK(per_eye_difference(sample_with_dirs({0, 0, 1}, {0, 1, 0})) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("closed-form distance") {
  CHECK(per_eye_difference(sample_with_dirs({1, 0, 0}, {0.8, 0.6, 0})) ==
        doctest::Approx(std::sqrt(0.4)).epsilon(1e-12));
}

TEST_CASE("invalid eye is rejected") {
  auto s = sample_with_dirs({0, 0, 1}, {0, 0, 1});
  s.valid_right = false;
  CHECK_THROWS_AS(per_eye_difference(s), Error);
}

TEST_CASE("series over a session") {
  Session session;
  session.rate_hz = 90.0;
  for (int i = 0; i < 3; ++i) {
    auto s = sample_with_dirs({0, 0, 1}, {0, 1, 0});
    s.timestamp_s = i / 90.0;
    session.samples.push_back(s);
  }
  SUBCASE("three valid samples give three values") {
    CHECK(divergence_series(session).size() == 3);
  }
  SUBCASE("all-invalid session is an error") {
    for (auto& s : session.samples) s.valid_left = false;
    CHECK_THROWS_AS(divergence_series(session), Error);
  }
}

TEST_CASE("stats over a short series") {
  std::vector<double> v{0.1, 0.2, 0.3};
  const auto st = divergence_stats(v, 100.0);
  CHECK(st.min == doctest::Approx(0.1));
  CHECK(st.max == doctest::Approx(0.3));
  CHECK(st.mean == doctest::Approx(0.2));
  CHECK(st.n_used == 3);
}

TEST_CASE("constant series collapses to a point") {
  std::vector<double> v(10, 0.42);
  const auto st = divergence_stats(v, 3.0);
  CHECK(st.min == 0.42);
  CHECK(st.max == 0.42);
  CHECK(st.mean == doctest::Approx(0.42));
}

TEST_CASE("fences drop the spike before the stats") {
  std::vector<double> v{1, 2, 3, 4, 5, 6, 7, 8, 100};
  const auto st = divergence_stats(v, 3.0);
  CHECK(st.min == doctest::Approx(1.0));
  CHECK(st.max == doctest::Approx(8.0));
  CHECK(st.mean == doctest::Approx(4.5));
  CHECK(st.n_removed_outlier == 1);
  CHECK(st.n_used == 8);
}

TEST_CASE("min <= mean <= max on random series") {
  Rng rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> v(2 + rng.below(400));
    for (auto& x : v) x = std::abs(rng.gaussian(0.05, 0.2));
    const auto st = divergence_stats(v, 1.5);
    CHECK(st.min <= st.mean);
    CHECK(st.mean <= st.max);
  }
}

TEST_CASE("stats are permutation invariant") {
  Rng rng(11);
  std::vector<double> v(101);
  for (auto& x : v) x = rng.uniform(0.0, 2.0);
  const auto st0 = divergence_stats(v, 3.0);
  std::reverse(v.begin(), v.end());
  const auto st1 = divergence_stats(v, 3.0);
  CHECK(st0.min == st1.min);
  CHECK(st0.max == st1.max);
  CHECK(st0.mean == doctest::Approx(st1.mean).epsilon(1e-12));
}

TEST_CASE("chord to degrees") {
  CHECK(chord_to_degrees(0.0) == 0.0);
  CHECK(chord_to_degrees(2.0) == doctest::Approx(180.0));
  CHECK(chord_to_degrees(std::sqrt(2.0)) == doctest::Approx(90.0));
}

}  // TEST_SUITE
