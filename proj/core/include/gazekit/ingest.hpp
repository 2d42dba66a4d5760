#pragma once

#include <Eigen/Dense>
#include <array>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gazekit/types.hpp"

namespace gazekit {

inline constexpr int kFeatureCount = 25;

/// Flat feature names, in table order.
const std::array<std::string_view, kFeatureCount>& feature_names();

/// Parse a nested session document (UTF-8 JSON: participant, rate_hz,
/// frames[]). Direction vectors whose validity flag is true are normalized
/// to unit length. Frames without 't' get timestamps index / rate_hz.
Session parse_nested_session(std::string_view text);

/// Flatten one nested frame (as JSON text) into a GazeSample. The frame
/// must carry its own 't'.
GazeSample flatten_record(std::string_view frame_json);

/// Inverse of parse_nested_session; emits the same document format.
std::string write_nested_session(const Session& session);

/// label = true iff some closed interval [start_s, end_s] contains the
/// sample timestamp; every other label becomes false. Overlapping
/// intervals are merged.
Session apply_label_intervals(const Session& session,
                              std::vector<LabelInterval> intervals);

/// Comma-separated table: timestamp, the 25 features, validCombined,
/// validLeft, validRight, label. Reals use 9 significant digits.
std::string export_table(const Session& session);

/// Inverse of export_table. participant/rate metadata is not part of the
/// tabular format; the nominal rate is re-estimated from the median
/// timestamp step (90 Hz assumed for sessions shorter than 2 samples).
Session parse_table(std::string_view text);

/// (saccade_fraction, non_saccade_fraction); requires every sample labeled.
std::pair<double, double> class_balance(const Session& session);

/// n x 25 matrix of the flat features, in feature_names() order.
Eigen::MatrixXd feature_matrix(const Session& session);

/// +1 for saccade, -1 otherwise; requires every sample labeled.
Eigen::VectorXi labels_pm1(const Session& session);

std::string write_intervals_csv(std::span<const LabelInterval> intervals);
std::vector<LabelInterval> parse_intervals_csv(std::string_view text);

}  // namespace gazekit
