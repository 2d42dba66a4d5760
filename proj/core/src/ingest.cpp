#include "gazekit/ingest.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "gazekit/error.hpp"
#include "gazekit/table.hpp"

namespace gazekit {

using nlohmann::json;

const std::array<std::string_view, kFeatureCount>& feature_names() {
  static const std::array<std::string_view, kFeatureCount> names = {
      "leftGazeRayDirectionX",  "leftGazeRayDirectionY",  "leftGazeRayDirectionZ",
      "leftGazeRayOriginX",     "leftGazeRayOriginY",     "leftGazeRayOriginZ",
      "leftPupilDiameter",      "leftPositionGuideX",     "leftPositionGuideY",
      "rightGazeRayDirectionX", "rightGazeRayDirectionY", "rightGazeRayDirectionZ",
      "rightGazeRayOriginX",    "rightGazeRayOriginY",    "rightGazeRayOriginZ",
      "rightPupilDiameter",     "rightPositionGuideX",    "rightPositionGuideY",
      "gazeRayDirectionX",      "gazeRayDirectionY",      "gazeRayDirectionZ",
      "gazeRayOriginX",         "gazeRayOriginY",         "gazeRayOriginZ",
      "convergenceDistance"};
  return names;
}

namespace {

const json& need(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object())
    fail(errc::malformed_document, path + " is not an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(errc::missing_field, path + "." + key);
  return *it;
}

double need_number(const json& obj, const char* key, const std::string& path) {
  const json& v = need(obj, key, path);
  if (!v.is_number())
    fail(errc::malformed_document, path + "." + key + " is not a number");
  return v.get<double>();
}

bool need_bool(const json& obj, const char* key, const std::string& path) {
  const json& v = need(obj, key, path);
  if (!v.is_boolean())
    fail(errc::malformed_document, path + "." + key + " is not a boolean");
  return v.get<bool>();
}

Vec3 need_vec3(const json& obj, const char* key, const std::string& path) {
  const json& v = need(obj, key, path);
  const std::string sub = path + "." + key;
  return {need_number(v, "x", sub), need_number(v, "y", sub), need_number(v, "z", sub)};
}

Vec2 need_vec2(const json& obj, const char* key, const std::string& path) {
  const json& v = need(obj, key, path);
  const std::string sub = path + "." + key;
  return {need_number(v, "x", sub), need_number(v, "y", sub)};
}

Vec3 normalize_if_valid(const Vec3& dir, bool valid, const std::string& path) {
  if (!valid) return dir;
  const double n = dir.norm();
  if (n <= 0.0 || !std::isfinite(n))
    fail(errc::malformed_document, path + ": valid direction has zero norm");
  return {dir.x / n, dir.y / n, dir.z / n};
}

GazeSample flatten_json_frame(const json& frame, const std::string& path,
                              double fallback_t, bool have_fallback) {
  GazeSample s;
  if (frame.contains("t")) {
    s.timestamp_s = need_number(frame, "t", path);
  } else if (have_fallback) {
    s.timestamp_s = fallback_t;
  } else {
    fail(errc::missing_field, path + ".t");
  }

  const json& left = need(frame, "left", path);
  const json& right = need(frame, "right", path);
  const json& combined = need(frame, "combined", path);

  s.valid_left = need_bool(left, "valid", path + ".left");
  s.left_gaze_dir = normalize_if_valid(need_vec3(left, "dir", path + ".left"),
                                       s.valid_left, path + ".left.dir");
  s.left_gaze_origin = need_vec3(left, "origin", path + ".left");
  s.left_pupil_diameter = need_number(left, "pupil_mm", path + ".left");
  s.left_position_guide = need_vec2(left, "guide", path + ".left");

  s.valid_right = need_bool(right, "valid", path + ".right");
  s.right_gaze_dir = normalize_if_valid(need_vec3(right, "dir", path + ".right"),
                                        s.valid_right, path + ".right.dir");
  s.right_gaze_origin = need_vec3(right, "origin", path + ".right");
  s.right_pupil_diameter = need_number(right, "pupil_mm", path + ".right");
  s.right_position_guide = need_vec2(right, "guide", path + ".right");

  s.valid_combined = need_bool(combined, "valid", path + ".combined");
  s.combined_gaze_dir = normalize_if_valid(need_vec3(combined, "dir", path + ".combined"),
                                           s.valid_combined, path + ".combined.dir");
  s.combined_gaze_origin = need_vec3(combined, "origin", path + ".combined");
  s.convergence_distance_m = need_number(combined, "convergence_m", path + ".combined");

  if (s.valid_left && s.left_pupil_diameter <= 0.0)
    fail(errc::malformed_document, path + ": valid left eye with pupil <= 0");
  if (s.valid_right && s.right_pupil_diameter <= 0.0)
    fail(errc::malformed_document, path + ": valid right eye with pupil <= 0");
  if (s.valid_combined && s.convergence_distance_m <= 0.0)
    fail(errc::malformed_document, path + ": valid combined gaze with convergence <= 0");

  if (frame.contains("label")) {
    const json& l = frame.at("label");
    if (!l.is_boolean())
      fail(errc::malformed_document, path + ".label is not a boolean");
    s.label = l.get<bool>();
  }
  return s;
}

json parse_json(std::string_view text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    fail(errc::malformed_document, "input is not well-formed JSON");
  return doc;
}

}  // namespace

Session parse_nested_session(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail(errc::malformed_document, "top level is not an object");

  Session session;
  const json& participant = need(doc, "participant", "$");
  if (!participant.is_string())
    fail(errc::malformed_document, "$.participant is not a string");
  session.participant_id = participant.get<std::string>();
  session.rate_hz = need_number(doc, "rate_hz", "$");
  if (session.rate_hz <= 0.0)
    fail(errc::malformed_document, "$.rate_hz must be > 0");
  session.source = "nested-document";

  const json& frames = need(doc, "frames", "$");
  if (!frames.is_array()) fail(errc::malformed_document, "$.frames is not an array");

  session.samples.reserve(frames.size());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const std::string path = "$.frames[" + std::to_string(i) + "]";
    session.samples.push_back(flatten_json_frame(
        frames[i], path, static_cast<double>(i) / session.rate_hz, true));
    if (i > 0 &&
        session.samples[i].timestamp_s <= session.samples[i - 1].timestamp_s)
      fail(errc::non_monotonic_timestamps, path + ": timestamps must strictly increase");
  }
  return session;
}

GazeSample flatten_record(std::string_view frame_json) {
  const json frame = parse_json(frame_json);
  return flatten_json_frame(frame, "$", 0.0, false);
}

std::string write_nested_session(const Session& session) {
  json doc;
  doc["participant"] = session.participant_id;
  doc["rate_hz"] = session.rate_hz;
  json frames = json::array();
  for (const auto& s : session.samples) {
    json f;
    f["t"] = s.timestamp_s;
    f["left"] = {{"dir", {{"x", s.left_gaze_dir.x}, {"y", s.left_gaze_dir.y}, {"z", s.left_gaze_dir.z}}},
                 {"origin", {{"x", s.left_gaze_origin.x}, {"y", s.left_gaze_origin.y}, {"z", s.left_gaze_origin.z}}},
                 {"valid", s.valid_left},
                 {"pupil_mm", s.left_pupil_diameter},
                 {"guide", {{"x", s.left_position_guide.x}, {"y", s.left_position_guide.y}}}};
    f["right"] = {{"dir", {{"x", s.right_gaze_dir.x}, {"y", s.right_gaze_dir.y}, {"z", s.right_gaze_dir.z}}},
                  {"origin", {{"x", s.right_gaze_origin.x}, {"y", s.right_gaze_origin.y}, {"z", s.right_gaze_origin.z}}},
                  {"valid", s.valid_right},
                  {"pupil_mm", s.right_pupil_diameter},
                  {"guide", {{"x", s.right_position_guide.x}, {"y", s.right_position_guide.y}}}};
    f["combined"] = {{"dir", {{"x", s.combined_gaze_dir.x}, {"y", s.combined_gaze_dir.y}, {"z", s.combined_gaze_dir.z}}},
                     {"origin", {{"x", s.combined_gaze_origin.x}, {"y", s.combined_gaze_origin.y}, {"z", s.combined_gaze_origin.z}}},
                     {"valid", s.valid_combined},
                     {"convergence_m", s.convergence_distance_m}};
    if (s.label) f["label"] = *s.label;
    frames.push_back(std::move(f));
  }
  doc["frames"] = std::move(frames);
  return doc.dump(2) + "\n";
}

Session apply_label_intervals(const Session& session,
                              std::vector<LabelInterval> intervals) {
  for (const auto& iv : intervals)
    if (iv.start_s > iv.end_s)
      fail(errc::out_of_range, "label interval with start > end");
  std::sort(intervals.begin(), intervals.end(),
            [](const LabelInterval& a, const LabelInterval& b) {
              return a.start_s < b.start_s;
            });
  std::vector<LabelInterval> merged;
  for (const auto& iv : intervals) {
    if (!merged.empty() && iv.start_s <= merged.back().end_s)
      merged.back().end_s = std::max(merged.back().end_s, iv.end_s);
    else
      merged.push_back(iv);
  }

  Session out = session;
  std::size_t cursor = 0;
  for (auto& s : out.samples) {
    while (cursor < merged.size() && merged[cursor].end_s < s.timestamp_s) ++cursor;
    s.label = cursor < merged.size() && merged[cursor].start_s <= s.timestamp_s;
  }
  return out;
}

namespace {

std::vector<std::string> table_header() {
  std::vector<std::string> h;
  h.emplace_back("timestamp");
  for (const auto& name : feature_names()) h.emplace_back(name);
  h.emplace_back("validCombined");
  h.emplace_back("validLeft");
  h.emplace_back("validRight");
  h.emplace_back("label");
  return h;
}

std::array<double, kFeatureCount> flat_features(const GazeSample& s) {
  return {s.left_gaze_dir.x,      s.left_gaze_dir.y,      s.left_gaze_dir.z,
          s.left_gaze_origin.x,   s.left_gaze_origin.y,   s.left_gaze_origin.z,
          s.left_pupil_diameter,  s.left_position_guide.x, s.left_position_guide.y,
          s.right_gaze_dir.x,     s.right_gaze_dir.y,     s.right_gaze_dir.z,
          s.right_gaze_origin.x,  s.right_gaze_origin.y,  s.right_gaze_origin.z,
          s.right_pupil_diameter, s.right_position_guide.x, s.right_position_guide.y,
          s.combined_gaze_dir.x,  s.combined_gaze_dir.y,  s.combined_gaze_dir.z,
          s.combined_gaze_origin.x, s.combined_gaze_origin.y, s.combined_gaze_origin.z,
          s.convergence_distance_m};
}

void set_feature(GazeSample& s, int idx, double v) {
  switch (idx) {
    case 0: s.left_gaze_dir.x = v; break;
    case 1: s.left_gaze_dir.y = v; break;
    case 2: s.left_gaze_dir.z = v; break;
    case 3: s.left_gaze_origin.x = v; break;
    case 4: s.left_gaze_origin.y = v; break;
    case 5: s.left_gaze_origin.z = v; break;
    case 6: s.left_pupil_diameter = v; break;
    case 7: s.left_position_guide.x = v; break;
    case 8: s.left_position_guide.y = v; break;
    case 9: s.right_gaze_dir.x = v; break;
    case 10: s.right_gaze_dir.y = v; break;
    case 11: s.right_gaze_dir.z = v; break;
    case 12: s.right_gaze_origin.x = v; break;
    case 13: s.right_gaze_origin.y = v; break;
    case 14: s.right_gaze_origin.z = v; break;
    case 15: s.right_pupil_diameter = v; break;
    case 16: s.right_position_guide.x = v; break;
    case 17: s.right_position_guide.y = v; break;
    case 18: s.combined_gaze_dir.x = v; break;
    case 19: s.combined_gaze_dir.y = v; break;
    case 20: s.combined_gaze_dir.z = v; break;
    case 21: s.combined_gaze_origin.x = v; break;
    case 22: s.combined_gaze_origin.y = v; break;
    case 23: s.combined_gaze_origin.z = v; break;
    case 24: s.convergence_distance_m = v; break;
    default: fail(errc::out_of_range, "feature index " + std::to_string(idx));
  }
}

bool parse_flag(std::string_view token, const std::string& context) {
  if (token == "1") return true;
  if (token == "0") return false;
  fail(errc::unparseable_number, context + ": flag must be 0 or 1, got '" +
                                     std::string(token) + "'");
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    start = nl + 1;
  }
  return lines;
}

}  // namespace

std::string export_table(const Session& session) {
  const auto header = table_header();
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out += ',';
    out += header[i];
  }
  out += '\n';
  for (const auto& s : session.samples) {
    out += format_g9(s.timestamp_s);
    for (double v : flat_features(s)) {
      out += ',';
      out += format_g9(v);
    }
    out += s.valid_combined ? ",1" : ",0";
    out += s.valid_left ? ",1" : ",0";
    out += s.valid_right ? ",1" : ",0";
    out += ',';
    if (s.label) out += *s.label ? '1' : '0';
    out += '\n';
  }
  return out;
}

Session parse_table(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) fail(errc::header_mismatch, "empty table");

  const auto expected = table_header();
  const auto got = split_csv_line(lines[0]);
  if (got.size() != expected.size())
    fail(errc::header_mismatch, "expected " + std::to_string(expected.size()) +
                                    " columns, got " + std::to_string(got.size()));
  for (std::size_t i = 0; i < expected.size(); ++i)
    if (got[i] != expected[i])
      fail(errc::header_mismatch, "column " + std::to_string(i) + " is '" + got[i] +
                                      "', expected '" + expected[i] + "'");

  Session session;
  session.source = "table";
  session.samples.reserve(lines.size() - 1);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto cells = split_csv_line(lines[li]);
    const std::string context = "row " + std::to_string(li);
    if (cells.size() != expected.size())
      fail(errc::row_arity, context + " has " + std::to_string(cells.size()) +
                                " cells, expected " + std::to_string(expected.size()));
    GazeSample s;
    s.timestamp_s = parse_double(cells[0], context + " timestamp");
    for (int f = 0; f < kFeatureCount; ++f)
      set_feature(s, f, parse_double(cells[static_cast<std::size_t>(f) + 1],
                                     context + " " + std::string(feature_names()[f])));
    s.valid_combined = parse_flag(cells[26], context + " validCombined");
    s.valid_left = parse_flag(cells[27], context + " validLeft");
    s.valid_right = parse_flag(cells[28], context + " validRight");
    if (!cells[29].empty()) s.label = parse_flag(cells[29], context + " label");
    if (!session.samples.empty() &&
        s.timestamp_s <= session.samples.back().timestamp_s)
      fail(errc::non_monotonic_timestamps, context + ": timestamps must strictly increase");
    session.samples.push_back(s);
  }

  // Nominal rate from the median timestamp step; single-sample tables get
  // the 90 Hz headset default.
  if (session.samples.size() >= 2) {
    std::vector<double> dts;
    dts.reserve(session.samples.size() - 1);
    for (std::size_t i = 1; i < session.samples.size(); ++i)
      dts.push_back(session.samples[i].timestamp_s - session.samples[i - 1].timestamp_s);
    std::sort(dts.begin(), dts.end());
    const double dt = dts[dts.size() / 2];
    session.rate_hz = dt > 0.0 ? 1.0 / dt : 90.0;
  } else {
    session.rate_hz = 90.0;
  }
  return session;
}

std::pair<double, double> class_balance(const Session& session) {
  if (session.samples.empty()) fail(errc::empty_input, "class_balance of empty session");
  std::size_t saccade = 0;
  for (const auto& s : session.samples) {
    if (!s.label) fail(errc::unlabeled_data, "class_balance needs every sample labeled");
    if (*s.label) ++saccade;
  }
  const double n = static_cast<double>(session.samples.size());
  const double frac = static_cast<double>(saccade) / n;
  const double rest = static_cast<double>(session.samples.size() - saccade) / n;
  return {frac, rest};
}

Eigen::MatrixXd feature_matrix(const Session& session) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(session.samples.size()), kFeatureCount);
  for (std::size_t i = 0; i < session.samples.size(); ++i) {
    const auto f = flat_features(session.samples[i]);
    for (int j = 0; j < kFeatureCount; ++j)
      x(static_cast<Eigen::Index>(i), j) = f[static_cast<std::size_t>(j)];
  }
  return x;
}

Eigen::VectorXi labels_pm1(const Session& session) {
  Eigen::VectorXi y(static_cast<Eigen::Index>(session.samples.size()));
  for (std::size_t i = 0; i < session.samples.size(); ++i) {
    const auto& label = session.samples[i].label;
    if (!label) fail(errc::unlabeled_data, "sample " + std::to_string(i) + " unlabeled");
    y[static_cast<Eigen::Index>(i)] = *label ? 1 : -1;
  }
  return y;
}

std::string write_intervals_csv(std::span<const LabelInterval> intervals) {
  std::string out = "start_s,end_s\n";
  for (const auto& iv : intervals)
    out += format_g9(iv.start_s) + "," + format_g9(iv.end_s) + "\n";
  return out;
}

std::vector<LabelInterval> parse_intervals_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || lines[0] != "start_s,end_s")
    fail(errc::header_mismatch, "interval file must start with 'start_s,end_s'");
  std::vector<LabelInterval> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_csv_line(lines[i]);
    if (cells.size() != 2)
      fail(errc::row_arity, "interval row " + std::to_string(i));
    out.push_back({parse_double(cells[0], "interval start"),
                   parse_double(cells[1], "interval end")});
  }
  return out;
}

}  // namespace gazekit
