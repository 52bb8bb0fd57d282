// Copyright 2026 The swapsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swapsim/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace swapsim::io {

namespace {

using nlohmann::json;

constexpr const char* kTrialHeader =
    "trial_id,ordering,alice_theta,alice_outcome,bob_theta,bob_outcome,"
    "eve_context,eve_outcome_label,alice_ts,bob_ts,eve_choice_ts,"
    "eve_measure_ts";

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

template <typename T>
T parse_number(std::string_view field, const char* what) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(std::string("bad ") + what + " field: '" +
                     std::string(field) + "'");
  }
  return value;
}

ContextKind parse_context_or_throw(const std::string& text) {
  if (text == "bell") return ContextKind::Bell;
  if (text == "product") return ContextKind::Product;
  throw ParseError("unknown context '" + text + "'");
}

Ordering parse_ordering_or_throw(const std::string& text) {
  const auto ordering = parse_ordering(text);
  if (!ordering) throw ParseError("unknown ordering '" + text + "'");
  return *ordering;
}

int parse_outcome_label_or_throw(ContextKind context,
                                 const std::string& label) {
  const int index = outcome_index_of(context, label.c_str());
  if (index < 0) {
    throw ParseError("outcome label '" + label +
                     "' does not belong to context");
  }
  return index;
}

int parse_sign_or_throw(std::string_view field, const char* what) {
  const int v = parse_number<int>(field, what);
  if (v != 1 && v != -1) {
    throw ParseError(std::string(what) + " must be 1 or -1");
  }
  return v;
}

TrialRecord record_from_fields(std::uint64_t trial_id, Ordering ordering,
                               double alice_theta, int alice_outcome,
                               double bob_theta, int bob_outcome,
                               ContextKind context, int outcome_index,
                               Timestamps ts) {
  return TrialRecord{trial_id,
                     AngleSetting(Agent::Alice, alice_theta),
                     AngleSetting(Agent::Bob, bob_theta),
                     alice_outcome,
                     bob_outcome,
                     context,
                     outcome_index,
                     ordering,
                     ts};
}

json trial_to_json(const TrialRecord& r) {
  return json{{"trial_id", r.trial_id},
              {"ordering", to_string(r.ordering)},
              {"alice_theta", r.alice_setting.theta()},
              {"alice_outcome", r.alice_outcome},
              {"bob_theta", r.bob_setting.theta()},
              {"bob_outcome", r.bob_outcome},
              {"eve_context", to_string(r.eve_context)},
              {"eve_outcome_label", r.eve_report().label()},
              {"timestamps",
               json{{"alice", r.timestamps.alice},
                    {"bob", r.timestamps.bob},
                    {"eve_choice", r.timestamps.eve_choice},
                    {"eve_measure", r.timestamps.eve_measure}}}};
}

TrialRecord trial_from_json(const json& j) {
  const ContextKind context =
      parse_context_or_throw(j.at("eve_context").get<std::string>());
  const json& ts = j.at("timestamps");
  return record_from_fields(
      j.at("trial_id").get<std::uint64_t>(),
      parse_ordering_or_throw(j.at("ordering").get<std::string>()),
      j.at("alice_theta").get<double>(), j.at("alice_outcome").get<int>(),
      j.at("bob_theta").get<double>(), j.at("bob_outcome").get<int>(),
      context,
      parse_outcome_label_or_throw(
          context, j.at("eve_outcome_label").get<std::string>()),
      Timestamps{ts.at("alice").get<int>(), ts.at("bob").get<int>(),
                 ts.at("eve_choice").get<int>(),
                 ts.at("eve_measure").get<int>()});
}

void require_bit(int value, const char* what) {
  if (value != 0 && value != 1) {
    throw ParseError(std::string(what) + " must be 0 or 1");
  }
}

classical::Interpretation parse_interp_or_throw(const std::string& text) {
  if (text.size() == 1) {
    if (const auto interp = classical::interpretation_from_char(text[0])) {
      return *interp;
    }
  }
  throw ParseError("bad interpretation '" + text + "' (want c or p)");
}

classical::PartitionLabel parse_label_or_throw(const std::string& text) {
  const auto label = classical::parse_label(text);
  if (!label) throw ParseError("bad partition label '" + text + "'");
  return *label;
}

void require_consistent_views(const ClassicalDataset& dataset) {
  for (const auto& view : dataset.views) {
    if (view.choices.size() != dataset.rows.size() ||
        view.labels.size() != dataset.rows.size()) {
      throw std::invalid_argument(
          "classical dataset: view length does not match row count");
    }
  }
}

std::string classical_header(std::size_t n_views) {
  std::string header = "row_id,a1,e2,e3,b4";
  for (std::size_t v = 1; v <= n_views; ++v) {
    header += ",cp" + std::to_string(v) + ",label" + std::to_string(v);
  }
  return header;
}

}  // namespace

const char* to_string(Format format) {
  return format == Format::Csv ? "csv" : "json";
}

std::optional<Format> parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  return std::nullopt;
}

Format format_for_path(const std::string& path) {
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    return Format::Json;
  }
  return Format::Csv;
}

std::string trials_to_csv(std::span<const TrialRecord> records) {
  std::string out = kTrialHeader;
  out += '\n';
  for (const TrialRecord& r : records) {
    out += std::to_string(r.trial_id);
    out += ',';
    out += to_string(r.ordering);
    out += ',';
    out += format_double(r.alice_setting.theta());
    out += ',';
    out += std::to_string(r.alice_outcome);
    out += ',';
    out += format_double(r.bob_setting.theta());
    out += ',';
    out += std::to_string(r.bob_outcome);
    out += ',';
    out += to_string(r.eve_context);
    out += ',';
    out += r.eve_report().label();
    out += ',';
    out += std::to_string(r.timestamps.alice);
    out += ',';
    out += std::to_string(r.timestamps.bob);
    out += ',';
    out += std::to_string(r.timestamps.eve_choice);
    out += ',';
    out += std::to_string(r.timestamps.eve_measure);
    out += '\n';
  }
  return out;
}

std::vector<TrialRecord> trials_from_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines[0] != kTrialHeader) {
    throw ParseError("trial log: missing or unexpected CSV header");
  }
  std::vector<TrialRecord> records;
  records.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 12) {
      throw ParseError("trial log line " + std::to_string(i + 1) +
                       ": expected 12 fields, got " +
                       std::to_string(f.size()));
    }
    const ContextKind context = parse_context_or_throw(std::string(f[6]));
    records.push_back(record_from_fields(
        parse_number<std::uint64_t>(f[0], "trial_id"),
        parse_ordering_or_throw(std::string(f[1])),
        parse_number<double>(f[2], "alice_theta"),
        parse_sign_or_throw(f[3], "alice_outcome"),
        parse_number<double>(f[4], "bob_theta"),
        parse_sign_or_throw(f[5], "bob_outcome"), context,
        parse_outcome_label_or_throw(context, std::string(f[7])),
        Timestamps{parse_number<int>(f[8], "alice_ts"),
                   parse_number<int>(f[9], "bob_ts"),
                   parse_number<int>(f[10], "eve_choice_ts"),
                   parse_number<int>(f[11], "eve_measure_ts")}));
  }
  return records;
}

std::string trials_to_json(std::span<const TrialRecord> records) {
  json array = json::array();
  for (const TrialRecord& r : records) array.push_back(trial_to_json(r));
  return array.dump(2) + "\n";
}

std::vector<TrialRecord> trials_from_json(std::string_view text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("trial log: ") + e.what());
  }
  if (!parsed.is_array()) {
    throw ParseError("trial log: top-level JSON value must be an array");
  }
  std::vector<TrialRecord> records;
  records.reserve(parsed.size());
  try {
    for (const json& j : parsed) records.push_back(trial_from_json(j));
  } catch (const json::exception& e) {
    throw ParseError(std::string("trial log: ") + e.what());
  }
  return records;
}

std::string trials_to_string(std::span<const TrialRecord> records,
                             Format format) {
  return format == Format::Csv ? trials_to_csv(records)
                               : trials_to_json(records);
}

std::vector<TrialRecord> trials_from_string(std::string_view text,
                                            Format format) {
  return format == Format::Csv ? trials_from_csv(text)
                               : trials_from_json(text);
}

std::string classical_to_csv(const ClassicalDataset& dataset) {
  require_consistent_views(dataset);
  std::string out = classical_header(dataset.views.size());
  out += '\n';
  for (std::size_t i = 0; i < dataset.rows.size(); ++i) {
    const classical::ClassicalRow& row = dataset.rows[i];
    out += std::to_string(row.row_id);
    out += ',';
    out += std::to_string(row.a1);
    out += ',';
    out += std::to_string(row.e2);
    out += ',';
    out += std::to_string(row.e3);
    out += ',';
    out += std::to_string(row.b4);
    for (const auto& view : dataset.views) {
      out += ',';
      out += classical::to_char(view.choices[i]);
      out += ',';
      out += classical::to_string(view.labels[i]);
    }
    out += '\n';
  }
  return out;
}

ClassicalDataset classical_from_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw ParseError("classical rows: empty file");
  const auto header_fields = split(lines[0], ',');
  if (header_fields.size() < 5 || (header_fields.size() - 5) % 2 != 0) {
    throw ParseError("classical rows: unexpected CSV header");
  }
  const std::size_t n_views = (header_fields.size() - 5) / 2;
  if (lines[0] != classical_header(n_views)) {
    throw ParseError("classical rows: unexpected CSV header");
  }

  ClassicalDataset dataset;
  dataset.views.resize(n_views);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 5 + 2 * n_views) {
      throw ParseError("classical rows line " + std::to_string(i + 1) +
                       ": wrong field count");
    }
    classical::ClassicalRow row{
        parse_number<std::uint64_t>(f[0], "row_id"),
        parse_number<int>(f[1], "a1"), parse_number<int>(f[2], "e2"),
        parse_number<int>(f[3], "e3"), parse_number<int>(f[4], "b4")};
    require_bit(row.a1, "a1");
    require_bit(row.e2, "e2");
    require_bit(row.e3, "e3");
    require_bit(row.b4, "b4");
    dataset.rows.push_back(row);
    for (std::size_t v = 0; v < n_views; ++v) {
      dataset.views[v].choices.push_back(
          parse_interp_or_throw(std::string(f[5 + 2 * v])));
      dataset.views[v].labels.push_back(
          parse_label_or_throw(std::string(f[6 + 2 * v])));
    }
  }
  return dataset;
}

std::string classical_to_json(const ClassicalDataset& dataset) {
  require_consistent_views(dataset);
  json rows = json::array();
  for (const classical::ClassicalRow& row : dataset.rows) {
    rows.push_back(json{{"row_id", row.row_id},
                        {"a1", row.a1},
                        {"e2", row.e2},
                        {"e3", row.e3},
                        {"b4", row.b4}});
  }
  json views = json::array();
  for (const auto& view : dataset.views) {
    json choices = json::array();
    json labels = json::array();
    for (std::size_t i = 0; i < view.choices.size(); ++i) {
      choices.push_back(std::string(1, classical::to_char(view.choices[i])));
      labels.push_back(classical::to_string(view.labels[i]));
    }
    views.push_back(json{{"choices", choices}, {"labels", labels}});
  }
  return json{{"rows", rows}, {"views", views}}.dump(2) + "\n";
}

ClassicalDataset classical_from_json(std::string_view text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("classical rows: ") + e.what());
  }
  ClassicalDataset dataset;
  try {
    for (const json& j : parsed.at("rows")) {
      classical::ClassicalRow row{j.at("row_id").get<std::uint64_t>(),
                                  j.at("a1").get<int>(), j.at("e2").get<int>(),
                                  j.at("e3").get<int>(), j.at("b4").get<int>()};
      require_bit(row.a1, "a1");
      require_bit(row.e2, "e2");
      require_bit(row.e3, "e3");
      require_bit(row.b4, "b4");
      dataset.rows.push_back(row);
    }
    for (const json& jv : parsed.at("views")) {
      classical::LabeledView view;
      for (const json& c : jv.at("choices")) {
        view.choices.push_back(parse_interp_or_throw(c.get<std::string>()));
      }
      for (const json& l : jv.at("labels")) {
        view.labels.push_back(parse_label_or_throw(l.get<std::string>()));
      }
      dataset.views.push_back(std::move(view));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("classical rows: ") + e.what());
  }
  for (const auto& view : dataset.views) {
    if (view.choices.size() != dataset.rows.size() ||
        view.labels.size() != dataset.rows.size()) {
      throw ParseError("classical rows: view length mismatch");
    }
  }
  return dataset;
}

std::string classical_to_string(const ClassicalDataset& dataset,
                                Format format) {
  return format == Format::Csv ? classical_to_csv(dataset)
                               : classical_to_json(dataset);
}

ClassicalDataset classical_from_string(std::string_view text, Format format) {
  return format == Format::Csv ? classical_from_csv(text)
                               : classical_from_json(text);
}

std::string render_table(const ClassicalDataset& dataset) {
  require_consistent_views(dataset);
  std::string out = "  #";
  const std::size_t n_views = dataset.views.empty() ? 0 : dataset.views.size();
  for (std::size_t v = 0; v < std::max<std::size_t>(n_views, 1); ++v) {
    out += " | A1 E2 E3 B4 c/p E ";
  }
  out += '\n';
  char buf[64];
  for (std::size_t i = 0; i < dataset.rows.size(); ++i) {
    const classical::ClassicalRow& row = dataset.rows[i];
    std::snprintf(buf, sizeof(buf), "%3llu",
                  static_cast<unsigned long long>(row.row_id));
    out += buf;
    if (dataset.views.empty()) {
      std::snprintf(buf, sizeof(buf), " | %2d %2d %2d %2d", row.a1, row.e2,
                    row.e3, row.b4);
      out += buf;
    }
    for (const auto& view : dataset.views) {
      std::snprintf(buf, sizeof(buf), " | %2d %2d %2d %2d  %c  %-2s", row.a1,
                    row.e2, row.e3, row.b4,
                    classical::to_char(view.choices[i]),
                    classical::to_string(view.labels[i]));
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace swapsim::io
