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

#ifndef SWAPSIM_IO_HPP
#define SWAPSIM_IO_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "swapsim/classical.hpp"
#include "swapsim/protocol.hpp"

/// Deterministic file formats for trial logs and classical rows. Identical
/// inputs serialize to identical bytes; angles are written with 17
/// significant digits in CSV (and with the shortest exact representation in
/// JSON), so every reader recovers the exact doubles that were written.
///
/// Trial log CSV columns, in order:
///   trial_id,ordering,alice_theta,alice_outcome,bob_theta,bob_outcome,
///   eve_context,eve_outcome_label,alice_ts,bob_ts,eve_choice_ts,
///   eve_measure_ts
///
/// Classical CSV columns: row_id,a1,e2,e3,b4 followed by cpK,labelK for
/// each view K = 1..n.
namespace swapsim::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

const char* to_string(Format format);
std::optional<Format> parse_format(const std::string& text);
/// ".json" -> Json, anything else -> Csv.
Format format_for_path(const std::string& path);

std::string trials_to_csv(std::span<const TrialRecord> records);
std::vector<TrialRecord> trials_from_csv(std::string_view text);
std::string trials_to_json(std::span<const TrialRecord> records);
std::vector<TrialRecord> trials_from_json(std::string_view text);

std::string trials_to_string(std::span<const TrialRecord> records,
                             Format format);
std::vector<TrialRecord> trials_from_string(std::string_view text,
                                            Format format);

/// Classical rows with any number of labeled views of the same bits.
struct ClassicalDataset {
  std::vector<classical::ClassicalRow> rows;
  std::vector<classical::LabeledView> views;
};

std::string classical_to_csv(const ClassicalDataset& dataset);
ClassicalDataset classical_from_csv(std::string_view text);
std::string classical_to_json(const ClassicalDataset& dataset);
ClassicalDataset classical_from_json(std::string_view text);

std::string classical_to_string(const ClassicalDataset& dataset,
                                Format format);
ClassicalDataset classical_from_string(std::string_view text, Format format);

/// Fixed-width text table of a classical dataset, one column group per
/// view, the label letters standing in for the background colors of a
/// printed table.
std::string render_table(const ClassicalDataset& dataset);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace swapsim::io

#endif  // SWAPSIM_IO_HPP
