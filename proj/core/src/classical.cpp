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

#include "swapsim/classical.hpp"

#include <stdexcept>

namespace swapsim::classical {

namespace {

void require_valid_row(const ClassicalRow& row) {
  const auto is_bit = [](int b) { return b == 0 || b == 1; };
  if (!is_bit(row.a1) || !is_bit(row.e2) || !is_bit(row.e3) ||
      !is_bit(row.b4)) {
    throw std::invalid_argument("classical row: fields must be bits");
  }
  if (row.e2 != 1 - row.a1 || row.b4 != 1 - row.e3) {
    throw std::invalid_argument(
        "classical row: singlet constraints e2=1-a1, b4=1-e3 violated");
  }
}

}  // namespace

char to_char(Interpretation interp) {
  return interp == Interpretation::Coincidence ? 'c' : 'p';
}

std::optional<Interpretation> interpretation_from_char(char c) {
  if (c == 'c') return Interpretation::Coincidence;
  if (c == 'p') return Interpretation::Singles;
  return std::nullopt;
}

const char* to_string(PartitionLabel label) {
  switch (label) {
    case PartitionLabel::E1: return "e1";
    case PartitionLabel::E2: return "e2";
    case PartitionLabel::O1: return "o1";
    case PartitionLabel::O2: return "o2";
    case PartitionLabel::P1: return "p1";
    case PartitionLabel::P2: return "p2";
    case PartitionLabel::P3: return "p3";
    case PartitionLabel::P4: return "p4";
  }
  throw std::invalid_argument("to_string: bad PartitionLabel");
}

std::optional<PartitionLabel> parse_label(const std::string& text) {
  static const std::pair<const char*, PartitionLabel> table[] = {
      {"e1", PartitionLabel::E1}, {"e2", PartitionLabel::E2},
      {"o1", PartitionLabel::O1}, {"o2", PartitionLabel::O2},
      {"p1", PartitionLabel::P1}, {"p2", PartitionLabel::P2},
      {"p3", PartitionLabel::P3}, {"p4", PartitionLabel::P4}};
  for (const auto& [name, label] : table) {
    if (text == name) return label;
  }
  return std::nullopt;
}

Interpretation interpretation_of(PartitionLabel label) {
  switch (label) {
    case PartitionLabel::E1:
    case PartitionLabel::E2:
    case PartitionLabel::O1:
    case PartitionLabel::O2:
      return Interpretation::Coincidence;
    default:
      return Interpretation::Singles;
  }
}

std::vector<ClassicalRow> generate_rows(std::uint64_t n, RngStream& rng) {
  std::vector<ClassicalRow> rows;
  rows.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const int a1 = rng.bit();
    const int e3 = rng.bit();
    rows.push_back(ClassicalRow{i, a1, 1 - a1, e3, 1 - e3});
  }
  return rows;
}

InterpretationPolicy InterpretationPolicy::fixed(Interpretation interp) {
  return InterpretationPolicy{interp == Interpretation::Coincidence
                                  ? Kind::FixedCoincidence
                                  : Kind::FixedSingles,
                              interp == Interpretation::Coincidence ? 0.0
                                                                    : 1.0};
}

InterpretationPolicy InterpretationPolicy::bernoulli(
    double singles_probability) {
  if (!(singles_probability >= 0.0 && singles_probability <= 1.0)) {
    throw std::invalid_argument(
        "InterpretationPolicy::bernoulli: probability must lie in [0,1]");
  }
  return InterpretationPolicy{Kind::Bernoulli, singles_probability};
}

std::string InterpretationPolicy::to_string() const {
  switch (kind) {
    case Kind::FixedCoincidence: return "fixed:c";
    case Kind::FixedSingles: return "fixed:p";
    case Kind::Bernoulli:
      return "bernoulli:" + std::to_string(singles_probability);
  }
  throw std::logic_error("InterpretationPolicy::to_string: bad kind");
}

std::optional<InterpretationPolicy> InterpretationPolicy::parse(
    const std::string& text) {
  if (text == "fixed:c") return fixed(Interpretation::Coincidence);
  if (text == "fixed:p") return fixed(Interpretation::Singles);
  const std::string prefix = "bernoulli:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      const double q = std::stod(text.substr(prefix.size()));
      if (q >= 0.0 && q <= 1.0) return bernoulli(q);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

std::vector<Interpretation> assign_interpretations(
    std::uint64_t n, const InterpretationPolicy& policy, RngStream& rng) {
  std::vector<Interpretation> choices;
  choices.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    switch (policy.kind) {
      case InterpretationPolicy::Kind::FixedCoincidence:
        choices.push_back(Interpretation::Coincidence);
        break;
      case InterpretationPolicy::Kind::FixedSingles:
        choices.push_back(Interpretation::Singles);
        break;
      case InterpretationPolicy::Kind::Bernoulli:
        choices.push_back(rng.uniform01() < policy.singles_probability
                              ? Interpretation::Singles
                              : Interpretation::Coincidence);
        break;
    }
  }
  return choices;
}

PartitionLabel label_row(const ClassicalRow& row, Interpretation choice) {
  require_valid_row(row);
  const int cell = 2 * row.a1 + row.b4;
  if (choice == Interpretation::Coincidence) {
    switch (cell) {
      case 3: return PartitionLabel::E1;  // (1,1)
      case 0: return PartitionLabel::E2;  // (0,0)
      case 2: return PartitionLabel::O1;  // (1,0)
      default: return PartitionLabel::O2;  // (0,1)
    }
  }
  switch (cell) {
    case 3: return PartitionLabel::P1;
    case 2: return PartitionLabel::P2;
    case 1: return PartitionLabel::P3;
    default: return PartitionLabel::P4;
  }
}

std::map<PartitionLabel, std::vector<std::uint64_t>> partition(
    std::span<const ClassicalRow> rows,
    std::span<const Interpretation> choices) {
  if (rows.size() != choices.size()) {
    throw std::invalid_argument(
        "partition: need exactly one interpretation choice per row");
  }
  std::map<PartitionLabel, std::vector<std::uint64_t>> groups;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    groups[label_row(rows[i], choices[i])].push_back(rows[i].row_id);
  }
  return groups;
}

std::map<PartitionLabel, std::vector<std::uint64_t>> partition(
    std::span<const ClassicalRow> rows, Interpretation choice_for_all) {
  const std::vector<Interpretation> choices(rows.size(), choice_for_all);
  return partition(rows, choices);
}

ReferenceTable replay_reference_table() {
  const ReferenceTable& stored = reference_table();
  ReferenceTable replayed;
  replayed.rows = stored.rows;
  for (std::size_t v = 0; v < 3; ++v) {
    LabeledView view;
    view.choices = stored.views[v].choices;
    view.labels.reserve(stored.rows.size());
    for (std::size_t i = 0; i < stored.rows.size(); ++i) {
      view.labels.push_back(label_row(stored.rows[i], view.choices[i]));
    }
    if (view.labels != stored.views[v].labels) {
      throw std::logic_error(
          "replay_reference_table: recomputed labels disagree with the "
          "stored view " + std::to_string(v + 1));
    }
    replayed.views[v] = std::move(view);
  }
  return replayed;
}

}  // namespace swapsim::classical
