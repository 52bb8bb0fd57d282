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

#ifndef SWAPSIM_CLASSICAL_HPP
#define SWAPSIM_CLASSICAL_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "swapsim/rng.hpp"

/// The classical analogue: two independent classical singlet sources in one
/// measurement direction. Source one feeds bits A1 and E2 = 1-A1, source
/// two feeds E3 and B4 = 1-E3. The E2/E3 columns can be read either as
/// coincidence measurements (choice `c`) or as single events (choice `p`);
/// the choice relabels the rows but never changes the stored bits.
namespace swapsim::classical {

/// One run of the classical experiment. Invariants: e2 = 1-a1, b4 = 1-e3.
struct ClassicalRow {
  std::uint64_t row_id;
  int a1;
  int e2;
  int e3;
  int b4;

  friend bool operator==(const ClassicalRow&, const ClassicalRow&) = default;
};

/// How the inner columns E2/E3 of a row are read.
enum class Interpretation { Coincidence, Singles };  // printed as c / p

char to_char(Interpretation interp);
std::optional<Interpretation> interpretation_from_char(char c);

/// Row classes. The coincidence view groups rows by the parity of
/// (A1, B4): e-labels for equal bits, o-labels for opposite ones. The
/// singles view separates all four (A1, B4) cells.
enum class PartitionLabel { E1, E2, O1, O2, P1, P2, P3, P4 };

const char* to_string(PartitionLabel label);
std::optional<PartitionLabel> parse_label(const std::string& text);

/// The interpretation that a label belongs to (e/o -> Coincidence,
/// p -> Singles).
Interpretation interpretation_of(PartitionLabel label);

/// Draws `n` rows: a1 and e3 are independent fair bits (two uniform draws
/// per row, a1 first); the partner bits follow from the singlet constraint.
std::vector<ClassicalRow> generate_rows(std::uint64_t n, RngStream& rng);

/// Per-row interpretation choices. Fixed policies consume no draws; the
/// Bernoulli policy consumes one uniform draw per row and picks Singles
/// with probability `singles_probability`.
struct InterpretationPolicy {
  enum class Kind { FixedCoincidence, FixedSingles, Bernoulli };

  Kind kind = Kind::Bernoulli;
  double singles_probability = 0.5;

  static InterpretationPolicy fixed(Interpretation interp);
  static InterpretationPolicy bernoulli(double singles_probability);

  std::string to_string() const;
  static std::optional<InterpretationPolicy> parse(const std::string& text);
};

std::vector<Interpretation> assign_interpretations(
    std::uint64_t n, const InterpretationPolicy& policy, RngStream& rng);

/// The label of a row under a choice. Pure in (a1, b4, choice):
///   c: e1 at (1,1), e2 at (0,0), o1 at (1,0), o2 at (0,1)
///   p: p1 at (1,1), p2 at (1,0), p3 at (0,1), p4 at (0,0)
/// Throws std::invalid_argument if the row violates the singlet
/// constraints.
PartitionLabel label_row(const ClassicalRow& row, Interpretation choice);

/// Groups row ids by label under per-row choices (one per row, in order).
/// The result is a disjoint, exhaustive partition of the input.
std::map<PartitionLabel, std::vector<std::uint64_t>> partition(
    std::span<const ClassicalRow> rows,
    std::span<const Interpretation> choices);
std::map<PartitionLabel, std::vector<std::uint64_t>> partition(
    std::span<const ClassicalRow> rows, Interpretation choice_for_all);

/// One labeled view of a row list: per-row choices plus the labels they
/// induce.
struct LabeledView {
  std::vector<Interpretation> choices;
  std::vector<PartitionLabel> labels;
};

/// The bundled reference dataset: 30 fixed rows with three alternative
/// labeled views of the same bits. Stored verbatim as data, not
/// regenerated.
struct ReferenceTable {
  std::vector<ClassicalRow> rows;
  std::array<LabeledView, 3> views;
};

const ReferenceTable& reference_table();

/// Recomputes every label of the reference dataset with label_row and
/// checks it against the stored view. A mismatch throws std::logic_error
/// (it would mean the labeling logic regressed); on success returns the
/// freshly computed table.
ReferenceTable replay_reference_table();

}  // namespace swapsim::classical

#endif  // SWAPSIM_CLASSICAL_HPP
