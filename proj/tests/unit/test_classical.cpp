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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "swapsim/classical.hpp"

using namespace swapsim;
using namespace swapsim::classical;

namespace {

// The three printed label columns of the bundled 30-row dataset.
const std::vector<std::string> kView1 = {
    "p3", "e2", "o2", "e2", "p4", "o2", "p1", "o1", "p2", "e2",
    "p2", "o2", "o2", "p1", "e1", "p3", "p1", "p3", "p2", "o1",
    "p4", "e2", "o2", "e1", "p3", "e2", "p2", "e1", "e1", "e2"};
const std::vector<std::string> kView2 = {
    "p3", "e2", "o2", "p4", "e2", "o2", "e1", "o1", "p2", "e2",
    "o1", "o2", "o2", "p1", "p1", "o2", "p1", "p3", "o1", "o1",
    "p4", "e2", "p3", "e1", "p3", "p4", "p2", "e1", "e1", "p4"};
const std::vector<std::string> kView3 = {
    "o2", "e2", "o2", "e2", "e2", "p3", "p1", "p2", "p2", "p4",
    "o1", "o2", "p3", "p1", "e1", "o2", "e1", "o2", "p2", "p2",
    "p4", "p4", "p3", "e1", "p3", "p4", "o1", "e1", "p1", "e2"};

ClassicalRow make_row(std::uint64_t id, int a1, int e3) {
  return ClassicalRow{id, a1, 1 - a1, e3, 1 - e3};
}

}  // namespace

TEST_CASE("generated rows obey the singlet constraints") {
  RngStream rng(101);
  const auto rows = generate_rows(100000, rng);
  REQUIRE(rows.size() == 100000);
  long long product_sum = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ClassicalRow& row = rows[i];
    CHECK(row.row_id == i);
    REQUIRE((row.a1 ^ row.e2) == 1);
    REQUIRE((row.e3 ^ row.b4) == 1);
    product_sum += (1 - 2 * row.a1) * (1 - 2 * row.b4);
  }
  // the two sources are independent: cross-correlation ~ 0 within 3 sigma
  const double corr =
      static_cast<double>(product_sum) / static_cast<double>(rows.size());
  CHECK(std::abs(corr) <= 3.0 / std::sqrt(static_cast<double>(rows.size())));

  RngStream empty_rng(1);
  CHECK(generate_rows(0, empty_rng).empty());
}

TEST_CASE("label_row is a pure function of (a1, b4, choice)") {
  // coincidence view
  CHECK(label_row(make_row(0, 0, 0), Interpretation::Coincidence) ==
        PartitionLabel::O2);  // (a1,b4) = (0,1)
  CHECK(label_row(make_row(0, 0, 1), Interpretation::Coincidence) ==
        PartitionLabel::E2);  // (0,0)
  CHECK(label_row(make_row(0, 1, 0), Interpretation::Coincidence) ==
        PartitionLabel::E1);  // (1,1)
  CHECK(label_row(make_row(0, 1, 1), Interpretation::Coincidence) ==
        PartitionLabel::O1);  // (1,0)
  // singles view
  CHECK(label_row(make_row(0, 0, 0), Interpretation::Singles) ==
        PartitionLabel::P3);
  CHECK(label_row(make_row(0, 0, 1), Interpretation::Singles) ==
        PartitionLabel::P4);
  CHECK(label_row(make_row(0, 1, 0), Interpretation::Singles) ==
        PartitionLabel::P1);
  CHECK(label_row(make_row(0, 1, 1), Interpretation::Singles) ==
        PartitionLabel::P2);
}

TEST_CASE("label_row reproduces the printed examples") {
  CHECK(label_row(ClassicalRow{2, 0, 1, 1, 0}, Interpretation::Coincidence) ==
        PartitionLabel::E2);
  CHECK(label_row(ClassicalRow{7, 1, 0, 0, 1}, Interpretation::Singles) ==
        PartitionLabel::P1);
  CHECK(label_row(ClassicalRow{1, 0, 1, 0, 1}, Interpretation::Singles) ==
        PartitionLabel::P3);
}

TEST_CASE("label_row rejects rows violating the singlet constraints") {
  CHECK_THROWS_AS(label_row(ClassicalRow{0, 0, 0, 1, 0},
                            Interpretation::Coincidence),
                  std::invalid_argument);
  CHECK_THROWS_AS(label_row(ClassicalRow{0, 1, 0, 1, 1},
                            Interpretation::Singles),
                  std::invalid_argument);
  CHECK_THROWS_AS(label_row(ClassicalRow{0, 2, -1, 1, 0},
                            Interpretation::Coincidence),
                  std::invalid_argument);
}

TEST_CASE("labels imply their interpretation") {
  CHECK(interpretation_of(PartitionLabel::E1) == Interpretation::Coincidence);
  CHECK(interpretation_of(PartitionLabel::O2) == Interpretation::Coincidence);
  CHECK(interpretation_of(PartitionLabel::P1) == Interpretation::Singles);
  CHECK(interpretation_of(PartitionLabel::P4) == Interpretation::Singles);
  CHECK(parse_label("o1") == PartitionLabel::O1);
  CHECK(!parse_label("q7").has_value());
  CHECK(to_char(Interpretation::Coincidence) == 'c');
  CHECK(interpretation_from_char('p') == Interpretation::Singles);
  CHECK(!interpretation_from_char('x').has_value());
}

TEST_CASE("partition groups rows disjointly and exhaustively") {
  RngStream rng(303);
  const auto rows = generate_rows(2000, rng);
  RngStream choice_rng(304);
  const auto choices = assign_interpretations(
      rows.size(), InterpretationPolicy::bernoulli(0.5), choice_rng);

  const auto groups = partition(rows, choices);
  std::set<std::uint64_t> seen;
  std::size_t total = 0;
  for (const auto& [label, ids] : groups) {
    total += ids.size();
    for (std::uint64_t id : ids) {
      CHECK(seen.insert(id).second);
      const ClassicalRow& row = rows[id];
      // every label pins the (a1, b4) cell
      switch (label) {
        case PartitionLabel::E1:
        case PartitionLabel::P1:
          CHECK((row.a1 == 1 && row.b4 == 1));
          break;
        case PartitionLabel::E2:
        case PartitionLabel::P4:
          CHECK((row.a1 == 0 && row.b4 == 0));
          break;
        case PartitionLabel::O1:
        case PartitionLabel::P2:
          CHECK((row.a1 == 1 && row.b4 == 0));
          break;
        case PartitionLabel::O2:
        case PartitionLabel::P3:
          CHECK((row.a1 == 0 && row.b4 == 1));
          break;
      }
    }
  }
  CHECK(total == rows.size());

  const auto all_coincidence = partition(rows, Interpretation::Coincidence);
  for (const auto& [label, ids] : all_coincidence) {
    CHECK(interpretation_of(label) == Interpretation::Coincidence);
  }

  const std::vector<Interpretation> short_choices(rows.size() - 1,
                                                  Interpretation::Singles);
  CHECK_THROWS_AS(partition(rows, short_choices), std::invalid_argument);
}

TEST_CASE("interpretation policies") {
  RngStream rng(9);
  const auto fixed_c = assign_interpretations(
      5, InterpretationPolicy::fixed(Interpretation::Coincidence), rng);
  for (Interpretation i : fixed_c) CHECK(i == Interpretation::Coincidence);

  const auto mixed =
      assign_interpretations(2000, InterpretationPolicy::bernoulli(0.5), rng);
  std::size_t singles = 0;
  for (Interpretation i : mixed) singles += (i == Interpretation::Singles);
  CHECK(singles > 800);
  CHECK(singles < 1200);

  CHECK_THROWS_AS(InterpretationPolicy::bernoulli(-0.1),
                  std::invalid_argument);
  CHECK(InterpretationPolicy::parse("fixed:c").has_value());
  CHECK(InterpretationPolicy::parse("bernoulli:0.75")->singles_probability ==
        doctest::Approx(0.75));
  CHECK(!InterpretationPolicy::parse("always").has_value());
}

TEST_CASE("the reference table stores the printed data verbatim") {
  const ReferenceTable& table = reference_table();
  REQUIRE(table.rows.size() == 30);
  for (std::size_t i = 0; i < 30; ++i) {
    const ClassicalRow& row = table.rows[i];
    CHECK(row.row_id == i + 1);
    CHECK((row.a1 ^ row.e2) == 1);
    CHECK((row.e3 ^ row.b4) == 1);
  }
  const std::vector<const std::vector<std::string>*> printed = {
      &kView1, &kView2, &kView3};
  for (std::size_t v = 0; v < 3; ++v) {
    REQUIRE(table.views[v].labels.size() == 30);
    REQUIRE(table.views[v].choices.size() == 30);
    for (std::size_t i = 0; i < 30; ++i) {
      CHECK(std::string(to_string(table.views[v].labels[i])) ==
            (*printed[v])[i]);
      CHECK(table.views[v].choices[i] ==
            interpretation_of(table.views[v].labels[i]));
    }
  }

  // spot-check the printed disagreements between views
  CHECK(table.views[0].labels[3] == PartitionLabel::E2);  // row 4, view 1
  CHECK(table.views[1].labels[3] == PartitionLabel::P4);  // row 4, view 2
  CHECK(table.views[0].labels[0] == PartitionLabel::P3);  // row 1, views 1-2
  CHECK(table.views[2].labels[0] == PartitionLabel::O2);  // row 1, view 3
}

TEST_CASE("replaying the reference table reproduces all 90 labels") {
  const ReferenceTable replayed = replay_reference_table();
  const ReferenceTable& stored = reference_table();
  for (std::size_t v = 0; v < 3; ++v) {
    CHECK(replayed.views[v].labels == stored.views[v].labels);
    CHECK(replayed.views[v].choices == stored.views[v].choices);
  }
  CHECK(replayed.rows == stored.rows);
}

TEST_CASE("views relabel but never change the stored bits") {
  RngStream rng(404);
  const auto rows = generate_rows(100, rng);
  const auto copy = rows;
  (void)partition(rows, Interpretation::Coincidence);
  (void)partition(rows, Interpretation::Singles);
  CHECK(rows == copy);
}
