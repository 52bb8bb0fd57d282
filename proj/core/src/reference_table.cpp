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

namespace swapsim::classical {

namespace {

using PL = PartitionLabel;

// The bundled 30-run dataset with its three alternative views. Stored
// verbatim; the interpretation choice of each view entry is implied by the
// label family (e/o: coincidence, p: singles).
struct FixtureRow {
  int a1;
  int e3;
  PL view1;
  PL view2;
  PL view3;
};

constexpr FixtureRow kFixture[30] = {
    {0, 0, PL::P3, PL::P3, PL::O2},  //  1
    {0, 1, PL::E2, PL::E2, PL::E2},  //  2
    {0, 0, PL::O2, PL::O2, PL::O2},  //  3
    {0, 1, PL::E2, PL::P4, PL::E2},  //  4
    {0, 1, PL::P4, PL::E2, PL::E2},  //  5
    {0, 0, PL::O2, PL::O2, PL::P3},  //  6
    {1, 0, PL::P1, PL::E1, PL::P1},  //  7
    {1, 1, PL::O1, PL::O1, PL::P2},  //  8
    {1, 1, PL::P2, PL::P2, PL::P2},  //  9
    {0, 1, PL::E2, PL::E2, PL::P4},  // 10
    {1, 1, PL::P2, PL::O1, PL::O1},  // 11
    {0, 0, PL::O2, PL::O2, PL::O2},  // 12
    {0, 0, PL::O2, PL::O2, PL::P3},  // 13
    {1, 0, PL::P1, PL::P1, PL::P1},  // 14
    {1, 0, PL::E1, PL::P1, PL::E1},  // 15
    {0, 0, PL::P3, PL::O2, PL::O2},  // 16
    {1, 0, PL::P1, PL::P1, PL::E1},  // 17
    {0, 0, PL::P3, PL::P3, PL::O2},  // 18
    {1, 1, PL::P2, PL::O1, PL::P2},  // 19
    {1, 1, PL::O1, PL::O1, PL::P2},  // 20
    {0, 1, PL::P4, PL::P4, PL::P4},  // 21
    {0, 1, PL::E2, PL::E2, PL::P4},  // 22
    {0, 0, PL::O2, PL::P3, PL::P3},  // 23
    {1, 0, PL::E1, PL::E1, PL::E1},  // 24
    {0, 0, PL::P3, PL::P3, PL::P3},  // 25
    {0, 1, PL::E2, PL::P4, PL::P4},  // 26
    {1, 1, PL::P2, PL::P2, PL::O1},  // 27
    {1, 0, PL::E1, PL::E1, PL::E1},  // 28
    {1, 0, PL::E1, PL::E1, PL::P1},  // 29
    {0, 1, PL::E2, PL::P4, PL::E2},  // 30
};

ReferenceTable build_reference_table() {
  ReferenceTable table;
  table.rows.reserve(30);
  for (auto& view : table.views) {
    view.choices.reserve(30);
    view.labels.reserve(30);
  }
  for (std::uint64_t i = 0; i < 30; ++i) {
    const FixtureRow& f = kFixture[i];
    table.rows.push_back(
        ClassicalRow{i + 1, f.a1, 1 - f.a1, f.e3, 1 - f.e3});
    const PL labels[3] = {f.view1, f.view2, f.view3};
    for (std::size_t v = 0; v < 3; ++v) {
      table.views[v].choices.push_back(interpretation_of(labels[v]));
      table.views[v].labels.push_back(labels[v]);
    }
  }
  return table;
}

}  // namespace

const ReferenceTable& reference_table() {
  static const ReferenceTable table = build_reference_table();
  return table;
}

}  // namespace swapsim::classical
