// Copyright 2026 The lutilf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <atomic>
#include <cmath>

#include "lutilf/interp.hpp"
#include "lutilf/transfer.hpp"

using namespace lutilf;

TEST_CASE("identity oracle caches the first coordinate")
{
  const ClippedLut lut = cache_clipped_lut(FilterOracle::identity(), 2, 1, 37);
  CHECK(lut.patternId == 2);
  CHECK(lut.stageIndex == 1);
  CHECK(lut.qp == 37);
  for (int b0 = 0; b0 < 17; b0++)
    for (int b1 = 0; b1 < 17; b1 += 4)
      for (int b3 = 0; b3 < 17; b3 += 5)
        CHECK(lut.at(b0, b1, 7, b3) == lattice_value(b0));
}

TEST_CASE("mean oracle entries")
{
  const ClippedLut lut = cache_clipped_lut(FilterOracle::mean(), 1, 1, 0);
  CHECK(lut.at(4, 6, 0, 0) == 40);   // round((64 + 96) / 4)
  for (int b0 = 0; b0 < 17; b0 += 3)
    for (int b1 = 0; b1 < 17; b1 += 2)
      for (int b2 = 0; b2 < 17; b2 += 5)
        for (int b3 = 0; b3 < 17; b3 += 7)
        {
          const double mean = (lattice_value(b0) + lattice_value(b1) + lattice_value(b2) + lattice_value(b3)) / 4.0;
          CHECK(lut.at(b0, b1, b2, b3) == int(std::floor(mean + 0.5)));
        }
}

TEST_CASE("saturating affine oracle")
{
  const ClippedLut lut = cache_clipped_lut(FilterOracle::affine({ 1, 0, 0, 0 }, 1), 1, 1, 0);
  for (int b0 = 0; b0 < 17; b0++)
  {
    CHECK(lut.at(b0, 3, 9, 16) == std::min(lattice_value(b0) + 1, 255));
  }
  CHECK(lut.at(16, 0, 0, 0) == 255);
}

TEST_CASE("caching traverses each lattice tuple once, d0 outermost")
{
  std::atomic<int> calls{ 0 };
  std::vector<Taps> order;
  const auto oracle = FilterOracle::external("probe", [&](const Taps& q) {
    calls++;
    if (order.size() < 3)
    {
      order.push_back(q);
    }
    return 0;
  });
  cache_clipped_lut(oracle, 1, 1, 0);
  CHECK(calls == 83521);
  CHECK(order[0] == Taps{ 0, 0, 0, 0 });
  CHECK(order[1] == Taps{ 0, 0, 0, 16 });
  CHECK(order[2] == Taps{ 0, 0, 0, 32 });
}

TEST_CASE("caching is deterministic")
{
  const auto oracle = FilterOracle::affine({ 0.3, 0.2, 0.4, 0.1 }, 3);
  const ClippedLut a = cache_clipped_lut(oracle, 1, 1, 0);
  const ClippedLut b = cache_clipped_lut(oracle, 1, 1, 0);
  CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin()));
}

TEST_CASE("out-of-range oracle is rejected")
{
  const auto bad = FilterOracle::external("bad", [](const Taps& q) { return q[0] + q[1]; });
  CHECK_THROWS_AS(cache_clipped_lut(bad, 1, 1, 0), Error);
  const auto neg = FilterOracle::external("neg", [](const Taps&) { return -1; });
  CHECK_THROWS_AS(cache_clipped_lut(neg, 1, 1, 0), Error);
}

TEST_CASE("interpolated cache agrees with the oracle on every lattice input")
{
  const auto oracle = FilterOracle::external("wiggle", [](const Taps& q) {
    return (q[0] * 7 + q[1] * 3 + q[2] * q[3] / 255) % 256;
  });
  const ClippedLut lut = cache_clipped_lut(oracle, 1, 1, 0);
  for (int b0 = 0; b0 < 17; b0++)
    for (int b1 = 0; b1 < 17; b1++)
      for (int b2 = 0; b2 < 17; b2++)
        for (int b3 = 0; b3 < 17; b3++)
        {
          const Taps q{ lattice_value(b0), lattice_value(b1), lattice_value(b2), lattice_value(b3) };
          REQUIRE(interp_4d(lut, q) == oracle(q));
        }
}

TEST_CASE("full LUT builder")
{
  const FullLut id = build_full_lut(FilterOracle::identity(), 4);
  CHECK(id.values.size() == 65536);
  CHECK(id.at(9, 1, 2, 3) == 9);
  CHECK(id.at(15, 15, 15, 15) == 15);

  const FullLut mean = build_full_lut(FilterOracle::mean(3), 2);
  CHECK(mean.values.size() == 256);
  for (int a = 0; a < 4; a++)
    for (int b = 0; b < 4; b++)
      for (int c = 0; c < 4; c++)
        for (int d = 0; d < 4; d++)
          CHECK(mean.at(a, b, c, d) == int(std::floor((a + b + c + d) / 4.0 + 0.5)));

  CHECK_THROWS_AS(build_full_lut(FilterOracle::identity(), 8), Error);
  CHECK_THROWS_AS(build_full_lut(FilterOracle::identity(), 7), Error);
  CHECK_THROWS_AS(build_full_lut(FilterOracle::identity(), 0), Error);
  CHECK_THROWS_AS(build_full_lut(FilterOracle::affine({ 1, 0, 0, 0 }, 1, 255), 4), Error);
}

TEST_CASE("clipped vs full deviation")
{
  SUBCASE("affine oracles stay within one step")
  {
    for (const FilterOracle& o : { FilterOracle::mean(15), FilterOracle::affine({ 1, 0, 0, 0 }, 1, 15),
                                   FilterOracle::affine({ 0.5, 0.5, 0, 0 }, 0, 15),
                                   FilterOracle::affine({ 1, 0.25, -0.25, 0 }, 0, 15) })
    {
      const DeviationReport r = clipped_vs_full_report(o, 2, 2, 4);
      CHECK(r.inputs == 65536);
      CHECK(r.maxAbs <= 1);
    }
  }

  SUBCASE("identity is reproduced at reduced depth")
  {
    // At 4 bits the top cell spans [12, 15] with 4 LSB steps; 13 and 14 still round
    // back onto themselves and 15 is a lattice value.
    const DeviationReport r = clipped_vs_full_report(FilterOracle::identity(), 2, 2, 4);
    CHECK(r.maxAbs == 0);
    CHECK(r.meanAbs == 0.0);

    const DeviationReport fine = clipped_vs_full_report(FilterOracle::identity(), 3, 1, 4);
    CHECK(fine.maxAbs == 0);
  }

  SUBCASE("clamp-heavy oracle is reported, not bounded")
  {
    const auto sat          = FilterOracle::external("sat", [](const Taps& q) { return std::min(q[0] + q[1], 15); });
    const DeviationReport r = clipped_vs_full_report(sat, 2, 2, 4);
    CHECK(r.maxAbs >= 0);
    CHECK(r.meanAbs > 0.0);
    CHECK(r.meanAbs < 1.0);
  }

  CHECK_THROWS_AS(clipped_vs_full_report(FilterOracle::identity(), 2, 1, 4), Error);
}

TEST_CASE("cache_lutset fills every preset slot")
{
  const LutSet set = cache_lutset(FilterOracle::identity(), preset("V"), 27);
  CHECK(set.luts().size() == 6);
  CHECK(set.qp() == 27);
  CHECK_NOTHROW(set.validate());
  CHECK(set.at(2, 3).qp == 27);
}
