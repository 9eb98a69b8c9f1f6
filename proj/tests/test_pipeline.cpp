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

#include <random>

#include "lutilf/interp.hpp"
#include "lutilf/pipeline.hpp"
#include "lutilf/transfer.hpp"
#include "reference.hpp"

using namespace lutilf;

TEST_CASE("plane basics")
{
  PlaneU8 p(3, 2, 7);
  CHECK(p.samples().size() == 6);
  p.at(2, 1) = 9;
  CHECK(p.clamped(10, 10) == 9);
  CHECK(p.clamped(-4, -4) == 7);
  CHECK_THROWS_AS(PlaneU8(0, 3), Error);
  CHECK_THROWS_AS(PlaneU8(2, 2, std::vector<std::uint8_t>(3)), Error);
}

TEST_CASE("offset rotation")
{
  const Offset o{ 1, 2 };
  CHECK(rotate_offset(o, 0) == o);
  CHECK(rotate_offset(o, 1) == Offset{ 2, -1 });
  CHECK(rotate_offset(o, 4) == o);
  CHECK(rotate_offset(rotate_offset(o, 1), 3) == o);
  CHECK(rotate_offset({ 0, 0 }, 3) == Offset{ 0, 0 });
}

TEST_CASE("gather")
{
  PlaneU8 p(5, 5);
  for (int y = 0; y < 5; y++)
    for (int x = 0; x < 5; x++)
      p.at(x, y) = std::uint8_t(10 * y + x);

  // I0, right, down, down-right.
  CHECK(gather(p, 2, 2, default_pattern(1), 0) == std::array<int, 4>{ 22, 23, 32, 33 });

  // Rotated taps at the corner replicate the edge.
  const auto corner = gather(p, 0, 0, default_pattern(1), 1);
  CHECK(corner[0] == 0);
  CHECK(corner == std::array<int, 4>{ 0, 10, 0, 10 });
  CHECK(gather(p, 0, 0, default_pattern(1), 2) == std::array<int, 4>{ 0, 0, 0, 0 });

  const PlaneU8 flat(6, 4, 93);
  for (int id = 1; id <= 7; id++)
    for (int r = 0; r < 4; r++)
      CHECK(gather(flat, 5, 0, default_pattern(id), r) == std::array<int, 4>{ 93, 93, 93, 93 });
}

TEST_CASE("per-pixel stage output")
{
  const PipelinePreset v = preset("V");
  const LutSet ident     = cache_lutset(FilterOracle::identity(), v, 0);
  std::mt19937 rng(1);
  const PlaneU8 p = testing::random_plane(rng, 9, 7, 0, 248);
  for (int y = 0; y < p.height(); y++)
    for (int x = 0; x < p.width(); x++)
      CHECK(filter_pixel_stage(p, x, y, v.stages[0], 1, ident) == p.at(x, y));

  const LutSet constant = cache_lutset(
    FilterOracle::external("200", [](const Taps&) { return 200; }), preset("U"), 0);
  CHECK(filter_pixel_stage(p, 3, 3, constant.preset().stages[0], 1, constant) == 200);

  LutSet missing(v, 0);
  CHECK_THROWS_AS(filter_pixel_stage(p, 0, 0, v.stages[0], 1, missing), Error);
}

TEST_CASE("stage output matches the materialized reference")
{
  std::mt19937 rng(2);
  for (int trial = 0; trial < 5; trial++)
  {
    const LutSet set = testing::random_lutset(rng, preset("V"));
    const PlaneU8 p  = testing::random_plane(rng, 16, 16);
    const PlaneU8 s1 = filter_stage(p, 1, set);
    CHECK(s1 == reference::stage(p, set.preset().stages[0], 1, set));
    for (int y = 0; y < 16; y += 5)
      for (int x = 0; x < 16; x += 3)
        CHECK(filter_pixel_stage(p, x, y, set.preset().stages[0], 1, set) == s1.at(x, y));
  }
}

TEST_CASE("identity LUT sets preserve planes below the top lattice cell")
{
  std::mt19937 rng(4);
  for (const char* name : { "U", "V", "F" })
  {
    const LutSet set = cache_lutset(FilterOracle::identity(), preset(name), 0);
    const PlaneU8 p  = testing::random_plane(rng, 13, 11, 0, 248);
    CHECK(filter_plane(p, set) == p);
  }
}

TEST_CASE("identity LUT sets shift top-cell samples by at most one per stage")
{
  const LutSet set = cache_lutset(FilterOracle::identity(), preset("U"), 0);
  PlaneU8 p(16, 1);
  for (int x = 0; x < 16; x++)
  {
    p.at(x, 0) = std::uint8_t(240 + x);
  }
  const PlaneU8 out = filter_plane(p, set);
  const auto pass = [](int v) { return v == 255 ? 255 : (240 * 16 + 15 * (v - 240) + 8) / 16; };
  for (int x = 0; x < 16; x++)
  {
    CHECK(out.at(x, 0) == pass(pass(240 + x)));
    CHECK(p.at(x, 0) - out.at(x, 0) <= 2);
  }
  CHECK(out.at(14, 0) == 252);
  CHECK(out.at(15, 0) == 255);
}

TEST_CASE("output range and determinism across thread counts")
{
  std::mt19937 rng(6);
  const LutSet set = testing::random_lutset(rng, preset("F"));
  const PlaneU8 p  = testing::random_plane(rng, 37, 29);
  const PlaneU8 a  = filter_plane(p, set, 1);
  const PlaneU8 b  = filter_plane(p, set, 4);
  const PlaneU8 c  = filter_plane(p, set, 0);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a.width() == 37);
  CHECK(a.height() == 29);
}

TEST_CASE("extreme weights do not overflow")
{
  PipelinePreset f = preset("F");
  for (StageSpec& s : f.stages)
  {
    s.weightScale = kMaxWeightScale;
    s.weights.assign(s.patterns.size(), 0);
    s.weights[0] = kMaxWeightScale;
  }
  const LutSet set = cache_lutset(FilterOracle::external("max", [](const Taps&) { return 255; }), f, 0);
  const PlaneU8 p(8, 8, 12);
  const PlaneU8 out = filter_plane(p, set);
  CHECK(out == PlaneU8(8, 8, 255));
}

TEST_CASE("preset mismatch is rejected")
{
  const LutSet set = cache_lutset(FilterOracle::identity(), preset("U"), 0);
  const PlaneU8 p(4, 4);
  CHECK_THROWS_AS(filter_plane(p, preset("V"), set), Error);
  CHECK_THROWS_AS(filter_stage(p, 3, set), Error);
}

TEST_CASE("plane rotation")
{
  std::mt19937 rng(8);
  const PlaneU8 p = testing::random_plane(rng, 5, 3);
  const PlaneU8 r = rotate90(p);
  CHECK(r.width() == 3);
  CHECK(r.height() == 5);
  CHECK(rotate90(rotate90(rotate90(r))) == p);
}

TEST_CASE("filtering commutes with a quarter-turn on non-square planes")
{
  std::mt19937 rng(10);
  for (const char* name : { "U", "V", "F" })
  {
    const LutSet set = testing::random_lutset(rng, preset(name));
    const PlaneU8 p  = testing::random_plane(rng, 11, 6);
    CHECK(filter_plane(rotate90(p), set) == rotate90(filter_plane(p, set)));
  }
}
