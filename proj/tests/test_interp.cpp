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

#include <numeric>
#include <random>

#include "lutilf/interp.hpp"
#include "lutilf/transfer.hpp"
#include "reference.hpp"

using namespace lutilf;

TEST_CASE("MSB/LSB split")
{
  CHECK(split_msb_lsb(74) == MsbLsb{ 4, 10 });
  CHECK(split_msb_lsb(98) == MsbLsb{ 6, 2 });
  CHECK(split_msb_lsb(0) == MsbLsb{ 0, 0 });
  CHECK(split_msb_lsb(255) == MsbLsb{ 15, 15 });
  for (int v = 0; v < 256; v++)
  {
    const MsbLsb s = split_msb_lsb(v);
    CHECK(16 * s.msb + s.lsb == v);
  }
}

TEST_CASE("2D worked example (74, 98)")
{
  const TriangleCase t = triangle_2d(74, 98);
  CHECK(t.vertices[0] == std::array<int, 2>{ 5, 7 });   // P11
  CHECK(t.vertices[1] == std::array<int, 2>{ 5, 6 });   // P10, since Lx > Ly
  CHECK(t.vertices[2] == std::array<int, 2>{ 4, 6 });   // P00
  CHECK(t.weights == std::array<int, 3>{ 2, 8, 6 });

  std::vector<std::uint8_t> linear(17 * 17);
  for (int i = 0; i < 17; i++)
    for (int j = 0; j < 17; j++)
      linear[std::size_t(i * 17 + j)] = std::uint8_t(std::min(16 * i, 255));
  // (2*80 + 8*80 + 6*64) / 16
  CHECK(interp_2d(linear, 74, 98) == 74);

  const TriangleCase mirrored = triangle_2d(98, 74);
  CHECK(mirrored.vertices[1] == std::array<int, 2>{ 6, 5 });   // P01 branch
  CHECK(mirrored.weights == std::array<int, 3>{ 2, 8, 6 });
}

TEST_CASE("2D lattice inputs are exact")
{
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> u(0, 255);
  std::vector<std::uint8_t> lut(17 * 17);
  for (auto& v : lut)
  {
    v = std::uint8_t(u(rng));
  }
  for (int a = 0; a <= 15; a++)
    for (int b = 0; b <= 15; b++)
      CHECK(interp_2d(lut, 16 * a, 16 * b) == lut[std::size_t(a * 17 + b)]);
  CHECK_THROWS_AS(interp_2d(std::vector<std::uint8_t>(10), 0, 0), Error);
}

TEST_CASE("simplex case examples")
{
  SimplexCase c = simplex_case({ 0, 0, 0, 0 });
  CHECK(c.weights == std::array<int, 5>{ 16, 0, 0, 0, 0 });

  c = simplex_case({ 10, 2, 0, 0 });
  CHECK(c.order[0] == 0);
  CHECK(c.order[1] == 1);
  CHECK(c.weights == std::array<int, 5>{ 6, 8, 2, 0, 0 });
  CHECK(c.vertexOffsets[0] == std::array<int, 4>{ 0, 0, 0, 0 });
  CHECK(c.vertexOffsets[1] == std::array<int, 4>{ 1, 0, 0, 0 });
  CHECK(c.vertexOffsets[2] == std::array<int, 4>{ 1, 1, 0, 0 });
  CHECK(c.vertexOffsets[4] == std::array<int, 4>{ 1, 1, 1, 1 });

  c = simplex_case({ 5, 5, 5, 5 });
  CHECK(c.weights == std::array<int, 5>{ 11, 0, 0, 0, 5 });
  CHECK(c.order == std::array<int, 4>{ 0, 1, 2, 3 });
}

TEST_CASE("simplex case agrees with permutation enumeration on all LSB tuples")
{
  int distinctCases = 0;
  std::array<bool, 256> seen{};
  for (int a = 0; a < 16; a++)
    for (int b = 0; b < 16; b++)
      for (int c = 0; c < 16; c++)
        for (int d = 0; d < 16; d++)
        {
          const std::array<int, 4> lsb{ a, b, c, d };
          const SimplexCase sc        = simplex_case(lsb);
          const reference::RefSimplex ref = reference::simplex(lsb, 16);
          REQUIRE(sc.order == ref.perm);
          REQUIRE(sc.weights == ref.weights);
          REQUIRE(std::accumulate(sc.weights.begin(), sc.weights.end(), 0) == 16);
          for (int w : sc.weights)
          {
            REQUIRE(w >= 0);
          }
          const int key = sc.order[0] * 64 + sc.order[1] * 16 + sc.order[2] * 4 + sc.order[3];
          if (!seen[std::size_t(key)])
          {
            seen[std::size_t(key)] = true;
            distinctCases++;
          }
        }
  CHECK(distinctCases == 24);
}

TEST_CASE("interp_4d matches the reference on random queries")
{
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> u(0, 255);
  for (int l = 0; l < 3; l++)
  {
    const ClippedLut lut = testing::random_lut(rng);
    for (int i = 0; i < 20000; i++)
    {
      const std::array<int, 4> q{ u(rng), u(rng), u(rng), u(rng) };
      REQUIRE(interp_4d(lut, q) == reference::interp(lut, q));
    }
  }
}

TEST_CASE("interp_4d is exact on lattice points")
{
  std::mt19937 rng(5);
  const ClippedLut lut = testing::random_lut(rng);
  for (int a = 0; a <= 15; a++)
    for (int b = 0; b <= 15; b++)
      for (int c = 0; c <= 15; c++)
        for (int d = 0; d <= 15; d++)
          REQUIRE(interp_4d(lut, { 16 * a, 16 * b, 16 * c, 16 * d }) == lut.at(a, b, c, d));
}

TEST_CASE("interp_4d reproduces affine tables")
{
  const ClippedLut first = cache_clipped_lut(FilterOracle::identity(), 1, 1, 0);
  CHECK(interp_4d(first, { 74, 98, 3, 251 }) == 74);

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> u(0, 255);
  for (int i = 0; i < 1000; i++)
  {
    const std::array<int, 4> q{ u(rng), u(rng), u(rng), u(rng) };
    const int got = interp_4d(first, q);
    CHECK(std::abs(got - q[0]) <= 1);
    if (q[0] <= 248 || q[0] == 255)
    {
      CHECK(got == q[0]);
    }
  }

  // Inside the top cell [240, 255] the 15-wide interval is spread over 16 LSB steps:
  // 240 + round(15 * l / 16). 255 itself is the top lattice value and is exact.
  for (int l = 0; l < 15; l++)
  {
    CHECK(interp_4d(first, { 240 + l, 0, 0, 0 }) == (240 * 16 + 15 * l + 8) / 16);
  }
  CHECK(interp_4d(first, { 254, 0, 0, 0 }) == 253);
  CHECK(interp_4d(first, { 255, 0, 0, 0 }) == 255);
  CHECK(interp_4d(first, { 255, 255, 255, 255 }) == 255);

  const ClippedLut avg = cache_clipped_lut(FilterOracle::mean(), 1, 1, 0);
  for (int i = 0; i < 1000; i++)
  {
    const std::array<int, 4> q{ u(rng), u(rng), u(rng), u(rng) };
    CHECK(std::abs(interp_4d(avg, q) - FilterOracle::mean()(q)) <= 1);
  }
}

TEST_CASE("interp_4d is monotone in the table")
{
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> u(0, 255);
  std::uniform_int_distribution<int> bump(0, 20);
  const ClippedLut lo = testing::random_lut(rng);
  ClippedLut hi       = lo;
  for (auto& v : hi.values())
  {
    v = std::uint8_t(std::min(255, v + bump(rng)));
  }
  for (int i = 0; i < 20000; i++)
  {
    const std::array<int, 4> q{ u(rng), u(rng), u(rng), u(rng) };
    REQUIRE(interp_4d(hi, q) >= interp_4d(lo, q));
  }
}

TEST_CASE("interp_4d at reduced depth")
{
  ClippedLut lut(2, 2);
  CHECK(lut.binsPerDim() == 5);
  CHECK(lut.maxSample() == 15);
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> u(0, 15);
  for (auto& v : lut.values())
  {
    v = std::uint8_t(u(rng));
  }
  for (int a = 0; a < 16; a++)
    for (int b = 0; b < 16; b++)
      for (int c = 0; c < 16; c++)
        for (int d = 0; d < 16; d++)
          REQUIRE(interp_4d(lut, { a, b, c, d }) == reference::interp(lut, { a, b, c, d }));
}
