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

#include "lutilf/interp.hpp"

#include <cassert>

namespace lutilf {

namespace {

// Stable descending order of the four LSBs: on ties the lower dimension comes first.
std::array<int, 4> descending_order(const std::array<int, 4>& lsb)
{
  std::array<int, 4> order{ 0, 1, 2, 3 };
  for (int i = 1; i < 4; i++)
  {
    const int d = order[std::size_t(i)];
    int j       = i;
    while (j > 0 && lsb[std::size_t(d)] > lsb[std::size_t(order[std::size_t(j - 1)])])
    {
      order[std::size_t(j)] = order[std::size_t(j - 1)];
      j--;
    }
    order[std::size_t(j)] = d;
  }
  return order;
}

}   // namespace

SimplexCase simplex_case(const std::array<int, 4>& lsb, int lsbBits)
{
  const int w = 1 << lsbBits;
  SimplexCase c;
  c.order = descending_order(lsb);

  std::array<int, 4> corner{};
  c.vertexOffsets[0] = corner;
  for (std::size_t k = 0; k < 4; k++)
  {
    corner[std::size_t(c.order[k])] = 1;
    c.vertexOffsets[k + 1]          = corner;
  }

  const auto l = [&](std::size_t k) { return lsb[std::size_t(c.order[k])]; };
  c.weights = { w - l(0), l(0) - l(1), l(1) - l(2), l(2) - l(3), l(3) };
  return c;
}

TriangleCase triangle_2d(int i0, int i1)
{
  const auto [m0, lx] = lattice_split(i0, kLsbBits, kMaxSample);
  const auto [m1, ly] = lattice_split(i1, kLsbBits, kMaxSample);
  constexpr int w     = 1 << kLsbBits;

  TriangleCase t;
  t.vertices[0] = { m0 + 1, m1 + 1 };
  t.vertices[2] = { m0, m1 };
  if (lx > ly)
  {
    t.vertices[1] = { m0 + 1, m1 };
    t.weights     = { ly, lx - ly, w - lx };
    if (ly == 0)
    {
      t.vertices[0] = t.vertices[1];
    }
  }
  else
  {
    t.vertices[1] = { m0, m1 + 1 };
    t.weights     = { lx, ly - lx, w - ly };
    if (ly == 0)
    {
      t.vertices[1] = t.vertices[2];
    }
    if (lx == 0)
    {
      t.vertices[0] = t.vertices[1];
    }
  }
  return t;
}

int interp_2d(std::span<const std::uint8_t> lut2d, int i0, int i1)
{
  if (lut2d.size() != std::size_t(kBinsPerDim * kBinsPerDim))
  {
    throw Error("2D LUT must hold 17x17 entries");
  }
  const TriangleCase t = triangle_2d(i0, i1);
  int sum              = 0;
  for (std::size_t k = 0; k < 3; k++)
  {
    sum += t.weights[k] * lut2d[std::size_t(t.vertices[k][0] * kBinsPerDim + t.vertices[k][1])];
  }
  return (sum + (1 << (kLsbBits - 1))) >> kLsbBits;
}

int interp_4d(const ClippedLut& lut, const std::array<int, 4>& q)
{
  const int lsbBits = lut.lsbBits();
  const int w       = 1 << lsbBits;
  const int n       = lut.binsPerDim();

  const std::array<std::size_t, 4> stride{ std::size_t(n * n * n), std::size_t(n * n), std::size_t(n), 1 };
  std::array<int, 4> lsb{};
  std::size_t base = 0;
  for (std::size_t d = 0; d < 4; d++)
  {
    assert(q[d] >= 0 && q[d] <= lut.maxSample());
    const MsbLsb s = lattice_split(q[d], lsbBits, lut.maxSample());
    lsb[d]         = s.lsb;
    base += std::size_t(s.msb) * stride[d];
  }

  const std::array<int, 4> order = descending_order(lsb);
  const auto values              = lut.values();

  std::size_t idx = base;
  int prevLsb     = w;
  int sum         = 0;
  for (std::size_t k = 0; k < 4; k++)
  {
    const int cur = lsb[std::size_t(order[k])];
    sum += (prevLsb - cur) * values[idx];
    prevLsb = cur;
    if (cur == 0)
    {
      // Remaining vertices carry no weight; stepping further could leave the
      // table when an input sits on the top lattice plane.
      break;
    }
    idx += stride[std::size_t(order[k])];
  }
  sum += prevLsb * values[idx];

  return lsbBits == 0 ? sum : (sum + (w >> 1)) >> lsbBits;
}

}   // namespace lutilf
