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

#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "lutilf/lut_core.hpp"

namespace lutilf {

struct MsbLsb
{
  int msb = 0;
  int lsb = 0;
  bool operator==(const MsbLsb&) const = default;
};

inline MsbLsb split_msb_lsb(int v, int lsbBits = kLsbBits)
{
  return { v >> lsbBits, v & ((1 << lsbBits) - 1) };
}

// Lattice-cell coordinates used for interpolation. Identical to split_msb_lsb
// except that the largest sample, which is itself the top lattice value, lands
// on the top bin with no fractional part. Inputs between the last two lattice
// values still interpolate across that (narrower) top cell.
inline MsbLsb lattice_split(int v, int lsbBits, int maxSample)
{
  if (v == maxSample)
  {
    return { (maxSample >> lsbBits) + 1, 0 };
  }
  return split_msb_lsb(v, lsbBits);
}

// One of the 24 4-simplices of a lattice cell. Vertex k is the cell corner reached
// by stepping +1 along order[0..k-1]; weights sum to W = 2^lsbBits.
struct SimplexCase
{
  std::array<int, 4> order{};
  std::array<std::array<int, 4>, 5> vertexOffsets{};
  std::array<int, 5> weights{};
};

SimplexCase simplex_case(const std::array<int, 4>& lsb, int lsbBits = kLsbBits);

// Triangle of a 2D lattice cell, vertices as (bin0, bin1):
// [0] = P11, [1] = P10 or P01, [2] = P00.
struct TriangleCase
{
  std::array<std::array<int, 2>, 3> vertices{};
  std::array<int, 3> weights{};
};

TriangleCase triangle_2d(int i0, int i1);

// lut2d is a 17x17 table, row-major with the first input as the row.
int interp_2d(std::span<const std::uint8_t> lut2d, int i0, int i1);

// Simplex interpolation of `lut` at sample tuple q; result rounded half up.
int interp_4d(const ClippedLut& lut, const std::array<int, 4>& q);

}   // namespace lutilf
