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

#include <cstdint>
#include <string>
#include <vector>

#include "lutilf/pipeline.hpp"

namespace lutilf {

struct Region
{
  int x = 0;
  int y = 0;
  int width  = 0;
  int height = 0;
};

struct RdoConfig
{
  int ctuSize        = kDefaultCtuSize;
  double lambda      = 0.0;
  double flagBitsOn  = 1.0;
  double flagBitsOff = 1.0;

  void validate() const;
};

// Conventional codec schedule 0.57 * 2^((qp - 12) / 3).
double lambda_for_qp(int qp);

struct FlagMap
{
  int cols = 0;
  int rows = 0;
  std::vector<std::uint8_t> flags;   // row-major, 1 = filter applied
  std::vector<double> jOn;
  std::vector<double> jOff;

  bool at(int col, int row) const { return flags[std::size_t(row) * std::size_t(cols) + std::size_t(col)] != 0; }

  // Rows of space-separated 0/1, one line per CTU row.
  std::string to_text() const;
};

FlagMap parse_flag_grid(const std::string& text);

struct UsageStats
{
  std::int64_t nTest  = 0;
  std::int64_t nTotal = 0;

  double ratio() const { return nTotal == 0 ? 0.0 : double(nTest) / double(nTotal); }
};

struct RdoResult
{
  FlagMap flags;
  PlaneU8 output;
  UsageStats stats;
};

std::int64_t ssd(const PlaneU8& a, const PlaneU8& b);
std::int64_t ssd(const PlaneU8& a, const PlaneU8& b, const Region& region);

RdoResult decide(const PlaneU8& recon, const PlaneU8& filtered, const PlaneU8& original, const RdoConfig& cfg);

// +infinity for identical planes.
double psnr(const PlaneU8& a, const PlaneU8& b);

}   // namespace lutilf
