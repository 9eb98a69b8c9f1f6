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
#include <optional>
#include <string>

#include "lutilf/lut_core.hpp"

namespace lutilf {

struct CostVector
{
  std::int64_t int8Add  = 0;
  std::int64_t int8Mul  = 0;
  std::int64_t int32Add = 0;
  std::int64_t int32Mul = 0;

  std::int64_t totalAdd() const { return int8Add + int32Add; }
  std::int64_t totalMul() const { return int8Mul + int32Mul; }

  bool operator==(const CostVector&) const = default;
};

// pJ per operation. The int8 entries come from the usual 45 nm figures; the int32
// entries are the unique solution of the two published per-pixel energy totals.
struct EnergyTable
{
  double int8Add  = 0.03;
  double int8Mul  = 0.2;
  double int32Add = 0.1;
  double int32Mul = 3.1;

  void validate() const;
};

// Published per-pixel operation counts. Only U and V have them; F throws.
CostVector preset_cost(PresetName name);

// Published kMACs/pixel as printed (U truncates 0.138, V rounds 0.396).
std::string published_kmacs(PresetName name);

// Each count multiplied by width*height; throws on 64-bit overflow.
CostVector frame_cost(const CostVector& cv, std::int64_t width, std::int64_t height);

// Worst case max(totalAdd, totalMul) / 1000.
double kmacs(const CostVector& cv);

double energy(const CostVector& cv, const EnergyTable& table = {});

// Best-effort operation count for an arbitrary preset (not calibrated to the
// published U/V vectors).
CostVector analytic_cost(const PipelinePreset& preset);

enum class ReportFormat { Text, KeyValue };

struct CostReportInput
{
  std::string label;
  CostVector perPixel;
  std::int64_t width  = 1920;
  std::int64_t height = 1080;
  EnergyTable table;
  std::optional<std::string> publishedKmacs;
};

std::string cost_report(const CostReportInput& in, ReportFormat format);

}   // namespace lutilf
