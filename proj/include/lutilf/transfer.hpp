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
#include <functional>
#include <string>
#include <vector>

#include "lutilf/lut_core.hpp"

namespace lutilf {

using Taps = std::array<int, 4>;

// Deterministic map from (target, ref1, ref2, ref3) to one output sample.
struct FilterOracle
{
  enum class Kind { Identity, Affine, Mean, External };

  Kind kind = Kind::Identity;
  std::string name;
  std::function<int(const Taps&)> fn;

  int operator()(const Taps& q) const { return fn(q); }

  static FilterOracle identity();
  // clamp(round(sum of c_i * q_i + bias)) into [0, maxValue].
  static FilterOracle affine(std::array<double, 4> coeffs, double bias, int maxValue = kMaxSample);
  // clamp(round(mean of the 4 taps)); rounding half up.
  static FilterOracle mean(int maxValue = kMaxSample);
  // Wraps an arbitrary function, e.g. an offline network evaluator.
  static FilterOracle external(std::string name, std::function<int(const Taps&)> fn);
};

// Evaluates `oracle` at every lattice tuple, d0 outermost. Throws Error if the oracle
// leaves the sample range.
ClippedLut cache_clipped_lut(const FilterOracle& oracle, int patternId, int stageIndex, int qp,
                             int msbBits = kMsbBits, int lsbBits = kLsbBits);

// Builds one LUT per (stage, pattern) of the preset from the same oracle.
LutSet cache_lutset(const FilterOracle& oracle, const PipelinePreset& preset, int qp);

inline constexpr int kMaxFullLutBitDepth = 6;

// Exhaustive table over all (2^bitDepth)^4 inputs; testing aid only.
struct FullLut
{
  int bitDepth = 0;
  std::vector<std::uint8_t> values;

  int side() const { return 1 << bitDepth; }
  std::uint8_t at(int a, int b, int c, int d) const
  {
    const std::size_t n = std::size_t(side());
    return values[((std::size_t(a) * n + std::size_t(b)) * n + std::size_t(c)) * n + std::size_t(d)];
  }
};

FullLut build_full_lut(const FilterOracle& oracle, int bitDepth);

struct DeviationReport
{
  int maxAbs = 0;
  double meanAbs = 0.0;
  std::size_t inputs = 0;
};

// Interpolated clipped-LUT output against full-LUT truth over every input at
// bitDepth = msbBits + lsbBits.
DeviationReport clipped_vs_full_report(const FilterOracle& oracle, int msbBits, int lsbBits, int bitDepth);

}   // namespace lutilf
