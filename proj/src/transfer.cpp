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

#include "lutilf/transfer.hpp"

#include <cmath>
#include <cstdlib>

#include "lutilf/interp.hpp"

namespace lutilf {

FilterOracle FilterOracle::identity()
{
  return { Kind::Identity, "identity", [](const Taps& q) { return q[0]; } };
}

FilterOracle FilterOracle::affine(std::array<double, 4> coeffs, double bias, int maxValue)
{
  return { Kind::Affine, "affine", [coeffs, bias, maxValue](const Taps& q) {
            double v = bias;
            for (std::size_t i = 0; i < 4; i++)
            {
              v += coeffs[i] * q[i];
            }
            return std::clamp(int(std::floor(v + 0.5)), 0, maxValue);
          } };
}

FilterOracle FilterOracle::mean(int maxValue)
{
  return { Kind::Mean, "mean", [maxValue](const Taps& q) {
            return std::clamp((q[0] + q[1] + q[2] + q[3] + 2) >> 2, 0, maxValue);
          } };
}

FilterOracle FilterOracle::external(std::string name, std::function<int(const Taps&)> fn)
{
  return { Kind::External, std::move(name), std::move(fn) };
}

ClippedLut cache_clipped_lut(const FilterOracle& oracle, int patternId, int stageIndex, int qp, int msbBits,
                             int lsbBits)
{
  ClippedLut lut(msbBits, lsbBits);
  lut.patternId  = patternId;
  lut.stageIndex = stageIndex;
  lut.qp         = qp;

  const int bins = lut.binsPerDim();
  const int maxv = lut.maxSample();
  std::vector<int> lattice(std::size_t(bins), 0);
  for (int b = 0; b < bins; b++)
  {
    lattice[std::size_t(b)] = lattice_value(b, msbBits, lsbBits);
  }

  auto out = lut.values().begin();
  for (int b0 = 0; b0 < bins; b0++)
  {
    for (int b1 = 0; b1 < bins; b1++)
    {
      for (int b2 = 0; b2 < bins; b2++)
      {
        for (int b3 = 0; b3 < bins; b3++)
        {
          const int v = oracle({ lattice[std::size_t(b0)], lattice[std::size_t(b1)], lattice[std::size_t(b2)],
                                 lattice[std::size_t(b3)] });
          if (v < 0 || v > maxv)
          {
            throw Error("oracle '" + oracle.name + "' returned " + std::to_string(v) + ", outside [0,"
                        + std::to_string(maxv) + "]");
          }
          *out++ = std::uint8_t(v);
        }
      }
    }
  }
  return lut;
}

LutSet cache_lutset(const FilterOracle& oracle, const PipelinePreset& preset, int qp)
{
  preset.validate();
  LutSet set(preset, qp);
  for (int s = 0; s < 2; s++)
  {
    for (const PatternGeometry& p : preset.stages[std::size_t(s)].patterns)
    {
      set.insert(cache_clipped_lut(oracle, p.id, s + 1, qp));
    }
  }
  return set;
}

FullLut build_full_lut(const FilterOracle& oracle, int bitDepth)
{
  if (bitDepth < 1 || bitDepth > kMaxFullLutBitDepth)
  {
    throw Error("full LUT bit depth " + std::to_string(bitDepth) + " exceeds the memory guard (max "
                + std::to_string(kMaxFullLutBitDepth) + ")");
  }
  FullLut full;
  full.bitDepth = bitDepth;
  const int n   = full.side();
  full.values.resize(std::size_t(n) * std::size_t(n) * std::size_t(n) * std::size_t(n));

  auto out = full.values.begin();
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++)
      for (int c = 0; c < n; c++)
        for (int d = 0; d < n; d++)
        {
          const int v = oracle({ a, b, c, d });
          if (v < 0 || v >= n)
          {
            throw Error("oracle '" + oracle.name + "' left the " + std::to_string(bitDepth) + "-bit range");
          }
          *out++ = std::uint8_t(v);
        }
  return full;
}

DeviationReport clipped_vs_full_report(const FilterOracle& oracle, int msbBits, int lsbBits, int bitDepth)
{
  if (msbBits + lsbBits != bitDepth)
  {
    throw Error("msbBits + lsbBits must equal the reduced bit depth");
  }
  const FullLut full     = build_full_lut(oracle, bitDepth);
  const ClippedLut small = cache_clipped_lut(oracle, 0, 1, 0, msbBits, lsbBits);

  DeviationReport r;
  std::uint64_t total = 0;
  const int n         = full.side();
  for (int a = 0; a < n; a++)
    for (int b = 0; b < n; b++)
      for (int c = 0; c < n; c++)
        for (int d = 0; d < n; d++)
        {
          const int delta = std::abs(interp_4d(small, { a, b, c, d }) - int(full.at(a, b, c, d)));
          r.maxAbs        = std::max(r.maxAbs, delta);
          total += std::uint64_t(delta);
          r.inputs++;
        }
  r.meanAbs = double(total) / double(r.inputs);
  return r;
}

}   // namespace lutilf
