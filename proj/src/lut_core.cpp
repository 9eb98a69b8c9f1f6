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

#include "lutilf/lut_core.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace lutilf {

void PatternGeometry::validate() const
{
  if (offsets[0] != Offset{0, 0})
  {
    throw Error("pattern " + std::to_string(id) + ": first tap must be the target pixel (0,0)");
  }
  std::set<Offset> seen(offsets.begin(), offsets.end());
  if (seen.size() != offsets.size())
  {
    throw Error("pattern " + std::to_string(id) + ": taps must be distinct");
  }
  for (const Offset& o : offsets)
  {
    if (std::abs(o.dy) > kMaxPatternReach || std::abs(o.dx) > kMaxPatternReach)
    {
      throw Error("pattern " + std::to_string(id) + ": tap outside the 7x7 stage window");
    }
  }
}

PatternGeometry default_pattern(int id)
{
  switch (id)
  {
  case 1: return { 1, { { { 0, 0 }, { 0, 1 }, { 1, 0 }, { 1, 1 } } } };
  case 2: return { 2, { { { 0, 0 }, { 0, 2 }, { 2, 0 }, { 2, 2 } } } };
  case 3: return { 3, { { { 0, 0 }, { 1, 1 }, { 1, 2 }, { 2, 1 } } } };
  case 4: return { 4, { { { 0, 0 }, { 0, 3 }, { 3, 0 }, { 3, 3 } } } };
  case 5: return { 5, { { { 0, 0 }, { 1, 3 }, { 3, 1 }, { 3, 3 } } } };
  case 6: return { 6, { { { 0, 0 }, { 2, 3 }, { 3, 2 }, { 2, 2 } } } };
  case 7: return { 7, { { { 0, 0 }, { 0, 2 }, { 3, 0 }, { 1, 3 } } } };
  default: throw Error("no default geometry for pattern " + std::to_string(id));
  }
}

void StageSpec::validate() const
{
  if (patterns.empty())
  {
    throw Error("stage has no patterns");
  }
  if (weights.size() != patterns.size())
  {
    throw Error("stage needs one weight per pattern");
  }
  if (weightScale <= 0 || weightScale > kMaxWeightScale || (weightScale & (weightScale - 1)) != 0)
  {
    throw Error("weight scale must be a power of two no larger than 32768");
  }
  std::set<int> ids;
  for (const PatternGeometry& p : patterns)
  {
    p.validate();
    if (!ids.insert(p.id).second)
    {
      throw Error("duplicate pattern id " + std::to_string(p.id) + " in stage");
    }
  }
  if (std::any_of(weights.begin(), weights.end(), [](int w) { return w < 0; }))
  {
    throw Error("pattern weights must be non-negative");
  }
  if (std::accumulate(weights.begin(), weights.end(), 0) != weightScale)
  {
    throw Error("pattern weights must sum to the weight scale");
  }
}

std::string_view to_string(PresetName name)
{
  switch (name)
  {
  case PresetName::U: return "U";
  case PresetName::V: return "V";
  case PresetName::F: return "F";
  case PresetName::Custom: return "custom";
  }
  return "custom";
}

PresetName parse_preset_name(std::string_view text)
{
  if (text == "U" || text == "u") return PresetName::U;
  if (text == "V" || text == "v") return PresetName::V;
  if (text == "F" || text == "f") return PresetName::F;
  if (text == "custom") return PresetName::Custom;
  throw Error("unknown preset '" + std::string(text) + "'");
}

void PipelinePreset::validate() const
{
  for (const StageSpec& s : stages)
  {
    s.validate();
  }
}

PipelinePreset preset(PresetName name)
{
  int patternCount = 0;
  switch (name)
  {
  case PresetName::U: patternCount = 1; break;
  case PresetName::V: patternCount = 3; break;
  case PresetName::F: patternCount = 7; break;
  case PresetName::Custom: throw Error("custom presets have no defaults");
  }

  StageSpec stage;
  std::vector<int> raw(std::size_t(patternCount), 1);
  for (int id = 1; id <= patternCount; id++)
  {
    stage.patterns.push_back(default_pattern(id));
  }
  stage.weights = renormalize_weights(raw, stage.weightScale);

  PipelinePreset p;
  p.name   = name;
  p.stages = { stage, stage };
  return p;
}

PipelinePreset preset(std::string_view name)
{
  return preset(parse_preset_name(name));
}

std::size_t storage_bytes(const PipelinePreset& preset)
{
  return preset.lut_count() * kLutEntries;
}

int lattice_value(int binIndex, int msbBits, int lsbBits)
{
  const int bins = (1 << msbBits) + 1;
  if (binIndex < 0 || binIndex >= bins)
  {
    throw Error("lattice bin index " + std::to_string(binIndex) + " out of range");
  }
  return std::min(binIndex << lsbBits, (1 << (msbBits + lsbBits)) - 1);
}

std::vector<int> renormalize_weights(std::span<const int> raw, int scale)
{
  if (raw.empty())
  {
    throw Error("no weights to normalize");
  }
  std::int64_t total = 0;
  for (int w : raw)
  {
    if (w < 0)
    {
      throw Error("pattern weights must be non-negative");
    }
    total += w;
  }
  if (total == 0)
  {
    throw Error("pattern weights are all zero");
  }

  std::vector<int> out(raw.size());
  std::vector<std::int64_t> remainder(raw.size());
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < raw.size(); i++)
  {
    const std::int64_t scaled = std::int64_t(raw[i]) * scale;
    out[i]       = int(scaled / total);
    remainder[i] = scaled % total;
    assigned += out[i];
  }

  // Hand out the leftover units by largest remainder, lower index first on ties.
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < scale; k++, assigned++)
  {
    out[order[k]]++;
  }
  return out;
}

ClippedLut::ClippedLut(int msbBits, int lsbBits) : m_msbBits(msbBits), m_lsbBits(lsbBits)
{
  if (msbBits < 1 || lsbBits < 0 || msbBits + lsbBits > 8)
  {
    throw Error("unsupported LUT sampling geometry");
  }
  const std::size_t n = std::size_t(binsPerDim());
  m_values.assign(n * n * n * n, 0);
}

ClippedLut::ClippedLut(int msbBits, int lsbBits, std::vector<std::uint8_t> values) : ClippedLut(msbBits, lsbBits)
{
  if (values.size() != m_values.size())
  {
    throw Error("LUT value count " + std::to_string(values.size()) + " does not match "
                + std::to_string(m_values.size()));
  }
  const int maxv = maxSample();
  if (std::any_of(values.begin(), values.end(), [maxv](std::uint8_t v) { return v > maxv; }))
  {
    throw Error("LUT value exceeds the sample range");
  }
  m_values = std::move(values);
}

void LutSet::insert(ClippedLut lut)
{
  m_luts.insert_or_assign(Key{ lut.stageIndex, lut.patternId }, std::move(lut));
}

const ClippedLut* LutSet::find(int stageIndex, int patternId) const
{
  const auto it = m_luts.find(Key{ stageIndex, patternId });
  return it == m_luts.end() ? nullptr : &it->second;
}

const ClippedLut& LutSet::at(int stageIndex, int patternId) const
{
  const ClippedLut* lut = find(stageIndex, patternId);
  if (lut == nullptr)
  {
    throw Error("missing LUT for stage " + std::to_string(stageIndex) + ", pattern " + std::to_string(patternId));
  }
  return *lut;
}

void LutSet::validate() const
{
  m_preset.validate();
  std::size_t expected = 0;
  for (int s = 0; s < 2; s++)
  {
    for (const PatternGeometry& p : m_preset.stages[std::size_t(s)].patterns)
    {
      const ClippedLut& lut = at(s + 1, p.id);
      if (!lut.isDefaultGeometry())
      {
        throw Error("LUT set entries must use 4 MSB / 4 LSB sampling");
      }
      expected++;
    }
  }
  if (m_luts.size() != expected)
  {
    throw Error("LUT set holds tables that the preset does not reference");
  }
}

}   // namespace lutilf
