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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lutilf {

struct Error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

inline constexpr int kMsbBits         = 4;
inline constexpr int kLsbBits         = 4;
inline constexpr int kBinsPerDim      = (1 << kMsbBits) + 1;   // 17
inline constexpr std::size_t kLutEntries = std::size_t(kBinsPerDim) * kBinsPerDim * kBinsPerDim * kBinsPerDim;   // 83521
inline constexpr int kMaxSample       = 255;
inline constexpr int kDefaultWeightScale = 256;
inline constexpr int kMaxWeightScale  = 1 << 15;
inline constexpr int kDefaultCtuSize  = 128;
inline constexpr int kMaxPatternReach = 3;

struct Offset
{
  int dy = 0;
  int dx = 0;
  auto operator<=>(const Offset&) const = default;
};

// Four taps addressing one 4D LUT; taps[0] is always the target pixel.
struct PatternGeometry
{
  int id = 0;
  std::array<Offset, 4> offsets{};

  bool operator==(const PatternGeometry&) const = default;

  // Throws Error when the geometry breaks an invariant.
  void validate() const;
};

PatternGeometry default_pattern(int id);

struct StageSpec
{
  std::vector<PatternGeometry> patterns;
  std::vector<int> weights;
  int weightScale = kDefaultWeightScale;

  bool operator==(const StageSpec&) const = default;

  void validate() const;
};

enum class PresetName { U, V, F, Custom };

std::string_view to_string(PresetName name);
PresetName parse_preset_name(std::string_view text);

struct PipelinePreset
{
  PresetName name = PresetName::Custom;
  std::array<StageSpec, 2> stages;

  bool operator==(const PipelinePreset&) const = default;

  std::size_t lut_count() const { return stages[0].patterns.size() + stages[1].patterns.size(); }
  void validate() const;
};

PipelinePreset preset(PresetName name);
PipelinePreset preset(std::string_view name);

std::size_t storage_bytes(const PipelinePreset& preset);

// Sample value at lattice bin `binIndex`: min(binIndex << lsbBits, 2^(msbBits+lsbBits) - 1).
int lattice_value(int binIndex, int msbBits = kMsbBits, int lsbBits = kLsbBits);

// Largest-remainder rescaling of non-negative raw weights so they sum to `scale` exactly.
std::vector<int> renormalize_weights(std::span<const int> raw, int scale = kDefaultWeightScale);

// Sampled 4D table, row-major over (d0,d1,d2,d3). Default geometry is 17 bins per
// dimension over 8-bit samples; reduced geometries exist for exhaustive testing.
class ClippedLut
{
public:
  ClippedLut() : ClippedLut(kMsbBits, kLsbBits) {}
  ClippedLut(int msbBits, int lsbBits);
  ClippedLut(int msbBits, int lsbBits, std::vector<std::uint8_t> values);

  int msbBits() const { return m_msbBits; }
  int lsbBits() const { return m_lsbBits; }
  int binsPerDim() const { return (1 << m_msbBits) + 1; }
  int maxSample() const { return (1 << (m_msbBits + m_lsbBits)) - 1; }
  std::size_t size() const { return m_values.size(); }

  std::size_t index(int b0, int b1, int b2, int b3) const
  {
    const std::size_t n = std::size_t(binsPerDim());
    return ((std::size_t(b0) * n + std::size_t(b1)) * n + std::size_t(b2)) * n + std::size_t(b3);
  }
  std::uint8_t at(int b0, int b1, int b2, int b3) const { return m_values[index(b0, b1, b2, b3)]; }
  std::uint8_t& at(int b0, int b1, int b2, int b3) { return m_values[index(b0, b1, b2, b3)]; }

  std::span<const std::uint8_t> values() const { return m_values; }
  std::span<std::uint8_t> values() { return m_values; }

  bool isDefaultGeometry() const { return m_msbBits == kMsbBits && m_lsbBits == kLsbBits; }

  int patternId  = 0;
  int stageIndex = 1;
  int qp         = 0;

private:
  int m_msbBits;
  int m_lsbBits;
  std::vector<std::uint8_t> m_values;
};

class LutSet
{
public:
  using Key = std::pair<int, int>;   // (stageIndex, patternId)

  LutSet() = default;
  LutSet(PipelinePreset preset, int qp) : m_preset(std::move(preset)), m_qp(qp) {}

  const PipelinePreset& preset() const { return m_preset; }
  int qp() const { return m_qp; }

  void insert(ClippedLut lut);
  const ClippedLut& at(int stageIndex, int patternId) const;
  const ClippedLut* find(int stageIndex, int patternId) const;
  const std::map<Key, ClippedLut>& luts() const { return m_luts; }

  // Exactly one default-geometry LUT per (stage, pattern) of the preset, nothing else.
  void validate() const;

private:
  PipelinePreset m_preset;
  int m_qp = 0;
  std::map<Key, ClippedLut> m_luts;
};

}   // namespace lutilf
