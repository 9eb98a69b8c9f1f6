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
#include <vector>

#include "lutilf/lut_core.hpp"

namespace lutilf {

class PlaneU8
{
public:
  PlaneU8() = default;
  PlaneU8(int width, int height, std::uint8_t fill = 0);
  PlaneU8(int width, int height, std::vector<std::uint8_t> samples);

  int width() const { return m_width; }
  int height() const { return m_height; }
  bool empty() const { return m_samples.empty(); }

  std::uint8_t at(int x, int y) const { return m_samples[std::size_t(y) * std::size_t(m_width) + std::size_t(x)]; }
  std::uint8_t& at(int x, int y) { return m_samples[std::size_t(y) * std::size_t(m_width) + std::size_t(x)]; }

  // Replicate padding outside the plane.
  std::uint8_t clamped(int x, int y) const;

  const std::vector<std::uint8_t>& samples() const { return m_samples; }
  std::vector<std::uint8_t>& samples() { return m_samples; }

  bool sameShape(const PlaneU8& other) const { return m_width == other.m_width && m_height == other.m_height; }
  bool operator==(const PlaneU8&) const = default;

private:
  int m_width  = 0;
  int m_height = 0;
  std::vector<std::uint8_t> m_samples;
};

// Quarter-turn rotation of a tap offset about the target pixel: (dy, dx) -> (dx, -dy).
Offset rotate_offset(Offset o, int quarterTurns);

// The plane turned by one quarter turn; (x, y) moves to (y, width-1-x).
PlaneU8 rotate90(const PlaneU8& plane);

std::array<int, 4> gather(const PlaneU8& plane, int x, int y, const PatternGeometry& pattern, int rotation);

// Rotation-ensemble value of one pattern: rounded mean of the four retrievals.
int ensemble_value(const PlaneU8& plane, int x, int y, const PatternGeometry& pattern, const ClippedLut& lut);

// One stage at one pixel: weighted fixed-point combination of the pattern ensembles.
int filter_pixel_stage(const PlaneU8& plane, int x, int y, const StageSpec& stage, int stageIndex,
                       const LutSet& luts);

// All pixels of one stage (stageIndex 1 or 2).
PlaneU8 filter_stage(const PlaneU8& plane, int stageIndex, const LutSet& luts, int threads = 1);

// Stage 1 then stage 2 re-indexed over the 8-bit intermediate plane.
PlaneU8 filter_plane(const PlaneU8& plane, const PipelinePreset& preset, const LutSet& luts, int threads = 1);
PlaneU8 filter_plane(const PlaneU8& plane, const LutSet& luts, int threads = 1);

// Largest |dy| or |dx| over the taps of a stage.
int stage_reach(const StageSpec& stage);
// Side of the square effective receptive field of the cascade: 5, 9, 13 for U, V, F.
int effective_range(const PipelinePreset& preset);

}   // namespace lutilf
