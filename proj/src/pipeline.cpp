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

#include "lutilf/pipeline.hpp"

#include <algorithm>
#include <cstdlib>

#include "lutilf/interp.hpp"
#include "lutilf/parallel.hpp"

namespace lutilf {

PlaneU8::PlaneU8(int width, int height, std::uint8_t fill) : m_width(width), m_height(height)
{
  if (width < 1 || height < 1)
  {
    throw Error("plane dimensions must be at least 1x1");
  }
  m_samples.assign(std::size_t(width) * std::size_t(height), fill);
}

PlaneU8::PlaneU8(int width, int height, std::vector<std::uint8_t> samples) : PlaneU8(width, height)
{
  if (samples.size() != m_samples.size())
  {
    throw Error("plane sample count does not match its dimensions");
  }
  m_samples = std::move(samples);
}

std::uint8_t PlaneU8::clamped(int x, int y) const
{
  return at(std::clamp(x, 0, m_width - 1), std::clamp(y, 0, m_height - 1));
}

Offset rotate_offset(Offset o, int quarterTurns)
{
  for (int r = ((quarterTurns % 4) + 4) % 4; r > 0; r--)
  {
    o = { o.dx, -o.dy };
  }
  return o;
}

PlaneU8 rotate90(const PlaneU8& plane)
{
  // (x, y) -> (y, W-1-x)
  PlaneU8 out(plane.height(), plane.width());
  for (int y = 0; y < plane.height(); y++)
  {
    for (int x = 0; x < plane.width(); x++)
    {
      out.at(y, plane.width() - 1 - x) = plane.at(x, y);
    }
  }
  return out;
}

std::array<int, 4> gather(const PlaneU8& plane, int x, int y, const PatternGeometry& pattern, int rotation)
{
  std::array<int, 4> q{};
  for (std::size_t k = 0; k < 4; k++)
  {
    const Offset o = rotate_offset(pattern.offsets[k], rotation);
    q[k]           = plane.clamped(x + o.dx, y + o.dy);
  }
  return q;
}

int ensemble_value(const PlaneU8& plane, int x, int y, const PatternGeometry& pattern, const ClippedLut& lut)
{
  int sum = 0;
  for (int r = 0; r < 4; r++)
  {
    sum += interp_4d(lut, gather(plane, x, y, pattern, r));
  }
  return (sum + 2) >> 2;
}

namespace {

struct ResolvedPattern
{
  std::array<std::array<Offset, 4>, 4> rotated;   // [rotation][tap]
  const ClippedLut* lut = nullptr;
  int weight            = 0;
};

std::vector<ResolvedPattern> resolve_stage(const StageSpec& stage, int stageIndex, const LutSet& luts)
{
  std::vector<ResolvedPattern> out;
  out.reserve(stage.patterns.size());
  for (std::size_t i = 0; i < stage.patterns.size(); i++)
  {
    ResolvedPattern rp;
    rp.lut    = &luts.at(stageIndex, stage.patterns[i].id);
    rp.weight = stage.weights[i];
    for (int r = 0; r < 4; r++)
    {
      for (std::size_t k = 0; k < 4; k++)
      {
        rp.rotated[std::size_t(r)][k] = rotate_offset(stage.patterns[i].offsets[k], r);
      }
    }
    out.push_back(rp);
  }
  return out;
}

int filter_resolved(const PlaneU8& plane, int x, int y, const std::vector<ResolvedPattern>& patterns,
                    int weightScale)
{
  int acc = 0;
  for (const ResolvedPattern& rp : patterns)
  {
    int sum = 0;
    for (const auto& taps : rp.rotated)
    {
      std::array<int, 4> q{};
      for (std::size_t k = 0; k < 4; k++)
      {
        q[k] = plane.clamped(x + taps[k].dx, y + taps[k].dy);
      }
      sum += interp_4d(*rp.lut, q);
    }
    acc += rp.weight * ((sum + 2) >> 2);
  }
  return std::clamp((acc + weightScale / 2) / weightScale, 0, kMaxSample);
}

}   // namespace

int filter_pixel_stage(const PlaneU8& plane, int x, int y, const StageSpec& stage, int stageIndex,
                       const LutSet& luts)
{
  return filter_resolved(plane, x, y, resolve_stage(stage, stageIndex, luts), stage.weightScale);
}

PlaneU8 filter_stage(const PlaneU8& plane, int stageIndex, const LutSet& luts, int threads)
{
  if (stageIndex < 1 || stageIndex > 2)
  {
    throw Error("stage index must be 1 or 2");
  }
  const StageSpec& stage = luts.preset().stages[std::size_t(stageIndex - 1)];
  const auto patterns    = resolve_stage(stage, stageIndex, luts);

  PlaneU8 out(plane.width(), plane.height());
  parallel_for(plane.height(), threads, [&](int y0, int y1) {
    for (int y = y0; y < y1; y++)
    {
      for (int x = 0; x < plane.width(); x++)
      {
        out.at(x, y) = std::uint8_t(filter_resolved(plane, x, y, patterns, stage.weightScale));
      }
    }
  });
  return out;
}

PlaneU8 filter_plane(const PlaneU8& plane, const PipelinePreset& preset, const LutSet& luts, int threads)
{
  if (!(luts.preset() == preset))
  {
    throw Error("LUT set was built for a different preset");
  }
  luts.validate();
  const PlaneU8 intermediate = filter_stage(plane, 1, luts, threads);
  return filter_stage(intermediate, 2, luts, threads);
}

PlaneU8 filter_plane(const PlaneU8& plane, const LutSet& luts, int threads)
{
  return filter_plane(plane, luts.preset(), luts, threads);
}

int stage_reach(const StageSpec& stage)
{
  int reach = 0;
  for (const PatternGeometry& p : stage.patterns)
  {
    for (const Offset& o : p.offsets)
    {
      reach = std::max({ reach, std::abs(o.dy), std::abs(o.dx) });
    }
  }
  return reach;
}

int effective_range(const PipelinePreset& preset)
{
  return 2 * (stage_reach(preset.stages[0]) + stage_reach(preset.stages[1])) + 1;
}

}   // namespace lutilf
