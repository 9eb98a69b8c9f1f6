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

#include "lutilf/costmodel.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace lutilf {

void EnergyTable::validate() const
{
  if (int8Add < 0 || int8Mul < 0 || int32Add < 0 || int32Mul < 0)
  {
    throw Error("energy table entries must be non-negative");
  }
}

CostVector preset_cost(PresetName name)
{
  switch (name)
  {
  case PresetName::U: return { 70, 4, 68, 55 };
  case PresetName::V: return { 206, 4, 190, 152 };
  default: throw Error("no published per-pixel operation vector for preset " + std::string(to_string(name)));
  }
}

std::string published_kmacs(PresetName name)
{
  switch (name)
  {
  case PresetName::U: return "0.13";
  case PresetName::V: return "0.40";
  case PresetName::F: return "0.93";
  default: throw Error("no published kMACs for a custom preset");
  }
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r))
  {
    throw Error("frame cost overflows 64 bits");
  }
  return r;
}

}   // namespace

CostVector frame_cost(const CostVector& cv, std::int64_t width, std::int64_t height)
{
  if (width < 1 || height < 1)
  {
    throw Error("frame dimensions must be at least 1");
  }
  const std::int64_t pixels = checked_mul(width, height);
  CostVector out{ checked_mul(cv.int8Add, pixels), checked_mul(cv.int8Mul, pixels),
                  checked_mul(cv.int32Add, pixels), checked_mul(cv.int32Mul, pixels) };
  std::int64_t sink = 0;
  if (__builtin_add_overflow(out.int8Add, out.int32Add, &sink) || __builtin_add_overflow(out.int8Mul, out.int32Mul, &sink))
  {
    throw Error("frame cost totals overflow 64 bits");
  }
  return out;
}

double kmacs(const CostVector& cv)
{
  return double(std::max(cv.totalAdd(), cv.totalMul())) / 1000.0;
}

double energy(const CostVector& cv, const EnergyTable& t)
{
  t.validate();
  return double(cv.int8Add) * t.int8Add + double(cv.int8Mul) * t.int8Mul + double(cv.int32Add) * t.int32Add
         + double(cv.int32Mul) * t.int32Mul;
}

CostVector analytic_cost(const PipelinePreset& preset)
{
  // One 4D retrieval: 6 LSB compares + 4 weight differences (int8); flat index
  // (3 mul, 3 add), 4 vertex steps, 5 weighted products, 4 sums and 1 rounding add (int32).
  constexpr CostVector retrieval{ 10, 0, 12, 8 };

  CostVector cv;
  for (const StageSpec& stage : preset.stages)
  {
    const auto patterns = std::int64_t(stage.patterns.size());
    cv.int8Add += patterns * 4 * retrieval.int8Add;
    cv.int32Add += patterns * (4 * retrieval.int32Add + 4);   // ensemble sum + rounding
    cv.int32Mul += patterns * (4 * retrieval.int32Mul + 1);   // pattern weight
    cv.int32Add += patterns;                                  // weighted sum + rounding
  }
  return cv;
}

namespace {

std::string grouped(std::int64_t v)
{
  std::string digits = std::to_string(v);
  std::string out;
  const int lead = int(digits.size()) % 3;
  for (std::size_t i = 0; i < digits.size(); i++)
  {
    if (i != 0 && (int(i) - lead) % 3 == 0)
    {
      out += ',';
    }
    out += digits[i];
  }
  return out;
}

}   // namespace

std::string cost_report(const CostReportInput& in, ReportFormat format)
{
  const CostVector frame = frame_cost(in.perPixel, in.width, in.height);
  const double k         = kmacs(in.perPixel);
  const double pj        = energy(in.perPixel, in.table);

  std::ostringstream os;
  if (format == ReportFormat::KeyValue)
  {
    os << "preset=" << in.label << '\n'
       << "width=" << in.width << '\n'
       << "height=" << in.height << '\n'
       << "pixel.int8_add=" << in.perPixel.int8Add << '\n'
       << "pixel.int8_mul=" << in.perPixel.int8Mul << '\n'
       << "pixel.int32_add=" << in.perPixel.int32Add << '\n'
       << "pixel.int32_mul=" << in.perPixel.int32Mul << '\n'
       << "pixel.total_add=" << in.perPixel.totalAdd() << '\n'
       << "pixel.total_mul=" << in.perPixel.totalMul() << '\n'
       << "frame.int8_add=" << frame.int8Add << '\n'
       << "frame.int8_mul=" << frame.int8Mul << '\n'
       << "frame.int32_add=" << frame.int32Add << '\n'
       << "frame.int32_mul=" << frame.int32Mul << '\n'
       << "frame.total_add=" << frame.totalAdd() << '\n'
       << "frame.total_mul=" << frame.totalMul() << '\n'
       << std::setprecision(6) << "kmacs_raw=" << k << '\n';
    if (in.publishedKmacs)
    {
      os << "kmacs_published=" << *in.publishedKmacs << '\n';
    }
    os << std::fixed << std::setprecision(1) << "energy_pj=" << pj << '\n'
       << std::setprecision(4) << "energy_pj_raw=" << pj << '\n';
    return os.str();
  }

  const auto row = [&os](const std::string& name, const std::string& value) {
    os << "  " << std::left << std::setw(26) << name << std::right << std::setw(16) << value << '\n';
  };
  os << "Operation counts, preset " << in.label << '\n';
  os << "Pixel-wise\n";
  row("int8 Add", grouped(in.perPixel.int8Add));
  row("int8 Multiply", grouped(in.perPixel.int8Mul));
  row("int32 Add", grouped(in.perPixel.int32Add));
  row("int32 Multiply", grouped(in.perPixel.int32Mul));
  row("Total Add", grouped(in.perPixel.totalAdd()));
  row("Total Multiply", grouped(in.perPixel.totalMul()));
  os << "Frame-wise (" << in.width << "x" << in.height << ")\n";
  row("int8 Add", grouped(frame.int8Add));
  row("int8 Multiply", grouped(frame.int8Mul));
  row("int32 Add", grouped(frame.int32Add));
  row("int32 Multiply", grouped(frame.int32Mul));
  row("Total Add", grouped(frame.totalAdd()));
  row("Total Multiply", grouped(frame.totalMul()));

  std::ostringstream kv;
  kv << std::setprecision(6) << k;
  if (in.publishedKmacs)
  {
    kv << " (" << *in.publishedKmacs << ")";
  }
  row("kMACs/pixel", kv.str());
  std::ostringstream ev;
  ev << std::fixed << std::setprecision(1) << pj << " (" << std::setprecision(4) << pj << ")";
  row("Energy (pJ/pixel)", ev.str());
  return os.str();
}

}   // namespace lutilf
