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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "lutilf/lut_core.hpp"
#include "lutilf/pgm.hpp"

// LUT set file, all integers little-endian:
//
//   magic          4   "LILF"
//   formatVersion  u32 1
//   preset         u8  'U' | 'V' | 'F' | 'C' (custom)
//   qp             i32
//   lutCount       u32
//   lutCount records, stage 1 patterns first, each:
//     stageIndex   u8  1 | 2
//     patternId    u8
//     offsets      4 x (i8 dy, i8 dx)
//     weight       u16
//     weightScale  u16
//     values       83521 bytes, row-major (d0 outermost)
//   checksum       u32 CRC-32 over every record's value bytes, in file order
//
// Value dump written by the trainer for one (stage, pattern):
//
//   magic          4   "LILD"
//   stageIndex     u8
//   patternId      u8
//   reserved       u16 0
//   valueCount     u32 83521
//   values         valueCount bytes, row-major (d0 outermost)

namespace lutilf {

inline constexpr std::uint32_t kLutFormatVersion = 1;
inline constexpr std::size_t kLutHeaderBytes     = 17;
inline constexpr std::size_t kLutRecordOverhead  = 14;
inline constexpr std::size_t kLutTrailerBytes    = 4;
inline constexpr std::size_t kDumpHeaderBytes    = 12;

std::size_t lutset_file_size(const PipelinePreset& preset);

void save_lutset(std::ostream& os, const LutSet& set);
void save_lutset(const std::filesystem::path& path, const LutSet& set);
LutSet load_lutset(std::istream& is);
LutSet load_lutset(const std::filesystem::path& path);

struct LutRecordInfo
{
  int stageIndex = 0;
  PatternGeometry pattern;
  int weight      = 0;
  int weightScale = 0;
};

struct LutFileInfo
{
  std::uint32_t formatVersion = 0;
  PresetName preset           = PresetName::Custom;
  int qp                      = 0;
  std::vector<LutRecordInfo> records;
  std::uint32_t checksum = 0;
  std::uintmax_t fileBytes = 0;
};

// Header and record metadata of a file that passed full validation.
LutFileInfo inspect_lutset(const std::filesystem::path& path);

std::uint32_t crc32_of(std::span<const std::uint8_t> bytes, std::uint32_t seed = 0);

struct ValueDump
{
  int stageIndex = 1;
  int patternId  = 0;
  std::vector<std::uint8_t> values;
};

void write_dump(const std::filesystem::path& path, const ValueDump& dump);
ValueDump read_dump(const std::filesystem::path& path);

// Assembles a LUT set for `preset` from one dump per (stage, pattern).
LutSet lutset_from_dumps(const PipelinePreset& preset, int qp, const std::vector<ValueDump>& dumps);

}   // namespace lutilf
