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

#include "lutilf/lut_file.hpp"

#include <zlib.h>

#include <array>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <set>
#include <sstream>

namespace lutilf {

namespace {

constexpr char kMagic[4]     = { 'L', 'I', 'L', 'F' };
constexpr char kDumpMagic[4] = { 'L', 'I', 'L', 'D' };

class Writer
{
public:
  explicit Writer(std::ostream& os) : m_os(os) {}

  void bytes(const void* p, std::size_t n) { m_os.write(static_cast<const char*>(p), std::streamsize(n)); }
  void u8(unsigned v) { m_os.put(char(std::uint8_t(v))); }
  void i8(int v) { m_os.put(char(std::int8_t(v))); }
  void u16(unsigned v)
  {
    u8(v & 0xff);
    u8((v >> 8) & 0xff);
  }
  void u32(std::uint32_t v)
  {
    for (int s = 0; s < 32; s += 8)
    {
      u8((v >> s) & 0xff);
    }
  }

private:
  std::ostream& m_os;
};

class Reader
{
public:
  explicit Reader(std::istream& is) : m_is(is) {}

  void bytes(void* p, std::size_t n, const char* what)
  {
    if (!m_is.read(static_cast<char*>(p), std::streamsize(n)))
    {
      throw FormatError(std::string("truncated LUT file: missing ") + what);
    }
  }
  unsigned u8(const char* what)
  {
    std::uint8_t v = 0;
    bytes(&v, 1, what);
    return v;
  }
  int i8(const char* what) { return int(std::int8_t(u8(what))); }
  unsigned u16(const char* what)
  {
    const unsigned lo = u8(what);
    return lo | (u8(what) << 8);
  }
  std::uint32_t u32(const char* what)
  {
    std::uint32_t v = 0;
    for (int s = 0; s < 32; s += 8)
    {
      v |= std::uint32_t(u8(what)) << s;
    }
    return v;
  }
  bool atEnd() { return m_is.peek() == std::char_traits<char>::eof(); }

private:
  std::istream& m_is;
};

char preset_code(PresetName name)
{
  switch (name)
  {
  case PresetName::U: return 'U';
  case PresetName::V: return 'V';
  case PresetName::F: return 'F';
  case PresetName::Custom: return 'C';
  }
  return 'C';
}

PresetName preset_from_code(unsigned code)
{
  switch (code)
  {
  case 'U': return PresetName::U;
  case 'V': return PresetName::V;
  case 'F': return PresetName::F;
  case 'C': return PresetName::Custom;
  default: throw FormatError("unknown preset code in LUT file");
  }
}

struct Parsed
{
  LutFileInfo info;
  std::vector<std::vector<std::uint8_t>> values;
};

Parsed parse(std::istream& is)
{
  Reader rd(is);
  Parsed p;
  char magic[4] = {};
  rd.bytes(magic, 4, "magic");
  if (!std::equal(std::begin(magic), std::end(magic), std::begin(kMagic)))
  {
    throw FormatError("bad magic: not a LUT set file");
  }
  p.info.formatVersion = rd.u32("format version");
  if (p.info.formatVersion != kLutFormatVersion)
  {
    throw FormatError("unsupported LUT format version " + std::to_string(p.info.formatVersion));
  }
  p.info.preset          = preset_from_code(rd.u8("preset"));
  p.info.qp              = int(std::int32_t(rd.u32("qp")));
  const std::uint32_t nLuts = rd.u32("LUT count");
  if (nLuts == 0 || nLuts > 64)
  {
    throw FormatError("implausible LUT count " + std::to_string(nLuts));
  }

  std::uint32_t crc = 0;
  for (std::uint32_t i = 0; i < nLuts; i++)
  {
    LutRecordInfo rec;
    rec.stageIndex = int(rd.u8("record stage"));
    rec.pattern.id = int(rd.u8("record pattern"));
    for (Offset& o : rec.pattern.offsets)
    {
      o.dy = rd.i8("record offsets");
      o.dx = rd.i8("record offsets");
    }
    rec.weight      = int(rd.u16("record weight"));
    rec.weightScale = int(rd.u16("record weight scale"));

    std::vector<std::uint8_t> values(kLutEntries);
    rd.bytes(values.data(), values.size(), "LUT values");
    crc = crc32_of(values, crc);
    p.info.records.push_back(rec);
    p.values.push_back(std::move(values));
  }
  p.info.checksum = rd.u32("checksum");
  if (p.info.checksum != crc)
  {
    throw FormatError("LUT file checksum mismatch");
  }
  if (!rd.atEnd())
  {
    throw FormatError("trailing bytes after LUT file checksum");
  }
  return p;
}

LutSet build_set(const Parsed& p)
{
  PipelinePreset preset;
  preset.name = p.info.preset;
  for (auto& s : preset.stages)
  {
    s.weightScale = 0;
  }
  for (const LutRecordInfo& rec : p.info.records)
  {
    if (rec.stageIndex < 1 || rec.stageIndex > 2)
    {
      throw FormatError("record stage index must be 1 or 2");
    }
    StageSpec& stage = preset.stages[std::size_t(rec.stageIndex - 1)];
    if (rec.stageIndex == 1 && !preset.stages[1].patterns.empty())
    {
      throw FormatError("stage 1 records must precede stage 2 records");
    }
    if (stage.weightScale != 0 && stage.weightScale != rec.weightScale)
    {
      throw FormatError("records of one stage disagree on the weight scale");
    }
    stage.weightScale = rec.weightScale;
    stage.patterns.push_back(rec.pattern);
    stage.weights.push_back(rec.weight);
  }
  try
  {
    preset.validate();
  }
  catch (const Error& e)
  {
    throw FormatError(std::string("invalid geometry in LUT file: ") + e.what());
  }

  LutSet set(preset, p.info.qp);
  for (std::size_t i = 0; i < p.values.size(); i++)
  {
    ClippedLut lut(kMsbBits, kLsbBits, p.values[i]);
    lut.stageIndex = p.info.records[i].stageIndex;
    lut.patternId  = p.info.records[i].pattern.id;
    lut.qp         = p.info.qp;
    set.insert(std::move(lut));
  }
  set.validate();
  return set;
}

}   // namespace

std::uint32_t crc32_of(std::span<const std::uint8_t> bytes, std::uint32_t seed)
{
  uLong crc = seed;
  std::size_t off = 0;
  while (off < bytes.size())
  {
    const auto chunk = uInt(std::min<std::size_t>(bytes.size() - off, 1u << 30));
    crc              = ::crc32(crc, bytes.data() + off, chunk);
    off += chunk;
  }
  return std::uint32_t(crc);
}

std::size_t lutset_file_size(const PipelinePreset& preset)
{
  return kLutHeaderBytes + preset.lut_count() * (kLutRecordOverhead + kLutEntries) + kLutTrailerBytes;
}

void save_lutset(std::ostream& os, const LutSet& set)
{
  set.validate();
  Writer wr(os);
  wr.bytes(kMagic, 4);
  wr.u32(kLutFormatVersion);
  wr.u8(unsigned(preset_code(set.preset().name)));
  wr.u32(std::uint32_t(set.qp()));
  wr.u32(std::uint32_t(set.preset().lut_count()));

  std::uint32_t crc = 0;
  for (int s = 0; s < 2; s++)
  {
    const StageSpec& stage = set.preset().stages[std::size_t(s)];
    for (std::size_t i = 0; i < stage.patterns.size(); i++)
    {
      const PatternGeometry& pat = stage.patterns[i];
      const ClippedLut& lut      = set.at(s + 1, pat.id);
      wr.u8(unsigned(s + 1));
      wr.u8(unsigned(pat.id));
      for (const Offset& o : pat.offsets)
      {
        wr.i8(o.dy);
        wr.i8(o.dx);
      }
      wr.u16(unsigned(stage.weights[i]));
      wr.u16(unsigned(stage.weightScale));
      wr.bytes(lut.values().data(), lut.values().size());
      crc = crc32_of(lut.values(), crc);
    }
  }
  wr.u32(crc);
  if (!os)
  {
    throw Error("failed writing LUT set");
  }
}

void save_lutset(const std::filesystem::path& path, const LutSet& set)
{
  std::ofstream os(path, std::ios::binary);
  if (!os)
  {
    throw Error("cannot create " + path.string());
  }
  save_lutset(os, set);
}

LutSet load_lutset(std::istream& is)
{
  return build_set(parse(is));
}

LutSet load_lutset(const std::filesystem::path& path)
{
  std::ifstream is(path, std::ios::binary);
  if (!is)
  {
    throw Error("cannot open " + path.string());
  }
  return load_lutset(is);
}

LutFileInfo inspect_lutset(const std::filesystem::path& path)
{
  std::ifstream is(path, std::ios::binary);
  if (!is)
  {
    throw Error("cannot open " + path.string());
  }
  Parsed p = parse(is);
  build_set(p);
  p.info.fileBytes = std::filesystem::file_size(path);
  return p.info;
}

void write_dump(const std::filesystem::path& path, const ValueDump& dump)
{
  std::ofstream os(path, std::ios::binary);
  if (!os)
  {
    throw Error("cannot create " + path.string());
  }
  Writer wr(os);
  wr.bytes(kDumpMagic, 4);
  wr.u8(unsigned(dump.stageIndex));
  wr.u8(unsigned(dump.patternId));
  wr.u16(0);
  wr.u32(std::uint32_t(dump.values.size()));
  wr.bytes(dump.values.data(), dump.values.size());
  if (!os)
  {
    throw Error("failed writing " + path.string());
  }
}

ValueDump read_dump(const std::filesystem::path& path)
{
  std::ifstream is(path, std::ios::binary);
  if (!is)
  {
    throw Error("cannot open " + path.string());
  }
  Reader rd(is);
  char magic[4] = {};
  rd.bytes(magic, 4, "dump magic");
  if (!std::equal(std::begin(magic), std::end(magic), std::begin(kDumpMagic)))
  {
    throw FormatError("bad magic: not a LUT value dump");
  }
  ValueDump dump;
  dump.stageIndex = int(rd.u8("dump stage"));
  dump.patternId  = int(rd.u8("dump pattern"));
  rd.u16("dump reserved");
  const std::uint32_t count = rd.u32("dump value count");
  if (count != kLutEntries)
  {
    throw FormatError("dump holds " + std::to_string(count) + " values, expected " + std::to_string(kLutEntries));
  }
  dump.values.resize(count);
  rd.bytes(dump.values.data(), count, "dump values");
  if (!rd.atEnd())
  {
    throw FormatError("trailing bytes after dump values");
  }
  return dump;
}

LutSet lutset_from_dumps(const PipelinePreset& preset, int qp, const std::vector<ValueDump>& dumps)
{
  preset.validate();
  LutSet set(preset, qp);
  std::set<std::pair<int, int>> seen;
  for (const ValueDump& d : dumps)
  {
    if (!seen.insert({ d.stageIndex, d.patternId }).second)
    {
      throw Error("duplicate dump for stage " + std::to_string(d.stageIndex) + ", pattern "
                  + std::to_string(d.patternId));
    }
    ClippedLut lut(kMsbBits, kLsbBits, d.values);
    lut.stageIndex = d.stageIndex;
    lut.patternId  = d.patternId;
    lut.qp         = qp;
    set.insert(std::move(lut));
  }
  set.validate();
  return set;
}

}   // namespace lutilf
