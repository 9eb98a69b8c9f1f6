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

#include "lutilf/pgm.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

namespace lutilf {

namespace {

// Next header integer, skipping whitespace and '#' comments.
int read_header_int(std::istream& is)
{
  int c = is.get();
  while (is && (std::isspace(c) || c == '#'))
  {
    if (c == '#')
    {
      while (is && c != '\n')
      {
        c = is.get();
      }
    }
    c = is.get();
  }
  if (!is || !std::isdigit(c))
  {
    throw FormatError("malformed PGM header");
  }
  long v = 0;
  while (is && std::isdigit(c))
  {
    v = v * 10 + (c - '0');
    if (v > (1L << 30))
    {
      throw FormatError("PGM header value too large");
    }
    c = is.get();
  }
  if (!is || !std::isspace(c))
  {
    throw FormatError("malformed PGM header");
  }
  return int(v);
}

}   // namespace

PlaneU8 read_pgm(std::istream& is)
{
  char magic[2] = {};
  if (!is.read(magic, 2) || magic[0] != 'P' || magic[1] != '5')
  {
    throw FormatError("not a binary PGM (P5) stream");
  }
  const int width  = read_header_int(is);
  const int height = read_header_int(is);
  const int maxval = read_header_int(is);
  if (width < 1 || height < 1)
  {
    throw FormatError("PGM dimensions must be positive");
  }
  if (maxval != 255)
  {
    throw FormatError("only 8-bit PGM (maxval 255) is supported, got maxval " + std::to_string(maxval));
  }

  std::vector<std::uint8_t> samples(std::size_t(width) * std::size_t(height));
  if (!is.read(reinterpret_cast<char*>(samples.data()), std::streamsize(samples.size())))
  {
    throw FormatError("PGM sample data truncated");
  }
  return PlaneU8(width, height, std::move(samples));
}

PlaneU8 read_pgm(const std::filesystem::path& path)
{
  std::ifstream is(path, std::ios::binary);
  if (!is)
  {
    throw Error("cannot open " + path.string());
  }
  return read_pgm(is);
}

void write_pgm(std::ostream& os, const PlaneU8& plane)
{
  os << "P5\n" << plane.width() << ' ' << plane.height() << "\n255\n";
  os.write(reinterpret_cast<const char*>(plane.samples().data()), std::streamsize(plane.samples().size()));
  if (!os)
  {
    throw Error("failed writing PGM data");
  }
}

void write_pgm(const std::filesystem::path& path, const PlaneU8& plane)
{
  std::ofstream os(path, std::ios::binary);
  if (!os)
  {
    throw Error("cannot create " + path.string());
  }
  write_pgm(os, plane);
}

}   // namespace lutilf
