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

#include <filesystem>
#include <iosfwd>

#include "lutilf/pipeline.hpp"

namespace lutilf {

struct FormatError : Error
{
  using Error::Error;
};

// Binary P5, maxval 255 only.
PlaneU8 read_pgm(std::istream& is);
PlaneU8 read_pgm(const std::filesystem::path& path);
void write_pgm(std::ostream& os, const PlaneU8& plane);
void write_pgm(const std::filesystem::path& path, const PlaneU8& plane);

}   // namespace lutilf
