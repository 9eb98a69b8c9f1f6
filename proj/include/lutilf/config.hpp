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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lutilf/lut_core.hpp"

// Plain key=value run configuration. '#' starts a comment; blank lines are ignored.
//
//   preset = V                      base preset (U | V | F)
//   qp = 32
//   input = rec.pgm                 output, original, lut: further paths
//   ctu_size = 128
//   lambda = 12.5
//   flag_bits_on = 1
//   flag_bits_off = 1
//   threads = 4
//   pattern.3 = 0,0 1,1 1,2 2,1     geometry override: four dy,dx taps
//   stage1.patterns = 1 2 3         pattern ids used by a stage
//   stage2.weights = 100 78 78      raw weights, renormalized to weight_scale
//   weight_scale = 256

namespace lutilf {

struct RunConfig
{
  PresetName preset = PresetName::V;
  std::optional<int> qp;
  std::string input;
  std::string output;
  std::string original;
  std::string lut;
  int ctuSize = kDefaultCtuSize;
  std::optional<double> lambda;
  double flagBitsOn  = 1.0;
  double flagBitsOff = 1.0;
  int threads        = 1;
  int weightScale    = kDefaultWeightScale;
  std::map<int, PatternGeometry> patternOverrides;
  std::array<std::optional<std::vector<int>>, 2> stagePatterns;
  std::array<std::optional<std::vector<int>>, 2> stageWeights;

  bool hasGeometryOverrides() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

// Base preset with the config's geometry, pattern-list and weight overrides applied.
// Any override other than weights turns the preset into a custom one.
PipelinePreset resolve_preset(const RunConfig& cfg);

PatternGeometry parse_pattern(int id, const std::string& text);

}   // namespace lutilf
