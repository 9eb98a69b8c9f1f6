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

#include "lutilf/config.hpp"

#include <fstream>
#include <sstream>

namespace lutilf {

namespace {

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
  {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& key, const std::string& v)
{
  std::size_t used = 0;
  int out          = 0;
  try
  {
    out = std::stoi(v, &used);
  }
  catch (const std::exception&)
  {
    used = 0;
  }
  if (used == 0 || used != v.size())
  {
    throw Error("config key '" + key + "' expects an integer, got '" + v + "'");
  }
  return out;
}

double to_double(const std::string& key, const std::string& v)
{
  std::size_t used = 0;
  double out       = 0;
  try
  {
    out = std::stod(v, &used);
  }
  catch (const std::exception&)
  {
    used = 0;
  }
  if (used == 0 || used != v.size())
  {
    throw Error("config key '" + key + "' expects a number, got '" + v + "'");
  }
  return out;
}

std::vector<int> to_int_list(const std::string& key, const std::string& v)
{
  std::istringstream is(v);
  std::vector<int> out;
  std::string tok;
  while (is >> tok)
  {
    out.push_back(to_int(key, tok));
  }
  if (out.empty())
  {
    throw Error("config key '" + key + "' expects a list of integers");
  }
  return out;
}

}   // namespace

PatternGeometry parse_pattern(int id, const std::string& text)
{
  std::istringstream is(text);
  PatternGeometry p;
  p.id = id;
  std::string tok;
  std::size_t k = 0;
  while (is >> tok)
  {
    const auto comma = tok.find(',');
    if (k >= 4 || comma == std::string::npos)
    {
      throw Error("pattern " + std::to_string(id) + " needs exactly four 'dy,dx' taps");
    }
    p.offsets[k].dy = to_int("pattern", tok.substr(0, comma));
    p.offsets[k].dx = to_int("pattern", tok.substr(comma + 1));
    k++;
  }
  if (k != 4)
  {
    throw Error("pattern " + std::to_string(id) + " needs exactly four 'dy,dx' taps");
  }
  p.validate();
  return p;
}

bool RunConfig::hasGeometryOverrides() const
{
  return !patternOverrides.empty() || stagePatterns[0] || stagePatterns[1];
}

RunConfig parse_config(const std::string& text)
{
  RunConfig cfg;
  std::istringstream is(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(is, line))
  {
    lineNo++;
    if (const auto hash = line.find('#'); hash != std::string::npos)
    {
      line.resize(hash);
    }
    line = trim(line);
    if (line.empty())
    {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
    {
      throw Error("config line " + std::to_string(lineNo) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));

    if (key == "preset") cfg.preset = parse_preset_name(val);
    else if (key == "qp") cfg.qp = to_int(key, val);
    else if (key == "input") cfg.input = val;
    else if (key == "output") cfg.output = val;
    else if (key == "original") cfg.original = val;
    else if (key == "lut") cfg.lut = val;
    else if (key == "ctu_size") cfg.ctuSize = to_int(key, val);
    else if (key == "lambda") cfg.lambda = to_double(key, val);
    else if (key == "flag_bits_on") cfg.flagBitsOn = to_double(key, val);
    else if (key == "flag_bits_off") cfg.flagBitsOff = to_double(key, val);
    else if (key == "threads") cfg.threads = to_int(key, val);
    else if (key == "weight_scale") cfg.weightScale = to_int(key, val);
    else if (key.rfind("pattern.", 0) == 0)
    {
      const int id                = to_int(key, key.substr(8));
      cfg.patternOverrides[id]    = parse_pattern(id, val);
    }
    else if (key == "stage1.patterns" || key == "stage2.patterns")
    {
      cfg.stagePatterns[std::size_t(key[5] - '1')] = to_int_list(key, val);
    }
    else if (key == "stage1.weights" || key == "stage2.weights")
    {
      cfg.stageWeights[std::size_t(key[5] - '1')] = to_int_list(key, val);
    }
    else
    {
      throw Error("config line " + std::to_string(lineNo) + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path)
{
  std::ifstream is(path);
  if (!is)
  {
    throw Error("cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_config(ss.str());
}

PipelinePreset resolve_preset(const RunConfig& cfg)
{
  if (cfg.preset == PresetName::Custom && !(cfg.stagePatterns[0] && cfg.stagePatterns[1]))
  {
    throw Error("a custom preset needs stage1.patterns and stage2.patterns");
  }
  PipelinePreset out = cfg.preset == PresetName::Custom ? PipelinePreset{} : preset(cfg.preset);
  const auto geometry = [&](int id) {
    const auto it = cfg.patternOverrides.find(id);
    return it != cfg.patternOverrides.end() ? it->second : default_pattern(id);
  };

  for (std::size_t s = 0; s < 2; s++)
  {
    StageSpec& stage = out.stages[s];
    if (cfg.stagePatterns[s])
    {
      stage.patterns.clear();
      for (int id : *cfg.stagePatterns[s])
      {
        stage.patterns.push_back(geometry(id));
      }
    }
    else
    {
      for (PatternGeometry& p : stage.patterns)
      {
        p = geometry(p.id);
      }
    }
    stage.weightScale = cfg.weightScale;
    if (cfg.stageWeights[s])
    {
      if (cfg.stageWeights[s]->size() != stage.patterns.size())
      {
        throw Error("stage" + std::to_string(s + 1) + ".weights needs one weight per pattern");
      }
      stage.weights = renormalize_weights(*cfg.stageWeights[s], cfg.weightScale);
    }
    else
    {
      stage.weights = renormalize_weights(std::vector<int>(stage.patterns.size(), 1), cfg.weightScale);
    }
  }
  if (cfg.hasGeometryOverrides())
  {
    out.name = PresetName::Custom;
  }
  out.validate();
  return out;
}

}   // namespace lutilf
