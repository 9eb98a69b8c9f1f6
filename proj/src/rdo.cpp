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

#include "lutilf/rdo.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace lutilf {

void RdoConfig::validate() const
{
  if (ctuSize < 1)
  {
    throw Error("CTU size must be at least 1");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
  {
    throw Error("lambda must be finite and non-negative");
  }
  if (!(flagBitsOn >= 0.0) || !(flagBitsOff >= 0.0))
  {
    throw Error("flag bit costs must be non-negative");
  }
}

double lambda_for_qp(int qp)
{
  return 0.57 * std::exp2((qp - 12) / 3.0);
}

std::string FlagMap::to_text() const
{
  std::ostringstream os;
  for (int r = 0; r < rows; r++)
  {
    for (int c = 0; c < cols; c++)
    {
      os << (c ? " " : "") << (at(c, r) ? '1' : '0');
    }
    os << '\n';
  }
  return os.str();
}

FlagMap parse_flag_grid(const std::string& text)
{
  FlagMap map;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
  {
    std::istringstream ls(line);
    int count = 0;
    std::string tok;
    while (ls >> tok)
    {
      if (tok != "0" && tok != "1")
      {
        throw Error("flag grid entries must be 0 or 1");
      }
      map.flags.push_back(tok == "1");
      count++;
    }
    if (count == 0)
    {
      continue;
    }
    if (map.rows > 0 && count != map.cols)
    {
      throw Error("flag grid rows differ in length");
    }
    map.cols = count;
    map.rows++;
  }
  return map;
}

std::int64_t ssd(const PlaneU8& a, const PlaneU8& b, const Region& region)
{
  if (!a.sameShape(b))
  {
    throw Error("SSD needs congruent planes");
  }
  if (region.x < 0 || region.y < 0 || region.width < 0 || region.height < 0 || region.x + region.width > a.width()
      || region.y + region.height > a.height())
  {
    throw Error("SSD region outside the plane");
  }
  std::int64_t sum = 0;
  for (int y = region.y; y < region.y + region.height; y++)
  {
    for (int x = region.x; x < region.x + region.width; x++)
    {
      const int d = int(a.at(x, y)) - int(b.at(x, y));
      sum += d * d;
    }
  }
  return sum;
}

std::int64_t ssd(const PlaneU8& a, const PlaneU8& b)
{
  if (!a.sameShape(b))
  {
    throw Error("SSD needs congruent planes");
  }
  return ssd(a, b, { 0, 0, a.width(), a.height() });
}

RdoResult decide(const PlaneU8& recon, const PlaneU8& filtered, const PlaneU8& original, const RdoConfig& cfg)
{
  cfg.validate();
  if (!recon.sameShape(filtered) || !recon.sameShape(original))
  {
    throw Error("RDO needs congruent reconstructed, filtered and original planes");
  }

  RdoResult res{ {}, recon, {} };
  FlagMap& map = res.flags;
  map.cols     = (recon.width() + cfg.ctuSize - 1) / cfg.ctuSize;
  map.rows     = (recon.height() + cfg.ctuSize - 1) / cfg.ctuSize;
  const std::size_t n = std::size_t(map.cols) * std::size_t(map.rows);
  map.flags.assign(n, 0);
  map.jOn.assign(n, 0.0);
  map.jOff.assign(n, 0.0);

  for (int r = 0; r < map.rows; r++)
  {
    for (int c = 0; c < map.cols; c++)
    {
      const Region ctu{ c * cfg.ctuSize, r * cfg.ctuSize, std::min(cfg.ctuSize, recon.width() - c * cfg.ctuSize),
                        std::min(cfg.ctuSize, recon.height() - r * cfg.ctuSize) };
      const std::size_t i = std::size_t(r) * std::size_t(map.cols) + std::size_t(c);
      map.jOn[i]  = double(ssd(filtered, original, ctu)) + cfg.lambda * cfg.flagBitsOn;
      map.jOff[i] = double(ssd(recon, original, ctu)) + cfg.lambda * cfg.flagBitsOff;
      if (map.jOn[i] < map.jOff[i])
      {
        map.flags[i] = 1;
        res.stats.nTest++;
        for (int y = ctu.y; y < ctu.y + ctu.height; y++)
        {
          for (int x = ctu.x; x < ctu.x + ctu.width; x++)
          {
            res.output.at(x, y) = filtered.at(x, y);
          }
        }
      }
      res.stats.nTotal++;
    }
  }
  return res;
}

double psnr(const PlaneU8& a, const PlaneU8& b)
{
  const std::int64_t err = ssd(a, b);
  if (err == 0)
  {
    return std::numeric_limits<double>::infinity();
  }
  const double n = double(a.width()) * double(a.height());
  return 10.0 * std::log10(255.0 * 255.0 * n / double(err));
}

}   // namespace lutilf
