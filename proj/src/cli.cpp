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

#include "lutilf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "lutilf/config.hpp"
#include "lutilf/costmodel.hpp"
#include "lutilf/lut_file.hpp"
#include "lutilf/pipeline.hpp"
#include "lutilf/rdo.hpp"
#include "lutilf/transfer.hpp"

namespace lutilf {

namespace {

std::vector<double> parse_numbers(const std::string& text, std::size_t minCount, std::size_t maxCount,
                                  const std::string& what)
{
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
  {
    std::size_t used = 0;
    double v         = 0;
    try
    {
      v = std::stod(tok, &used);
    }
    catch (const std::exception&)
    {
      used = 0;
    }
    if (used == 0 || used != tok.size())
    {
      throw Error(what + ": '" + tok + "' is not a number");
    }
    out.push_back(v);
  }
  if (out.size() < minCount || out.size() > maxCount)
  {
    throw Error(what + ": wrong number of values");
  }
  return out;
}

FilterOracle parse_oracle(const std::string& spec)
{
  if (spec == "identity")
  {
    return FilterOracle::identity();
  }
  if (spec == "mean")
  {
    return FilterOracle::mean();
  }
  if (spec.rfind("affine:", 0) == 0)
  {
    const auto v = parse_numbers(spec.substr(7), 4, 5, "affine oracle");
    return FilterOracle::affine({ v[0], v[1], v[2], v[3] }, v.size() == 5 ? v[4] : 0.0);
  }
  throw Error("unknown oracle '" + spec + "' (identity | mean | affine:c0,c1,c2,c3[,bias])");
}

std::string format_psnr(double db)
{
  if (std::isinf(db))
  {
    return "inf";
  }
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << db;
  return os.str();
}

std::string format_ratio(const UsageStats& stats)
{
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << stats.ratio();
  return os.str();
}

// Options shared by filter and eval.
struct FilterArgs
{
  std::string config;
  std::string input;
  std::string original;
  std::string lut;
  std::string output;
  std::string flagsOut;
  std::optional<int> qp;
  std::optional<double> lambda;
  std::optional<int> ctuSize;
  std::optional<double> flagBitsOn;
  std::optional<double> flagBitsOff;
  std::optional<int> threads;
  bool rdo = false;
};

void add_filter_options(CLI::App* cmd, FilterArgs& a)
{
  cmd->add_option("--config", a.config, "key=value run configuration");
  cmd->add_option("--lut", a.lut, "LUT set file; '{qp}' is replaced by --qp");
  cmd->add_option("--qp", a.qp, "QP tag selecting the LUT set");
  cmd->add_option("--original", a.original, "Original plane (PGM) for RDO and PSNR");
  cmd->add_option("--lambda", a.lambda, "RDO lambda (default: schedule from --qp)");
  cmd->add_option("--ctu-size", a.ctuSize, "CTU size in samples");
  cmd->add_option("--flag-bits-on", a.flagBitsOn, "Flag cost when the filter is on");
  cmd->add_option("--flag-bits-off", a.flagBitsOff, "Flag cost when the filter is off");
  cmd->add_option("--flags-out", a.flagsOut, "Write the CTU flag grid (rows of 0/1)");
  cmd->add_option("--threads", a.threads, "Worker threads for filtering (0 = all cores)");
}

struct Resolved
{
  RunConfig cfg;
  LutSet luts;
  PlaneU8 input;
  std::optional<PlaneU8> original;
  RdoConfig rdo;
};

Resolved resolve(const FilterArgs& a)
{
  Resolved r;
  if (!a.config.empty())
  {
    r.cfg = load_config(a.config);
  }
  RunConfig& cfg = r.cfg;
  if (!a.input.empty()) cfg.input = a.input;
  if (!a.original.empty()) cfg.original = a.original;
  if (!a.lut.empty()) cfg.lut = a.lut;
  if (!a.output.empty()) cfg.output = a.output;
  if (a.qp) cfg.qp = a.qp;
  if (a.lambda) cfg.lambda = a.lambda;
  if (a.ctuSize) cfg.ctuSize = *a.ctuSize;
  if (a.flagBitsOn) cfg.flagBitsOn = *a.flagBitsOn;
  if (a.flagBitsOff) cfg.flagBitsOff = *a.flagBitsOff;
  if (a.threads) cfg.threads = *a.threads;

  if (cfg.input.empty())
  {
    throw Error("no input plane given");
  }
  if (cfg.lut.empty())
  {
    throw Error("no LUT set given");
  }
  std::string lutPath = cfg.lut;
  if (const auto pos = lutPath.find("{qp}"); pos != std::string::npos)
  {
    if (!cfg.qp)
    {
      throw Error("LUT path uses {qp} but no --qp was given");
    }
    lutPath.replace(pos, 4, std::to_string(*cfg.qp));
  }
  r.luts = load_lutset(std::filesystem::path(lutPath));
  if (cfg.qp && *cfg.qp != r.luts.qp())
  {
    throw Error("LUT set " + lutPath + " was built for QP " + std::to_string(r.luts.qp()) + ", not "
                + std::to_string(*cfg.qp));
  }

  r.input = read_pgm(std::filesystem::path(cfg.input));
  if (!cfg.original.empty())
  {
    r.original = read_pgm(std::filesystem::path(cfg.original));
    if (!r.original->sameShape(r.input))
    {
      throw Error("original and reconstructed planes differ in size");
    }
  }

  r.rdo.ctuSize     = cfg.ctuSize;
  r.rdo.lambda      = cfg.lambda ? *cfg.lambda : lambda_for_qp(r.luts.qp());
  r.rdo.flagBitsOn  = cfg.flagBitsOn;
  r.rdo.flagBitsOff = cfg.flagBitsOff;
  r.rdo.validate();
  return r;
}

void write_text(const std::string& path, const std::string& text)
{
  std::ofstream os(path);
  if (!os || !(os << text))
  {
    throw Error("cannot write " + path);
  }
}

int cmd_build_lut(const std::string& presetName, const std::string& config, const std::string& oracleSpec,
                  const std::vector<std::string>& dumps, std::optional<int> qpArg, const std::string& output,
                  std::ostream& out)
{
  RunConfig cfg;
  if (!config.empty())
  {
    cfg = load_config(config);
  }
  if (!presetName.empty())
  {
    cfg.preset = parse_preset_name(presetName);
  }
  if (qpArg)
  {
    cfg.qp = qpArg;
  }
  const PipelinePreset p = resolve_preset(cfg);
  const int qp           = cfg.qp.value_or(0);

  if (oracleSpec.empty() == dumps.empty())
  {
    throw Error("give exactly one of --oracle or --from-dump");
  }
  LutSet set;
  if (!oracleSpec.empty())
  {
    set = cache_lutset(parse_oracle(oracleSpec), p, qp);
  }
  else
  {
    std::vector<ValueDump> loaded;
    for (const std::string& d : dumps)
    {
      loaded.push_back(read_dump(d));
    }
    set = lutset_from_dumps(p, qp, loaded);
  }
  save_lutset(std::filesystem::path(output), set);
  out << "wrote " << output << ": preset " << to_string(p.name) << ", qp " << qp << ", " << p.lut_count()
      << " LUTs, " << storage_bytes(p) << " value bytes\n";
  return 0;
}

int cmd_filter(const FilterArgs& a, std::ostream& out)
{
  Resolved r = resolve(a);
  if (r.cfg.output.empty())
  {
    throw Error("no output path given");
  }
  if (a.rdo && !r.original)
  {
    throw Error("--rdo needs --original");
  }

  const PlaneU8 filtered = filter_plane(r.input, r.luts, r.cfg.threads);
  PlaneU8 result         = filtered;
  if (a.rdo)
  {
    RdoResult rdo = decide(r.input, filtered, *r.original, r.rdo);
    result        = std::move(rdo.output);
    out << "n_test=" << rdo.stats.nTest << " n_total=" << rdo.stats.nTotal << " ratio=" << format_ratio(rdo.stats)
        << '\n';
    if (!a.flagsOut.empty())
    {
      write_text(a.flagsOut, rdo.flags.to_text());
    }
  }
  write_pgm(std::filesystem::path(r.cfg.output), result);
  if (r.original)
  {
    out << "psnr_input=" << format_psnr(psnr(r.input, *r.original))
        << " psnr_output=" << format_psnr(psnr(result, *r.original)) << '\n';
  }
  return 0;
}

int cmd_eval(const FilterArgs& a, std::ostream& out)
{
  Resolved r = resolve(a);
  if (!r.original)
  {
    throw Error("eval needs --original");
  }
  const PlaneU8 filtered = filter_plane(r.input, r.luts, r.cfg.threads);
  const RdoResult rdo    = decide(r.input, filtered, *r.original, r.rdo);

  out << "psnr_recon=" << format_psnr(psnr(r.input, *r.original)) << '\n'
      << "psnr_filtered=" << format_psnr(psnr(filtered, *r.original)) << '\n'
      << "psnr_rdo=" << format_psnr(psnr(rdo.output, *r.original)) << '\n'
      << "lambda=" << r.rdo.lambda << '\n'
      << "n_test=" << rdo.stats.nTest << '\n'
      << "n_total=" << rdo.stats.nTotal << '\n'
      << "ratio=" << format_ratio(rdo.stats) << '\n'
      << "flags:\n"
      << rdo.flags.to_text();
  if (!a.flagsOut.empty())
  {
    write_text(a.flagsOut, rdo.flags.to_text());
  }
  if (!r.cfg.output.empty())
  {
    write_pgm(std::filesystem::path(r.cfg.output), rdo.output);
  }
  return 0;
}

int cmd_cost(const std::string& presetName, std::int64_t width, std::int64_t height, const std::string& format,
             bool analytic, const std::string& vector, const std::string& energyTable, std::ostream& out)
{
  CostReportInput in;
  in.width  = width;
  in.height = height;

  if (!vector.empty())
  {
    const auto v = parse_numbers(vector, 4, 4, "--vector");
    for (double x : v)
    {
      if (x < 0 || x != std::floor(x))
      {
        throw Error("--vector entries must be non-negative integers");
      }
    }
    in.label    = "custom";
    in.perPixel = { std::int64_t(v[0]), std::int64_t(v[1]), std::int64_t(v[2]), std::int64_t(v[3]) };
  }
  else
  {
    const PresetName name = parse_preset_name(presetName);
    in.label              = std::string(to_string(name));
    if (analytic)
    {
      in.perPixel = analytic_cost(preset(name));
      in.label += " (analytic)";
    }
    else
    {
      in.perPixel       = preset_cost(name);
      in.publishedKmacs = published_kmacs(name);
    }
  }
  if (!energyTable.empty())
  {
    const auto e = parse_numbers(energyTable, 4, 4, "--energy");
    in.table     = { e[0], e[1], e[2], e[3] };
  }

  if (format == "text")
  {
    out << cost_report(in, ReportFormat::Text);
  }
  else if (format == "kv")
  {
    out << cost_report(in, ReportFormat::KeyValue);
  }
  else
  {
    throw Error("unknown report format '" + format + "' (text | kv)");
  }
  return 0;
}

int cmd_inspect(const std::string& path, std::ostream& out)
{
  const LutFileInfo info = inspect_lutset(path);
  std::size_t valueBytes = 0;
  out << "magic=LILF\n"
      << "format_version=" << info.formatVersion << '\n'
      << "preset=" << to_string(info.preset) << '\n'
      << "qp=" << info.qp << '\n'
      << "lut_count=" << info.records.size() << '\n';
  for (std::size_t i = 0; i < info.records.size(); i++)
  {
    const LutRecordInfo& rec = info.records[i];
    out << "lut." << i << "=stage " << rec.stageIndex << " pattern " << rec.pattern.id << " taps";
    for (const Offset& o : rec.pattern.offsets)
    {
      out << ' ' << o.dy << ',' << o.dx;
    }
    out << " weight " << rec.weight << '/' << rec.weightScale << '\n';
    valueBytes += kLutEntries;
  }
  out << "value_bytes=" << valueBytes << '\n'
      << "file_bytes=" << info.fileBytes << '\n'
      << "crc32=" << std::hex << std::setw(8) << std::setfill('0') << info.checksum << std::dec << '\n';
  return 0;
}

}   // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{ "LUT-based in-loop reconstruction filter", "lutilf" };
  app.require_subcommand(1);

  std::string preset;
  std::string config;
  std::string oracle;
  std::vector<std::string> dumps;
  std::optional<int> qp;
  std::string output;
  auto* build = app.add_subcommand("build-lut", "Cache an oracle or trainer dumps into a LUT set file");
  build->add_option("--preset", preset, "U | V | F");
  build->add_option("--config", config, "key=value geometry/weight overrides");
  build->add_option("--oracle", oracle, "identity | mean | affine:c0,c1,c2,c3[,bias]");
  build->add_option("--from-dump", dumps, "Trainer value dumps, one per (stage, pattern)");
  build->add_option("--qp", qp, "QP tag stored in the file");
  build->add_option("-o,--output", output, "Output LUT set file")->required();

  FilterArgs filterArgs;
  auto* filter = app.add_subcommand("filter", "Filter a PGM plane with a LUT set");
  filter->add_option("-i,--input", filterArgs.input, "Reconstructed plane (PGM)");
  filter->add_option("-o,--output", filterArgs.output, "Filtered plane (PGM)");
  filter->add_flag("--rdo", filterArgs.rdo, "Apply CTU-level on/off decisions against --original");
  add_filter_options(filter, filterArgs);

  FilterArgs evalArgs;
  auto* eval = app.add_subcommand("eval", "Report PSNR, usage ratio and CTU flags");
  eval->add_option("-i,--recon", evalArgs.input, "Reconstructed plane (PGM)");
  eval->add_option("-o,--output", evalArgs.output, "Write the RDO output plane (PGM)");
  add_filter_options(eval, evalArgs);

  std::string costPreset = "U";
  std::int64_t width     = 1920;
  std::int64_t height    = 1080;
  std::string format     = "text";
  bool analytic          = false;
  std::string vector;
  std::string energyTable;
  auto* cost = app.add_subcommand("cost", "Operation count and energy report");
  cost->add_option("--preset", costPreset, "U | V | F");
  cost->add_option("--width", width, "Frame width");
  cost->add_option("--height", height, "Frame height");
  cost->add_option("--format", format, "text | kv");
  cost->add_flag("--analytic", analytic, "Derive the vector from the preset structure");
  cost->add_option("--vector", vector, "Custom per-pixel vector int8Add,int8Mul,int32Add,int32Mul");
  cost->add_option("--energy", energyTable, "pJ per op int8Add,int8Mul,int32Add,int32Mul");

  std::string inspectPath;
  auto* inspect = app.add_subcommand("inspect", "Print LUT set header metadata");
  inspect->add_option("file", inspectPath, "LUT set file")->required();

  try
  {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  }
  catch (const CLI::CallForHelp&)
  {
    out << app.help();
    return 0;
  }
  catch (const CLI::ParseError& e)
  {
    err << "lutilf: " << e.what() << '\n';
    return 2;
  }

  try
  {
    if (build->parsed())
    {
      return cmd_build_lut(preset.empty() && config.empty() ? "V" : preset, config, oracle, dumps, qp, output, out);
    }
    if (filter->parsed())
    {
      return cmd_filter(filterArgs, out);
    }
    if (eval->parsed())
    {
      return cmd_eval(evalArgs, out);
    }
    if (cost->parsed())
    {
      return cmd_cost(costPreset, width, height, format, analytic, vector, energyTable, out);
    }
    return cmd_inspect(inspectPath, out);
  }
  catch (const std::exception& e)
  {
    err << "lutilf: " << e.what() << '\n';
    return 1;
  }
}

}   // namespace lutilf
