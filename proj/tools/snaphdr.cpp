#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "snaphdr/checkpoint.hpp"
#include "snaphdr/hdrio.hpp"
#include "snaphdr/keyval.hpp"
#include "snaphdr/metrics.hpp"
#include "snaphdr/pipeline.hpp"
#include "snaphdr/selftest.hpp"

namespace fs = std::filesystem;
using namespace snaphdr;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSelftest = 3;

struct OutputGuard {
  bool force = false;
  void check(const fs::path& p) const {
    if (!force && fs::exists(p))
      throw std::runtime_error("output exists, use --force to overwrite: " + p.string());
  }
};

struct CommonTrainOptions {
  std::string dataDir;
  std::string listFile;
  std::string configFile;
  std::string outDir;
  bool force = false;
  // -1 / empty sentinel means "keep config/default"
  long iterations = -1;
  long seed = -1;
  long depth = -1;
  long baseChannels = -1;
  std::string lossDomain;
};

std::vector<std::string> dataset_files(const std::string& dir, const std::string& listFile) {
  std::vector<std::string> files;
  if (!listFile.empty()) {
    std::ifstream in(listFile);
    if (!in) throw std::runtime_error("cannot open list file " + listFile);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      fs::path p = fs::path(line);
      if (p.is_relative()) p = fs::path(dir) / p;
      files.push_back(p.string());
    }
  } else {
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".hdr")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
  }
  if (files.empty()) throw std::runtime_error("no .hdr files found in " + dir);
  return files;
}

pipeline::Dataset load_dataset(const std::string& dir, const std::string& listFile,
                               const SimConfig& sim) {
  std::vector<Plane> hdrs;
  for (const std::string& f : dataset_files(dir, listFile)) hdrs.push_back(hdrio::read_hdr(f));
  return pipeline::make_dataset(hdrs, sim);
}

SimConfig sim_from_cli(const KeyVal& kv, const std::string& patternArg,
                       const std::string& scalesArg, long bitDepth) {
  SimConfig sim = pipeline::sim_from_echo(kv);
  if (!scalesArg.empty()) {
    sim.exposureScales.clear();
    std::istringstream in(scalesArg);
    std::string tok;
    while (std::getline(in, tok, ',')) sim.exposureScales.push_back(std::stod(tok));
  }
  if (bitDepth > 0) sim.bitDepth = static_cast<int>(bitDepth);
  if (!patternArg.empty() && patternArg != "default") {
    if (patternArg.front() == '@') {
      std::ifstream in(patternArg.substr(1));
      if (!in) throw std::runtime_error("cannot open pattern file " + patternArg.substr(1));
      std::ostringstream buf;
      buf << in.rdbuf();
      sim.pattern = MosaicPattern::parse(buf.str());
    } else {
      sim.pattern = MosaicPattern::parse(patternArg);
    }
  }
  sim.validate();
  return sim;
}

void apply_train_overrides(pipeline::TrainConfig& tc, const CommonTrainOptions& opt) {
  if (opt.iterations > 0) tc.iterations = static_cast<int>(opt.iterations);
  if (opt.seed >= 0) tc.seed = static_cast<std::uint64_t>(opt.seed);
  if (const char* env = std::getenv("SNAPHDR_SEED")) tc.seed = std::strtoull(env, nullptr, 10);
  if (opt.lossDomain == "linear") tc.lossDomain = pipeline::TrainConfig::LossDomain::Linear;
  else if (opt.lossDomain == "ln") tc.lossDomain = pipeline::TrainConfig::LossDomain::LuminanceNormalized;
}

void apply_unet_overrides(autonet::UNetConfig& uc, const CommonTrainOptions& opt) {
  if (opt.depth > 0) uc.depth = static_cast<int>(opt.depth);
  if (opt.baseChannels > 0) uc.baseChannels = static_cast<int>(opt.baseChannels);
}

void write_manifest(const fs::path& path, const std::string& echo,
                    const std::vector<double>& trace) {
  std::ofstream out(path);
  out << echo;
  if (!trace.empty()) {
    out << "\n[result]\n";
    out.precision(17);
    out << "initialLoss=" << trace.front() << "\nfinalLoss=" << trace.back() << "\n";
  }
}

int run_train(const CommonTrainOptions& opt, bool lnStage, const std::string& ldrCkptPath) {
  KeyVal kv = opt.configFile.empty() ? KeyVal() : KeyVal::load(opt.configFile);
  SimConfig sim = pipeline::sim_from_echo(kv);
  pipeline::TrainConfig tc = pipeline::train_from_echo(kv);
  autonet::UNetConfig uc = pipeline::unet_from_echo(kv);
  apply_train_overrides(tc, opt);
  apply_unet_overrides(uc, opt);

  OutputGuard guard{opt.force};
  fs::create_directories(opt.outDir);
  const fs::path ckptPath = fs::path(opt.outDir) / (lnStage ? "ln_net.ckpt" : "ldr_net.ckpt");
  const fs::path lossPath = fs::path(opt.outDir) / (lnStage ? "loss_ln.csv" : "loss_ldr.csv");
  const fs::path manifestPath = fs::path(opt.outDir) / (lnStage ? "manifest_ln.txt" : "manifest_ldr.txt");
  guard.check(ckptPath);
  guard.check(lossPath);
  guard.check(manifestPath);

  pipeline::TrainOutput result = [&] {
    if (!lnStage) {
      pipeline::Dataset ds = load_dataset(opt.dataDir, opt.listFile, sim);
      std::cerr << "training LDR-I-Net: " << ds.scenes.size() << " scenes, " << tc.iterations
                << " iterations\n";
      return pipeline::train_ldr_i_net(ds, tc, uc);
    }
    autonet::Checkpoint ldrCkpt = autonet::load_checkpoint(ldrCkptPath);
    const KeyVal ldrKv = KeyVal::parse(ldrCkpt.configEcho);
    // the stage-1 checkpoint fixes the radiometric model
    sim = pipeline::sim_from_echo(ldrKv);
    autonet::UNet ldrNet(pipeline::unet_from_echo(ldrKv));
    autonet::load_into(ldrCkpt, ldrNet.params());
    pipeline::Dataset ds = load_dataset(opt.dataDir, opt.listFile, sim);
    std::cerr << "training LN-Net: " << ds.scenes.size() << " scenes, " << tc.iterations
              << " iterations\n";
    return pipeline::train_ln_net(ds, ldrNet, tc, uc);
  }();

  const std::string echo = pipeline::echo_config(sim, tc, result.net.config());
  autonet::save_checkpoint(ckptPath.string(), result.net.params(), echo);
  pipeline::write_loss_csv(lossPath.string(), result.lossTrace);
  write_manifest(manifestPath, echo, result.lossTrace);
  std::cerr << "wrote " << ckptPath.string() << " (initial loss " << result.lossTrace.front()
            << ", final " << result.lossTrace.back() << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snapshot HDR imaging with a multi-exposure CFA"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = hardware default)");

  // simulate
  auto* simCmd = app.add_subcommand("simulate", "HDR image -> ME-CFA RAW + LDR stack + ground truth");
  std::string simIn, simOut, simPattern = "default", simScales;
  long simBitDepth = -1;
  bool simForce = false, simPgm = false;
  simCmd->add_option("--in", simIn, "input Radiance .hdr image")->required();
  simCmd->add_option("--out", simOut, "output directory")->required();
  simCmd->add_option("--pattern", simPattern, "4x4 pattern: 'default', 16 tokens, or @file");
  simCmd->add_option("--scales", simScales, "comma-separated exposure scales (default 1,4,16)");
  simCmd->add_option("--bit-depth", simBitDepth, "quantization depth (default 8)");
  simCmd->add_flag("--pgm", simPgm, "also write RAW as 16-bit PGM");
  simCmd->add_flag("--force", simForce, "overwrite existing outputs");

  // train-ldr / train-ln
  CommonTrainOptions ldrOpt, lnOpt;
  std::string lnLdrCkpt;
  auto addTrainOptions = [](CLI::App* cmd, CommonTrainOptions& o) {
    cmd->add_option("--data", o.dataDir, "directory of .hdr files")->required();
    cmd->add_option("--list", o.listFile, "explicit file list (one per line)");
    cmd->add_option("--config", o.configFile, "key=value config file");
    cmd->add_option("--out", o.outDir, "output directory")->required();
    cmd->add_option("--iterations", o.iterations, "mini-batch updates (default 3000)");
    cmd->add_option("--seed", o.seed, "RNG seed (SNAPHDR_SEED overrides)");
    cmd->add_option("--depth", o.depth, "U-Net depth (default 5)");
    cmd->add_option("--base-channels", o.baseChannels, "U-Net width (default 32)");
    cmd->add_flag("--force", o.force, "overwrite existing outputs");
  };
  auto* trainLdr = app.add_subcommand("train-ldr", "train the LDR interpolation network");
  addTrainOptions(trainLdr, ldrOpt);
  auto* trainLn = app.add_subcommand("train-ln", "train the luminance-normalized network");
  addTrainOptions(trainLn, lnOpt);
  trainLn->add_option("--ldr-ckpt", lnLdrCkpt, "stage-1 checkpoint")->required();
  trainLn->add_option("--loss-domain", lnOpt.lossDomain, "'ln' (default) or 'linear'")
      ->check(CLI::IsMember({"ln", "linear"}));

  // reconstruct
  auto* recCmd = app.add_subcommand("reconstruct", "RAW + two checkpoints -> HDR image");
  std::string recRaw, recLdrCkpt, recLnCkpt, recOut;
  bool recForce = false;
  recCmd->add_option("--raw", recRaw, "RAW mosaic (.pfm or .pgm)")->required();
  recCmd->add_option("--ldr-ckpt", recLdrCkpt, "stage-1 checkpoint")->required();
  recCmd->add_option("--ln-ckpt", recLnCkpt, "stage-2 checkpoint")->required();
  recCmd->add_option("--out", recOut, "output .hdr path")->required();
  recCmd->add_flag("--force", recForce, "overwrite existing outputs");

  // evaluate
  auto* evalCmd = app.add_subcommand("evaluate", "prediction vs ground truth metrics");
  std::string evalPred, evalTruth, evalOut, evalThresholds = "1e-6,1e-5,1e-4,1e-3,1e-2,1e-1";
  bool evalForce = false;
  evalCmd->add_option("--pred", evalPred, "predicted .hdr")->required();
  evalCmd->add_option("--truth", evalTruth, "ground-truth .hdr")->required();
  evalCmd->add_option("--out", evalOut, "output directory")->required();
  evalCmd->add_option("--thresholds", evalThresholds, "error-ratio thresholds, ascending");
  evalCmd->add_flag("--force", evalForce, "overwrite existing outputs");

  // selftest
  auto* selfCmd = app.add_subcommand("selftest", "gradient-check and oracle suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  set_num_threads(threads);

  try {
    if (simCmd->parsed()) {
      SimConfig sim = sim_from_cli(KeyVal(), simPattern, simScales, simBitDepth);
      const Plane hdr = hdrio::read_hdr(simIn);
      const MecfaData data = simulate_mecfa(hdr, sim);

      OutputGuard guard{simForce};
      fs::create_directories(simOut);
      const fs::path dir(simOut);
      std::vector<fs::path> outputs{dir / "raw.pfm", dir / "gt.hdr"};
      for (std::size_t k = 0; k < data.ldrStack.size(); ++k) {
        outputs.push_back(dir / ("ldr_" + std::to_string(k) + ".pfm"));
        outputs.push_back(dir / ("ldr_" + std::to_string(k) + ".ppm"));
      }
      if (simPgm) outputs.push_back(dir / "raw.pgm");
      for (const fs::path& p : outputs) guard.check(p);

      hdrio::write_pfm(data.raw, (dir / "raw.pfm").string());
      if (simPgm) hdrio::write_pgm(data.raw, (dir / "raw.pgm").string(), sim.bitDepth);
      hdrio::write_hdr(data.hdrNorm, (dir / "gt.hdr").string());
      for (std::size_t k = 0; k < data.ldrStack.size(); ++k) {
        hdrio::write_pfm(data.ldrStack[k], (dir / ("ldr_" + std::to_string(k) + ".pfm")).string());
        hdrio::write_ppm(data.ldrStack[k], (dir / ("ldr_" + std::to_string(k) + ".ppm")).string());
      }
      std::cerr << "simulated " << data.raw.width << "x" << data.raw.height << " RAW into "
                << simOut << "\n";
      return 0;
    }

    if (trainLdr->parsed()) return run_train(ldrOpt, false, "");
    if (trainLn->parsed()) return run_train(lnOpt, true, lnLdrCkpt);

    if (recCmd->parsed()) {
      OutputGuard guard{recForce};
      guard.check(recOut);

      autonet::Checkpoint ldrCkpt = autonet::load_checkpoint(recLdrCkpt);
      autonet::Checkpoint lnCkpt = autonet::load_checkpoint(recLnCkpt);
      const KeyVal kv = KeyVal::parse(ldrCkpt.configEcho);
      const SimConfig sim = pipeline::sim_from_echo(kv);
      const pipeline::TrainConfig tc = pipeline::train_from_echo(kv);

      autonet::UNet ldrNet(pipeline::unet_from_echo(kv));
      autonet::load_into(ldrCkpt, ldrNet.params());
      autonet::UNet lnNet(pipeline::unet_from_echo(KeyVal::parse(lnCkpt.configEcho)));
      autonet::load_into(lnCkpt, lnNet.params());

      const Plane raw = fs::path(recRaw).extension() == ".pgm" ? hdrio::read_pgm(recRaw)
                                                               : hdrio::read_pfm(recRaw);
      ExposureSpec spec{sim.exposureScales, 1.0};
      const Plane out = pipeline::reconstruct(raw, ldrNet, lnNet, sim.pattern, spec,
                                              WeightFn::hat(), tc.epsilonL);
      hdrio::write_hdr(out, recOut);
      std::cerr << "wrote " << recOut << "\n";
      return 0;
    }

    if (evalCmd->parsed()) {
      std::vector<double> thresholds;
      std::istringstream in(evalThresholds);
      std::string tok;
      while (std::getline(in, tok, ',')) thresholds.push_back(std::stod(tok));

      const Plane pred = hdrio::read_hdr(evalPred);
      const Plane truth = hdrio::read_hdr(evalTruth);
      const metrics::EvalReport report = metrics::evaluate(pred, truth, thresholds);

      OutputGuard guard{evalForce};
      fs::create_directories(evalOut);
      const fs::path dir(evalOut);
      guard.check(dir / "report.csv");
      guard.check(dir / "report.txt");
      guard.check(dir / "error_ratio.csv");
      std::ofstream(dir / "report.csv") << metrics::report_csv(report);
      std::ofstream(dir / "report.txt") << metrics::report_text(report);
      std::ofstream(dir / "error_ratio.csv") << metrics::curve_csv(report);
      std::cout << metrics::report_text(report);
      return 0;
    }

    if (selfCmd->parsed()) {
      const int failures = selftest::run(std::cout);
      return failures == 0 ? 0 : kExitSelftest;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
