#include "itc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "itc/certify.hpp"
#include "itc/corpus.hpp"
#include "itc/document.hpp"
#include "itc/errors.hpp"
#include "itc/oracle.hpp"

namespace itc {
namespace {

struct SolverFlags {
  std::uint64_t seed = 0;
  int starts = 32;
  int max_iter = 5000;
  double tol = 1e-10;
  double margin = 1e-8;
  int jobs = 1;
};

void AddSolverFlags(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Master seed for random starts (ITC_SEED overrides)");
  cmd->add_option("--starts", flags.starts, "Random starts per eigenvalue search")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-iter", flags.max_iter, "Iterations per start")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", flags.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--margin", flags.margin, "Strictness margin")->check(CLI::NonNegativeNumber);
  cmd->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

std::uint64_t EffectiveSeed(std::uint64_t flag) {
  const char* env = std::getenv("ITC_SEED");
  if (env == nullptr || *env == '\0') return flag;
  try {
    std::size_t used = 0;
    const std::uint64_t seed = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument(env);
    return seed;
  } catch (const std::exception&) {
    throw InputError(std::string("ITC_SEED is not an unsigned integer: '") + env + "'");
  }
}

CertifyOptions ToOptions(const SolverFlags& flags) {
  CertifyOptions opts;
  opts.solver.seed = EffectiveSeed(flags.seed);
  opts.solver.starts = flags.starts;
  opts.solver.max_iter = flags.max_iter;
  opts.solver.tol_residual = flags.tol;
  opts.solver.jobs = flags.jobs;
  opts.margin = flags.margin;
  return opts;
}

Json ReadJson(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw InputError("cannot open '" + path + "'");
    in = &file;
  }
  try {
    return Json::parse(*in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

using Clock = std::chrono::steady_clock;

void PrintVerdict(std::ostream& out, const Verdict& verdict, Clock::time_point start,
                  bool timing) {
  Json doc = VerdictToJson(verdict);
  if (timing) {
    doc["timing_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  }
  out << doc.dump(2) << "\n";
}

int CheckPdCommand(const std::string& path, const std::string& mode_name,
                   const SolverFlags& flags, bool timing, std::ostream& out) {
  const auto start = Clock::now();
  const DefinitenessMode mode = mode_name == "pd" ? DefinitenessMode::kPd : DefinitenessMode::kPsd;
  const CertifyOptions opts = ToOptions(flags);
  const auto input = ParseAnyDocument(ReadJson(path));
  const Verdict verdict = std::holds_alternative<DenseTensor>(input)
                              ? CheckPointPd(std::get<DenseTensor>(input), mode, opts)
                              : CertifyIntervalPd(std::get<IntervalTensor>(input), mode, opts);
  PrintVerdict(out, verdict, start, timing);
  if (HoldsSoundly(verdict, mode)) return kExitHolds;
  if (Refutes(verdict, mode)) return kExitRefuted;
  return kExitUndecided;
}

int CheckHurwitzCommand(const std::string& path, bool assume_symmetric, const SolverFlags& flags,
                        bool timing, std::ostream& out) {
  const auto start = Clock::now();
  const CertifyOptions opts = ToOptions(flags);
  const auto input = ParseAnyDocument(ReadJson(path));
  const IntervalTensor interval = std::holds_alternative<DenseTensor>(input)
                                      ? IntervalTensor::Point(std::get<DenseTensor>(input))
                                      : std::get<IntervalTensor>(input);
  const bool symmetric = interval.IsSymmetric();
  if (assume_symmetric && !symmetric) {
    throw PreconditionError("--assume-symmetric given but the interval is not symmetric");
  }
  const Verdict verdict =
      symmetric ? CheckHurwitzSymmetric(interval, opts) : CheckHurwitzGeneral(interval, opts);
  PrintVerdict(out, verdict, start, timing);
  if (verdict.status == Status::kStable && verdict.certified == CertLevel::kPd) return kExitHolds;
  if (verdict.status == Status::kNotStable) return kExitRefuted;
  return kExitUndecided;
}

struct GenFlags {
  int order = 4;
  int dim = 3;
  std::uint64_t seed = 0;
  double density = 1.0;
  double radius_scale = 0.1;
  bool symmetric = false;
  bool tensor = false;
};

IntervalTensor Generate(const GenFlags& flags) {
  if (flags.order < 2 || flags.dim < 1) throw InputError("gen needs --order >= 2 and --dim >= 1");
  std::mt19937_64 rng(EffectiveSeed(flags.seed));
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  DenseTensor shape(flags.order, flags.dim);
  std::vector<double> center(shape.size());
  std::vector<double> radius(shape.size());
  for (std::size_t k = 0; k < shape.size(); ++k) {
    const double v = value(rng);
    center[k] = unit(rng) < flags.density ? v : 0.0;
    radius[k] = flags.radius_scale * unit(rng);
  }
  DenseTensor c(flags.order, flags.dim, std::move(center));
  DenseTensor r(flags.order, flags.dim, std::move(radius));
  if (flags.symmetric) return IntervalTensor(Symmetrize(c), Symmetrize(r));
  return IntervalTensor(std::move(c), std::move(r));
}

int GenCommand(const GenFlags& flags, std::ostream& out) {
  if (flags.density < 0.0 || flags.density > 1.0) throw InputError("--density must be in [0, 1]");
  if (flags.radius_scale < 0.0) throw InputError("--radius-scale must be nonnegative");
  const IntervalTensor interval = Generate(flags);
  const Json doc = flags.tensor ? EmitTensorDocument(interval.center(), TensorFormat::kDense)
                                : EmitIntervalDocument(interval, TensorFormat::kDense);
  out << doc.dump(2) << "\n";
  return kExitHolds;
}

struct BenchFlags {
  int dim_min = 2;
  int dim_max = 4;
  int order = 4;
  int trials = 3;
  int free_entries = 4;
  SolverFlags solver;
};

/// Random interval for the benchmark. Where the extreme-point oracle is
/// feasible every entry (order 2) or `free_entries` entries (order 4) get a
/// positive radius; elsewhere all entries do.
IntervalTensor BenchInstance(int order, int dim, int free_entries, bool oracle_feasible,
                             std::mt19937_64& rng) {
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  DenseTensor shape(order, dim);
  std::vector<double> center(shape.size());
  std::vector<double> radius(shape.size(), 0.0);
  for (double& v : center) v = 0.3 * value(rng);
  std::vector<int> diagonal(static_cast<std::size_t>(order));
  for (int i = 0; i < dim; ++i) {
    std::fill(diagonal.begin(), diagonal.end(), i);
    center[shape.LinearIndex(diagonal)] += 1.0;
  }
  std::vector<std::size_t> positions(shape.size());
  std::iota(positions.begin(), positions.end(), 0);
  std::shuffle(positions.begin(), positions.end(), rng);
  std::size_t free = positions.size();
  if (oracle_feasible && order > 2) {
    free = std::min<std::size_t>(positions.size(), static_cast<std::size_t>(free_entries));
  }
  for (std::size_t k = 0; k < free; ++k) radius[positions[k]] = 0.1 + 0.4 * unit(rng);
  return IntervalTensor(DenseTensor(order, dim, std::move(center)),
                        DenseTensor(order, dim, std::move(radius)));
}

int BenchCommand(const BenchFlags& flags, std::ostream& out) {
  if (flags.order < 2 || flags.order % 2 != 0) throw InputError("--order must be even and >= 2");
  if (flags.dim_min < 1 || flags.dim_max < flags.dim_min) throw InputError("bad --dim range");
  if (flags.trials < 1) throw InputError("--trials must be positive");
  const CertifyOptions opts = ToOptions(flags.solver);
  std::mt19937_64 rng(opts.solver.seed);

  out << std::left << std::setw(4) << "n" << std::setw(16) << "vertex_checks" << std::setw(14)
      << "vertex_ms" << std::setw(18) << "extreme_points" << std::setw(14) << "oracle_ms"
      << "agree\n";
  for (int n = flags.dim_min; n <= flags.dim_max; ++n) {
    const bool feasible = (flags.order == 2 && n <= 2) || (flags.order == 4 && n == 2);
    double vertex_ms = 0.0;
    double oracle_ms = 0.0;
    int agree = 0;
    int free = 0;
    for (int t = 0; t < flags.trials; ++t) {
      const IntervalTensor interval = BenchInstance(flags.order, n, flags.free_entries, feasible, rng);
      free = FreeEntryCount(interval);
      auto start = Clock::now();
      const Verdict vertex = CheckIntervalPd(interval, DefinitenessMode::kPd, opts);
      vertex_ms += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      if (!feasible) continue;
      start = Clock::now();
      const Verdict oracle = OracleExtremePointsPd(interval, DefinitenessMode::kPd);
      oracle_ms += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      if (oracle.status == vertex.status) ++agree;
    }
    std::ostringstream checks;
    checks << (std::uint64_t{1} << (n - 1));
    std::ostringstream points;
    if (free < 63) {
      points << (std::uint64_t{1} << free);
    } else {
      points << "2^" << free;
    }
    std::ostringstream vms;
    vms << std::fixed << std::setprecision(2) << vertex_ms / flags.trials;
    std::ostringstream oms;
    std::ostringstream agreement;
    if (feasible) {
      oms << std::fixed << std::setprecision(2) << oracle_ms / flags.trials;
      agreement << agree << "/" << flags.trials;
    } else {
      oms << "skipped";
      agreement << "-";
    }
    out << std::left << std::setw(4) << n << std::setw(16) << checks.str() << std::setw(14)
        << vms.str() << std::setw(18) << points.str() << std::setw(14) << oms.str()
        << agreement.str() << "\n";
  }
  return kExitHolds;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Definiteness and Hurwitz stability of interval tensors", "itc"};
  app.require_subcommand(1);

  std::string input;
  std::string mode = "pd";
  bool no_timing = false;
  bool assume_symmetric = false;
  SolverFlags pd_flags;
  SolverFlags hurwitz_flags;
  GenFlags gen;
  BenchFlags bench;
  std::string corpus_name;

  CLI::App* check_pd = app.add_subcommand("check-pd", "Positive (semi-)definiteness");
  check_pd->add_option("input", input, "Tensor or interval document ('-' for stdin)")->required();
  check_pd->add_option("--mode", mode, "Property to decide")
      ->check(CLI::IsMember({"pd", "psd"}));
  check_pd->add_flag("--no-timing", no_timing, "Omit timing_ms from the output");
  AddSolverFlags(check_pd, pd_flags);

  CLI::App* check_hurwitz = app.add_subcommand("check-hurwitz", "Hurwitz stability");
  check_hurwitz->add_option("input", input, "Tensor or interval document ('-' for stdin)")
      ->required();
  check_hurwitz->add_flag("--assume-symmetric", assume_symmetric,
                          "Fail unless the input passes the symmetry scan");
  check_hurwitz->add_flag("--no-timing", no_timing, "Omit timing_ms from the output");
  AddSolverFlags(check_hurwitz, hurwitz_flags);

  CLI::App* gen_cmd = app.add_subcommand("gen", "Random instance");
  gen_cmd->add_option("--order", gen.order, "Tensor order");
  gen_cmd->add_option("--dim", gen.dim, "Tensor dimension");
  gen_cmd->add_option("--seed", gen.seed, "Seed (ITC_SEED overrides)");
  gen_cmd->add_option("--density", gen.density, "Fraction of nonzero center entries");
  gen_cmd->add_option("--radius-scale", gen.radius_scale, "Radius entries lie in [0, scale]");
  gen_cmd->add_flag("--symmetric", gen.symmetric, "Symmetrize center and radius");
  gen_cmd->add_flag("--tensor", gen.tensor, "Emit the center as a tensor document");

  CLI::App* corpus_cmd = app.add_subcommand("corpus", "Theorem boundary instances");
  corpus_cmd->add_option("name", corpus_name, "Instance name")->required();

  CLI::App* bench_cmd = app.add_subcommand("bench", "Vertex reduction vs extreme points");
  bench_cmd->add_option("--dim-min", bench.dim_min, "Smallest dimension");
  bench_cmd->add_option("--dim-max", bench.dim_max, "Largest dimension");
  bench_cmd->add_option("--order", bench.order, "Tensor order");
  bench_cmd->add_option("--trials", bench.trials, "Instances per dimension");
  bench_cmd->add_option("--free-entries", bench.free_entries,
                        "Entries with positive radius where the oracle runs (order 4)");
  AddSolverFlags(bench_cmd, bench.solver);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitInputError;
  }

  try {
    if (*check_pd) return CheckPdCommand(input, mode, pd_flags, !no_timing, out);
    if (*check_hurwitz) {
      return CheckHurwitzCommand(input, assume_symmetric, hurwitz_flags, !no_timing, out);
    }
    if (*gen_cmd) return GenCommand(gen, out);
    if (*corpus_cmd) {
      out << CorpusDocument(corpus_name).dump(2) << "\n";
      return kExitHolds;
    }
    if (*bench_cmd) return BenchCommand(bench, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "precondition error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CapExceededError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace itc
