#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <system_error>
#include <thread>

#include "mindist/construction_script.hpp"
#include "mindist/engine.hpp"
#include "mindist/matrix_io.hpp"
#include "mindist/random_code.hpp"

namespace mindist::cli {

namespace {

struct RunConfig {
  std::string algorithm = "saved";
  std::size_t s = 3;
  std::size_t unroll = 1;
  std::optional<std::size_t> threads;
  std::uint64_t seed = 0;
  std::size_t budget_mb = 256;
  std::size_t max_g = 16;
  std::size_t max_info_sets = 0;
  std::size_t word_bits = 32;
  std::size_t max_k = 28;
  std::size_t k = 0;
  std::size_t n = 0;
  std::string in;
  std::string out;
  std::string script;
  std::string checkpoint;
  std::string resume;
  bool quiet = false;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return kParseError;
    case ErrorKind::InvalidDimensions: return kInvalidDimensions;
    case ErrorKind::RankDeficient: return kRankDeficient;
    case ErrorKind::InvalidArity:
    case ErrorKind::OutOfRange: return kInvalidArgument;
    case ErrorKind::Overflow: return kOverflow;
    case ErrorKind::BudgetExceeded: return kBudgetExceeded;
    case ErrorKind::TooLarge: return kTooLarge;
    case ErrorKind::NotADivisor: return kNotADivisor;
    case ErrorKind::NotAUnit: return kNotAUnit;
    case ErrorKind::LengthMismatch: return kLengthMismatch;
    case ErrorKind::Interrupted: return kInterrupted;
  }
  return kUnexpected;
}

std::size_t resolve_threads(const RunConfig& cfg) {
  if (cfg.threads) return std::max<std::size_t>(1, *cfg.threads);
  if (const char* env = std::getenv("MINDIST_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<Strategy> parse_strategies(const std::string& list) {
  std::vector<Strategy> out;
  std::istringstream items(list);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto s = parse_strategy(item);
    if (!s) throw Error(ErrorKind::InvalidArity, "unknown algorithm '" + item + "'");
    out.push_back(*s);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArity, "no algorithm given");
  return out;
}

EngineConfig engine_config(const RunConfig& cfg, Strategy strategy, const std::atomic<bool>* stop) {
  if (cfg.unroll > 1 && strategy != Strategy::SavedUnrolled) {
    throw Error(ErrorKind::InvalidArity, "--unroll > 1 requires --algorithm saved-unrolled");
  }
  EngineConfig ec;
  ec.strategy = strategy;
  ec.s = cfg.s;
  ec.unroll = strategy == Strategy::SavedUnrolled ? std::max<std::size_t>(cfg.unroll, 1) : 1;
  if (strategy == Strategy::SavedUnrolled && cfg.unroll <= 1) ec.unroll = 2;
  ec.workers = resolve_threads(cfg);
  ec.memory_budget = cfg.budget_mb << 20;
  ec.max_g = cfg.max_g;
  if (cfg.max_info_sets > 0) ec.max_full_rank = cfg.max_info_sets;
  ec.stop = stop;
  return ec;
}

std::string report_text(const DistanceReport& report, bool quiet) {
  std::ostringstream text;
  if (quiet) {
    DistanceReport brief = report;
    brief.trace.clear();
    brief.pivot_sets.clear();
    write_report(text, brief);
  } else {
    write_report(text, report);
  }
  return text.str();
}

template <PackingWord Word>
int run_mindist(const RunConfig& cfg, std::ostream& out, std::ostream& err, const std::atomic<bool>* stop) {
  const auto g = read_matrix_file<Word>(cfg.in);
  EngineConfig ec = engine_config(cfg, parse_strategies(cfg.algorithm).front(), stop);

  std::vector<BoundsStep> earlier;
  if (!cfg.resume.empty()) {
    std::ifstream in(cfg.resume);
    if (!in) throw Error(ErrorKind::Parse, "cannot open checkpoint " + cfg.resume);
    const DistanceReport previous = read_report(in);
    if (previous.n != g.cols() || previous.k != g.rows()) {
      throw Error(ErrorKind::LengthMismatch, "checkpoint was written for a different code");
    }
    ec.start_g = previous.g_reached + 1;
    ec.start_upper = previous.bounds.upper;
    earlier = previous.trace;
  }
  const auto with_history = [&](DistanceReport r) {
    r.trace.insert(r.trace.begin(), earlier.begin(), earlier.end());
    return r;
  };
  if (!cfg.checkpoint.empty()) {
    ec.on_progress = [&](const DistanceReport& partial) {
      DistanceReport snapshot = with_history(partial);
      snapshot.status = ReportStatus::Interrupted;
      snapshot.distance.reset();
      write_file_atomically(cfg.checkpoint, report_text(snapshot, false));
    };
  }

  const DistanceReport report = with_history(minimum_distance(g, ec));
  const std::string text = report_text(report, cfg.quiet);
  out << text;
  if (!cfg.out.empty()) write_file_atomically(cfg.out, text);
  if (!cfg.checkpoint.empty()) write_file_atomically(cfg.checkpoint, report_text(report, false));

  switch (report.status) {
    case ReportStatus::Exact:
      return kOk;
    case ReportStatus::UpperBoundOnly:
      err << "max_g=" << cfg.max_g << " reached: " << report.bounds.upper << " is only an upper bound\n";
      return kUpperBoundOnly;
    case ReportStatus::Interrupted:
      err << "interrupted after g=" << report.g_reached << "\n";
      return kInterrupted;
  }
  return kUnexpected;
}

template <PackingWord Word>
int run_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err, const std::atomic<bool>* stop) {
  const auto g = read_matrix_file<Word>(cfg.in);
  int status = kOk;
  for (Strategy strategy : parse_strategies(cfg.algorithm)) {
    RunConfig per = cfg;
    if (strategy != Strategy::SavedUnrolled) per.unroll = 1;
    const DistanceReport report = minimum_distance(g, engine_config(per, strategy, stop));
    out << "algorithm=" << to_string(strategy) << '\n';
    out << "status=" << to_string(report.status) << '\n';
    if (report.status == ReportStatus::Exact) {
      out << "distance=" << *report.distance << '\n';
    } else {
      out << "upper_bound=" << report.bounds.upper << '\n';
    }
    out << "g_reached=" << report.g_reached << '\n';
    out << "combinations=" << to_string(report.counters.combinations) << '\n';
    out << "row_additions=" << to_string(report.counters.row_additions) << '\n';
    out << "row_accesses=" << to_string(report.counters.row_accesses) << '\n';
    out << "elapsed_s=" << report.elapsed_s << '\n';
    out << "combos_per_sec=" << report.combos_per_sec() << '\n';
    out << '\n';
    if (report.status == ReportStatus::Interrupted) {
      err << "interrupted\n";
      return kInterrupted;
    }
    if (report.status == ReportStatus::UpperBoundOnly) status = kUpperBoundOnly;
  }
  return status;
}

template <PackingWord Word>
int run_brute(const RunConfig& cfg, std::ostream& out) {
  const auto g = read_matrix_file<Word>(cfg.in);
  out << "distance=" << brute_force_distance(g, cfg.max_k) << '\n';
  return kOk;
}

int run_random(const RunConfig& cfg, std::ostream& out) {
  const BitMatrix g = random_systematic_code(cfg.n, cfg.k, cfg.seed);
  std::ostringstream text;
  write_matrix(text, g);
  if (cfg.out.empty()) {
    out << text.str();
  } else {
    write_file_atomically(cfg.out, text.str());
  }
  return kOk;
}

int run_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream script_in(cfg.script);
  if (!script_in) {
    throw std::filesystem::filesystem_error("cannot open script", cfg.script,
                                            std::make_error_code(std::errc::no_such_file_or_directory));
  }
  const ConstructionScript script = parse_construction_script(script_in);
  std::optional<BitMatrix> base;
  if (!cfg.in.empty()) base = read_matrix_file<std::uint32_t>(cfg.in);
  const ConstructionOutcome outcome = run_construction(script, base);
  for (const auto& w : outcome.warnings) err << "warning: " << w << '\n';
  std::ostringstream text;
  write_matrix(text, outcome.generator);
  if (cfg.out.empty()) {
    out << text.str();
  } else {
    write_file_atomically(cfg.out, text.str());
  }
  out << "[" << outcome.generator.cols() << "," << outcome.generator.rows() << "]\n";
  return kOk;
}

void add_engine_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--in", cfg.in, "generator matrix file")->required();
  cmd->add_option("--algorithm", cfg.algorithm, "basic|optimized|stack|saved|saved-unrolled");
  cmd->add_option("--s", cfg.s, "saved-additions depth")->check(CLI::Range(1, 5));
  cmd->add_option("--unroll", cfg.unroll, "left combinations processed together")->check(CLI::Range(1, 3));
  cmd->add_option("--threads", cfg.threads, "worker threads (default: $MINDIST_THREADS or all cores)");
  cmd->add_option("--budget-mb", cfg.budget_mb, "memory budget for saved additions, MiB");
  cmd->add_option("--max-g", cfg.max_g, "stop after this generator count");
  cmd->add_option("--max-info-sets", cfg.max_info_sets, "cap on full-rank information sets (0 = no cap)");
  cmd->add_option("--word-bits", cfg.word_bits, "packing word width")->check(CLI::IsMember({32, 64}));
  cmd->add_flag("--quiet", cfg.quiet, "omit bounds trace and pivot sets");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const std::atomic<bool>* stop) {
  RunConfig cfg;
  CLI::App app{"Exact minimum distance of binary linear codes"};
  app.require_subcommand(1);

  auto* mindist = app.add_subcommand("mindist", "compute the minimum distance");
  add_engine_flags(mindist, cfg);
  mindist->add_option("--out", cfg.out, "also write the report here");
  mindist->add_option("--checkpoint", cfg.checkpoint, "rewrite this report file after every g");
  mindist->add_option("--resume", cfg.resume, "continue from a checkpoint report");

  auto* bench = app.add_subcommand("bench", "run strategies and report combinations per second");
  add_engine_flags(bench, cfg);

  auto* brute = app.add_subcommand("brute", "minimum distance by enumerating every codeword");
  brute->add_option("--in", cfg.in, "generator matrix file")->required();
  brute->add_option("--max-k", cfg.max_k, "refuse codes of larger dimension");
  brute->add_option("--word-bits", cfg.word_bits)->check(CLI::IsMember({32, 64}));

  auto* random = app.add_subcommand("random", "write a seeded random systematic generator (I_k | A)");
  random->add_option("--k", cfg.k)->required();
  random->add_option("--n", cfg.n)->required();
  random->add_option("--seed", cfg.seed, "mt19937_64 seed");
  random->add_option("--out", cfg.out, "output file (default: stdout)");

  auto* construct = app.add_subcommand("construct", "build a code from a construction script");
  construct->add_option("--script", cfg.script)->required();
  construct->add_option("--in", cfg.in, "base matrix for scripts without polynomials");
  construct->add_option("--out", cfg.out, "output file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*mindist) return cfg.word_bits == 64 ? run_mindist<std::uint64_t>(cfg, out, err, stop)
                                              : run_mindist<std::uint32_t>(cfg, out, err, stop);
    if (*bench) return cfg.word_bits == 64 ? run_bench<std::uint64_t>(cfg, out, err, stop)
                                            : run_bench<std::uint32_t>(cfg, out, err, stop);
    if (*brute) return cfg.word_bits == 64 ? run_brute<std::uint64_t>(cfg, out) : run_brute<std::uint32_t>(cfg, out);
    if (*random) return run_random(cfg, out);
    if (*construct) return run_construct(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUnexpected;
  }
  return kUsage;
}

}  // namespace mindist::cli
