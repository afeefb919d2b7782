// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include <unistd.h>

#include "cli.hpp"
#include "known_codes.hpp"
#include "mindist/construction_script.hpp"
#include "mindist/constructions.hpp"
#include "mindist/engine.hpp"
#include "mindist/matrix_io.hpp"
#include "mindist/random_code.hpp"
#include "oracles.hpp"

namespace {

using mindist::BitMatrix;
using mindist::EngineConfig;
using mindist::Strategy;

constexpr Strategy kStrategies[] = {Strategy::Basic, Strategy::Optimized, Strategy::Stack, Strategy::Saved,
                                    Strategy::SavedUnrolled};

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Verdict oracle_equivalence() {
  Verdict v;
  std::mt19937_64 rng(20240501);
  std::size_t runs = 0;
  for (int code = 0; code < 500; ++code) {
    const std::size_t k = 4 + rng() % 13;
    const std::size_t n = k + 1 + rng() % (48 - k);
    const auto g = oracle::random_full_rank(rng, k, n);
    const std::size_t truth = mindist::brute_force_distance(g);
    for (Strategy strategy : kStrategies) {
      for (std::size_t s : {1, 3, 5}) {
        for (std::size_t workers : {1, 4}) {
          EngineConfig c;
          c.strategy = strategy;
          c.s = s;
          c.workers = workers;
          const auto r = mindist::minimum_distance(g, c);
          ++runs;
          v.require(r.distance && *r.distance == truth,
                    "code " + std::to_string(code) + " [" + std::to_string(n) + "," + std::to_string(k) +
                        "] strategy " + mindist::to_string(strategy) + " s=" + std::to_string(s) +
                        " workers=" + std::to_string(workers));
        }
      }
    }
  }
  if (v.pass) v.detail = std::to_string(runs) + " engine runs on 500 codes match brute force";
  return v;
}

Verdict counter_formulas() {
  Verdict v;
  std::mt19937_64 rng(77);
  std::size_t checks = 0;
  for (std::size_t k = 2; k <= 12; ++k) {
    const auto gamma = oracle::random_full_rank(rng, k, k + 10);
    for (std::size_t g = 2; g <= std::min<std::size_t>(6, k); ++g) {
      const std::string at = " k=" + std::to_string(k) + " g=" + std::to_string(g);
      v.require(mindist::enumerate_basic(gamma, g).row_additions == oracle::basic_additions(k, g), "basic" + at);
      v.require(mindist::enumerate_optimized(gamma, g).row_additions == oracle::optimized_additions(k, g),
                "optimized" + at);
      v.require(mindist::enumerate_stack(gamma, g).row_additions == oracle::stack_additions(k, g), "stack" + at);
      checks += 3;
      for (std::size_t s = 1; s <= std::min<std::size_t>(5, k); ++s) {
        const auto store = mindist::SavedAdditionsStore<std::uint32_t>::build(gamma, s, std::size_t{1} << 30);
        v.require(mindist::enumerate_saved(store, g).row_additions == oracle::saved_additions(k, g, s),
                  "saved s=" + std::to_string(s) + at);
        ++checks;
      }
    }
  }
  if (v.pass) v.detail = std::to_string(checks) + " counter checks exact";
  return v;
}

Verdict binomial_growth() {
  Verdict v;
  std::size_t checks = 0;
  for (std::size_t k = 1; k <= 60; ++k) {
    for (std::size_t g = 1; g <= k / 3; ++g) {
      mindist::BigCount sum = 0;
      for (std::size_t j = 1; j < g; ++j) sum += oracle::pascal(k, j);
      v.require(sum < oracle::pascal(k, g), "k=" + std::to_string(k) + " g=" + std::to_string(g));
      v.require(mindist::binomial_prefix_sum_below(k, g), "library predicate k=" + std::to_string(k));
      ++checks;
    }
  }
  if (v.pass) v.detail = std::to_string(checks) + " (k, g) pairs";
  return v;
}

Verdict known_codes() {
  Verdict v;
  struct Case {
    std::string name;
    BitMatrix g;
    std::size_t d;
  };
  const std::vector<Case> cases{
      {"Hamming [7,4]", fixtures::hamming_7_4(), 3},
      {"extended Hamming [8,4]", mindist::extend_code(fixtures::hamming_7_4()), 4},
      {"Golay [23,12]", fixtures::golay_23(), 7},
      {"extended Golay [24,12]", fixtures::golay_24(), 8},
      {"repetition [1,1]", fixtures::repetition(1), 1},
      {"repetition [9,1]", fixtures::repetition(9), 9},
      {"repetition [40,1]", fixtures::repetition(40), 40},
  };
  for (const auto& c : cases) {
    v.require(mindist::brute_force_distance(c.g) == c.d, c.name + " brute force");
    for (Strategy strategy : kStrategies) {
      EngineConfig cfg;
      cfg.strategy = strategy;
      const auto r = mindist::minimum_distance(c.g, cfg);
      v.require(r.distance && *r.distance == c.d, c.name + " via " + mindist::to_string(strategy));
    }
  }
  if (v.pass) v.detail = std::to_string(cases.size()) + " codes, brute force and all strategies agree";
  return v;
}

Verdict strategy_ordering() {
  Verdict v;
  const auto g = mindist::random_systematic_code(150, 50, 150050);
  mindist::BigCount additions[std::size(kStrategies)] = {};
  for (std::size_t i = 0; i < 4; ++i) {
    EngineConfig c;
    c.strategy = kStrategies[i];
    c.s = 3;
    c.max_g = 5;
    c.workers = 1;
    additions[i] = mindist::minimum_distance(g, c).counters.row_additions;
  }
  const auto& [basic, optimized, stack, saved, unused] = additions;
  (void)unused;
  v.require(saved < stack, "saved >= stack");
  v.require(stack < optimized, "stack >= optimized");
  v.require(optimized < basic, "optimized >= basic");
  std::ostringstream d;
  d << "row additions basic=" << mindist::to_string(basic) << " optimized=" << mindist::to_string(optimized)
    << " stack=" << mindist::to_string(stack) << " saved=" << mindist::to_string(saved);
  v.detail = v.pass ? d.str() : v.detail + " (" + d.str() + ")";
  return v;
}

Verdict unrolled_equivalence() {
  Verdict v;
  std::mt19937_64 rng(606);
  const auto gamma = oracle::random_full_rank(rng, 50, 150);
  const auto store = mindist::SavedAdditionsStore<std::uint32_t>::build(gamma, 3, std::size_t{1} << 30);
  const auto plain = mindist::enumerate_saved(store, 6);
  std::ostringstream d;
  d << "accesses plain=" << mindist::to_string(plain.row_accesses);
  for (std::size_t u : {2, 3}) {
    const auto r = mindist::enumerate_saved_unrolled(store, 6, mindist::kUnbounded, u);
    const std::string tag = " unroll=" + std::to_string(u);
    v.require(r.min_weight == plain.min_weight, "min weight differs" + tag);
    v.require(r.row_additions == plain.row_additions, "row additions differ" + tag);
    v.require(r.row_accesses < plain.row_accesses, "row accesses not lower" + tag);
    d << tag << ":" << mindist::to_string(r.row_accesses);
  }
  v.detail = v.pass ? d.str() : v.detail + " (" + d.str() + ")";
  return v;
}

Verdict parallel_scaling() {
  Verdict v;
  // Determinism across worker counts.
  const auto code = mindist::random_systematic_code(72, 24, 7272);
  std::optional<std::size_t> reference;
  for (std::size_t w : {1, 2, 4, 8}) {
    EngineConfig c;
    c.workers = w;
    const auto r = mindist::minimum_distance(code, c);
    if (!reference) reference = r.distance;
    v.require(r.distance.has_value() && r.distance == reference, "distance differs at workers=" + std::to_string(w));
  }

  // Speedup on a saved pass that takes at least 10 s serially.
  std::mt19937_64 rng(4242);
  const auto gamma = oracle::random_full_rank(rng, 50, 150);
  const auto store = mindist::SavedAdditionsStore<std::uint32_t>::build(gamma, 3, std::size_t{1} << 30);
  std::size_t g = 6;
  double serial = 0.0;
  mindist::EnumerationResult serial_result;
  while (true) {
    const auto t0 = std::chrono::steady_clock::now();
    serial_result = mindist::enumerate_saved(store, g);
    serial = seconds_since(t0);
    if (serial >= 10.0 || g == 10) break;
    ++g;
  }
  const auto t1 = std::chrono::steady_clock::now();
  const auto par = mindist::enumerate_parallel(store, g, mindist::kUnbounded, 4);
  const double parallel = seconds_since(t1);
  const double speedup = serial / parallel;
  v.require(par.min_weight == serial_result.min_weight && par.combinations == serial_result.combinations,
            "parallel pass disagrees with serial pass");
  v.require(serial >= 10.0, "could not find a pass of at least 10 s");
  std::ostringstream d;
  d.precision(3);
  d << "distance " << (reference ? std::to_string(*reference) : "?") << " for workers 1,2,4,8; g=" << g
    << " serial " << serial << " s, 4 workers " << parallel << " s, speedup " << speedup << "x on "
    << std::thread::hardware_concurrency() << " hardware thread(s)";
  v.require(speedup >= 2.5, "speedup below 2.5x");
  v.detail = v.pass ? d.str() : v.detail + ": " + d.str();
  return v;
}

Verdict construction_shapes() {
  Verdict v;
  const mindist::ModulusRing ring(117);
  const auto f1 = mindist::BinaryPolynomial::from_exponents({67, 59, 54, 51, 49, 42, 39, 36, 35, 34, 33,
                                                             31, 30, 29, 27, 26, 25, 24, 22, 21, 19, 17,
                                                             16, 15, 14, 13, 11, 6,  5,  3,  2,  0});
  v.require(f1.degree() == 67, "deg f1 != 67");
  v.require(mindist::divide(ring.modulus(), f1).remainder.is_zero(), "f1 does not divide x^117 - 1");
  const auto f2 = mindist::cofactor(mindist::BinaryPolynomial::from_exponents({1, 0}), ring);
  v.require(f2 * mindist::BinaryPolynomial::from_exponents({1, 0}) == ring.modulus(), "f2 != (x^117 - 1)/(x + 1)");

  const std::string dir = MINDIST_DATA_DIR "/constructions/";
  const auto load = [&](const std::string& file) {
    std::ifstream in(dir + file);
    return mindist::parse_construction_script(in);
  };
  const auto script1 = load("c1.txt");
  const auto script2 = load("c2.txt");
  for (const auto* s : {&script1, &script2}) {
    const auto p = mindist::BinaryPolynomial::from_exponents(s->polynomials.at("p").exponents);
    v.require(mindist::is_unit(p, ring), "p is not a unit (degree " + std::to_string(p.degree()) + ")");
  }
  const std::vector<std::tuple<std::string, std::size_t, std::size_t>> shapes{
      {"c1.txt", 234, 51}, {"c2.txt", 234, 52}, {"c3.txt", 235, 51}, {"c4.txt", 236, 51},
      {"c5.txt", 233, 51}, {"c6.txt", 232, 51}, {"c7.txt", 233, 52}};
  std::ostringstream d;
  for (const auto& [file, n, k] : shapes) {
    const auto out = mindist::run_construction(load(file));
    const bool ok = out.generator.cols() == n && out.generator.rows() == k && mindist::rank(out.generator) == k;
    v.require(ok, file + " has shape [" + std::to_string(out.generator.cols()) + "," +
                      std::to_string(out.generator.rows()) + "]");
    d << "[" << n << "," << k << "] ";
  }

  // Long runs must be resumable: checkpoint after g=1, resume to g=2.
  const auto tmp = std::filesystem::temp_directory_path() / ("mindist_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);
  const std::string matrix = (tmp / "c1.txt").string();
  const std::string ck = (tmp / "c1.report").string();
  std::ostringstream sink, err;
  int rc = mindist::cli::run({"mindist", "construct", "--script", dir + "c1.txt", "--out", matrix}, sink, err);
  v.require(rc == 0, "construct failed: " + err.str());
  rc = mindist::cli::run({"mindist", "mindist", "--in", matrix, "--max-g", "1", "--checkpoint", ck}, sink, err);
  v.require(rc == mindist::cli::kUpperBoundOnly, "capped run did not stop with an upper bound");
  rc = mindist::cli::run({"mindist", "mindist", "--in", matrix, "--max-g", "2", "--resume", ck, "--checkpoint", ck},
                         sink, err);
  v.require(rc == mindist::cli::kUpperBoundOnly, "resumed run did not stop with an upper bound");
  std::ifstream report_in(ck);
  const auto report = mindist::read_report(report_in);
  v.require(report.g_reached == 2 && report.trace.size() == 2, "resumed checkpoint does not cover g=1,2");
  std::filesystem::remove_all(tmp);

  d << "; checkpoint resumed to g=2 with bounds " << report.bounds.lower << ".." << report.bounds.upper;
  if (v.pass) v.detail = d.str();
  return v;
}

Verdict round_trips() {
  Verdict v;
  const auto tmp = std::filesystem::temp_directory_path() / ("mindist_rt_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);
  std::ostringstream sink, err;
  for (const std::string seed : {"1", "42", "18446744073709551615"}) {
    const std::string a = (tmp / "a.txt").string(), b = (tmp / "b.txt").string();
    mindist::cli::run({"mindist", "random", "--k", "50", "--n", "150", "--seed", seed, "--out", a}, sink, err);
    mindist::cli::run({"mindist", "random", "--k", "50", "--n", "150", "--seed", seed, "--out", b}, sink, err);
    const std::string ta = slurp(a);
    v.require(!ta.empty() && ta == slurp(b), "seed " + seed + " gave different files");
    v.require(mindist::read_matrix_file<std::uint32_t>(a) == mindist::random_systematic_code(150, 50, std::stoull(seed)),
              "file for seed " + seed + " does not parse back to the generated matrix");
  }
  std::filesystem::remove_all(tmp);

  std::mt19937_64 rng(909);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 1 + rng() % 20;
    const std::size_t n = k + rng() % 200;
    const auto m = oracle::random_full_rank(rng, k, n);
    std::stringstream ss;
    mindist::write_matrix(ss, m);
    const std::string text = ss.str();
    const auto back = mindist::read_matrix<std::uint32_t>(ss);
    std::ostringstream again;
    mindist::write_matrix(again, back);
    v.require(back == m && again.str() == text, "round trip failed for a " + std::to_string(k) + "x" +
                                                    std::to_string(n) + " matrix");
  }
  if (v.pass) v.detail = "3 seeds byte-identical, 200 matrices round-trip";
  return v;
}

const std::vector<std::pair<std::string, std::function<Verdict()>>> kCriteria{
    {"oracle equivalence on 500 random codes", oracle_equivalence},
    {"row-addition counters equal closed forms", counter_formulas},
    {"binomial growth for g <= k/3", binomial_growth},
    {"known-code distances", known_codes},
    {"strategy cost ordering on [150,50]", strategy_ordering},
    {"unrolled pass equivalence", unrolled_equivalence},
    {"parallel determinism and speedup", parallel_scaling},
    {"length-117 construction shapes", construction_shapes},
    {"format round trips and seeded files", round_trips},
};

}  // namespace

int main(int argc, char** argv) {
  std::size_t only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::stoul(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only > kCriteria.size()) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  bool all_pass = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    if (only != 0 && only != i + 1) continue;
    const auto started = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = kCriteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && v.pass;
    std::printf("criterion %zu: %s  %s (%.1f s) - %s\n", i + 1, v.pass ? "PASS" : "FAIL", kCriteria[i].first.c_str(),
                seconds_since(started), v.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
