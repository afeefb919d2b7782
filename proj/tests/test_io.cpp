#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "mindist/errors.hpp"
#include "mindist/matrix_io.hpp"
#include "mindist/random_code.hpp"
#include "oracles.hpp"

using mindist::BitMatrix;

namespace {

mindist::ErrorKind parse_error_kind(const std::string& text, std::string* message = nullptr) {
  std::istringstream in(text);
  try {
    mindist::read_matrix<std::uint32_t>(in);
  } catch (const mindist::Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  FAIL("parse unexpectedly succeeded: " << text);
  return mindist::ErrorKind::Parse;
}

std::filesystem::path scratch_dir() {
  auto dir = std::filesystem::temp_directory_path() / ("mindist_io_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("matrix text round trip") {
  std::mt19937_64 rng(90);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t k = 1 + rng() % 10;
    const std::size_t n = k + rng() % 80;
    const auto m = oracle::random_full_rank(rng, k, n);
    std::stringstream ss;
    mindist::write_matrix(ss, m);
    const std::string text = ss.str();
    CHECK(mindist::read_matrix<std::uint32_t>(ss) == m);
    std::istringstream again(text);
    CHECK(mindist::read_matrix<std::uint64_t>(again) == mindist::repack<std::uint64_t>(m));
  }
}

TEST_CASE("matrix text format") {
  std::ostringstream out;
  mindist::write_matrix(out, BitMatrix::from_strings({"101", "011"}));
  CHECK(out.str() == "2 3\n101\n011\n");

  std::istringstream in("# comment\n2 3\n# another\n101  \n011\n\n\n");
  const auto m = mindist::read_matrix<std::uint32_t>(in);
  CHECK(m.row_string(0) == "101");
  CHECK(m.row_string(1) == "011");
}

TEST_CASE("malformed matrix text is rejected with a line number") {
  std::string msg;
  CHECK(parse_error_kind("2 3\n101\n01\n", &msg) == mindist::ErrorKind::Parse);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(parse_error_kind("2 3\n101\n0a1\n", &msg) == mindist::ErrorKind::Parse);
  CHECK(msg.find("line 3") != std::string::npos);
  CHECK(parse_error_kind("2 3\n101\n") == mindist::ErrorKind::Parse);
  CHECK(parse_error_kind("1 3\n101\n110\n") == mindist::ErrorKind::Parse);
  CHECK(parse_error_kind("x 3\n101\n") == mindist::ErrorKind::Parse);
  CHECK(parse_error_kind("0 3\n") == mindist::ErrorKind::Parse);
  CHECK(parse_error_kind("1 3 4\n101\n") == mindist::ErrorKind::Parse);
  CHECK(parse_error_kind("") == mindist::ErrorKind::Parse);
}

TEST_CASE("seeded random codes are reproducible and systematic") {
  const auto a = mindist::random_systematic_code(8, 4, 42);
  const auto b = mindist::random_systematic_code(8, 4, 42);
  CHECK(a == b);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) CHECK(a.get(r, c) == (r == c));
  }
  CHECK(mindist::rank(a) == 4);
  const auto big = mindist::random_systematic_code(150, 50, 7);
  CHECK(big.rows() == 50);
  CHECK(big.cols() == 150);
  CHECK(mindist::rank(big) == 50);
  CHECK_FALSE(mindist::random_systematic_code(150, 50, 8) == big);
  CHECK(mindist::repack<std::uint32_t>(mindist::random_systematic_code<std::uint64_t>(150, 50, 7)) == big);
  CHECK_THROWS_AS(mindist::random_systematic_code(4, 4, 1), mindist::Error);
  CHECK_THROWS_AS(mindist::random_systematic_code(4, 0, 1), mindist::Error);
}

TEST_CASE("atomic file writes replace the target and leave no temporaries") {
  const auto dir = scratch_dir();
  const auto target = dir / "m.txt";
  mindist::write_file_atomically(target, "first\n");
  mindist::write_file_atomically(target, "second\n");
  std::ifstream in(target);
  std::string line;
  std::getline(in, line);
  CHECK(line == "second");
  std::size_t entries = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
  CHECK(entries == 1);
  CHECK_THROWS_AS(mindist::write_file_atomically(dir / "missing" / "x.txt", "x"), std::filesystem::filesystem_error);
  std::filesystem::remove_all(dir);
}

TEST_CASE("file reader reports missing files") {
  CHECK_THROWS_AS(mindist::read_matrix_file<std::uint32_t>("/nonexistent/mindist.txt"),
                  std::filesystem::filesystem_error);
}
