#include "mindist/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <system_error>

namespace mindist {

namespace {

void trim_right(std::string& s) {
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

MatrixText parse_matrix_text(std::istream& in) {
  MatrixText out;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    trim_right(line);
    if (!line.empty() && line.front() == '#') continue;
    if (!have_header) {
      std::istringstream header(line);
      long long k = -1, n = -1;
      std::string extra;
      if (!(header >> k >> n) || (header >> extra) || k < 1 || n < 1) {
        fail(line_no, "expected header \"k n\" with positive integers");
      }
      out.rows = static_cast<std::size_t>(k);
      out.cols = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    if (out.lines.size() == out.rows) {
      if (line.empty()) continue;  // trailing blank lines
      fail(line_no, "more than " + std::to_string(out.rows) + " rows");
    }
    if (line.size() != out.cols) {
      fail(line_no, "row has " + std::to_string(line.size()) + " characters, expected " + std::to_string(out.cols));
    }
    for (char ch : line) {
      if (ch != '0' && ch != '1') fail(line_no, "row contains a character other than 0 or 1");
    }
    out.lines.push_back(line);
  }
  if (!have_header) throw Error(ErrorKind::Parse, "missing \"k n\" header");
  if (out.lines.size() != out.rows) {
    throw Error(ErrorKind::Parse,
                "expected " + std::to_string(out.rows) + " rows, found " + std::to_string(out.lines.size()));
  }
  return out;
}

template <PackingWord Word>
BasicBitMatrix<Word> read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::filesystem::filesystem_error("cannot open matrix file", path,
                                            std::make_error_code(std::errc::no_such_file_or_directory));
  }
  try {
    return read_matrix<Word>(in);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

template BitMatrix read_matrix_file<std::uint32_t>(const std::filesystem::path&);
template BitMatrix64 read_matrix_file<std::uint64_t>(const std::filesystem::path&);

void write_file_atomically(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::random_device rd;
  const std::filesystem::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::filesystem::filesystem_error("cannot create temporary file", tmp,
                                              std::make_error_code(std::errc::io_error));
    }
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw std::filesystem::filesystem_error("write failed", tmp, std::make_error_code(std::errc::io_error));
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace mindist
