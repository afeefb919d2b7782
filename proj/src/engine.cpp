#include "mindist/engine.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace mindist {

const char* to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::Basic: return "basic";
    case Strategy::Optimized: return "optimized";
    case Strategy::Stack: return "stack";
    case Strategy::Saved: return "saved";
    case Strategy::SavedUnrolled: return "saved-unrolled";
  }
  return "unknown";
}

std::optional<Strategy> parse_strategy(const std::string& name) {
  if (name == "basic") return Strategy::Basic;
  if (name == "optimized") return Strategy::Optimized;
  if (name == "stack") return Strategy::Stack;
  if (name == "saved") return Strategy::Saved;
  if (name == "saved-unrolled" || name == "saved_unrolled") return Strategy::SavedUnrolled;
  return std::nullopt;
}

const char* to_string(ReportStatus status) {
  switch (status) {
    case ReportStatus::Exact: return "exact";
    case ReportStatus::UpperBoundOnly: return "upper_bound_only";
    case ReportStatus::Interrupted: return "interrupted";
  }
  return "unknown";
}

Bounds initial_bounds(std::size_t n, std::size_t k) {
  if (k == 0 || k > n) {
    throw Error(ErrorKind::InvalidDimensions,
                "need 0 < k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return {1, n - k + 1};
}

std::size_t lower_bound_update(std::size_t g, std::size_t m, std::size_t k, std::size_t k_m) {
  const auto gi = static_cast<long long>(g);
  const long long tail = gi + 1 - static_cast<long long>(k) + static_cast<long long>(k_m);
  return (m - 1) * (g + 1) + static_cast<std::size_t>(std::max(0LL, tail));
}

double DistanceReport::combos_per_sec() const {
  if (elapsed_s <= 0.0) return 0.0;
  return static_cast<double>(counters.combinations) / elapsed_s;
}

void write_report(std::ostream& out, const DistanceReport& report) {
  out << "status=" << to_string(report.status) << '\n';
  if (report.distance) out << "distance=" << *report.distance << '\n';
  out << "lower_bound=" << report.bounds.lower << '\n';
  out << "upper_bound=" << report.bounds.upper << '\n';
  out << "g_reached=" << report.g_reached << '\n';
  out << "n=" << report.n << '\n';
  out << "k=" << report.k << '\n';
  out << "m=" << report.m << '\n';
  out << "k_m=" << report.k_m << '\n';
  for (std::size_t j = 0; j < report.pivot_sets.size(); ++j) {
    out << "pivots_" << j << '=';
    for (std::size_t i = 0; i < report.pivot_sets[j].size(); ++i) {
      if (i) out << ',';
      out << report.pivot_sets[j][i];
    }
    out << '\n';
  }
  out << "algorithm=" << to_string(report.strategy) << '\n';
  out << "combinations=" << to_string(report.counters.combinations) << '\n';
  out << "row_additions=" << to_string(report.counters.row_additions) << '\n';
  out << "row_accesses=" << to_string(report.counters.row_accesses) << '\n';
  out << "store_additions=" << to_string(report.counters.store_additions) << '\n';
  out << "elapsed_s=" << report.elapsed_s << '\n';
  out << "combos_per_sec=" << report.combos_per_sec() << '\n';
  for (const BoundsStep& step : report.trace) {
    out << "g=" << step.g << " L=" << step.lower << " U=" << step.upper << '\n';
  }
}

namespace {

std::size_t parse_size(const std::string& key, const std::string& value) {
  const BigCount v = parse_big_count(value);
  if (v > static_cast<BigCount>(kUnbounded)) throw Error(ErrorKind::Parse, "value of " + key + " too large");
  return static_cast<std::size_t>(v);
}

}  // namespace

DistanceReport read_report(std::istream& in) {
  DistanceReport report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.rfind("g=", 0) == 0) {
      BoundsStep step;
      std::istringstream fields(line);
      std::string g, l, u;
      fields >> g >> l >> u;
      if (g.rfind("g=", 0) != 0 || l.rfind("L=", 0) != 0 || u.rfind("U=", 0) != 0) {
        throw Error(ErrorKind::Parse, "bad bounds line " + std::to_string(line_no));
      }
      step.g = parse_size("g", g.substr(2));
      step.lower = parse_size("L", l.substr(2));
      step.upper = parse_size("U", u.substr(2));
      report.trace.push_back(step);
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::Parse, "expected key=value on line " + std::to_string(line_no));
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    if (key == "status") {
      if (value == "exact") report.status = ReportStatus::Exact;
      else if (value == "upper_bound_only") report.status = ReportStatus::UpperBoundOnly;
      else if (value == "interrupted") report.status = ReportStatus::Interrupted;
      else throw Error(ErrorKind::Parse, "unknown status '" + value + "'");
    } else if (key == "distance") {
      report.distance = parse_size(key, value);
    } else if (key == "lower_bound") {
      report.bounds.lower = parse_size(key, value);
    } else if (key == "upper_bound") {
      report.bounds.upper = parse_size(key, value);
    } else if (key == "g_reached") {
      report.g_reached = parse_size(key, value);
    } else if (key == "n") {
      report.n = parse_size(key, value);
    } else if (key == "k") {
      report.k = parse_size(key, value);
    } else if (key == "m") {
      report.m = parse_size(key, value);
    } else if (key == "k_m") {
      report.k_m = parse_size(key, value);
    } else if (key == "algorithm") {
      const auto s = parse_strategy(value);
      if (!s) throw Error(ErrorKind::Parse, "unknown algorithm '" + value + "'");
      report.strategy = *s;
    } else if (key == "combinations") {
      report.counters.combinations = parse_big_count(value);
    } else if (key == "row_additions") {
      report.counters.row_additions = parse_big_count(value);
    } else if (key == "row_accesses") {
      report.counters.row_accesses = parse_big_count(value);
    } else if (key == "store_additions") {
      report.counters.store_additions = parse_big_count(value);
    } else if (key == "elapsed_s") {
      report.elapsed_s = std::stod(value);
    } else if (key.rfind("pivots_", 0) == 0) {
      std::vector<std::size_t> pivots;
      std::istringstream items(value);
      std::string item;
      while (std::getline(items, item, ',')) pivots.push_back(parse_size(key, item));
      report.pivot_sets.push_back(std::move(pivots));
    }
  }
  return report;
}

}  // namespace mindist
