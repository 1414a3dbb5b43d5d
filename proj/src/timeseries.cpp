#include "pac/timeseries.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace pac {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_series(std::ostream& os, const TimeSeries& series) {
  os << kStepHeader << '\n';
  for (const auto& r : series) {
    os << format_double(r.t) << ',' << format_double(r.y_r) << ',' << format_double(r.y) << ','
       << format_double(r.e) << ',' << format_double(r.s_l) << ',' << format_double(r.u_src) << ','
       << format_double(r.u_palm) << ',' << format_double(r.u) << ',' << r.rules << ','
       << format_double(r.bias) << ',' << format_double(r.variance) << '\n';
  }
}

void write_series(const std::string& path, const TimeSeries& series) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_series(os, series);
}

namespace {

double parse_double(const std::string& field, std::size_t line) {
  try {
    std::size_t used = 0;
    const double v = std::stod(field, &used);
    if (used != field.size()) throw std::invalid_argument(field);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("line " + std::to_string(line) + ": bad number '" + field + "'");
  }
}

}  // namespace

TimeSeries read_series(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kStepHeader) {
    throw std::runtime_error("missing or unexpected step-log header");
  }
  TimeSeries series;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (fields.size() != 11) {
      throw std::runtime_error("line " + std::to_string(lineno) + ": expected 11 fields");
    }
    StepRow r;
    r.t = parse_double(fields[0], lineno);
    r.y_r = parse_double(fields[1], lineno);
    r.y = parse_double(fields[2], lineno);
    r.e = parse_double(fields[3], lineno);
    r.s_l = parse_double(fields[4], lineno);
    r.u_src = parse_double(fields[5], lineno);
    r.u_palm = parse_double(fields[6], lineno);
    r.u = parse_double(fields[7], lineno);
    r.rules = static_cast<std::size_t>(parse_double(fields[8], lineno));
    r.bias = parse_double(fields[9], lineno);
    r.variance = parse_double(fields[10], lineno);
    series.push_back(r);
  }
  return series;
}

TimeSeries read_series(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_series(is);
}

}  // namespace pac
