// Per-step log rows and their CSV encoding. Values are written with 17
// significant digits so a read-back reproduces every double exactly.

#ifndef PAC_TIMESERIES_HPP
#define PAC_TIMESERIES_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace pac {

struct StepRow {
  double t = 0.0;
  double y_r = 0.0;
  double y = 0.0;
  double e = 0.0;
  double s_l = 0.0;
  double u_src = 0.0;
  double u_palm = 0.0;
  double u = 0.0;
  std::size_t rules = 0;
  double bias = 0.0;
  double variance = 0.0;
};

using TimeSeries = std::vector<StepRow>;

inline constexpr const char* kStepHeader = "t,y_r,y,e,s_l,u_src,u_palm,u,R,bias,variance";

/// "%.17g"
std::string format_double(double v);

void write_series(std::ostream& os, const TimeSeries& series);
void write_series(const std::string& path, const TimeSeries& series);

/// Throws std::runtime_error on a malformed file or header.
TimeSeries read_series(std::istream& is);
TimeSeries read_series(const std::string& path);

}  // namespace pac

#endif  // PAC_TIMESERIES_HPP
