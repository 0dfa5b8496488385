#include "superstft/io.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include "superstft/core.hpp"
#include "superstft/transforms.hpp"

namespace superstft::io {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || s.empty()) throw ContractError("not a number: '" + s + "'");
  return v;
}

std::vector<double> parse_axis(const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() != 3) throw ContractError("axis must be lo:hi:count, got '" + spec + "'");
  const double lo = parse_double(parts[0]), hi = parse_double(parts[1]);
  long count = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
  if (ec != std::errc() || ptr != parts[2].data() + parts[2].size() || count < 1)
    throw ContractError("axis count must be a positive integer, got '" + parts[2] + "'");
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw ContractError("axis bounds must be finite");
  if (count == 1) {
    if (lo != hi) throw ContractError("a single-point axis needs lo == hi");
    return {lo};
  }
  if (!(hi > lo)) throw ContractError("axis needs hi > lo");
  return transforms::linspace(lo, hi, std::size_t(count));
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc()) throw NumericError("format_double failed");
  return std::string(buf, ptr);
}

void CsvWriter::header(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) os_ << (i ? "," : "") << names[i];
  os_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  for (std::size_t i = 0; i < values.size(); ++i) os_ << (i ? "," : "") << format_double(values[i]);
  os_ << '\n';
}

}  // namespace superstft::io
