#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superstft::io {

// "lo:hi:count", inclusive; count >= 1 (count == 1 requires lo == hi)
std::vector<double> parse_axis(const std::string& spec);

// %.17g
std::string format_double(double v);
double parse_double(const std::string& s);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& os) : os_(os) {}
  void header(const std::vector<std::string>& names);
  void row(const std::vector<double>& values);

 private:
  std::ostream& os_;
};

std::vector<std::string> split(const std::string& s, char sep);

}  // namespace superstft::io
