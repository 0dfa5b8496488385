#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "superstft/quadrature.hpp"

namespace superstft::verify {

struct Context {
  QuadratureSpec q1d = default_quadrature();
  QuadratureSpec q2d = default_quadrature_2d();
  unsigned seed = 42;

  Context doubled() const;
};

struct Record {
  std::string id;
  std::string suite;
  std::string criterion;  // "A1".."A14", empty for supplementary checks
  std::string paper_anchor;
  nlohmann::json params = nlohmann::json::object();
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // quadrature-derived values, compared by the node-doubling gate
  std::vector<double> reported;
};

struct Check {
  std::string id;
  std::string suite;
  std::string criterion;
  std::string paper_anchor;
  std::function<Record(const Context&)> run;
};

const std::vector<Check>& registry();
const std::vector<std::string>& suite_names();  // includes "all"
bool known_suite(const std::string& name);

std::vector<Record> run_suite(const std::string& suite, const Context& ctx);

// Compares reported values of two runs: |delta| < 1e-9 max(1, |v|).
Record quadrature_gate(const std::vector<Record>& base, const std::vector<Record>& doubled);

nlohmann::json to_json(const std::vector<Record>& records, unsigned seed);

}  // namespace superstft::verify
