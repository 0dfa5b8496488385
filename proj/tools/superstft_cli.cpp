#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "superstft/evolution.hpp"
#include "superstft/io.hpp"
#include "superstft/kernels.hpp"
#include "superstft/signals.hpp"
#include "superstft/transforms.hpp"
#include "superstft/verify.hpp"
#include "superstft/zak.hpp"

using namespace superstft;
using nlohmann::json;

namespace {

constexpr int kUsage = 2;

struct Sink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file.open(path, std::ios::binary);
    if (!file) throw ContractError("cannot open '" + path + "' for writing");
    os = &file;
  }
};

Window make_window(const std::string& kind, int order) {
  if (kind == "gaussian") return Window::gaussian();
  if (order < 0) throw ContractError("--order must be >= 0");
  return Window::hermite(order);
}

struct SpectrogramArgs {
  std::string window = "gaussian", signal = "superosc", mode = "closed", u = "-3:3:61", eta = "-3:3:61", out;
  int order = 0, n = 4;
  double a = 2.0, x = 0.0;
};

int run_spectrogram(const SpectrogramArgs& s) {
  const Window g = make_window(s.window, s.order);
  const superosc::SuperoscParams p{s.a, s.n};
  p.validate();
  const auto u = io::parse_axis(s.u), eta = io::parse_axis(s.eta);
  const bool limit = s.signal == "limit";
  const auto q = default_quadrature();

  auto closed = [&](double uu, double ee) {
    return limit ? kernels::stft_superosc_limit(g, s.x, s.a, uu, ee, q)
                 : kernels::stft_superosc_closed(g, s.x, p, uu, ee, q);
  };
  transforms::ComplexGrid numeric(u, eta);
  if (s.mode != "closed") {
    const auto sig = limit ? signals::build_limit_signal(g, s.x, s.a) : signals::build_signal(g, s.x, p);
    numeric = transforms::stft_grid(sig.as_evaluator(), g, u, eta, q);
  }

  Sink sink(s.out);
  io::CsvWriter csv(*sink.os);
  std::vector<std::string> head{"u", "eta", "re", "im", "abs"};
  if (s.mode == "both") head.push_back("abs_err");
  csv.header(head);
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < eta.size(); ++j) {
      const Complex v = s.mode == "numeric" ? numeric.at(i, j) : closed(u[i], eta[j]);
      std::vector<double> row{u[i], eta[j], v.real(), v.imag(), std::abs(v)};
      if (s.mode == "both") row.push_back(std::abs(v - numeric.at(i, j)));
      csv.row(row);
    }
  return 0;
}

struct VerifyArgs {
  std::string suite = "all", json_path = "-";
  unsigned seed = 42;
  bool gate = false;
};

int run_verify(const VerifyArgs& v) {
  if (!verify::known_suite(v.suite)) throw ContractError("unknown suite '" + v.suite + "'");
  verify::Context ctx;
  ctx.q1d = default_quadrature();
  ctx.q2d = default_quadrature_2d();
  ctx.seed = v.seed;
  auto records = verify::run_suite(v.suite, ctx);
  if (v.gate) records.push_back(verify::quadrature_gate(records, verify::run_suite(v.suite, ctx.doubled())));
  bool ok = true;
  for (const auto& r : records) ok = ok && r.pass;
  Sink sink(v.json_path);
  *sink.os << verify::to_json(records, v.seed).dump(2) << "\n";
  return ok ? 0 : 1;
}

struct ZakArgs {
  std::string signal = "window", window = "gaussian", json_path = "-";
  int order = 0, n = 4, resolution = 128;
  double a = 2.0, tolerance = 1e-8;
};

int run_zak(const ZakArgs& z) {
  if (z.resolution < 4) throw ContractError("--resolution must be >= 4");
  Evaluator f;
  json desc;
  if (z.signal == "superosc-gaussian") {
    const superosc::SuperoscParams p{z.a, z.n};
    p.validate();
    f = zak::ftilde(p);
    desc = {{"signal", "superosc-gaussian"}, {"a", z.a}, {"n", z.n}};
  } else {
    f = make_window(z.window, z.order).shifted();
    desc = {{"signal", "window"}, {"window", z.window}, {"order", z.order}};
  }
  const auto v = zak::frame_check(f, z.resolution, z.tolerance);
  json out = {{"schema", 1},
              {"input", desc},
              {"verdict", zak::to_string(v.verdict)},
              {"lower_bound", v.lower_bound},
              {"upper_bound", v.upper_bound},
              {"grid_resolution", v.grid_resolution},
              {"tolerance", v.tolerance},
              {"min_location", {{"u", v.min_u}, {"eta", v.min_eta}}},
              {"zero_confirmed", v.zero_confirmed},
              {"wiener_estimate", v.wiener_estimate},
              {"wiener_heuristic", v.wiener_heuristic}};
  Sink sink(z.json_path);
  *sink.os << out.dump(2) << "\n";
  return 0;
}

struct EvolveArgs {
  std::string window = "gaussian", t = "0:1:11", x = "-4:4:81", out;
  int order = 0, n = 8;
  double x0 = 0.0, k0 = 0.0, a = 2.0;
  bool normalized = false, superosc = false;
};

int run_evolve(const EvolveArgs& e) {
  const Window g = make_window(e.window, e.order);
  const superosc::SuperoscParams p{e.a, e.n};
  if (e.superosc) p.validate();
  const auto ts = io::parse_axis(e.t), xs = io::parse_axis(e.x);
  const auto q = default_quadrature();

  struct Row {
    double x, t;
    Complex v;
    bool flag;
  };
  std::vector<Row> rows;
  bool any_flag = false;
  for (double t : ts)
    for (double x : xs) {
      evolution::Evolved r;
      if (e.superosc) {
        r.value = evolution::evolve_superosc(p, x, t);
      } else {
        const evolution::EvolutionPoint pt{x, t, e.x0, e.k0};
        if (g.kind() == Window::Kind::Gaussian)
          r.value = evolution::evolve_gaussian_closed(pt);
        else
          r = evolution::evolve_hermite(g.order(), pt, q);
        if (e.normalized) r.value = evolution::normalized(r.value);
      }
      any_flag = any_flag || r.accuracy_flag;
      rows.push_back({x, t, r.value, r.accuracy_flag});
    }

  Sink sink(e.out);
  io::CsvWriter csv(*sink.os);
  std::vector<std::string> head{"x", "t", "re", "im", "abs"};
  if (any_flag) head.push_back("accuracy_flag");
  csv.header(head);
  for (const auto& r : rows) {
    std::vector<double> row{r.x, r.t, r.v.real(), r.v.imag(), std::abs(r.v)};
    if (any_flag) row.push_back(r.flag ? 1.0 : 0.0);
    csv.row(row);
  }
  if (any_flag) std::cerr << "warning: oscillatory integrand beyond the reliable range at some points\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Superoscillation STFT toolkit"};
  app.require_subcommand(1);

  SpectrogramArgs sa;
  auto* sp = app.add_subcommand("spectrogram", "STFT grid of a superoscillatory signal as CSV");
  sp->add_option("--window", sa.window)->check(CLI::IsMember({"gaussian", "hermite"}));
  sp->add_option("--order", sa.order, "Hermite order");
  sp->add_option("--signal", sa.signal)->check(CLI::IsMember({"superosc", "limit"}));
  sp->add_option("--a", sa.a);
  sp->add_option("--n", sa.n);
  sp->add_option("--x", sa.x, "window centre");
  sp->add_option("--u", sa.u, "lo:hi:count");
  sp->add_option("--eta", sa.eta, "lo:hi:count");
  sp->add_option("--mode", sa.mode)->check(CLI::IsMember({"closed", "numeric", "both"}));
  sp->add_option("--out", sa.out, "CSV path (default stdout)");

  VerifyArgs va;
  auto* vp = app.add_subcommand("verify", "run identity checks and emit a JSON report");
  vp->add_option("--suite", va.suite);
  vp->add_option("--json", va.json_path, "report path or - for stdout");
  vp->add_option("--seed", va.seed);
  vp->add_flag("--gate", va.gate, "also rerun with doubled nodes and add the stability gate");

  ZakArgs za;
  auto* zp = app.add_subcommand("zak-frame", "Zak-transform Gabor frame verdict");
  zp->add_option("--signal", za.signal)->check(CLI::IsMember({"window", "superosc-gaussian"}));
  zp->add_option("--window", za.window)->check(CLI::IsMember({"gaussian", "hermite"}));
  zp->add_option("--order", za.order);
  zp->add_option("--a", za.a);
  zp->add_option("--n", za.n);
  zp->add_option("--resolution", za.resolution);
  zp->add_option("--tolerance", za.tolerance);
  zp->add_option("--json", za.json_path);

  EvolveArgs ea;
  auto* ep = app.add_subcommand("evolve", "free Schroedinger evolution as CSV");
  ep->add_option("--window", ea.window)->check(CLI::IsMember({"gaussian", "hermite"}));
  ep->add_option("--order", ea.order);
  ep->add_option("--x0", ea.x0);
  ep->add_option("--k0", ea.k0);
  ep->add_option("--t", ea.t, "lo:hi:count");
  ep->add_option("--x", ea.x, "lo:hi:count");
  ep->add_flag("--normalized", ea.normalized, "divide by 2 pi");
  ep->add_flag("--superosc", ea.superosc, "evolve F_n instead of a window");
  ep->add_option("--a", ea.a);
  ep->add_option("--n", ea.n);
  ep->add_option("--out", ea.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*sp) return run_spectrogram(sa);
    if (*vp) return run_verify(va);
    if (*zp) return run_zak(za);
    if (*ep) return run_evolve(ea);
  } catch (const ContractError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
