// Command-line front end: analytic densities and kernels, Monte Carlo runs,
// analytic-vs-MC comparison reports, group-integral checks, and a self-test.
//
// Exit codes: 0 success, 1 usage error, 2 numerical non-convergence,
// 3 failed self-test.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rmtk/ensemble.hpp"
#include "rmtk/groupint.hpp"
#include "rmtk/kernels.hpp"
#include "rmtk/linalg.hpp"
#include "rmtk/montecarlo.hpp"
#include "rmtk/polynomials.hpp"
#include "rmtk/quadrature.hpp"
#include "rmtk/specfun.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Grid {
  double min = 0.0, max = 5.0;
  int points = 200;
  std::vector<double> values() const {
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i)
      v[i] = points == 1 ? min : min + (max - min) * i / (points - 1);
    return v;
  }
};

Grid parse_grid(const std::string& s) {
  Grid g;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(s);
  if (!(in >> g.min >> colon1 >> g.max >> colon2 >> g.points) ||
      colon1 != ':' || colon2 != ':' || !in.eof() || g.points < 1 ||
      g.max < g.min)
    throw CLI::ValidationError("--grid", "expected min:max:points");
  return g;
}

struct Options {
  int n = 4;
  double mu = 0.5;
  long samples = 100000;
  int bins = 50;
  std::string grid_str = "0:5:200";
  std::uint64_t seed = 1;
  int workers = 1;
  std::string output;
  std::string format = "csv";
  double lambda_max = 5.0;
  double xi = 0.0;
  std::string command_line;
};

std::string resolve_output(const Options& opt, const std::string& command) {
  if (!opt.output.empty()) return opt.output;
  std::string dir = ".";
  if (const char* env = std::getenv("RMTK_OUTPUT_DIR")) dir = env;
  std::string ext = opt.format == "json" ? "json" : opt.format == "svg" ? "svg" : "csv";
  return dir + "/" + command + "." + ext;
}

void write_file(const std::string& path, const std::string& body) {
  if (path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CLI::ValidationError("--output", "cannot open " + path);
  out << body;
}

std::string provenance_csv(const Options& opt) {
  std::ostringstream out;
  out << "# command: " << opt.command_line << "\n"
      << "# version: " << RMTK_VERSION << "\n"
      << "# seed: " << opt.seed << "\n"
      << "# mu: " << fmt17(opt.mu) << "\n"
      << "# n: " << opt.n << "\n";
  return out.str();
}

json provenance_json(const Options& opt) {
  json p;
  p["command_line"] = opt.command_line;
  p["version"] = RMTK_VERSION;
  p["seed"] = opt.seed;
  p["mu"] = opt.mu;
  p["n"] = opt.n;
  return p;
}

// Single-polyline SVG with a fixed 800x600 viewport.
std::string render_svg(const std::vector<double>& x,
                       const std::vector<double>& y, const Options& opt) {
  const double W = 800, H = 600, m = 60;
  double xmin = x.front(), xmax = x.back(), ymin = 0.0, ymax = 1e-12;
  for (double v : y) ymax = std::max(ymax, v);
  ymax *= 1.05;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n"
      << "<!-- command: " << opt.command_line << " | version: " << RMTK_VERSION
      << " | seed: " << opt.seed << " | mu: " << fmt17(opt.mu)
      << " | n: " << opt.n << " -->\n"
      << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n"
      << "<line x1=\"60\" y1=\"540\" x2=\"740\" y2=\"540\" stroke=\"black\"/>\n"
      << "<line x1=\"60\" y1=\"60\" x2=\"60\" y2=\"540\" stroke=\"black\"/>\n"
      << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double px = m + (x[i] - xmin) / (xmax - xmin) * (W - 2 * m);
    const double py = H - m - (y[i] - ymin) / (ymax - ymin) * (H - 2 * m);
    out << fmt17(px) << "," << fmt17(py) << (i + 1 < x.size() ? " " : "");
  }
  out << "\"/>\n</svg>\n";
  return out.str();
}

std::string render_table_csv(const Options& opt,
                             const std::vector<std::string>& header,
                             const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  out << provenance_csv(opt);
  for (std::size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? "," : "\n");
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i)
      out << fmt17(r[i]) << (i + 1 < r.size() ? "," : "\n");
  }
  return out.str();
}

std::string render_table_json(const Options& opt,
                              const std::vector<std::string>& header,
                              const std::vector<std::vector<double>>& rows) {
  json doc;
  doc["provenance"] = provenance_json(opt);
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    for (std::size_t i = 0; i < header.size(); ++i) row[header[i]] = r[i];
    arr.push_back(row);
  }
  doc["rows"] = arr;
  return doc.dump(2) + "\n";
}

int emit_table(const Options& opt, const std::string& command,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows, int xcol = 0,
               int ycol = 1) {
  std::string body;
  if (opt.format == "csv") {
    body = render_table_csv(opt, header, rows);
  } else if (opt.format == "json") {
    body = render_table_json(opt, header, rows);
  } else {
    std::vector<double> x, y;
    for (const auto& r : rows) {
      x.push_back(r[xcol]);
      y.push_back(r[ycol]);
    }
    body = render_svg(x, y, opt);
  }
  write_file(resolve_output(opt, command), body);
  return 0;
}

int cmd_density(const Options& opt) {
  const rmtk::Coupling c = rmtk::make_coupling(opt.mu);
  const rmtk::KernelSet ks(opt.n, c);
  const Grid g = parse_grid(opt.grid_str);
  std::vector<std::vector<double>> rows;
  for (double lam : g.values())
    rows.push_back({lam, ks.density(lam)});
  return emit_table(opt, "density", {"lambda", "density"}, rows);
}

int cmd_mc_density(const Options& opt) {
  const auto samples = rmtk::sample_spectra(opt.n, opt.mu, opt.samples,
                                            opt.seed, opt.workers);
  const auto h = rmtk::histogram_density(samples, opt.bins, opt.lambda_max);
  std::vector<std::vector<double>> rows;
  for (int b = 0; b < opt.bins; ++b)
    rows.push_back({0.5 * (h.bin_edges[b] + h.bin_edges[b + 1]), h.density[b],
                    h.std_error[b]});
  return emit_table(opt, "mc-density", {"bin_center", "density", "std_error"},
                    rows);
}

// Bin average of the analytic density by 3-point Gauss-Legendre per bin, the
// right comparison target for a histogram estimate.
double bin_average_density(const rmtk::KernelSet& ks, double a, double b) {
  static const double kx[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
  static const double kw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    s += kw[i] * ks.density(0.5 * (b - a) * kx[i] + 0.5 * (a + b));
  return 0.5 * s;
}

int cmd_compare(const Options& opt) {
  if (opt.format != "json")
    throw CLI::ValidationError("--format", "compare emits json only");
  const rmtk::Coupling c = rmtk::make_coupling(opt.mu);
  const rmtk::KernelSet ks(opt.n, c);
  const auto samples = rmtk::sample_spectra(opt.n, opt.mu, opt.samples,
                                            opt.seed, opt.workers);
  const auto h = rmtk::histogram_density(samples, opt.bins, opt.lambda_max);
  json doc;
  doc["provenance"] = provenance_json(opt);
  doc["samples"] = opt.samples;
  doc["bins"] = opt.bins;
  doc["lambda_max"] = opt.lambda_max;
  json rows = json::array();
  double chi2 = 0.0;
  int dof = 0, within3 = 0, within5 = 0, used = 0;
  for (int b = 0; b < opt.bins; ++b) {
    const double lo = h.bin_edges[b], hi = h.bin_edges[b + 1];
    const double analytic = bin_average_density(ks, lo, hi);
    const double est = h.density[b];
    const double se = h.std_error[b];
    double z = 0.0;
    if (se > 0.0) {
      z = (est - analytic) / se;
      chi2 += z * z;
      ++dof;
      ++used;
      if (std::abs(z) <= 3.0) ++within3;
      if (std::abs(z) <= 5.0) ++within5;
    } else if (analytic < 1e-12) {
      // Empty bin where the analytic density also vanishes: agreement.
      ++used;
      ++within3;
      ++within5;
    }
    json row;
    row["bin_center"] = 0.5 * (lo + hi);
    row["analytic"] = analytic;
    row["mc_density"] = est;
    row["mc_std_error"] = se;
    row["z_score"] = z;
    rows.push_back(row);
  }
  doc["rows"] = rows;
  doc["chi2"] = chi2;
  doc["dof"] = dof;
  doc["chi2_per_dof"] = dof > 0 ? chi2 / dof : 0.0;
  doc["bins_within_3se_fraction"] = used > 0 ? double(within3) / used : 0.0;
  doc["bins_within_5se_fraction"] = used > 0 ? double(within5) / used : 0.0;
  write_file(resolve_output(opt, "compare"), doc.dump(2) + "\n");
  return 0;
}

int cmd_poly(const Options& opt) {
  const rmtk::Coupling c = rmtk::make_coupling(opt.mu);
  const auto q = rmtk::poly_q(opt.n, c);
  const auto qt = rmtk::poly_q_tilde(opt.n, c);
  const Grid g = parse_grid(opt.grid_str);
  std::vector<std::vector<double>> rows;
  for (double x : g.values())
    rows.push_back({x, rmtk::poly_eval_x2(q, x * x),
                    rmtk::poly_eval_x2(qt, x * x)});
  return emit_table(opt, "poly", {"x", "q", "q_tilde"}, rows);
}

int cmd_kernel(const Options& opt) {
  const rmtk::Coupling c = rmtk::make_coupling(opt.mu);
  const rmtk::KernelSet ks(opt.n, c);
  const Grid g = parse_grid(opt.grid_str);
  const auto pts = g.values();
  std::vector<std::vector<double>> rows;
  for (double l1 : pts)
    for (double l2 : pts)
      rows.push_back({l1, l2, ks.K(l1, l2), ks.G(l1, l2), ks.W(l1, l2)});
  return emit_table(opt, "kernel", {"lambda1", "lambda2", "k", "g", "w"}, rows,
                    0, 2);
}

int cmd_corr(const Options& opt) {
  const rmtk::Coupling c = rmtk::make_coupling(opt.mu);
  const rmtk::KernelSet ks(opt.n, c);
  const Grid g = parse_grid(opt.grid_str);
  const auto pts = g.values();
  std::vector<std::vector<double>> rows;
  for (double l1 : pts)
    for (double l2 : pts)
      rows.push_back({l1, l2, rmtk::correlation(ks, {l1, l2})});
  return emit_table(opt, "corr", {"lambda1", "lambda2", "r2"}, rows, 0, 2);
}

int cmd_groupint(const Options& opt) {
  std::vector<double> a(opt.n);
  for (int k = 0; k < opt.n; ++k) a[k] = 0.4 + 0.3 * k;
  const double analytic = rmtk::group_integral(a, opt.xi);
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(opt.n, opt.n);
  for (int k = 0; k < opt.n; ++k) A(k, k) = a[k];
  rmtk::RngStream rng(opt.seed, 0);
  const auto [mean, se] =
      rmtk::mc_group_integral(A, A, opt.xi, opt.samples, rng);
  std::ostringstream label;
  label << "n" << opt.n << "_xi" << fmt17(opt.xi);
  std::string body;
  if (opt.format == "json") {
    json doc;
    doc["provenance"] = provenance_json(opt);
    json row;
    row["label"] = label.str();
    row["analytic"] = analytic;
    row["mc_mean"] = mean;
    row["mc_se"] = se;
    doc["rows"] = json::array({row});
    body = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << provenance_csv(opt) << "label,analytic,mc_mean,mc_se\n"
        << label.str() << "," << fmt17(analytic) << "," << fmt17(mean) << ","
        << fmt17(se) << "\n";
    body = out.str();
  }
  write_file(resolve_output(opt, "groupint"), body);
  return 0;
}

int cmd_selftest(const Options& opt) {
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };
  const rmtk::Coupling c = rmtk::make_coupling(0.5);
  check("eta identity", std::abs(c.eta_plus - c.eta_minus - 0.5) < 1e-15);
  {
    const auto r = rmtk::integrate_semi_infinite(
        [&](double l) { return rmtk::weight_g(l, c); });
    check("one-point weight normalization",
          r.converged && std::abs(r.value - rmtk::gbar(c)) < 1e-8);
  }
  {
    const auto r = rmtk::integrate_semi_infinite(
        [&](double x) { return rmtk::weight_Gtilde(x, 1.2, c); });
    check("reduced two-point weight null integral",
          r.converged && std::abs(r.value) < 1e-6);
  }
  {
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(4, 4);
    rmtk::RngStream rng(opt.seed, 99);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        A(i, j) = rng.normal();
        A(j, i) = -A(i, j);
      }
    const double pf = rmtk::pfaffian<double>(A);
    check("pfaffian squared equals determinant",
          std::abs(pf * pf - A.determinant()) < 1e-10 * std::abs(A.determinant()));
  }
  {
    const rmtk::KernelSet ks(3, c);
    const auto r = rmtk::integrate_semi_infinite(
        [&](double l) { return ks.density(l); });
    check("level density normalization",
          r.converged && std::abs(r.value - 1.0) < 1e-6);
  }
  {
    rmtk::SkewProductSpec sp{rmtk::Parity::even, c, {}};
    const double p00 =
        rmtk::skew_product(rmtk::poly_q(0, c), rmtk::poly_q_tilde(0, c), sp);
    check("skew-orthonormality (0, 0)",
          std::abs(p00 / rmtk::h_norm(0, c) - 1.0) < 1e-6);
  }
  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-N spectral statistics for the chirality-preserving "
               "GUE-chGUE crossover ensemble"};
  app.require_subcommand(1);

  Options opt;
  {
    std::ostringstream cl;
    for (int i = 0; i < argc; ++i) cl << (i ? " " : "") << argv[i];
    opt.command_line = cl.str();
  }

  auto add_common = [&](CLI::App* sub, bool needs_mu = true) {
    sub->add_option("--n", opt.n, "matrix size (or polynomial index for poly)")
        ->check(CLI::PositiveNumber);
    if (needs_mu)
      sub->add_option("--mu", opt.mu, "crossover parameter in (0, 1]");
    sub->add_option("--output,-o", opt.output, "output path ('-' for stdout)");
    sub->add_option("--format", opt.format, "csv, json, or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
  };

  auto* density = app.add_subcommand("density", "analytic level density");
  add_common(density);
  density->add_option("--grid", opt.grid_str, "min:max:points");

  auto* mcd = app.add_subcommand("mc-density", "Monte Carlo level density");
  add_common(mcd);
  mcd->add_option("--samples", opt.samples)->check(CLI::Range(1000l, 100000000l));
  mcd->add_option("--bins", opt.bins)->check(CLI::PositiveNumber);
  mcd->add_option("--lambda-max", opt.lambda_max)->check(CLI::PositiveNumber);
  mcd->add_option("--seed", opt.seed);
  mcd->add_option("--workers", opt.workers)->check(CLI::PositiveNumber);

  auto* compare = app.add_subcommand("compare", "analytic vs Monte Carlo report");
  add_common(compare);
  compare->add_option("--samples", opt.samples)->check(CLI::Range(1000l, 100000000l));
  compare->add_option("--bins", opt.bins)->check(CLI::PositiveNumber);
  compare->add_option("--lambda-max", opt.lambda_max)->check(CLI::PositiveNumber);
  compare->add_option("--seed", opt.seed);
  compare->add_option("--workers", opt.workers)->check(CLI::PositiveNumber);

  auto* poly = app.add_subcommand("poly", "skew-orthogonal polynomial values");
  add_common(poly);
  poly->add_option("--grid", opt.grid_str, "min:max:points");

  auto* kernel = app.add_subcommand("kernel", "kernel values on a grid");
  add_common(kernel);
  kernel->add_option("--grid", opt.grid_str, "min:max:points");

  auto* corr = app.add_subcommand("corr", "two-point correlation on a grid");
  add_common(corr);
  corr->add_option("--grid", opt.grid_str, "min:max:points");

  auto* groupint = app.add_subcommand("groupint", "group integral vs Haar MC");
  add_common(groupint, false);
  groupint->add_option("--xi", opt.xi);
  groupint->add_option("--samples", opt.samples)->check(CLI::Range(1000l, 100000000l));
  groupint->add_option("--seed", opt.seed);

  auto* selftest = app.add_subcommand("selftest", "run the invariant suite");
  selftest->add_option("--seed", opt.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (density->parsed()) return cmd_density(opt);
    if (mcd->parsed()) return cmd_mc_density(opt);
    if (compare->parsed()) {
      if (!compare->count("--format")) opt.format = "json";
      return cmd_compare(opt);
    }
    if (poly->parsed()) return cmd_poly(opt);
    if (kernel->parsed()) return cmd_kernel(opt);
    if (corr->parsed()) return cmd_corr(opt);
    if (groupint->parsed()) return cmd_groupint(opt);
    if (selftest->parsed()) return cmd_selftest(opt);
  } catch (const rmtk::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
