#include "rmtk/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "rmtk/linalg.hpp"

namespace rmtk {

namespace {

// Samples per RNG stream; fixes the sample -> stream map independently of the
// worker count.
constexpr long kSampleBlock = 1024;

void check_bins(int bins, double lambda_max) {
  if (bins < 1 || lambda_max <= 0.0)
    throw std::invalid_argument("histogram: need bins >= 1, lambda_max > 0");
}

std::vector<double> make_edges(int bins, double lambda_max) {
  std::vector<double> edges(bins + 1);
  for (int b = 0; b <= bins; ++b) edges[b] = lambda_max * b / bins;
  return edges;
}

} // namespace

SpectrumSample sample_spectrum(int N, double mu, RngStream& rng) {
  if (N < 1) throw std::invalid_argument("sample_spectrum: N < 1");
  if (mu < 0.0 || mu > 1.0)
    throw std::invalid_argument("sample_spectrum: mu outside [0, 1]");
  // Sequence the two draws explicitly; evaluation order inside one expression
  // is unspecified and the reproducibility contract needs H1 first.
  const Eigen::MatrixXcd H1 = sample_gue(N, rng);
  const Eigen::MatrixXcd H2 = sample_gue(N, rng);
  const Eigen::VectorXd sv =
      singular_values(H1 + std::complex<double>(0.0, mu) * H2);
  SpectrumSample out;
  out.singular_values.assign(sv.data(), sv.data() + N);
  out.master_seed = rng.master_seed();
  out.stream_id = rng.stream_id();
  return out;
}

std::vector<SpectrumSample> sample_spectra(int N, double mu, long samples,
                                           std::uint64_t master_seed,
                                           int workers) {
  if (samples < 1) throw std::invalid_argument("sample_spectra: samples < 1");
  if (workers < 1) workers = 1;
  std::vector<SpectrumSample> out(samples);
  const long blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::atomic<long> next{0};
  auto run = [&]() {
    for (long b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) {
      RngStream rng(master_seed, static_cast<std::uint64_t>(b));
      const long lo = b * kSampleBlock;
      const long hi = std::min(samples, lo + kSampleBlock);
      for (long s = lo; s < hi; ++s) out[s] = sample_spectrum(N, mu, rng);
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  return out;
}

HistogramEstimate histogram_density(const std::vector<SpectrumSample>& samples,
                                    int bins, double lambda_max) {
  check_bins(bins, lambda_max);
  if (samples.size() < 1000)
    throw std::invalid_argument("histogram_density: need at least 1000 samples");
  std::vector<long> counts(bins, 0);
  long pooled = 0;
  for (const auto& s : samples) {
    pooled += static_cast<long>(s.singular_values.size());
    for (double v : s.singular_values) {
      const int b = static_cast<int>(v / lambda_max * bins);
      if (b >= 0 && b < bins) ++counts[b];
    }
  }
  HistogramEstimate h;
  h.bin_edges = make_edges(bins, lambda_max);
  h.density.resize(bins);
  h.std_error.resize(bins);
  h.sample_count = static_cast<long>(samples.size());
  const double width = lambda_max / bins;
  // Divide by the full pooled count (not the in-range one) so each bin is an
  // unbiased estimate of rho_N restricted to [0, lambda_max]; renormalizing to
  // the window would bias every bin upward whenever mass sits beyond it.
  const double norm = pooled > 0 ? 1.0 / (pooled * width) : 0.0;
  for (int b = 0; b < bins; ++b) {
    h.density[b] = counts[b] * norm;
    h.std_error[b] = std::sqrt(static_cast<double>(counts[b])) * norm;
  }
  return h;
}

Histogram2D pair_correlation_estimate(const std::vector<SpectrumSample>& samples,
                                      int bins, double lambda_max) {
  check_bins(bins, lambda_max);
  if (samples.size() < 10000)
    throw std::invalid_argument(
        "pair_correlation_estimate: need at least 10000 samples");
  const int N = static_cast<int>(samples.front().singular_values.size());
  if (N < 2)
    throw std::invalid_argument("pair_correlation_estimate: need N >= 2");
  std::vector<std::vector<long>> counts(bins, std::vector<long>(bins, 0));
  for (const auto& s : samples)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i == j) continue;
        const int bi =
            static_cast<int>(s.singular_values[i] / lambda_max * bins);
        const int bj =
            static_cast<int>(s.singular_values[j] / lambda_max * bins);
        if (bi >= 0 && bi < bins && bj >= 0 && bj < bins) ++counts[bi][bj];
      }
  Histogram2D h;
  h.bin_edges = make_edges(bins, lambda_max);
  h.sample_count = static_cast<long>(samples.size());
  h.density.assign(bins, std::vector<double>(bins, 0.0));
  h.std_error.assign(bins, std::vector<double>(bins, 0.0));
  const double width = lambda_max / bins;
  // Integral over the grid = N(N-1) x (in-range pair fraction); normalizing
  // per draw keeps the estimator unbiased against the analytic R2.
  const double norm = 1.0 / (samples.size() * width * width);
  for (int i = 0; i < bins; ++i)
    for (int j = 0; j < bins; ++j) {
      h.density[i][j] = counts[i][j] * norm;
      h.std_error[i][j] = std::sqrt(static_cast<double>(counts[i][j])) * norm;
    }
  return h;
}

std::pair<double, double> heine_oracle(int j, double mu, double x, long samples,
                                       RngStream& rng) {
  if (j < 1) throw std::invalid_argument("heine_oracle: j < 1");
  if (samples < 10000)
    throw std::invalid_argument("heine_oracle: need at least 10000 samples");
  const Eigen::MatrixXcd X2 =
      x * x * Eigen::MatrixXcd::Identity(j, j);
  double sum = 0.0, sumsq = 0.0;
  for (long s = 0; s < samples; ++s) {
    const Eigen::MatrixXcd H1 = sample_gue(j, rng);
    const Eigen::MatrixXcd H2 = sample_gue(j, rng);
    const Eigen::MatrixXcd W = H1 + std::complex<double>(0.0, mu) * H2;
    const double v = std::real((X2 - W * W.adjoint()).determinant());
    sum += v;
    sumsq += v * v;
  }
  const double mean = sum / samples;
  const double var = std::max(0.0, sumsq / samples - mean * mean);
  return {mean, std::sqrt(var / samples)};
}

} // namespace rmtk
