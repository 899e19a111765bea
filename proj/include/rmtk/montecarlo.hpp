#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rmtk/rng.hpp"

// Ensemble sampling for W = H1 + i mu H2, histogram estimators for the level
// density and the two-point function, and Monte Carlo averages of
// characteristic polynomials.

namespace rmtk {

struct SpectrumSample {
  std::vector<double> singular_values;  // ascending, nonnegative
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

struct HistogramEstimate {
  std::vector<double> bin_edges;  // bins + 1 ascending values
  std::vector<double> density;
  std::vector<double> std_error;
  long sample_count = 0;
};

struct Histogram2D {
  std::vector<double> bin_edges;  // shared by both axes
  std::vector<std::vector<double>> density;  // [i][j] for (l1, l2) bins
  std::vector<std::vector<double>> std_error;
  long sample_count = 0;
};

// One draw: H1, H2 from the GUE sampler, singular values of H1 + i mu H2.
SpectrumSample sample_spectrum(int N, double mu, RngStream& rng);

// Deterministic batch: sample s is always produced by the stream
// (master_seed, s / kSampleBlock) regardless of worker count, so histograms
// built from the result are bit-identical for any `workers`.
std::vector<SpectrumSample> sample_spectra(int N, double mu, long samples,
                                           std::uint64_t master_seed,
                                           int workers = 1);

// Pooled singular values on `bins` equal bins over [0, lambda_max], density
// normalized to unit integral over the range; Poisson per-bin errors.
HistogramEstimate histogram_density(const std::vector<SpectrumSample>& samples,
                                    int bins, double lambda_max);

// All ordered pairs (l_i, l_j), i != j, per draw; normalized so the integral
// over the range equals N(N-1).
Histogram2D pair_correlation_estimate(const std::vector<SpectrumSample>& samples,
                                      int bins, double lambda_max);

// MC mean and standard error of det(x^2 - W W^dag) over j x j draws.
std::pair<double, double> heine_oracle(int j, double mu, double x, long samples,
                                       RngStream& rng);

} // namespace rmtk
