#pragma once

// Contrast-preservation quality of a decolorization.
//
// Pixel pairs are classified by their CIE76 color difference in the color
// image and by their gray difference (luminance x 100, so both live on a
// Lab-like 0..100 scale) in the decolorized image:
//
//   CCPR = |{color-contrasting pairs that stay gray-contrasting}| / |color-contrasting|
//   CCFR = 1 - |{gray-contrasting pairs without color contrast}| / |gray-contrasting|
//   E    = harmonic mean of CCPR and CCFR
//
// "Contrasting" means difference >= tau. Empty pair sets score 1.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "warmgray/image.hpp"

namespace warmgray {

struct PairSampleConfig {
  static constexpr std::size_t default_pair_count = 50'000;
  static constexpr std::uint64_t default_seed = 42;

  std::size_t pair_count = default_pair_count;
  std::uint64_t seed = default_seed;
  /// Evaluate every unordered pair instead of sampling.
  bool exhaustive = false;

  /// Throws std::invalid_argument if pair_count is 0 while not exhaustive.
  void validate() const;
};

struct TauRecord {
  double tau = 0.0;
  double ccpr = 1.0;
  double ccfr = 1.0;
  double escore = 1.0;
};

struct MetricReport {
  std::vector<TauRecord> per_tau;
  double mean_escore = 0.0;

  double mean_ccpr() const noexcept;
  double mean_ccfr() const noexcept;
};

/// Thresholds of the standard sweep: 1, 2, ..., 15.
std::vector<double> standard_taus();

/// Color difference and scaled gray difference of one pixel pair.
struct PairDifference {
  double color = 0.0;
  double gray = 0.0;
};

/// Differences for the pair set selected by cfg. When cfg.pair_count covers
/// every unordered pair (or cfg.exhaustive is set) all pairs are enumerated
/// in index order; otherwise pairs are drawn uniformly from a seeded PRNG.
std::vector<PairDifference> pair_differences(const PlanarImage& color, const PlanarImage& gray,
                                             const PairSampleConfig& cfg);

double ccpr(std::span<const PairDifference> pairs, double tau) noexcept;
double ccfr(std::span<const PairDifference> pairs, double tau) noexcept;

/// Throw DimensionMismatch on size mismatch and std::invalid_argument on tau <= 0.
double ccpr(const PlanarImage& color, const PlanarImage& gray, double tau,
            const PairSampleConfig& cfg = {});
double ccfr(const PlanarImage& color, const PlanarImage& gray, double tau,
            const PairSampleConfig& cfg = {});

/// Harmonic mean; 0 when both inputs are 0.
double escore(double ccpr_value, double ccfr_value) noexcept;

/// Full tau = 1..15 sweep over one shared pair set.
MetricReport evaluate(const PlanarImage& color, const PlanarImage& gray,
                      const PairSampleConfig& cfg = {});

/// CSV with columns image,tau,ccpr,ccfr,escore. Each image contributes one
/// row per tau followed by a summary row whose tau column reads "mean".
void write_csv_header(std::ostream& out);
void write_csv_rows(std::ostream& out, std::string_view image, const MetricReport& report);
void write_csv(std::ostream& out, std::string_view image, const MetricReport& report);

/// Averages per-image mean E-scores (and CCPR/CCFR) across a corpus.
struct CorpusSummary {
  double mean_ccpr = 0.0;
  double mean_ccfr = 0.0;
  double mean_escore = 0.0;
};
CorpusSummary summarize(std::span<const MetricReport> reports) noexcept;

}  // namespace warmgray
