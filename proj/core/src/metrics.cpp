#include "warmgray/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "warmgray/colorspaces.hpp"

namespace warmgray {

void PairSampleConfig::validate() const {
  if (!exhaustive && pair_count == 0) {
    throw std::invalid_argument("pair_count must be >= 1 when sampling");
  }
}

double MetricReport::mean_ccpr() const noexcept {
  if (per_tau.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : per_tau) sum += r.ccpr;
  return sum / static_cast<double>(per_tau.size());
}

double MetricReport::mean_ccfr() const noexcept {
  if (per_tau.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& r : per_tau) sum += r.ccfr;
  return sum / static_cast<double>(per_tau.size());
}

std::vector<double> standard_taus() {
  std::vector<double> taus;
  for (int t = 1; t <= 15; ++t) taus.push_back(t);
  return taus;
}

namespace {

void check_inputs(const PlanarImage& color, const PlanarImage& gray) {
  require_kind(color, PixelKind::rgb, "metrics color image");
  require_kind(gray, PixelKind::luminance, "metrics gray image");
  require_same_shape(color, gray, "metrics");
}

void check_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::invalid_argument("tau must be positive, got " + std::to_string(tau));
  }
}

}  // namespace

std::vector<PairDifference> pair_differences(const PlanarImage& color, const PlanarImage& gray,
                                             const PairSampleConfig& cfg) {
  check_inputs(color, gray);
  cfg.validate();

  const std::size_t n = color.pixel_count();
  std::vector<LabColor> lab(n);
  for (std::size_t i = 0; i < n; ++i) lab[i] = rgb_to_lab(color.pixel(i));
  const auto g = gray.samples();

  auto diff = [&](std::size_t i, std::size_t j) {
    return PairDifference{delta_e76(lab[i], lab[j]), std::abs(g[i] - g[j]) * 100.0};
  };

  std::vector<PairDifference> pairs;
  if (n < 2) return pairs;

  const std::size_t all_pairs = n * (n - 1) / 2;
  if (cfg.exhaustive || cfg.pair_count >= all_pairs) {
    pairs.reserve(all_pairs);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) pairs.push_back(diff(i, j));
    }
    return pairs;
  }

  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> first(0, n - 1);
  std::uniform_int_distribution<std::size_t> second(0, n - 2);
  pairs.reserve(cfg.pair_count);
  for (std::size_t k = 0; k < cfg.pair_count; ++k) {
    const std::size_t i = first(rng);
    std::size_t j = second(rng);
    if (j >= i) ++j;
    pairs.push_back(diff(i, j));
  }
  return pairs;
}

double ccpr(std::span<const PairDifference> pairs, double tau) noexcept {
  std::size_t contrasting = 0;
  std::size_t preserved = 0;
  for (const auto& p : pairs) {
    if (p.color >= tau) {
      ++contrasting;
      if (p.gray >= tau) ++preserved;
    }
  }
  if (contrasting == 0) return 1.0;
  return static_cast<double>(preserved) / static_cast<double>(contrasting);
}

double ccfr(std::span<const PairDifference> pairs, double tau) noexcept {
  std::size_t contrasting = 0;
  std::size_t fabricated = 0;
  for (const auto& p : pairs) {
    if (p.gray >= tau) {
      ++contrasting;
      if (p.color < tau) ++fabricated;
    }
  }
  if (contrasting == 0) return 1.0;
  return 1.0 - static_cast<double>(fabricated) / static_cast<double>(contrasting);
}

double ccpr(const PlanarImage& color, const PlanarImage& gray, double tau,
            const PairSampleConfig& cfg) {
  check_tau(tau);
  return ccpr(pair_differences(color, gray, cfg), tau);
}

double ccfr(const PlanarImage& color, const PlanarImage& gray, double tau,
            const PairSampleConfig& cfg) {
  check_tau(tau);
  return ccfr(pair_differences(color, gray, cfg), tau);
}

double escore(double ccpr_value, double ccfr_value) noexcept {
  const double sum = ccpr_value + ccfr_value;
  if (!(sum > 0.0)) return 0.0;
  return 2.0 * ccpr_value * ccfr_value / sum;
}

MetricReport evaluate(const PlanarImage& color, const PlanarImage& gray,
                      const PairSampleConfig& cfg) {
  const auto pairs = pair_differences(color, gray, cfg);
  MetricReport report;
  double total = 0.0;
  for (double tau : standard_taus()) {
    TauRecord rec;
    rec.tau = tau;
    rec.ccpr = ccpr(pairs, tau);
    rec.ccfr = ccfr(pairs, tau);
    rec.escore = escore(rec.ccpr, rec.ccfr);
    total += rec.escore;
    report.per_tau.push_back(rec);
  }
  report.mean_escore = total / static_cast<double>(report.per_tau.size());
  return report;
}

namespace {

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

void write_csv_header(std::ostream& out) { out << "image,tau,ccpr,ccfr,escore\n"; }

void write_csv_rows(std::ostream& out, std::string_view image, const MetricReport& report) {
  for (const auto& r : report.per_tau) {
    out << image << ',' << static_cast<long long>(std::lround(r.tau)) << ',' << fixed6(r.ccpr)
        << ',' << fixed6(r.ccfr) << ',' << fixed6(r.escore) << '\n';
  }
  out << image << ",mean," << fixed6(report.mean_ccpr()) << ',' << fixed6(report.mean_ccfr())
      << ',' << fixed6(report.mean_escore) << '\n';
}

void write_csv(std::ostream& out, std::string_view image, const MetricReport& report) {
  write_csv_header(out);
  write_csv_rows(out, image, report);
}

CorpusSummary summarize(std::span<const MetricReport> reports) noexcept {
  CorpusSummary s;
  if (reports.empty()) return s;
  for (const auto& r : reports) {
    s.mean_ccpr += r.mean_ccpr();
    s.mean_ccfr += r.mean_ccfr();
    s.mean_escore += r.mean_escore;
  }
  const double n = static_cast<double>(reports.size());
  s.mean_ccpr /= n;
  s.mean_ccfr /= n;
  s.mean_escore /= n;
  return s;
}

}  // namespace warmgray
