#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "test_support.hpp"
#include "warmgray/colorspaces.hpp"
#include "warmgray/decolor.hpp"
#include "warmgray/errors.hpp"
#include "warmgray/metrics.hpp"

using namespace warmgray;

namespace {

PairSampleConfig exhaustive() {
  PairSampleConfig cfg;
  cfg.exhaustive = true;
  return cfg;
}

// All-pairs brute force that counts the pair sets directly.
struct BruteForce {
  double ccpr;
  double ccfr;
};

BruteForce brute_force(const PlanarImage& color, const PlanarImage& gray, double tau) {
  const std::size_t n = color.pixel_count();
  long omega = 0, kept = 0, theta = 0, fabricated = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i >= j) continue;
      const double de = delta_e76(rgb_to_lab(color.pixel(i)), rgb_to_lab(color.pixel(j)));
      const double dg = 100.0 * std::abs(gray.samples()[i] - gray.samples()[j]);
      if (de >= tau) {
        ++omega;
        if (dg >= tau) ++kept;
      }
      if (dg >= tau) {
        ++theta;
        if (de < tau) ++fabricated;
      }
    }
  }
  return {omega ? double(kept) / omega : 1.0, theta ? 1.0 - double(fabricated) / theta : 1.0};
}

PlanarImage achromatic(std::size_t w, std::size_t h, std::uint64_t seed) {
  PlanarImage img = PlanarImage::rgb(w, h);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level(0, 255);
  for (std::size_t i = 0; i < img.pixel_count(); ++i) {
    const double v = level(rng) / 255.0;
    img.set_pixel(i, {v, v, v});
  }
  return img;
}

PlanarImage own_lightness(const PlanarImage& rgb) {
  PlanarImage g = PlanarImage::luminance(rgb.width(), rgb.height());
  for (std::size_t i = 0; i < rgb.pixel_count(); ++i) {
    g.samples()[i] = rgb_to_lab(rgb.pixel(i)).l_star / 100.0;
  }
  return g;
}

}  // namespace

TEST(Escore, HarmonicMean) {
  EXPECT_DOUBLE_EQ(escore(1, 1), 1.0);
  EXPECT_NEAR(escore(0.5, 1.0), 2.0 / 3.0, 1e-12);
  EXPECT_DOUBLE_EQ(escore(0, 0), 0.0);
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    EXPECT_NEAR(escore(x, x), x, 1e-12);
    for (int j = 0; j <= 100; j += 7) {
      const double y = j / 100.0;
      const double e = escore(x, y);
      EXPECT_GE(e, std::min(x, y) - 1e-12);
      EXPECT_LE(e, std::max(x, y) + 1e-12);
    }
  }
}

TEST(Ccpr, AchromaticImageAgainstOwnLightnessIsOne) {
  const PlanarImage color = achromatic(6, 5, 1);
  const PlanarImage gray = own_lightness(color);
  for (int tau = 1; tau <= 15; ++tau) EXPECT_DOUBLE_EQ(ccpr(color, gray, tau, exhaustive()), 1.0);
}

TEST(Ccpr, ConstantGrayLosesAllContrast) {
  const PlanarImage color = test_support::random_rgb(5, 5, 2);
  PlanarImage gray = PlanarImage::luminance(5, 5);
  std::fill(gray.samples().begin(), gray.samples().end(), 0.5);
  EXPECT_DOUBLE_EQ(ccpr(color, gray, 5, exhaustive()), 0.0);
  EXPECT_DOUBLE_EQ(ccfr(color, gray, 5, exhaustive()), 1.0);
}

TEST(Ccpr, WhiteBlackMidGray) {
  PlanarImage color(3, 1, PixelKind::rgb, {1, 1, 1, 0, 0, 0, 0.5, 0.5, 0.5});
  const PlanarImage gray = decolor_image(color);
  const auto bf = brute_force(color, gray, 5);
  EXPECT_DOUBLE_EQ(bf.ccpr, 1.0);
  EXPECT_DOUBLE_EQ(ccpr(color, gray, 5, exhaustive()), 1.0);
}

TEST(Ccfr, FabricatedContrastScoresZero) {
  PlanarImage color(2, 1, PixelKind::rgb, {0.3, 0.6, 0.2, 0.3, 0.6, 0.2});
  PlanarImage gray(2, 1, PixelKind::luminance, {0.2, 0.8});
  EXPECT_DOUBLE_EQ(brute_force(color, gray, 5).ccfr, 0.0);
  EXPECT_DOUBLE_EQ(ccfr(color, gray, 5, exhaustive()), 0.0);
}

TEST(Ccfr, MatchingContrastScoresOne) {
  const PlanarImage color = achromatic(4, 4, 3);
  EXPECT_DOUBLE_EQ(ccfr(color, own_lightness(color), 3, exhaustive()), 1.0);
}

TEST(Metrics, ErrorPaths) {
  const PlanarImage color = test_support::random_rgb(4, 4, 1);
  EXPECT_THROW(ccpr(color, PlanarImage::luminance(4, 3), 1, {}), DimensionMismatch);
  EXPECT_THROW(ccfr(color, PlanarImage::luminance(3, 4), 1, {}), DimensionMismatch);
  EXPECT_THROW(ccpr(color, PlanarImage::luminance(4, 4), 0, {}), std::invalid_argument);
  EXPECT_THROW(ccfr(color, PlanarImage::luminance(4, 4), -2, {}), std::invalid_argument);
  PairSampleConfig none;
  none.pair_count = 0;
  EXPECT_THROW(evaluate(color, PlanarImage::luminance(4, 4), none), std::invalid_argument);
}

TEST(Metrics, SingleAndEmptyImagesAreVacuous) {
  const MetricReport r = evaluate(PlanarImage::rgb(1, 1), PlanarImage::luminance(1, 1));
  ASSERT_EQ(r.per_tau.size(), 15u);
  EXPECT_DOUBLE_EQ(r.mean_escore, 1.0);
}

TEST(Evaluate, MatchesBruteForceOnSmallImages) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const PlanarImage color = test_support::random_rgb(5, 4, seed);
    const PlanarImage gray = decolor_image(color);
    const MetricReport r = evaluate(color, gray, exhaustive());
    ASSERT_EQ(r.per_tau.size(), 15u);
    for (const auto& rec : r.per_tau) {
      const auto bf = brute_force(color, gray, rec.tau);
      EXPECT_DOUBLE_EQ(rec.ccpr, bf.ccpr);
      EXPECT_DOUBLE_EQ(rec.ccfr, bf.ccfr);
      EXPECT_DOUBLE_EQ(rec.escore, escore(bf.ccpr, bf.ccfr));
    }
  }
}

TEST(Evaluate, TauSweepIsOneToFifteen) {
  const MetricReport r = evaluate(test_support::random_rgb(6, 6, 3), test_support::random_luminance(6, 6, 4));
  ASSERT_EQ(r.per_tau.size(), 15u);
  double sum = 0;
  for (std::size_t i = 0; i < 15; ++i) {
    EXPECT_DOUBLE_EQ(r.per_tau[i].tau, double(i + 1));
    for (double v : {r.per_tau[i].ccpr, r.per_tau[i].ccfr, r.per_tau[i].escore}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    sum += r.per_tau[i].escore;
  }
  EXPECT_NEAR(r.mean_escore, sum / 15, 1e-12);
}

TEST(Evaluate, DeterministicForFixedSeed) {
  const PlanarImage color = test_support::random_rgb(40, 40, 5);
  const PlanarImage gray = decolor_image(color);
  PairSampleConfig cfg;
  cfg.pair_count = 5000;
  cfg.seed = 99;
  std::ostringstream a, b;
  write_csv(a, "x", evaluate(color, gray, cfg));
  write_csv(b, "x", evaluate(color, gray, cfg));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Evaluate, SamplerDegradesToBruteForce) {
  const PlanarImage color = test_support::random_rgb(4, 4, 6);
  const PlanarImage gray = decolor_image(color);
  PairSampleConfig sampled;
  sampled.pair_count = 16 * 15 / 2;
  sampled.seed = 7;
  std::ostringstream a, b;
  write_csv(a, "tiny", evaluate(color, gray, sampled));
  write_csv(b, "tiny", evaluate(color, gray, exhaustive()));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Evaluate, InvariantUnderJointPermutation) {
  const PlanarImage color = test_support::random_rgb(6, 5, 7);
  const PlanarImage gray = decolor_image(color);
  std::vector<std::size_t> perm(color.pixel_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), std::mt19937_64(8));
  PlanarImage pc = PlanarImage::rgb(6, 5);
  PlanarImage pg = PlanarImage::luminance(6, 5);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    pc.set_pixel(i, color.pixel(perm[i]));
    pg.samples()[i] = gray.samples()[perm[i]];
  }
  const MetricReport a = evaluate(color, gray, exhaustive());
  const MetricReport b = evaluate(pc, pg, exhaustive());
  for (std::size_t t = 0; t < 15; ++t) {
    EXPECT_DOUBLE_EQ(a.per_tau[t].ccpr, b.per_tau[t].ccpr);
    EXPECT_DOUBLE_EQ(a.per_tau[t].ccfr, b.per_tau[t].ccfr);
  }
}

TEST(Evaluate, SampledConvergesToExhaustive) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PlanarImage color = test_support::random_rgb(32, 32, 100 + seed);
    const PlanarImage gray = decolor_image(color);
    PairSampleConfig cfg;
    cfg.seed = seed;
    const MetricReport s = evaluate(color, gray, cfg);
    const MetricReport e = evaluate(color, gray, exhaustive());
    for (std::size_t t = 0; t < 15; ++t) {
      EXPECT_LE(std::abs(s.per_tau[t].ccpr - e.per_tau[t].ccpr), 0.02);
      EXPECT_LE(std::abs(s.per_tau[t].ccfr - e.per_tau[t].ccfr), 0.02);
      EXPECT_LE(std::abs(s.per_tau[t].escore - e.per_tau[t].escore), 0.02);
    }
  }
}

TEST(Csv, SchemaAndSummaryRow) {
  MetricReport r;
  for (int t = 1; t <= 15; ++t) r.per_tau.push_back({double(t), 1.0, 0.5, escore(1.0, 0.5)});
  r.mean_escore = escore(1.0, 0.5);
  std::ostringstream out;
  write_csv(out, "img", r);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "image,tau,ccpr,ccfr,escore");
  std::getline(in, line);
  EXPECT_EQ(line, "img,1,1.000000,0.500000,0.666667");
  int rows = 1;
  std::string last;
  while (std::getline(in, line)) {
    last = line;
    ++rows;
  }
  EXPECT_EQ(rows, 16);
  EXPECT_EQ(last, "img,mean,1.000000,0.500000,0.666667");
}

TEST(Summarize, AveragesPerImageMeans) {
  MetricReport a, b;
  a.per_tau = {{1, 1, 1, 1}};
  a.mean_escore = 1.0;
  b.per_tau = {{1, 0.5, 1, escore(0.5, 1)}};
  b.mean_escore = 0.5;
  const std::vector<MetricReport> both{a, b};
  const CorpusSummary s = summarize(both);
  EXPECT_DOUBLE_EQ(s.mean_escore, 0.75);
  EXPECT_DOUBLE_EQ(s.mean_ccpr, 0.75);
  EXPECT_DOUBLE_EQ(s.mean_ccfr, 1.0);
}
