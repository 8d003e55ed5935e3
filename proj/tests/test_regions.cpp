#include <doctest.h>

#include <cmath>
#include <sstream>

#include "splineframes/errors.hpp"
#include "splineframes/regions.hpp"
#include "support/oracles.hpp"

using namespace splineframes;

namespace {
RegionLabel label(double N, double a, double b) { return classify(LatticeParams::make(N, a, b)); }
}  // namespace

TEST_CASE("lattice parameters are validated") {
  CHECK_THROWS_AS(LatticeParams::make(0.0, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(LatticeParams::make(2.0, -0.5, 0.5), DomainError);
  CHECK_THROWS_AS(LatticeParams::make(2.0, 0.5, NAN), DomainError);
  CHECK(LatticeParams::make(2.0, 0.5, 0.25).inv_b() == 4.0);
}

TEST_CASE("T_m b-intervals") {
  auto iv = tm_bounds(2.0, 0.9, 3);
  REQUIRE(iv);
  CHECK(iv->lo == doctest::Approx(4.0 / 4.7).epsilon(1e-15));
  CHECK(iv->hi == doctest::Approx(6.0 / 6.5).epsilon(1e-15));
  CHECK(iv->hi_inclusive);

  CHECK_FALSE(tm_bounds(2.0, 0.5, 3));

  iv = tm_bounds(2.0, 0.5, 1);
  REQUIRE(iv);
  CHECK(iv->lo == 0.0);
  CHECK(iv->hi == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(iv->hi_inclusive);

  CHECK_FALSE(tm_bounds(2.0, 1.0, 1));
  CHECK_FALSE(tm_bounds(2.0, 0.0, 1));
}

TEST_CASE("upper endpoints are closed, the 2/N cap is open") {
  const auto p = LatticeParams::make(2.0, 0.5, 0.8);
  CHECK(in_tm(p, 1));
  CHECK_FALSE(in_tm(p, 2));
  // m = 2 at a = 0.5: 4/3.5 > 1 = 2/N, so the cap binds
  const auto iv = tm_bounds(2.0, 0.5, 2);
  REQUIRE(iv);
  CHECK(iv->hi == 1.0);
  CHECK_FALSE(iv->hi_inclusive);
  CHECK_FALSE(in_tm(LatticeParams::make(2.0, 0.5, 1.0), 2));
  CHECK(in_tm(LatticeParams::make(2.0, 0.5, 0.999), 2));
}

TEST_CASE("classification examples") {
  CHECK(label(2, 0.9, 8.0 / 9.0) == RegionLabel::t(3));
  CHECK(label(2, 0.75, 35.0 / 36.0) == RegionLabel::t(3));
  CHECK(label(2, 1.0, 1.0) == RegionLabel::not_frame(NotFrameReason::DensityViolation));
  CHECK(label(2, 0.5, 0.5) == RegionLabel::t(1));
  CHECK(label(2, 1.5, 0.6) == RegionLabel::large_shift());
  CHECK(label(2, 1.2, 0.9) == RegionLabel::not_frame(NotFrameReason::DensityViolation));
  CHECK(label(2, 2.5, 0.1) == RegionLabel::not_frame(NotFrameReason::ShiftTooLarge));
  CHECK(label(2, 0.2, 1.5) == RegionLabel::unknown());
  CHECK(label(2, 1.0, 0.5) == RegionLabel::large_shift());
}

TEST_CASE("label strings") {
  CHECK(RegionLabel::t(3).to_string() == "T(3)");
  CHECK(RegionLabel::not_frame(NotFrameReason::DensityViolation).to_string() ==
        "NotFrame(DensityViolation)");
  CHECK(RegionLabel::not_frame(NotFrameReason::ShiftTooLarge).to_string() ==
        "NotFrame(ShiftTooLarge)");
  CHECK(RegionLabel::large_shift().to_string() == "LargeShift");
  CHECK(RegionLabel::unknown().to_string() == "Unknown");
  CHECK(RegionLabel::t(2) != RegionLabel::t(3));
}

TEST_CASE("m index") {
  CHECK(m_index(LatticeParams::make(2, 0.75, 35.0 / 36.0)) == 3);
  CHECK(m_index(LatticeParams::make(2, 0.9, 8.0 / 9.0)) == 3);
  CHECK(m_index(LatticeParams::make(2, 0.5, 0.5)) == 1);
  CHECK_FALSE(m_index(LatticeParams::make(2, 0.2, 1.5)));
  CHECK_FALSE(m_index(LatticeParams::make(2, 1.5, 0.6)));

  // frozen from the exhaustive scan
  const auto p = LatticeParams::make(2, 0.9, 0.99);
  CHECK(m_index(p) == 5);
  CHECK(oracle::tm_scan(2, 0.9, 0.99) == std::vector<int>{5});
}

TEST_CASE("region map examples") {
  const RegionMap small = region_map(2, 2, 2, 4);
  CHECK(small.labels.size() == 16);
  CHECK(small.cell_containing(1.75, 1.75) ==
        RegionLabel::not_frame(NotFrameReason::DensityViolation));
  CHECK_THROWS_AS(small.cell_containing(2.5, 1.0), DomainError);

  const RegionMap map = region_map(2, 2, 2, 200);
  CHECK(map.cell_containing(0.9, 8.0 / 9.0) == RegionLabel::t(3));
  CHECK(map.cell_containing(1.5, 0.6) == RegionLabel::large_shift());
  CHECK(map.cell_containing(0.5, 0.5) == RegionLabel::t(1));
  CHECK(map.cell_containing(1.2, 0.9) ==
        RegionLabel::not_frame(NotFrameReason::DensityViolation));
  CHECK(map.cell_containing(0.8, 0.9).tag == RegionTag::T);
  CHECK(map.cell_containing(0.8, 0.9).m >= 2);
  CHECK_THROWS_AS(region_map(2, 2, 2, 0), DomainError);
}

TEST_CASE("region map output is deterministic") {
  auto render = [](bool svg) {
    std::ostringstream os;
    const RegionMap map = region_map(2, 2, 2, 50);
    svg ? write_region_svg(os, map) : write_region_csv(os, map);
    return os.str();
  };
  const std::string csv = render(false);
  CHECK(csv == render(false));
  CHECK(csv.rfind("a,b,label,m\n", 0) == 0);
  CHECK(csv.find("T(3),3") != std::string::npos);
  const std::string svg = render(true);
  CHECK(svg == render(true));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("LargeShift") != std::string::npos);
}

// properties

TEST_CASE("property: the T_m partition the triangle") {
  oracle::Rng rng(0x5eed1001);
  int in_t = 0;
  for (int i = 0; i < 10000; ++i) {
    const double N = rng.integer(1, 6);
    const double a = rng.uniform(0.0, N / 2.0);
    const double b = rng.uniform(0.0, 2.0 / N);
    if (!(a > 0.0 && b > 0.0 && a * b < 1.0)) continue;
    const auto p = LatticeParams::make(N, a, b);
    int hits = 0;
    int last = 0;
    for (int m = 1; m <= 64; ++m)
      if (tm_bounds(N, a, m) && tm_bounds(N, a, m)->contains(b)) {
        ++hits;
        last = m;
      }
    REQUIRE(hits <= 1);
    REQUIRE(oracle::tm_scan(N, a, b).size() == static_cast<std::size_t>(hits));
    const RegionLabel l = classify(p);
    if (l.tag == RegionTag::T) {
      REQUIRE(hits == 1);
      REQUIRE(l.m == last);
      REQUIRE(m_index(p) == last);
      ++in_t;
    } else {
      REQUIRE(hits == 0);
      REQUIRE_FALSE(m_index(p));
    }
  }
  CHECK(in_t > 5000);
}

TEST_CASE("property: consecutive intervals share endpoints") {
  oracle::Rng rng(0x5eed1002);
  for (int i = 0; i < 2000; ++i) {
    const double N = rng.integer(1, 6);
    const double a = rng.uniform(0.0, N / 2.0);
    for (int m = 1; m < 64; ++m) {
      const auto lo = tm_bounds(N, a, m);
      const auto hi = tm_bounds(N, a, m + 1);
      if (!lo || !hi || !lo->hi_inclusive) continue;
      REQUIRE(std::fabs(lo->hi - hi->lo) <= std::nextafter(lo->hi, INFINITY) - lo->hi);
    }
  }
}

TEST_CASE("property: coverage below the 2/N cap") {
  oracle::Rng rng(0x5eed1003);
  const double eps = 1e-9;
  for (int i = 0; i < 10000; ++i) {
    const double N = rng.integer(1, 6);
    const double a = rng.uniform(0.0, N);
    const double b = rng.uniform(0.0, 2.0 / N - eps);
    if (!(a > 0.0 && b > 0.0 && a * b < 1.0)) continue;
    const RegionLabel l = classify(LatticeParams::make(N, a, b));
    CAPTURE(N);
    CAPTURE(a);
    CAPTURE(b);
    REQUIRE(l.tag != RegionTag::Unknown);
  }
}

TEST_CASE("property: the strip above 2/N stays Unknown for small a") {
  // 4/(N + 3a) exceeds 2/N when a < N/3, but every T_m carries the cap b < 2/N
  oracle::Rng rng(0x5eed1005);
  for (int i = 0; i < 2000; ++i) {
    const double N = rng.integer(2, 6);
    const double a = rng.uniform(0.0, N / 3.0);
    const double b = rng.uniform(2.0 / N, 4.0 / (N + 3.0 * a));
    if (!(a > 0.0) || a * b >= 1.0) continue;
    REQUIRE(classify(LatticeParams::make(N, a, b)) == RegionLabel::unknown());
  }
}

TEST_CASE("property: density violation always wins") {
  oracle::Rng rng(0x5eed1004);
  for (int i = 0; i < 10000; ++i) {
    const double N = rng.uniform(0.5, 8.0);
    const double a = rng.uniform(0.01, 3.0 * N);
    const double b = rng.uniform(1.0 / a, 4.0 / a);
    REQUIRE(classify(LatticeParams::make(N, a, b)) ==
            RegionLabel::not_frame(NotFrameReason::DensityViolation));
  }
}
