#include <doctest.h>

#include <cfloat>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "splineframes/errors.hpp"
#include "splineframes/io.hpp"
#include "splineframes/windows.hpp"
#include "support/oracles.hpp"

using namespace splineframes;

TEST_CASE("b-spline values at hand-checkable points") {
  CHECK(Window::bspline(1)(0.0) == 1.0);
  CHECK(Window::bspline(2)(0.0) == 1.0);
  CHECK(Window::bspline(2)(1.0) == 0.0);
  CHECK(Window::bspline(2)(-1.0) == 0.0);
  CHECK(Window::bspline(3)(0.0) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(eval_window(Window::bspline(2), 0.5) == 0.5);
  CHECK(eval_window(Window::bspline(2), -1.5) == 0.0);
  CHECK(eval_window(Window::bspline(3), 0.5) == doctest::Approx(0.5).epsilon(1e-15));
  // g_3 = 3/4 - x^2 on the middle piece
  for (double x : {-0.4, -0.1, 0.25, 0.49})
    CHECK(Window::bspline(3)(x) == doctest::Approx(0.75 - x * x).epsilon(1e-14));
}

TEST_CASE("window construction and evaluation errors") {
  CHECK_THROWS_AS(Window::bspline(0), DomainError);
  CHECK_THROWS_AS(Window::bspline(-2), DomainError);
  const Window g = Window::bspline(2);
  CHECK_THROWS_AS(g(std::numeric_limits<double>::quiet_NaN()), DomainError);
  CHECK_THROWS_AS(g(INFINITY), DomainError);
  CHECK_THROWS_AS(Window::tabulated({-1.0, -1.0}, {0.0, 1.0}, 2.0), DomainError);
  CHECK_THROWS_AS(Window::tabulated({-2.0, 0.0}, {0.0, 1.0}, 2.0), DomainError);
}

TEST_CASE("accessors") {
  const Window g = Window::bspline(4);
  CHECK(g.kind() == WindowKind::BSpline);
  CHECK(g.order() == 4);
  CHECK(g.support_length() == 4.0);
  CHECK(g.support_halfwidth() == 2.0);
  REQUIRE(g.polynomial() != nullptr);
  CHECK(g.polynomial()->degree() == 3);
  CHECK(g.polynomial()->piece_count() == 4);
}

TEST_CASE("support test is exact") {
  for (int n = 1; n <= 7; ++n) {
    const Window g = Window::bspline(n);
    const double h = 0.5 * n;
    CHECK(g(std::nextafter(h, 10.0)) == 0.0);
    CHECK(g(-std::nextafter(h, 10.0)) == 0.0);
  }
}

TEST_CASE("piecewise polynomial uses the right piece at breakpoints") {
  PiecewisePolynomial p({0.0, 1.0, 2.0}, {{1.0}, {5.0}});
  CHECK(p(0.0) == 1.0);
  CHECK(p(1.0) == 5.0);
  CHECK(p(2.0) == 5.0);
  CHECK(p(2.5) == 0.0);
  CHECK(p(-0.5) == 0.0);
  CHECK(p.integral() == 6.0);
}

TEST_CASE("second difference") {
  const Window g2 = Window::bspline(2);
  CHECK(second_difference(g2, 0.5, -0.5) == 0.5);
  CHECK(second_difference(g2, 2.0 / 3.0, 0.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  for (int n = 1; n <= 5; ++n) CHECK(second_difference(Window::bspline(n), 1.0, -10.0) == 0.0);
}

TEST_CASE("membership examples") {
  CHECK(check_membership(Window::bspline(2), 0.9, 1024, 1e-12).pass());
  CHECK(check_membership(Window::bspline(4), 1.5, 2048, 1e-12).pass());

  const Window step = Window::tabulated({-0.5, 0.0}, {1.0, 1.0}, 1.0);
  const MembershipReport r = check_membership(step, 0.3, 1024, 1e-12);
  CHECK_FALSE(r.a2_pass);
  CHECK_FALSE(r.pass());
  CHECK(r.worst_violation > 0.0);
  CHECK_FALSE(r.witness_points.empty());

  CHECK_FALSE(check_membership(Window::bspline(1), 0.5).a2_pass);

  CHECK_THROWS_AS(check_membership(Window::bspline(2), 2.0), DomainError);
  CHECK_THROWS_AS(check_membership(Window::bspline(2), 0.0), DomainError);
  CHECK_THROWS_AS(check_membership(Window::bspline(2), -1.0), DomainError);
}

TEST_CASE("a window that is not convex enough fails A3") {
  // sqrt(1 - |x|) is even and increasing on the left half but concave
  const Window bump = Window::from_function([](double x) { return std::sqrt(1.0 - std::fabs(x)); }, 2.0);
  const MembershipReport r = check_membership(bump, 0.6, 2048, 1e-12);
  CHECK(r.a1_pass);
  CHECK(r.a2_pass);
  CHECK_FALSE(r.a3_pass);
}

TEST_CASE("tabulated windows interpolate linearly and mirror") {
  const Window t = Window::tabulated({-1.0, -0.5, 0.0}, {0.0, 0.25, 1.0}, 2.0);
  CHECK(t.kind() == WindowKind::Tabulated);
  CHECK(t(-0.75) == doctest::Approx(0.125));
  CHECK(t(0.75) == t(-0.75));
  CHECK(t(-0.25) == doctest::Approx(0.625));
  CHECK(t(1.5) == 0.0);

  const auto dir = std::filesystem::temp_directory_path() / "splineframes_test_windows";
  std::filesystem::create_directories(dir);
  const auto path = dir / "tri.csv";
  {
    std::ofstream f(path);
    f << "# triangle\nx,value\n-1,0\n-0.5,0.5\n0,1\n";
  }
  const Window loaded = load_tabulated_window(path, 2.0);
  const Window g2 = Window::bspline(2);
  for (double x : {-0.9, -0.3, 0.0, 0.4, 0.99}) CHECK(loaded(x) == doctest::Approx(g2(x)));
  CHECK(check_membership(loaded, 0.9, 1024).a2_pass);
  CHECK_THROWS_AS(load_tabulated_window(dir / "missing.csv", 2.0), DomainError);
}

TEST_CASE("number parsing") {
  CHECK(parse_real("35/36") == 35.0 / 36.0);
  CHECK(parse_real("0.9") == 0.9);
  CHECK(parse_real("-3e-4") == -3e-4);
  CHECK(parse_real(" 8/9 ") == 8.0 / 9.0);
  CHECK_THROWS_AS(parse_real(""), DomainError);
  CHECK_THROWS_AS(parse_real("abc"), DomainError);
  CHECK_THROWS_AS(parse_real("1/0"), DomainError);
  CHECK_THROWS_AS(parse_real("1.5x"), DomainError);
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456.789, -2.5})
    CHECK(parse_real(format_double(v)) == v);
}

// properties

TEST_CASE("property: exact evenness") {
  oracle::Rng rng(0x5eed0001);
  for (int n = 1; n <= 8; ++n) {
    const Window g = Window::bspline(n);
    for (int i = 0; i < 2000; ++i) {
      const double x = rng.uniform(-0.6 * n, 0.6 * n);
      REQUIRE(g(x) == g(-x));
    }
  }
}

TEST_CASE("property: unit mass") {
  static constexpr double node[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
  static constexpr double weight[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  for (int n = 1; n <= 8; ++n) {
    const Window g = Window::bspline(n);
    CHECK(g.polynomial()->integral() == doctest::Approx(1.0).epsilon(1e-12));
    // composite Gauss over each piece, 64 panels per piece
    double total = 0.0;
    const int panels = 64;
    for (int j = 0; j < n; ++j)
      for (int q = 0; q < panels; ++q) {
        const double lo = -0.5 * n + j + static_cast<double>(q) / panels;
        const double mid = lo + 0.5 / panels;
        for (int k = 0; k < 3; ++k) total += (0.5 / panels) * weight[k] * g(mid + node[k] * 0.5 / panels);
      }
    CHECK(std::fabs(total - 1.0) <= 1e-10);
  }
}

TEST_CASE("property: strictly positive on the open support") {
  for (int n = 1; n <= 8; ++n) {
    const Window g = Window::bspline(n);
    for (int i = 1; i < 10000; ++i) {
      const double x = -0.5 * n + n * static_cast<double>(i) / 10000.0;
      REQUIRE(g(x) > 0.0);
    }
  }
}

TEST_CASE("property: agreement with convolution quadrature") {
  oracle::Rng rng(0x5eed0002);
  for (int n = 1; n <= 6; ++n) {
    const Window g = Window::bspline(n);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double x = rng.uniform(-0.55 * n, 0.55 * n);
      worst = std::max(worst, std::fabs(g(x) - oracle::bspline_quadrature(n, x)));
      worst = std::max(worst, std::fabs(g(x) - oracle::bspline_truncated_power(n, x)));
    }
    CAPTURE(n);
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("property: nonnegative second difference on the A3 set") {
  for (int n = 2; n <= 5; ++n) {
    const Window g = Window::bspline(n);
    for (int i = 0; i < 50; ++i) {
      const double a = n * (i + 0.5) / 50.0;
      const double right = a < n / 3.0 ? -n / 4.0 + 0.75 * a : 0.0;
      for (int j = 0; j <= 400; ++j) {
        const double x = -0.5 * n + (right + 0.5 * n) * j / 400.0;
        REQUIRE(second_difference(g, a, x) >= -1e-12);
      }
      REQUIRE(second_difference(g, a, -n / 4.0 + 0.75 * a) >= -1e-12);
    }
  }
}

TEST_CASE("property: membership across a-grid") {
  for (int n = 2; n <= 5; ++n)
    for (int i = 0; i < 20; ++i) {
      const double a = n * (i + 0.5) / 20.0;
      CAPTURE(n);
      CAPTURE(a);
      CHECK(check_membership(Window::bspline(n), a).pass());
    }
}
