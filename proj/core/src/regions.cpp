#include "splineframes/regions.hpp"

#include <algorithm>
#include <cmath>

#include "splineframes/errors.hpp"
#include "splineframes/io.hpp"

namespace splineframes {

LatticeParams LatticeParams::make(double N, double a, double b) {
  for (double v : {N, a, b})
    if (!std::isfinite(v) || !(v > 0.0))
      throw DomainError("lattice parameters N, a, b must be finite and positive");
  return {N, a, b};
}

std::string RegionLabel::to_string() const {
  switch (tag) {
    case RegionTag::NotFrame:
      return reason == NotFrameReason::DensityViolation
                 ? "NotFrame(DensityViolation)"
                 : "NotFrame(ShiftTooLarge)";
    case RegionTag::T:
      return "T(" + std::to_string(m) + ")";
    case RegionTag::LargeShift:
      return "LargeShift";
    case RegionTag::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

std::optional<BInterval> tm_bounds(double N, double a, int m) {
  if (m < 1 || !(a > 0.0) || !(a < 0.5 * N)) return std::nullopt;
  const double cap = 2.0 / N;
  double lo = 0.0;
  double hi = 2.0 / (N + a);
  if (m >= 2) {
    const double md = m;
    if (!(a > N * (md - 2.0) / (2.0 * md - 3.0))) return std::nullopt;
    lo = 2.0 * (md - 1.0) / (N + (2.0 * md - 3.0) * a);
    hi = 2.0 * md / (N + (2.0 * md - 1.0) * a);
  }
  BInterval iv{lo, hi, true};
  if (!(hi < cap)) iv = {lo, cap, false};
  if (!(iv.lo < iv.hi)) return std::nullopt;
  return iv;
}

bool in_tm(const LatticeParams& p, int m) {
  auto iv = tm_bounds(p.N, p.a, m);
  return iv && iv->contains(p.b);
}

RegionLabel classify(const LatticeParams& p) {
  if (p.a * p.b >= 1.0)
    return RegionLabel::not_frame(NotFrameReason::DensityViolation);
  if (p.a >= p.N) return RegionLabel::not_frame(NotFrameReason::ShiftTooLarge);
  if (p.a >= 0.5 * p.N) return RegionLabel::large_shift();
  if (auto m = m_index(p)) return RegionLabel::t(*m);
  return RegionLabel::unknown();
}

std::optional<int> m_index(const LatticeParams& p) {
  if (!(p.a < 0.5 * p.N) || !(p.b < 2.0 / p.N) || !(p.a * p.b < 1.0))
    return std::nullopt;
  const double estimate = std::ceil(p.b * (p.N - p.a) / (2.0 * (1.0 - p.a * p.b)));
  // unreachable for finite inputs in range; keeps the int cast defined
  if (!(estimate < 1e9)) return std::nullopt;
  const int centre = std::max(1, static_cast<int>(estimate));
  for (int m : {centre, centre - 1, centre + 1})
    if (m >= 1 && in_tm(p, m)) return m;
  return std::nullopt;
}

const RegionLabel& RegionMap::cell_containing(double a, double b) const {
  const auto na = a_axis.size();
  const auto nb = b_axis.size();
  if (!(a > 0.0 && a <= a_max && b > 0.0 && b <= b_max))
    throw DomainError("point outside the region map");
  const auto ia = std::min(na - 1, static_cast<std::size_t>(a / a_max * na));
  const auto ib = std::min(nb - 1, static_cast<std::size_t>(b / b_max * nb));
  return at(ia, ib);
}

RegionMap region_map(double N, double a_max, double b_max, int res) {
  if (res < 2) throw DomainError("region map resolution must be >= 2");
  for (double v : {N, a_max, b_max})
    if (!std::isfinite(v) || !(v > 0.0))
      throw DomainError("region map extents must be finite and positive");

  RegionMap map;
  map.N = N;
  map.a_max = a_max;
  map.b_max = b_max;
  const auto n = static_cast<std::size_t>(res);
  map.a_axis.resize(n);
  map.b_axis.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    map.a_axis[i] = (static_cast<double>(i) + 0.5) * a_max / res;
    map.b_axis[i] = (static_cast<double>(i) + 0.5) * b_max / res;
  }
  map.labels.reserve(n * n);
  for (double b : map.b_axis)
    for (double a : map.a_axis) map.labels.push_back(classify({N, a, b}));
  return map;
}

void write_region_csv(std::ostream& os, const RegionMap& map) {
  os << "a,b,label,m\n";
  for (std::size_t ib = 0; ib < map.b_axis.size(); ++ib)
    for (std::size_t ia = 0; ia < map.a_axis.size(); ++ia) {
      const auto& label = map.at(ia, ib);
      os << format_double(map.a_axis[ia]) << ',' << format_double(map.b_axis[ib])
         << ',' << label.to_string() << ',';
      if (label.tag == RegionTag::T) os << label.m;
      os << '\n';
    }
}

namespace {

const char* colour_of(const RegionLabel& label) {
  switch (label.tag) {
    case RegionTag::NotFrame:
      return "red";
    case RegionTag::T:
      return label.m == 1 ? "green" : label.m == 2 ? "magenta" : "cyan";
    case RegionTag::LargeShift:
      return "yellow";
    case RegionTag::Unknown:
      return "white";
  }
  return "white";
}

}  // namespace

void write_region_svg(std::ostream& os, const RegionMap& map) {
  const auto na = map.a_axis.size();
  const auto nb = map.b_axis.size();
  const std::size_t cell = std::max<std::size_t>(1, 600 / std::max(na, nb));
  const std::size_t width = na * cell;
  const std::size_t height = nb * cell;
  const std::size_t legend_w = 230;

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width + legend_w
     << "\" height=\"" << std::max<std::size_t>(height, 160) << "\">\n";
  os << "<g shape-rendering=\"crispEdges\">\n";
  for (std::size_t ib = 0; ib < nb; ++ib)
    for (std::size_t ia = 0; ia < na; ++ia)
      os << "<rect x=\"" << ia * cell << "\" y=\"" << height - (ib + 1) * cell
         << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
         << colour_of(map.at(ia, ib)) << "\"/>\n";
  os << "</g>\n";

  struct Entry {
    const char* colour;
    const char* text;
  };
  static constexpr Entry legend[] = {
      {"red", "NotFrame"},       {"green", "T(1)"},
      {"magenta", "T(2)"},       {"cyan", "T(m), m >= 3"},
      {"yellow", "LargeShift"},  {"white", "Unknown"},
  };
  std::size_t y = 10;
  for (const auto& e : legend) {
    os << "<rect x=\"" << width + 10 << "\" y=\"" << y
       << "\" width=\"16\" height=\"16\" fill=\"" << e.colour
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << width + 32 << "\" y=\"" << y + 13
       << "\" font-family=\"sans-serif\" font-size=\"13\">" << e.text << "</text>\n";
    y += 22;
  }
  os << "<text x=\"" << width + 10 << "\" y=\"" << y + 13
     << "\" font-family=\"sans-serif\" font-size=\"13\">N = "
     << format_double(map.N) << ", a in (0, " << format_double(map.a_max)
     << "], b in (0, " << format_double(map.b_max) << "]</text>\n";
  os << "</svg>\n";
}

}  // namespace splineframes
