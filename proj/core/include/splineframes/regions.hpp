#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace splineframes {

/// Lattice a Z x b Z together with the window's support length N.
struct LatticeParams {
  double N;  // support length of the window
  double a;  // time shift
  double b;  // frequency shift

  /// Throws DomainError unless all three are finite and strictly positive.
  static LatticeParams make(double N, double a, double b);

  double inv_b() const { return 1.0 / b; }
  bool operator==(const LatticeParams&) const = default;
};

enum class RegionTag { NotFrame, T, LargeShift, Unknown };
enum class NotFrameReason { DensityViolation, ShiftTooLarge };

struct RegionLabel {
  RegionTag tag = RegionTag::Unknown;
  NotFrameReason reason = NotFrameReason::DensityViolation;  // NotFrame only
  int m = 0;                                                 // T only

  static RegionLabel not_frame(NotFrameReason r) {
    return {RegionTag::NotFrame, r, 0};
  }
  static RegionLabel t(int m) {
    return {RegionTag::T, NotFrameReason::DensityViolation, m};
  }
  static RegionLabel large_shift() { return {RegionTag::LargeShift}; }
  static RegionLabel unknown() { return {RegionTag::Unknown}; }

  /// "NotFrame(DensityViolation)", "T(3)", "LargeShift", "Unknown", ...
  std::string to_string() const;

  bool operator==(const RegionLabel& o) const {
    if (tag != o.tag) return false;
    if (tag == RegionTag::NotFrame) return reason == o.reason;
    if (tag == RegionTag::T) return m == o.m;
    return true;
  }
};

/// b-interval of T_m at fixed a: lower end open, upper end closed unless
/// the cap b < 2/N is the binding constraint.
struct BInterval {
  double lo;
  double hi;
  bool hi_inclusive;

  bool contains(double b) const {
    return b > lo && (hi_inclusive ? b <= hi : b < hi);
  }
};

/// b-range of T_m for the given (N, a), or nullopt when a is outside the
/// a-range of T_m (0 < a < N/2 for m = 1, N(m-2)/(2m-3) < a < N/2 else).
std::optional<BInterval> tm_bounds(double N, double a, int m);

/// Literal membership test (a, b) in T_m.
bool in_tm(const LatticeParams& p, int m);

/// Precedence: ab >= 1, then a >= N, then N/2 <= a < N, then T_m.
RegionLabel classify(const LatticeParams& p);

/// The unique m with (a, b) in T_m, if any.
///
/// The upper endpoints 2m / (N + (2m-1)a) increase in m, so the smallest m
/// with b <= 2m / (N + (2m-1)a) is ceil(b(N - a) / (2(1 - ab))). That
/// candidate and its two neighbours are confirmed with in_tm.
std::optional<int> m_index(const LatticeParams& p);

/// Labels on the cell centres of a res x res grid over (0, a_max] x (0, b_max].
struct RegionMap {
  double N = 0.0;
  double a_max = 0.0;
  double b_max = 0.0;
  std::vector<double> a_axis;  // cell centres
  std::vector<double> b_axis;  // cell centres
  std::vector<RegionLabel> labels;  // labels[ib * a_axis.size() + ia]

  const RegionLabel& at(std::size_t ia, std::size_t ib) const {
    return labels[ib * a_axis.size() + ia];
  }
  /// Label of the cell containing (a, b). Throws DomainError when outside.
  const RegionLabel& cell_containing(double a, double b) const;
};

RegionMap region_map(double N, double a_max, double b_max, int res);

/// Columns a,b,label,m; m is empty unless the label is T(m).
void write_region_csv(std::ostream& os, const RegionMap& map);

/// Heat map: NotFrame red, T(1) green, T(2) magenta, T(m>=3) cyan,
/// LargeShift yellow, Unknown white. a runs right, b runs up.
void write_region_svg(std::ostream& os, const RegionMap& map);

}  // namespace splineframes
