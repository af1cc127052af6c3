#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace finmodal {

/// A set of points 0..63, one bit per point.
using PointSet = std::uint64_t;

constexpr int kMaxPoints = 64;

constexpr PointSet point_bit(int i) { return PointSet{1} << i; }

constexpr PointSet full_set(int n) {
  return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

inline int set_size(PointSet s) { return std::popcount(s); }

/// Index of the smallest point in s; undefined for the empty set.
inline int first_point(PointSet s) { return std::countr_zero(s); }

/// Maps variable names to truth sets. Shared by relational and
/// topological models.
using Valuation = std::map<std::string, PointSet>;

/// Thrown when an operation would exceed a size or bit-budget cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace finmodal
