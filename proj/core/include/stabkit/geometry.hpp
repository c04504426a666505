#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stabkit {

/// Exact planar primitives over integer coordinates. Everything here is a
/// pure function on immutable values and safe to call concurrently.

/// Coordinates are capped so that every 2x2 and 3x3 determinant formed
/// anywhere in the toolkit fits comfortably in signed 128-bit arithmetic.
inline constexpr std::int64_t kCoordinateBound = std::int64_t{1} << 26;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  Point() = default;
  /// Throws std::invalid_argument when |x| or |y| exceeds kCoordinateBound.
  Point(std::int64_t px, std::int64_t py);

  friend bool operator==(const Point&, const Point&) = default;
};

enum class Orientation : int {
  kClockwise = -1,
  kCollinear = 0,
  kCounterClockwise = 1,
};

/// Sign of the cross product (q - p) x (r - p), computed exactly.
Orientation orientation(const Point& p, const Point& q, const Point& r);

/// True iff the open segments ab and cd meet in exactly one point interior
/// to both. Shared endpoints and touching configurations do not count.
bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                             const Point& d);

/// An ordered sequence of points; a point's label is its index.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {}

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  void push_back(const Point& p) { points_.push_back(p); }

  /// Returns the set with the points at `removed` deleted, remaining labels
  /// shifted down to stay contiguous. Indices in `removed` may repeat or be
  /// unsorted.
  PointSet without(const std::vector<int>& removed) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point> points_;
};

/// True iff all points are pairwise distinct and no three are collinear.
bool is_general_position(const PointSet& ps);

/// Labeled order-type equality: every ordered index triple has the same
/// orientation in both sets. Throws std::invalid_argument on size mismatch.
bool same_order_type(const PointSet& a, const PointSet& b);

/// Rejection-samples an n-point set in general position with coordinates in
/// [-coord_range, coord_range]. Deterministic for a fixed seed.
PointSet random_general_position(int n, std::uint64_t seed,
                                 std::int64_t coord_range = 10000);

}  // namespace stabkit
