#include "stabkit/geometry.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace stabkit {

namespace {

using Int128 = __int128;

Int128 cross(const Point& p, const Point& q, const Point& r) {
  const Int128 qpx = q.x - p.x;
  const Int128 qpy = q.y - p.y;
  const Int128 rpx = r.x - p.x;
  const Int128 rpy = r.y - p.y;
  return qpx * rpy - qpy * rpx;
}

}  // namespace

Point::Point(std::int64_t px, std::int64_t py) : x(px), y(py) {
  if (px < -kCoordinateBound || px > kCoordinateBound ||
      py < -kCoordinateBound || py > kCoordinateBound) {
    throw std::invalid_argument("Point coordinate exceeds 2^26 bound");
  }
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  const Int128 d = cross(p, q, r);
  if (d > 0) return Orientation::kCounterClockwise;
  if (d < 0) return Orientation::kClockwise;
  return Orientation::kCollinear;
}

bool segments_properly_cross(const Point& a, const Point& b, const Point& c,
                             const Point& d) {
  const Orientation o1 = orientation(a, b, c);
  const Orientation o2 = orientation(a, b, d);
  const Orientation o3 = orientation(c, d, a);
  const Orientation o4 = orientation(c, d, b);
  // Strict sign tests only: any collinearity means the crossing is not
  // proper (endpoint contact or overlap).
  return static_cast<int>(o1) * static_cast<int>(o2) < 0 &&
         static_cast<int>(o3) * static_cast<int>(o4) < 0;
}

PointSet PointSet::without(const std::vector<int>& removed) const {
  std::vector<bool> drop(points_.size(), false);
  for (int idx : removed) {
    if (idx < 0 || idx >= size()) {
      throw std::invalid_argument("PointSet::without: index out of range");
    }
    drop[idx] = true;
  }
  std::vector<Point> kept;
  kept.reserve(points_.size());
  for (int i = 0; i < size(); ++i) {
    if (!drop[i]) kept.push_back(points_[i]);
  }
  return PointSet(std::move(kept));
}

bool is_general_position(const PointSet& ps) {
  const int n = ps.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (ps[i] == ps[j]) return false;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (orientation(ps[i], ps[j], ps[k]) == Orientation::kCollinear) {
          return false;
        }
      }
    }
  }
  return true;
}

bool same_order_type(const PointSet& a, const PointSet& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("same_order_type: size mismatch");
  }
  const int n = a.size();
  // Checking ascending triples suffices: the orientation of any permutation
  // of a triple is determined by the sorted triple's sign.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (orientation(a[i], a[j], a[k]) != orientation(b[i], b[j], b[k])) {
          return false;
        }
      }
    }
  }
  return true;
}

PointSet random_general_position(int n, std::uint64_t seed,
                                 std::int64_t coord_range) {
  if (n < 0) throw std::invalid_argument("random_general_position: n < 0");
  if (coord_range < 1 || coord_range > kCoordinateBound) {
    throw std::invalid_argument("random_general_position: bad range");
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t span = static_cast<std::uint64_t>(2 * coord_range + 1);
  auto draw = [&]() {
    return static_cast<std::int64_t>(rng() % span) - coord_range;
  };
  PointSet ps;
  while (ps.size() < n) {
    Point candidate(draw(), draw());
    bool ok = true;
    for (int i = 0; ok && i < ps.size(); ++i) {
      if (ps[i] == candidate) ok = false;
    }
    for (int i = 0; ok && i < ps.size(); ++i) {
      for (int j = i + 1; ok && j < ps.size(); ++j) {
        if (orientation(ps[i], ps[j], candidate) == Orientation::kCollinear) {
          ok = false;
        }
      }
    }
    if (ok) ps.push_back(candidate);
  }
  return ps;
}

}  // namespace stabkit
