#include <algorithm>
#include <cmath>

#include "cssplit/error.hpp"
#include "cssplit/linkmodel.hpp"

namespace cssplit {

namespace {

constexpr double kGeomEps = 1e-9;

double cross(Point2 u, Point2 v) { return u.x * v.y - u.y * v.x; }
Point2 sub(Point2 u, Point2 v) { return {u.x - v.x, u.y - v.y}; }

// Sign of the transverse crossing of segments p0p1 and q0q1, or 0 if they
// are disjoint. Throws when the configuration is not generic.
int segment_crossing(Point2 p0, Point2 p1, Point2 q0, Point2 q1) {
  const Point2 r = sub(p1, p0);
  const Point2 s = sub(q1, q0);
  const Point2 qp = sub(q0, p0);
  const double denom = cross(r, s);
  const double scale = std::hypot(r.x, r.y) * std::hypot(s.x, s.y);
  if (std::abs(denom) <= kGeomEps * scale) {
    const double offset = cross(qp, r);
    if (std::abs(offset) > kGeomEps * std::hypot(r.x, r.y)) {
      return 0; // parallel, distinct lines
    }
    // collinear: any overlap is degenerate
    const double rr = r.x * r.x + r.y * r.y;
    const double t0 = (qp.x * r.x + qp.y * r.y) / rr;
    const double t1 = t0 + (s.x * r.x + s.y * r.y) / rr;
    if (std::max(t0, t1) >= -kGeomEps && std::min(t0, t1) <= 1.0 + kGeomEps) {
      throw DomainError("loops share a segment; perturb basepoint");
    }
    return 0;
  }
  const double u = cross(qp, s) / denom;
  const double v = cross(qp, r) / denom;
  if (u < -kGeomEps || u > 1.0 + kGeomEps || v < -kGeomEps ||
      v > 1.0 + kGeomEps) {
    return 0;
  }
  if (u < kGeomEps || u > 1.0 - kGeomEps || v < kGeomEps ||
      v > 1.0 - kGeomEps) {
    throw DomainError("loops meet at a vertex; perturb basepoint");
  }
  return denom > 0 ? 1 : -1;
}

} // namespace

TorusLoop::TorusLoop(std::array<int, 2> winding, std::vector<Point2> vertices)
    : winding_(winding), vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) {
    throw ParseError("torus loop needs at least two vertices");
  }
  const Point2 first = vertices_.front();
  const Point2 last = vertices_.back();
  if (std::abs(last.x - first.x - winding_[0]) > 1e-12 ||
      std::abs(last.y - first.y - winding_[1]) > 1e-12) {
    throw ParseError("torus loop endpoints must differ by the winding");
  }
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i) {
    const Point2 d = sub(vertices_[i + 1], vertices_[i]);
    if (std::hypot(d.x, d.y) < 1e-12) {
      throw ParseError("torus loop has a degenerate segment");
    }
  }
}

TorusLoop TorusLoop::straight(int p, int q, Point2 basepoint) {
  return TorusLoop({p, q}, {basepoint, {basepoint.x + p, basepoint.y + q}});
}

int pl_crossing_count(const TorusLoop& a, const TorusLoop& b) {
  const auto& va = a.vertices();
  const auto& vb = b.vertices();
  int total = 0;
  for (std::size_t i = 0; i + 1 < va.size(); ++i) {
    const Point2 p0 = va[i];
    const Point2 p1 = va[i + 1];
    for (std::size_t j = 0; j + 1 < vb.size(); ++j) {
      const Point2 q0 = vb[j];
      const Point2 q1 = vb[j + 1];
      // translates of segment j whose bounding box can meet segment i
      const auto mx0 = static_cast<int>(
          std::floor(std::min(p0.x, p1.x) - std::max(q0.x, q1.x))) - 1;
      const auto mx1 = static_cast<int>(
          std::ceil(std::max(p0.x, p1.x) - std::min(q0.x, q1.x))) + 1;
      const auto my0 = static_cast<int>(
          std::floor(std::min(p0.y, p1.y) - std::max(q0.y, q1.y))) - 1;
      const auto my1 = static_cast<int>(
          std::ceil(std::max(p0.y, p1.y) - std::min(q0.y, q1.y))) + 1;
      for (int m = mx0; m <= mx1; ++m) {
        for (int n = my0; n <= my1; ++n) {
          total += segment_crossing(p0, p1, {q0.x + m, q0.y + n},
                                    {q1.x + m, q1.y + n});
        }
      }
    }
  }
  return total;
}

int intersection_number(const TorusLoop& a, const TorusLoop& b) {
  const auto [pa, qa] = a.winding();
  const auto [pb, qb] = b.winding();
  const int algebraic = pa * qb - qa * pb;
  const int counted = pl_crossing_count(a, b);
  if (algebraic != counted) {
    throw DomainError("segment crossing count " + std::to_string(counted) +
                      " disagrees with homology pairing " +
                      std::to_string(algebraic) + "; perturb basepoint");
  }
  return algebraic;
}

} // namespace cssplit
