#include "egpkit/geometry.hpp"

#include <Eigen/LU>
#include <algorithm>

#include "egpkit/errors.hpp"

namespace egp {

namespace {

void require_size(const SubmodFn& z, Eigen::Index size, const char* what) {
  if (size != z.size()) throw ValidationError(std::string(what) + ": dimension does not match the ground set");
}

}  // namespace

Point make_point(std::initializer_list<Rational> coords) {
  Point x(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) x(i++) = c;
  return x;
}

bool contains(const SubmodFn& z, const Point& x) {
  require_size(z, x.size(), "contains");
  if (coordinate_sum(x, z.full()) != z(z.full()).value()) return false;
  for (Mask a = 1; a < z.full(); ++a)
    if (z(a).is_finite() && coordinate_sum(x, a) > z(a).value()) return false;
  return true;
}

Point alin_point(const SubmodFn& z, const Preorder& l) {
  if (l.ground() != z.ground()) throw ValidationError("alin_point: ground sets differ");
  if (!l.is_total()) throw PreconditionError("alin_point: preorder is not total");
  if (!is_compatible(l, z)) throw PreconditionError("alin_point: preorder is not compatible");
  Partition levels = bubbles(l);
  std::sort(levels.begin(), levels.end(),
            [&](Mask a, Mask b) { return popcount(l.down_closure(a)) < popcount(l.down_closure(b)); });
  Point x = Point::Zero(z.size());
  Mask d = 0;
  for (Mask level : levels) {
    Rational mass = z(d | level).value() - z(d).value();
    Rational share = mass / popcount(level);
    for (int i = 0; i < z.size(); ++i)
      if (level >> i & 1) x(i) = share;
    d |= level;
  }
  return x;
}

bool cone_contains(const Preorder& p, const Direction& y) {
  if (y.size() != p.size()) throw ValidationError("cone_contains: dimension does not match the ground set");
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.leq(i, j) && y(i) < y(j)) return false;
  return true;
}

Preorder level_preorder(const GroundSet& g, const Direction& y) {
  if (y.size() != g.size()) throw ValidationError("direction: dimension does not match the ground set");
  std::vector<Mask> below(g.size(), 0);
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j)
      if (y(i) >= y(j)) below[j] |= Mask{1} << i;
  return Preorder::from_below(g, std::move(below));
}

Face direction_to_face(const SubmodFn& z, const Direction& y) {
  Preorder t = level_preorder(z.ground(), y);
  if (!is_compatible(t, z)) throw UnboundedDirection("direction is unbounded on the polyhedron");
  Preorder p = closure(z, t);
  int dim = z.size() - static_cast<int>(bubbles(p).size());
  SubmodFn f = face_fn(z, p);
  return {std::move(p), dim, std::move(f)};
}

DownSetFamily equality_set(const SubmodFn& z, const std::vector<Point>& points) {
  for (const auto& x : points)
    if (!contains(z, x)) throw PreconditionError("equality_set: point outside the polyhedron");
  DownSetFamily t{z.ground(), {}};
  for (Mask a = 0; a <= z.full(); ++a) {
    if (z(a).is_infinite()) continue;
    bool tight = std::all_of(points.begin(), points.end(),
                             [&](const Point& x) { return coordinate_sum(x, a) == z(a).value(); });
    if (tight) t.sets.push_back(a);
  }
  return t;
}

int alin_dimension(const Preorder& p) {
  const auto sets = downsets(p).sets;
  MatrixX<Rational> m = MatrixX<Rational>::Zero(static_cast<Eigen::Index>(sets.size()), p.size());
  for (std::size_t r = 0; r < sets.size(); ++r)
    for (int i = 0; i < p.size(); ++i)
      if (sets[r] >> i & 1) m(static_cast<Eigen::Index>(r), i) = 1;
  if (m.rows() == 0 || m.cols() == 0) return p.size();
  return p.size() - static_cast<int>(m.fullPivLu().rank());
}

}  // namespace egp
