#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <vector>

#include "egpkit/conform.hpp"
#include "egpkit/rational.hpp"

namespace egp {

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Coordinates indexed like the ground set.
using Point = VectorX<Rational>;
using Direction = VectorX<Rational>;

Point make_point(std::initializer_list<Rational> coords);

// x_A = Σ_{i∈A} x_i.
template <typename Derived>
typename Derived::Scalar coordinate_sum(const Eigen::MatrixBase<Derived>& x, Mask a) {
  typename Derived::Scalar s(0);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (a >> i & 1) s += x(i);
  return s;
}

// Membership in Π(z): x_I = z(I) and x_A ≤ z(A) wherever z(A) is finite.
bool contains(const SubmodFn& z, const Point& x);

// The point of Alin(L) spreading each bubble's mass uniformly.
Point alin_point(const SubmodFn& z, const Preorder& l);

// y ∈ k(P): y_i ≥ y_j whenever i ≤_P j.
bool cone_contains(const Preorder& p, const Direction& y);

// T_y: i ≤ j iff y_i ≥ y_j.
Preorder level_preorder(const GroundSet& g, const Direction& y);

// The face where y attains its maximum; UnboundedDirection if there is none.
Face direction_to_face(const SubmodFn& z, const Direction& y);

// All A with z(A) finite and x_A = z(A) at every point.
DownSetFamily equality_set(const SubmodFn& z, const std::vector<Point>& points);

// |I| − rank of {x_D = z(D) : D down-set of P}, computed by exact elimination.
int alin_dimension(const Preorder& p);

}  // namespace egp
