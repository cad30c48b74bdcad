#pragma once

#include <string>
#include <vector>

#include "egpkit/generators.hpp"
#include "egpkit/preorder.hpp"
#include "egpkit/rational.hpp"
#include "egpkit/submod_fn.hpp"

namespace egp {

// Polynomial in k with rational coefficients, lowest degree first, no
// trailing zeros (the zero polynomial has no coefficients).
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coeffs);
  static RationalPoly constant(const Rational& c);
  static RationalPoly k();  // the variable
  static RationalPoly binomial(int j);  // C(k, j)
  // The unique polynomial of degree < xs.size() through the points.
  static RationalPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;
  RationalPoly compose(const RationalPoly& inner) const;
  // c_j with p = Σ_j c_j C(k, j).
  std::vector<Rational> binomial_basis() const;
  std::string to_string() const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Number of maps h from the bubbles of p to {1..k} with h(B) > h(B') whenever B < B'.
long count_strict_maps(const Preorder& p, long k);
// Number of maps h from the bubbles of p to {0..k} with h(B) ≥ h(B') whenever B ≤ B'.
long count_weak_maps(const Preorder& p, long k);

RationalPoly ehr_star(const Preorder& p);
RationalPoly ehr(const Preorder& p);

// Σ over minPre(z) of ehr_star.
RationalPoly chi(const SubmodFn& z);

// 1 iff Π(w) is an affine space: w modular with totally disconnected pre(w).
bool basic_character(const SubmodFn& w);
// Sum over ordered decompositions I = S_1 ⊔ ... ⊔ S_n, empty blocks allowed,
// of the product of basic characters of the successive minors. Finite z only
// unless extended is set.
Rational chi_character(const SubmodFn& z, int n, bool extended = false);

// Number of y : I → {1..n} whose total weight is maximized by exactly one basis.
long bjr_count(const Matroid& m, int n);

}  // namespace egp
