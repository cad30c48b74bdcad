#include "egpkit/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "egpkit/conform.hpp"
#include "egpkit/errors.hpp"
#include "egpkit/hopf.hpp"
#include "egpkit/limits.hpp"

namespace egp {

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::k() { return RationalPoly({0, 1}); }

RationalPoly RationalPoly::binomial(int j) {
  RationalPoly p = constant(1);
  for (int i = 0; i < j; ++i) p = p * RationalPoly({Rational(-i, i + 1), Rational(1, i + 1)});
  return p;
}

RationalPoly RationalPoly::interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw ValidationError("interpolate: size mismatch");
  RationalPoly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    RationalPoly basis = constant(ys[i]);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      if (xs[i] == xs[j]) throw ValidationError("interpolate: repeated abscissa");
      Rational inv = 1 / (xs[i] - xs[j]);
      basis = basis * RationalPoly({-xs[j] * inv, inv});
    }
    out = out + basis;
  }
  return out;
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::compose(const RationalPoly& inner) const {
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

std::vector<Rational> RationalPoly::binomial_basis() const {
  // Newton forward differences at 0: c_j = Δ^j p(0).
  std::vector<Rational> values;
  for (int x = 0; x <= degree(); ++x) values.push_back((*this)(x));
  std::vector<Rational> out;
  while (!values.empty()) {
    out.push_back(values.front());
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return out;
}

std::string RationalPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    const Rational& c = coeffs_[e];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    bool integral = denominator(mag) == 1;
    if (e == 0) os << mag.str();
    else if (mag != 1) os << (integral ? mag.str() : "(" + mag.str() + ")");
    if (e >= 1) os << 'k';
    if (e >= 2) os << '^' << e;
  }
  return os.str();
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  return a + b * RationalPoly::constant(-1);
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(c));
}

namespace {

// Bubbles of p listed so that every bubble comes after the bubbles above it,
// with the indices of earlier bubbles strictly above / weakly above each one.
struct BubbleOrder {
  std::vector<std::vector<int>> above;  // for bubble t: earlier bubbles u with t < u
};

BubbleOrder bubble_order(const Preorder& p) {
  Partition bs = bubbles(p);
  auto rep = [&](Mask b) { return std::countr_zero(b); };
  // More elements above means lower in the order; place those last.
  std::stable_sort(bs.begin(), bs.end(), [&](Mask x, Mask y) {
    return popcount(p.above(rep(x))) < popcount(p.above(rep(y)));
  });
  BubbleOrder o;
  for (std::size_t t = 0; t < bs.size(); ++t) {
    o.above.emplace_back();
    for (std::size_t u = 0; u < t; ++u)
      if (p.less(rep(bs[t]), rep(bs[u]))) o.above[t].push_back(static_cast<int>(u));
  }
  return o;
}

long count_maps(const Preorder& p, long lo, long hi, bool strict) {
  BubbleOrder o = bubble_order(p);
  const std::size_t d = o.above.size();
  std::vector<long> h(d);
  std::function<long(std::size_t)> go = [&](std::size_t t) -> long {
    if (t == d) return 1;
    // A bubble's value is bounded above by the values of the bubbles above it.
    long top = hi;
    for (int u : o.above[t]) top = std::min(top, strict ? h[u] - 1 : h[u]);
    long total = 0;
    for (long v = lo; v <= top; ++v) {
      h[t] = v;
      total += go(t + 1);
    }
    return total;
  };
  return go(0);
}

RationalPoly counted_poly(const Preorder& p, long first_k, const std::function<long(long)>& count) {
  const int d = static_cast<int>(bubbles(p).size());
  std::vector<Rational> xs, ys;
  for (long k = first_k; k <= first_k + d; ++k) {
    xs.emplace_back(k);
    ys.emplace_back(count(k));
  }
  RationalPoly poly = RationalPoly::interpolate(xs, ys);
  EGP_CHECK(poly.degree() <= d, "counting polynomial exceeds the bubble count");
  for (long k = first_k + d + 1; k <= first_k + d + 2; ++k)
    EGP_CHECK(poly(k) == count(k), "counting polynomial fails at an extra point");
  return poly;
}

}  // namespace

long count_strict_maps(const Preorder& p, long k) { return count_maps(p, 1, k, true); }

long count_weak_maps(const Preorder& p, long k) { return count_maps(p, 0, k, false); }

RationalPoly ehr_star(const Preorder& p) {
  return counted_poly(p, 1, [&](long k) { return count_strict_maps(p, k); });
}

RationalPoly ehr(const Preorder& p) {
  return counted_poly(p, 0, [&](long k) { return count_weak_maps(p, k); });
}

RationalPoly chi(const SubmodFn& z) {
  RationalPoly out;
  for (const auto& p : min_conforming_preorders(z)) out = out + ehr_star(p);
  return out;
}

bool basic_character(const SubmodFn& w) {
  // A non-modular w has several minimal faces, so Π(w) is not an affine space.
  return is_modular(w) && is_totally_disconnected(pre_of(w));
}

Rational chi_character(const SubmodFn& z, int n, bool extended) {
  if (n < 0) throw ValidationError("chi_character: negative number of blocks");
  if (!extended && !z.is_finite())
    throw PreconditionError("chi_character: function has infinite values");
  require_within(z.size(), limits().max_n, "chi_character ground size");
  std::map<std::string, bool> beta;
  auto cached_beta = [&](const SubmodFn& w) {
    auto [it, fresh] = beta.try_emplace(w.canonical_key(), false);
    if (fresh) it->second = basic_character(w);
    return it->second;
  };
  std::map<std::pair<std::string, int>, Rational> memo;
  std::function<Rational(const SubmodFn&, int)> go = [&](const SubmodFn& w, int blocks) -> Rational {
    if (blocks == 0) return w.size() == 0 ? 1 : 0;
    auto key = std::make_pair(w.canonical_key(), blocks);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Rational total = 0;
    for (Mask s = 0; s <= w.full(); ++s) {
      if (w(s).is_infinite() || !cached_beta(restrict(w, s))) continue;
      total += go(corestrict(w, s), blocks - 1);
    }
    memo.emplace(key, total);
    return total;
  };
  return go(z, n);
}

long bjr_count(const Matroid& m, int n) {
  if (n < 0) throw ValidationError("bjr_count: negative range");
  const int size = m.ground().size();
  require_within(size, limits().max_n, "bjr_count ground size");
  std::vector<long> y(size, 1);
  if (size > 0 && n == 0) return 0;
  long count = 0;
  for (;;) {
    long best = -1;
    int ties = 0;
    for (Mask b : m.bases()) {
      long w = 0;
      for (int i = 0; i < size; ++i)
        if (b >> i & 1) w += y[i];
      if (w > best) best = w, ties = 1;
      else if (w == best) ++ties;
    }
    if (ties == 1) ++count;
    int t = 0;
    while (t < size && y[t] == n) y[t++] = 1;
    if (t == size) break;
    ++y[t];
  }
  return count;
}

}  // namespace egp
