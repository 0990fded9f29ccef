#pragma once
#include <algorithm>
#include <stdexcept>

#include "nilsol/rational.hpp"

namespace nilsol {

/// Closed rational interval [lo, hi].
struct RatInterval {
  Rational lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rational v) : lo(v), hi(v) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (hi < lo) throw std::logic_error("RatInterval: inverted bounds");
  }

  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool is_point() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / Rational(2); }

  /// 0 if interval straddles zero, else the common sign.
  int sign() const {
    if (lo.sign() > 0) return 1;
    if (hi.sign() < 0) return -1;
    return 0;
  }

  friend RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
  }
  friend RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
  friend RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rational c1 = a.lo * b.lo, c2 = a.lo * b.hi, c3 = a.hi * b.lo, c4 = a.hi * b.hi;
    Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return {lo, hi};
  }
  friend RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw std::domain_error("RatInterval: division by interval containing 0");
    return a * RatInterval(Rational(1) / b.hi, Rational(1) / b.lo);
  }
  RatInterval& operator+=(const RatInterval& b) { return *this = *this + b; }
  RatInterval& operator*=(const RatInterval& b) { return *this = *this * b; }

  bool disjoint(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }
  bool subset_of(const RatInterval& o) const { return o.lo <= lo && hi <= o.hi; }
  bool strict_subset_of(const RatInterval& o) const { return o.lo < lo && hi < o.hi; }

  RatInterval intersect(const RatInterval& o) const {
    return {std::max(lo, o.lo), std::min(hi, o.hi)};
  }

  /// Widens endpoints outward to dyadics with denominator 2^bits; keeps
  /// soundness while bounding coefficient growth in iterated arithmetic.
  RatInterval outward_round(unsigned bits) const {
    Int scale = Int(1) << bits;
    Int nlo = floor_div(lo.num() * scale, lo.den());
    Int nhi = -floor_div(-(hi.num() * scale), hi.den());  // ceil
    return {Rational(nlo, scale), Rational(nhi, scale)};
  }
};

}  // namespace nilsol
