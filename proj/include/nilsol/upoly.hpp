#pragma once
#include <string>
#include <utility>
#include <vector>

#include "nilsol/interval.hpp"
#include "nilsol/rational.hpp"

namespace nilsol {

/// Univariate polynomial over the rationals, coefficients degree-ascending.
/// The zero polynomial has an empty coefficient list.
class UPoly {
public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(Rational v) { return UPoly({std::move(v)}); }
  static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

  int degree() const { return (int)c_.size() - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int i) const { return c_[i]; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& x) const;
  RatInterval eval(const RatInterval& x) const;
  double eval(double x) const;

  UPoly derivative() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;
  UPoly scaled(const Rational& s) const;

  /// Quotient and remainder with deg(rem) < deg(b); b must be nonzero.
  static std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);

  /// Monic gcd.
  static UPoly gcd(UPoly a, UPoly b);

  /// p with all repeated roots collapsed to simple ones (monic).
  UPoly squarefree_part() const;

  /// Yun decomposition: returns list of (factor, multiplicity) with
  /// p = lead * prod factor_i^mult_i, factors squarefree and pairwise coprime.
  std::vector<std::pair<UPoly, int>> squarefree_decomposition() const;

  UPoly monic() const;

  /// Substitute x -> (a + b x) / d and clear denominators:
  /// returns sum_i c_i (a + b x)^i d^(n-i).
  UPoly compose_linear_fraction(const Rational& a, const Rational& b, const Rational& d) const;

  std::string str(const std::string& var = "x") const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// One isolated real root of a polynomial.
struct IsolatedRoot {
  bool exact = false;
  Rational value;            // when exact
  RatInterval interval;      // open bracket with exactly one root (when !exact)
  int multiplicity = 1;
  UPoly minimal;             // squarefree polynomial vanishing at the root

  /// Halves the bracket (no-op for exact roots).
  void refine();
  /// Refines until the bracket width is below w.
  void refine_below(const Rational& w);

  RatInterval enclosure() const { return exact ? RatInterval(value) : interval; }
  double approx() const { return exact ? value.to_double() : interval.mid().to_double(); }

  /// Exact sign of q at this root (gcd test for zero, refinement otherwise).
  int sign_of(const UPoly& q) const;

  /// Total order among isolated roots (refines both brackets as needed).
  static bool less(IsolatedRoot& a, IsolatedRoot& b);
  static bool equal(const IsolatedRoot& a, const IsolatedRoot& b);
};

/// All distinct real roots of p, ascending; rational roots come out exact.
/// Roots equal to a value in `excluded` are dropped; brackets of the remaining
/// roots are refined until they avoid every excluded value.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<IsolatedRoot> isolate_real_roots(const UPoly& p,
                                             const std::vector<Rational>& excluded = {});

/// Number of distinct real roots in (a, b], by Sturm's theorem (p nonzero).
int sturm_count(const UPoly& p, const Rational& a, const Rational& b);

/// Number of distinct real roots on the whole line.
int sturm_count_all(const UPoly& p);

/// Simplest rational (smallest denominator, then smallest numerator) in the
/// closed interval [lo, hi].
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

}  // namespace nilsol
