#include "nilsol/upoly.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace nilsol {

namespace {
int max_refine_steps() {
  if (const char* s = std::getenv("NILSOL_MAX_REFINE")) {
    int v = std::atoi(s);
    if (v > 0) return v;
  }
  return 256;
}
}  // namespace

Rational UPoly::eval(const Rational& x) const {
  Rational r(0);
  for (int i = (int)c_.size() - 1; i >= 0; --i) r = r * x + c_[i];
  return r;
}

RatInterval UPoly::eval(const RatInterval& x) const {
  RatInterval r(Rational(0));
  for (int i = (int)c_.size() - 1; i >= 0; --i) r = r * x + RatInterval(c_[i]);
  return r;
}

double UPoly::eval(double x) const {
  double r = 0;
  for (int i = (int)c_.size() - 1; i >= 0; --i) r = r * x + c_[i].to_double();
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational((long long)i);
  return UPoly(std::move(d));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return UPoly(std::move(c));
}

UPoly UPoly::scaled(const Rational& s) const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
  std::vector<Rational> rem = a.c_;
  int db = b.degree();
  if ((int)rem.size() - 1 < db) return {UPoly(), a};
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  for (int i = (int)rem.size() - 1; i >= db; --i) {
    if (rem[i].is_zero()) continue;
    Rational q = rem[i] / b.lead();
    quot[i - db] = q;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= q * b.c_[j];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / lead());
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly UPoly::squarefree_part() const {
  if (degree() <= 0) return monic();
  UPoly g = gcd(*this, derivative());
  return divrem(*this, g).first.monic();
}

std::vector<std::pair<UPoly, int>> UPoly::squarefree_decomposition() const {
  std::vector<std::pair<UPoly, int>> out;
  if (degree() <= 0) return out;
  // Yun's algorithm
  UPoly d = derivative();
  UPoly u = gcd(*this, d);
  UPoly v = divrem(*this, u).first;
  UPoly w = divrem(d, u).first;
  int k = 1;
  while (v.degree() > 0) {
    UPoly h = w - v.derivative();
    UPoly a = gcd(v, h);
    if (a.degree() > 0) out.push_back({a.monic(), k});
    v = divrem(v, a).first;
    w = divrem(h, a).first;
    ++k;
  }
  return out;
}

UPoly UPoly::compose_linear_fraction(const Rational& a, const Rational& b,
                                     const Rational& d) const {
  // sum_i c_i (a + b x)^i d^(n-i)
  int n = degree();
  if (n < 0) return UPoly();
  UPoly lin({a, b});
  UPoly result;
  UPoly lin_pow = UPoly::constant(Rational(1));
  Rational dpow = Rational(1);
  std::vector<Rational> dpows(n + 1);
  dpows[0] = Rational(1);
  for (int i = 1; i <= n; ++i) dpows[i] = dpows[i - 1] * d;
  for (int i = 0; i <= n; ++i) {
    result = result + lin_pow.scaled(c_[i] * dpows[n - i]);
    if (i < n) lin_pow = lin_pow * lin;
  }
  return result;
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    Rational v = c_[i];
    if (!first) {
      os << (v.sign() > 0 ? " + " : " - ");
      if (v.sign() < 0) v = -v;
    }
    first = false;
    if (i == 0 || v != Rational(1)) os << v.str();
    if (i > 0) {
      if (v != Rational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- Sturm

namespace {

std::vector<UPoly> sturm_chain(const UPoly& f) {
  std::vector<UPoly> chain;
  chain.push_back(f);
  UPoly d = f.derivative();
  if (!d.is_zero()) chain.push_back(d.monic());
  while (chain.back().degree() > 0) {
    UPoly r = UPoly::divrem(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back((-r).monic());
  }
  return chain;
}

int variations_at(const std::vector<UPoly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int variations_at_infinity(const std::vector<UPoly>& chain, int dir) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    if (p.is_zero()) continue;
    int s = p.lead().sign();
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

Rational cauchy_bound(const UPoly& p) {
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rational a = (p.coeff(i) / p.lead()).abs();
    if (a > m) m = a;
  }
  return m + Rational(1);
}

}  // namespace

int sturm_count(const UPoly& p, const Rational& a, const Rational& b) {
  auto chain = sturm_chain(p.squarefree_part());
  return variations_at(chain, a) - variations_at(chain, b);
}

int sturm_count_all(const UPoly& p) {
  auto chain = sturm_chain(p.squarefree_part());
  return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

// ------------------------------------------------------- simplest rational

Rational simplest_rational_in(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw std::logic_error("simplest_rational_in: inverted interval");
  if (lo.sign() <= 0 && hi.sign() >= 0) return Rational(0);
  if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
  // now 0 < lo <= hi
  Int fl = rational_floor(lo);
  if (Rational(fl + 1) <= hi) return Rational(lo.is_integer() ? fl : fl + 1);
  if (lo.is_integer()) return lo;
  Rational r = simplest_rational_in(Rational(1) / (hi - Rational(fl)),
                                    Rational(1) / (lo - Rational(fl)));
  return Rational(fl) + Rational(1) / r;
}

// ---------------------------------------------------------- root isolation

void IsolatedRoot::refine() {
  if (exact) return;
  Rational mid = interval.mid();
  int sm = minimal.eval(mid).sign();
  // interval roots are certified irrational, so mid is never a root
  int slo = minimal.eval(interval.lo).sign();
  if (slo * sm < 0)
    interval.hi = mid;
  else
    interval.lo = mid;
}

void IsolatedRoot::refine_below(const Rational& w) {
  while (!exact && interval.width() >= w) refine();
}

int IsolatedRoot::sign_of(const UPoly& q) const {
  if (q.is_zero()) return 0;
  if (exact) return q.eval(value).sign();
  UPoly g = UPoly::gcd(minimal, q);
  if (g.degree() >= 1 &&
      g.eval(interval.lo).sign() * g.eval(interval.hi).sign() < 0)
    return 0;
  IsolatedRoot tmp = *this;
  int limit = max_refine_steps();
  for (int i = 0; i < limit; ++i) {
    int s = q.eval(tmp.interval).sign();
    if (s != 0) return s;
    tmp.refine();
  }
  throw std::runtime_error("sign undetermined after max refinement");
}

bool IsolatedRoot::equal(const IsolatedRoot& a, const IsolatedRoot& b) {
  if (a.exact && b.exact) return a.value == b.value;
  if (a.exact) return equal(b, a);
  // a is an interval root (irrational); b exact rational can never match
  if (b.exact) return false;
  if (a.sign_of(b.minimal) != 0) return false;
  // a's root is a root of b.minimal; equal iff it lies in b's bracket
  IsolatedRoot ta = a;
  int limit = max_refine_steps();
  for (int i = 0; i < limit; ++i) {
    if (ta.interval.disjoint(b.interval)) return false;
    if (ta.interval.strict_subset_of(b.interval)) return true;
    ta.refine();
  }
  throw std::runtime_error("sign undetermined after max refinement");
}

bool IsolatedRoot::less(IsolatedRoot& a, IsolatedRoot& b) {
  if (a.exact && b.exact) return a.value < b.value;
  if (equal(a, b)) return false;
  int limit = max_refine_steps();
  for (int i = 0; i < limit; ++i) {
    RatInterval ia = a.enclosure(), ib = b.enclosure();
    if (ia.hi < ib.lo) return true;
    if (ib.hi < ia.lo) return false;
    a.refine();
    b.refine();
  }
  throw std::runtime_error("sign undetermined after max refinement");
}

namespace {

// Isolates roots of a squarefree polynomial f; deflates and restarts when a
// rational root shows up at a bisection point.
void isolate_squarefree(UPoly f, std::vector<IsolatedRoot>& out) {
  if (f.degree() <= 0) return;
  // factor out x
  if (f.coeff(0).is_zero()) {
    std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
    IsolatedRoot r;
    r.exact = true;
    r.value = Rational(0);
    r.minimal = f;
    out.push_back(r);
    isolate_squarefree(UPoly(std::move(shifted)), out);
    return;
  }
  if (f.degree() == 1) {
    IsolatedRoot r;
    r.exact = true;
    r.value = -f.coeff(0) / f.coeff(1);
    r.minimal = f;
    out.push_back(r);
    return;
  }
  auto chain = sturm_chain(f);
  Rational B = cauchy_bound(f);

  // rational roots u/w of the primitive integer form have w | lead
  Int den_lcm(1);
  for (const auto& c : f.coeffs())
    den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
  Rational lead_int = f.lead() * Rational(den_lcm);
  Int qmax = boost::multiprecision::abs(lead_int.num());
  Rational probe_width = Rational(1, qmax * qmax + 1);

  std::vector<IsolatedRoot> found;
  struct Seg { Rational lo, hi; int count; };
  std::vector<Seg> stack;
  stack.push_back({-B, B, variations_at(chain, -B) - variations_at(chain, B)});
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      // bisect by sign until narrow enough to probe for a rational root
      Rational lo = s.lo, hi = s.hi;
      int slo = f.eval(lo).sign();
      bool found_exact = false;
      while (hi - lo >= probe_width) {
        Rational mid = (lo + hi) / Rational(2);
        int sm = f.eval(mid).sign();
        if (sm == 0) {
          IsolatedRoot r;
          r.exact = true;
          r.value = mid;
          r.minimal = f;
          found.push_back(r);
          found_exact = true;
          break;
        }
        if (slo * sm < 0) hi = mid;
        else { lo = mid; slo = sm; }
      }
      if (found_exact) continue;
      Rational cand = simplest_rational_in(lo, hi);
      IsolatedRoot r;
      r.minimal = f;
      if (f.eval(cand).sign() == 0) {
        r.exact = true;
        r.value = cand;
      } else {
        r.exact = false;
        r.interval = RatInterval(lo, hi);
      }
      found.push_back(r);
      continue;
    }
    Rational mid = (s.lo + s.hi) / Rational(2);
    if (f.eval(mid).sign() == 0) {
      // deflate; quotient still carries every other root of f, so discard
      // anything collected so far and redo the isolation on the quotient
      IsolatedRoot r;
      r.exact = true;
      r.value = mid;
      r.minimal = f;
      found.clear();
      found.push_back(r);
      UPoly quot = UPoly::divrem(f, UPoly({-mid, Rational(1)})).first;
      isolate_squarefree(std::move(quot), found);
      break;
    }
    int vm = variations_at(chain, mid);
    int left = variations_at(chain, s.lo) - vm;
    stack.push_back({s.lo, mid, left});
    stack.push_back({mid, s.hi, s.count - left});
  }
  for (auto& r : found) out.push_back(std::move(r));
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const UPoly& p,
                                             const std::vector<Rational>& excluded) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<IsolatedRoot> out;
  for (auto& [factor, mult] : p.squarefree_decomposition()) {
    std::vector<IsolatedRoot> roots;
    isolate_squarefree(factor, roots);
    for (auto& r : roots) {
      r.multiplicity = mult;
      out.push_back(std::move(r));
    }
  }
  // drop excluded roots; shrink brackets away from surviving excluded values
  std::vector<IsolatedRoot> kept;
  for (auto& r : out) {
    bool drop = false;
    if (r.exact) {
      for (const auto& e : excluded)
        if (e == r.value) { drop = true; break; }
    } else {
      for (const auto& e : excluded) {
        int limit = max_refine_steps();
        int i = 0;
        while (r.interval.contains(e)) {
          if (r.minimal.eval(e).sign() == 0)
            throw std::logic_error("irrational bracket contains rational root");
          r.refine();
          if (++i > limit)
            throw std::runtime_error("sign undetermined after max refinement");
        }
      }
    }
    if (!drop) kept.push_back(std::move(r));
  }
  std::sort(kept.begin(), kept.end(),
            [](IsolatedRoot& a, IsolatedRoot& b) { return IsolatedRoot::less(a, b); });
  return kept;
}

}  // namespace nilsol
