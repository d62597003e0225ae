#include "mouldkit/ratfun.hpp"

#include "mouldkit/error.hpp"

namespace mouldkit {

namespace {

multipoly exact(const multipoly& a, const multipoly& b) {
  auto q = multipoly::exact_div(a, b);
  if (!q) throw error(errc::invalid_argument, "inexact polynomial division");
  return *q;
}

}  // namespace

ratfun ratfun::normalized(multipoly num, multipoly den) {
  if (den.is_zero()) throw error(errc::zero_denominator, "rational function with zero denominator");
  ratfun r;
  if (num.is_zero()) return r;
  multipoly g = multipoly::gcd(num, den);
  if (!g.is_one()) {
    num = exact(num, g);
    den = exact(den, g);
  }
  rat lc = den.leading_coeff();
  if (lc != 1) {
    rat inv = rat(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

ratfun ratfun::operator-() const {
  ratfun r = *this;
  r.num_ = -r.num_;
  return r;
}

// Henrici addition: the only large gcd taken is between the two
// denominators, and the result is reduced without a full re-normalization.
ratfun ratfun::operator+(const ratfun& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    multipoly n = num_ + o.num_;
    if (n.is_zero()) return ratfun{};
    multipoly g = multipoly::gcd(n, den_);
    ratfun r;
    if (g.is_one()) {
      r.num_ = std::move(n);
      r.den_ = den_;
    } else {
      r.num_ = exact(n, g);
      r.den_ = exact(den_, g);
      rat lc = r.den_.leading_coeff();
      if (lc != 1) {
        rat inv = rat(1) / lc;
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
      }
    }
    return r;
  }
  multipoly g1 = multipoly::gcd(den_, o.den_);
  ratfun r;
  if (g1.is_one()) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    if (r.num_.is_zero()) return ratfun{};
    r.den_ = den_ * o.den_;
  } else {
    multipoly b = exact(den_, g1);
    multipoly d = exact(o.den_, g1);
    multipoly t = num_ * d + o.num_ * b;
    if (t.is_zero()) return ratfun{};
    multipoly g2 = multipoly::gcd(t, g1);
    if (g2.is_one()) {
      r.num_ = std::move(t);
      r.den_ = den_ * d;
    } else {
      r.num_ = exact(t, g2);
      r.den_ = b * exact(o.den_, g2);
    }
  }
  rat lc = r.den_.leading_coeff();
  if (lc != 1) {
    rat inv = rat(1) / lc;
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

ratfun ratfun::operator*(const ratfun& o) const {
  if (is_zero() || o.is_zero()) return ratfun{};
  multipoly g1 = multipoly::gcd(num_, o.den_);
  multipoly g2 = multipoly::gcd(o.num_, den_);
  ratfun r;
  r.num_ = exact(num_, g1) * exact(o.num_, g2);
  r.den_ = exact(den_, g2) * exact(o.den_, g1);
  rat lc = r.den_.leading_coeff();
  if (lc != 1) {
    rat inv = rat(1) / lc;
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

ratfun ratfun::inverse() const {
  if (is_zero()) throw error(errc::zero_denominator, "inverse of zero");
  return ratfun::normalized(den_, num_);
}

ratfun ratfun::operator/(const ratfun& o) const { return *this * o.inverse(); }

}  // namespace mouldkit
