#include "mouldkit/multipoly.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace mouldkit {

bool multipoly::operator<(const multipoly& o) const {
  auto a = t_.begin(), b = o.t_.begin();
  for (; a != t_.end() && b != o.t_.end(); ++a, ++b) {
    if (a->first != b->first) return grlex_greater{}(b->first, a->first);
    if (a->second != b->second) return a->second < b->second;
  }
  return a == t_.end() && b != o.t_.end();
}

std::optional<multipoly> multipoly::exact_div(const multipoly& a, const multipoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return multipoly{};
  if (b.is_constant()) return a.scaled(rat(1) / b.constant_value());
  multipoly r = a;
  multipoly q;
  const monomial& lb = b.leading_monomial();
  const rat& cb = b.leading_coeff();
  while (!r.is_zero()) {
    const monomial& lr = r.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    monomial m = lb.divide_into(lr);
    rat c = r.leading_coeff() / cb;
    q.add_term(m, c);
    r -= b.mono_scaled(m, c);
  }
  return q;
}

std::pair<rat, multipoly> multipoly::rational_content_split() const {
  if (is_zero()) return {rat(0), multipoly{}};
  bigint den_lcm = 1;
  for (const auto& [m, c] : t_) den_lcm = boost::multiprecision::lcm(den_lcm, rat_den(c));
  bigint num_gcd = 0;
  for (const auto& [m, c] : t_) {
    bigint scaled = rat_num(c) * (den_lcm / rat_den(c));
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(scaled));
  }
  rat content(num_gcd, den_lcm);
  if (leading_coeff() < 0) content = -content;
  return {content, scaled(rat(1) / content)};
}

namespace {

// Univariate view of a multipoly in one distinguished variable: x-degree
// mapped to the x-free cofactor polynomial.
using xview = std::map<unsigned, multipoly>;

xview view_in(const multipoly& p, unsigned x) {
  xview v;
  for (const auto& [m, c] : p.terms()) {
    unsigned d = m.exponent(x);
    monomial rest = monomial::var(x, d).divide_into(m);
    v[d].add_term(rest, c);
  }
  for (auto it = v.begin(); it != v.end();)
    it = it->second.is_zero() ? v.erase(it) : std::next(it);
  return v;
}

multipoly unview(const xview& v, unsigned x) {
  multipoly p;
  for (const auto& [d, coeff] : v)
    p += coeff.mono_scaled(monomial::var(x, d), rat(1));
  return p;
}

unsigned xdeg(const xview& v) { return v.empty() ? 0 : v.rbegin()->first; }

// lc(b)^k * a  -  q * b reduction until deg_x < deg_x(b); classical
// pseudo-remainder so coefficients stay polynomial.
multipoly pseudo_rem(const multipoly& a, const multipoly& b, unsigned x) {
  xview rv = view_in(a, x);
  xview bv = view_in(b, x);
  unsigned db = xdeg(bv);
  const multipoly& lcb = bv.rbegin()->second;
  while (!rv.empty() && xdeg(rv) >= db) {
    unsigned dr = xdeg(rv);
    multipoly lcr = rv.rbegin()->second;
    // r := lcb * r - lcr * x^(dr-db) * b
    xview next;
    for (const auto& [d, c] : rv) {
      if (d == dr) continue;
      next[d] = c * lcb;
    }
    for (const auto& [d, c] : bv) {
      if (d == db) continue;
      unsigned dd = d + dr - db;
      auto it = next.find(dd);
      if (it == next.end())
        next[dd] = -(c * lcr);
      else
        it->second -= c * lcr;
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    rv = std::move(next);
  }
  return unview(rv, x);
}

multipoly content_in(const multipoly& p, unsigned x) {
  multipoly c;
  for (const auto& [d, coeff] : view_in(p, x)) {
    c = c.is_zero() ? coeff : multipoly::gcd(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

multipoly primitive_in(const multipoly& p, unsigned x, const multipoly& cont) {
  auto q = multipoly::exact_div(p, cont);
  return q ? *q : p;
}

}  // namespace

multipoly multipoly::gcd(const multipoly& a_in, const multipoly& b_in) {
  if (a_in.is_zero()) return b_in.is_zero() ? multipoly{} : b_in.rational_content_split().second;
  if (b_in.is_zero()) return a_in.rational_content_split().second;
  multipoly a = a_in.rational_content_split().second;
  multipoly b = b_in.rational_content_split().second;
  if (a.is_constant() || b.is_constant()) return multipoly(rat(1));
  if (a == b) return a;
  if (auto q = exact_div(a, b)) return b;
  if (auto q = exact_div(b, a)) return a;

  // Main variable: a common one with the smallest degree bound keeps the
  // remainder sequence short.  A variable missing from either side cannot
  // appear in the gcd, so it is handled through contents below.
  unsigned best = 0;
  unsigned best_deg = 0;
  unsigned nv = std::max(a.max_var(), b.max_var());
  for (unsigned v = 1; v <= nv; ++v) {
    unsigned da = a.degree_in(v), db = b.degree_in(v);
    if (da == 0 || db == 0) continue;
    unsigned d = std::min(da, db);
    if (best == 0 || d < best_deg) {
      best = v;
      best_deg = d;
    }
  }
  if (best == 0) return multipoly(rat(1));
  unsigned x = best;

  multipoly ca = content_in(a, x);
  multipoly cb = content_in(b, x);
  multipoly pa = primitive_in(a, x, ca);
  multipoly pb = primitive_in(b, x, cb);
  multipoly cg = gcd(ca, cb);

  if (view_in(pa, x).rbegin()->first < view_in(pb, x).rbegin()->first) std::swap(pa, pb);
  multipoly g;
  while (true) {
    multipoly r = pseudo_rem(pa, pb, x);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (!r.contains_var(x)) {
      g = multipoly(rat(1));
      break;
    }
    pa = std::move(pb);
    pb = primitive_in(r, x, content_in(r, x)).rational_content_split().second;
  }
  if (!g.is_one()) g = primitive_in(g, x, content_in(g, x));
  return (cg * g).rational_content_split().second;
}

}  // namespace mouldkit
