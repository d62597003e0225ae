#include "mouldkit/series.hpp"

namespace mouldkit {

namespace {

// Dense polynomial in X truncated at degree n (index = degree).
using dense = std::vector<rat>;

dense mul_trunc(const dense& a, const dense& b, unsigned n) {
  dense r(n + 1, rat(0));
  for (unsigned i = 0; i <= n && i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= n && j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

}  // namespace

series_q series_q::compose(const series_q& p, const series_q& q, unsigned order) {
  dense qd(order + 1, rat(0));
  for (unsigned n = 1; n <= q.order() && n <= order; ++n) qd[n] = q.coeff(n);
  // Horner: P(Q) = Q*(p_1 + Q*(p_2 + ...)).
  dense acc(order + 1, rat(0));
  for (unsigned i = p.order(); i >= 1; --i) {
    acc = mul_trunc(acc, qd, order);
    acc[0] += p.coeff(i);
  }
  acc = mul_trunc(acc, qd, order);
  series_q r(order);
  for (unsigned n = 1; n <= order; ++n) r.set_coeff(n, acc[n]);
  return r;
}

}  // namespace mouldkit
