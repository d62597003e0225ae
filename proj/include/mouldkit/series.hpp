#ifndef MOULDKIT_SERIES_HPP
#define MOULDKIT_SERIES_HPP

#include <map>
#include <vector>

#include "mouldkit/error.hpp"
#include "mouldkit/multipoly.hpp"

namespace mouldkit {

/// Truncated element of X*Q[[X]]: coefficients of X^1..X^N, no constant term.
class series_q {
 public:
  explicit series_q(std::vector<rat> coeffs) : c_(std::move(coeffs)) {}
  explicit series_q(unsigned order) : c_(order, rat(0)) {}

  unsigned order() const { return static_cast<unsigned>(c_.size()); }
  const rat& coeff(unsigned n) const { return c_.at(n - 1); }  // n >= 1
  void set_coeff(unsigned n, const rat& v) { c_.at(n - 1) = v; }
  const std::vector<rat>& coeffs() const { return c_; }

  bool operator==(const series_q& o) const { return c_ == o.c_; }

  /// X itself (truncated).
  static series_q identity(unsigned order) {
    series_q s(order);
    if (order >= 1) s.set_coeff(1, rat(1));
    return s;
  }
  /// log(1+X): p_n = (-1)^(n-1)/n.
  static series_q log(unsigned order) {
    series_q s(order);
    for (unsigned n = 1; n <= order; ++n) s.set_coeff(n, rat(n % 2 ? 1 : -1) / n);
    return s;
  }
  /// e^X - 1: p_n = 1/n!.
  static series_q exp(unsigned order) {
    series_q s(order);
    rat f(1);
    for (unsigned n = 1; n <= order; ++n) {
      f /= n;
      s.set_coeff(n, f);
    }
    return s;
  }

  /// P(Q(X)) truncated at the given order.
  static series_q compose(const series_q& p, const series_q& q, unsigned order);

 private:
  std::vector<rat> c_;
};

template <class R>
bool ring_is_zero(const R& x) {
  return x == R{};
}
inline bool ring_is_zero(const rat& x) { return x == 0; }

/// Multivariate series in the v-variables truncated at a total degree; the
/// coefficient ring R only needs default-constructed zero, +, and ==.
template <class R>
class trunc_series_t {
 public:
  explicit trunc_series_t(unsigned order) : order_(order) {}

  unsigned order() const { return order_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<monomial, R>& terms() const { return t_; }

  void add_term(const monomial& m, const R& c) {
    if (m.degree() > order_ || ring_is_zero(c)) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) t_.erase(it);
    }
  }

  trunc_series_t& operator+=(const trunc_series_t& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  trunc_series_t operator+(const trunc_series_t& o) const {
    trunc_series_t r = *this;
    r += o;
    return r;
  }

  bool operator==(const trunc_series_t& o) const { return order_ == o.order_ && t_ == o.t_; }
  bool operator!=(const trunc_series_t& o) const { return !(*this == o); }

 private:
  unsigned order_;
  std::map<monomial, R> t_;
};

using trunc_series = trunc_series_t<rat>;

inline trunc_series trunc_from_poly(const multipoly& p, unsigned order) {
  trunc_series s(order);
  for (const auto& [m, c] : p.terms()) s.add_term(m, c);
  return s;
}

inline trunc_series trunc_mul(const trunc_series& a, const trunc_series& b) {
  trunc_series r(std::min(a.order(), b.order()));
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() + mb.degree() > r.order()) continue;
      r.add_term(ma * mb, ca * cb);
    }
  return r;
}

inline trunc_series trunc_scaled(const trunc_series& a, const rat& c) {
  trunc_series r(a.order());
  if (c == 0) return r;
  for (const auto& [m, k] : a.terms()) r.add_term(m, k * c);
  return r;
}

}  // namespace mouldkit

#endif
