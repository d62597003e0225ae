#ifndef MOULDKIT_MULTIPOLY_HPP
#define MOULDKIT_MULTIPOLY_HPP

#include <map>
#include <optional>
#include <utility>

#include "mouldkit/monomial.hpp"
#include "mouldkit/rational.hpp"

namespace mouldkit {

/// Multivariate polynomial over Q in v1, v2, ...  Terms are kept in
/// descending graded-lex order (leading term first); zero coefficients are
/// never stored, so equality is structural.
class multipoly {
 public:
  using term_map = std::map<monomial, rat, grlex_greater>;

  multipoly() = default;
  explicit multipoly(const rat& c) {
    if (c != 0) t_[monomial{}] = c;
  }
  explicit multipoly(long long c) : multipoly(rat(c)) {}

  static multipoly variable(unsigned index, unsigned power = 1) {
    multipoly p;
    p.t_[monomial::var(index, power)] = 1;
    return p;
  }
  static multipoly term(const monomial& m, const rat& c) {
    multipoly p;
    if (c != 0) p.t_[m] = c;
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit()); }
  rat constant_value() const {
    if (t_.empty()) return rat(0);
    return t_.begin()->second;  // only valid when is_constant()
  }
  bool is_one() const { return is_constant() && constant_value() == 1; }

  const term_map& terms() const { return t_; }
  std::size_t term_count() const { return t_.size(); }

  const monomial& leading_monomial() const { return t_.begin()->first; }
  const rat& leading_coeff() const { return t_.begin()->second; }

  unsigned total_degree() const {
    return t_.empty() ? 0 : t_.begin()->first.degree();
  }
  unsigned min_total_degree() const {
    return t_.empty() ? 0 : t_.rbegin()->first.degree();
  }
  unsigned degree_in(unsigned var) const {
    unsigned d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.exponent(var));
    return d;
  }
  unsigned max_var() const {
    unsigned v = 0;
    for (const auto& [m, c] : t_) v = std::max(v, m.max_var());
    return v;
  }
  bool contains_var(unsigned var) const { return degree_in(var) > 0; }

  void add_term(const monomial& m, const rat& c) {
    if (c == 0) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }

  multipoly& operator+=(const multipoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }
  multipoly& operator-=(const multipoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }
  multipoly operator+(const multipoly& o) const {
    multipoly r = *this;
    r += o;
    return r;
  }
  multipoly operator-(const multipoly& o) const {
    multipoly r = *this;
    r -= o;
    return r;
  }
  multipoly operator-() const {
    multipoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }

  multipoly operator*(const multipoly& o) const {
    multipoly r;
    for (const auto& [ma, ca] : t_)
      for (const auto& [mb, cb] : o.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  multipoly& operator*=(const multipoly& o) { return *this = *this * o; }

  multipoly scaled(const rat& c) const {
    multipoly r;
    if (c == 0) return r;
    for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
    return r;
  }
  multipoly mono_scaled(const monomial& m, const rat& c) const {
    multipoly r;
    if (c == 0) return r;
    for (const auto& [mm, k] : t_) r.t_.emplace(m * mm, k * c);
    return r;
  }

  multipoly pow(unsigned e) const {
    multipoly r(rat(1));
    multipoly base = *this;
    while (e) {
      if (e & 1u) r *= base;
      if (e >>= 1) base *= base;
    }
    return r;
  }

  bool operator==(const multipoly& o) const { return t_ == o.t_; }
  bool operator!=(const multipoly& o) const { return !(*this == o); }
  // Arbitrary total order for use as a map key (term-map lexicographic).
  bool operator<(const multipoly& o) const;

  /// Quotient of a by b when the division is exact, nullopt otherwise.
  static std::optional<multipoly> exact_div(const multipoly& a, const multipoly& b);

  /// GCD over Q[v...], returned integer-primitive with positive leading
  /// coefficient (content over Q is a unit and is discarded).
  static multipoly gcd(const multipoly& a, const multipoly& b);

  /// Rational content c and c-free part p with p integer-primitive,
  /// positive leading coefficient; *this == p.scaled(c).
  std::pair<rat, multipoly> rational_content_split() const;

  /// Drop every monomial of total degree > bound.
  multipoly truncated(unsigned bound) const {
    multipoly r;
    for (const auto& [m, c] : t_)
      if (m.degree() <= bound) r.t_.emplace(m, c);
    return r;
  }

 private:
  term_map t_;
};

multipoly multipoly_from_string(const std::string& text);  // parser.cpp

}  // namespace mouldkit

#endif
