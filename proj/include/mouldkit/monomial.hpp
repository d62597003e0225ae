#ifndef MOULDKIT_MONOMIAL_HPP
#define MOULDKIT_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

namespace mouldkit {

// Power product of the formal variables v1, v2, ...  Exponents are stored
// densely by variable index with trailing zeros trimmed, so equal monomials
// compare equal structurally.
class monomial {
 public:
  monomial() = default;

  static monomial var(unsigned index, unsigned power = 1) {
    monomial m;
    if (index == 0) return m;
    if (power == 0) return m;
    m.e_.assign(index, 0);
    m.e_[index - 1] = power;
    return m;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (unsigned x : e_) d += x;
    return d;
  }

  unsigned exponent(unsigned index) const {
    if (index == 0 || index > e_.size()) return 0;
    return e_[index - 1];
  }

  unsigned max_var() const { return static_cast<unsigned>(e_.size()); }

  bool is_unit() const { return e_.empty(); }

  monomial operator*(const monomial& o) const {
    monomial r;
    r.e_.resize(std::max(e_.size(), o.e_.size()), 0);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += e_[i];
    for (std::size_t i = 0; i < o.e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const monomial& m) const {
    if (e_.size() > m.e_.size()) {
      for (std::size_t i = m.e_.size(); i < e_.size(); ++i)
        if (e_[i] != 0) return false;
    }
    for (std::size_t i = 0; i < std::min(e_.size(), m.e_.size()); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  // m / *this, assuming divides(m).
  monomial divide_into(const monomial& m) const {
    monomial r;
    r.e_ = m.e_;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    r.trim();
    return r;
  }

  // Graded lexicographic: total degree first, then lex with v1 most
  // significant.  Fixed so rendered output is byte-stable.
  bool operator<(const monomial& o) const {
    unsigned da = degree(), db = o.degree();
    if (da != db) return da < db;
    std::size_t n = std::max(e_.size(), o.e_.size());
    for (std::size_t i = 0; i < n; ++i) {
      unsigned a = i < e_.size() ? e_[i] : 0;
      unsigned b = i < o.e_.size() ? o.e_[i] : 0;
      if (a != b) return a < b;
    }
    return false;
  }

  bool operator==(const monomial& o) const { return e_ == o.e_; }
  bool operator!=(const monomial& o) const { return !(*this == o); }

  const std::vector<unsigned>& exponents() const { return e_; }

 private:
  void trim() {
    while (!e_.empty() && e_.back() == 0) e_.pop_back();
  }
  std::vector<unsigned> e_;
};

struct grlex_greater {
  bool operator()(const monomial& a, const monomial& b) const { return b < a; }
};

}  // namespace mouldkit

#endif
