#ifndef MOULDKIT_RATFUN_HPP
#define MOULDKIT_RATFUN_HPP

#include "mouldkit/multipoly.hpp"

namespace mouldkit {

/// Rational function num/den over Q(v1, v2, ...), kept fully reduced with a
/// monic leading denominator so that equality is structural.
class ratfun {
 public:
  ratfun() : num_(), den_(rat(1)) {}
  explicit ratfun(const rat& c) : num_(c), den_(rat(1)) {}
  explicit ratfun(long long c) : num_(rat(c)), den_(rat(1)) {}
  explicit ratfun(multipoly p) : num_(std::move(p)), den_(rat(1)) {}

  static ratfun normalized(multipoly num, multipoly den);
  static ratfun variable(unsigned index) { return ratfun(multipoly::variable(index)); }

  const multipoly& num() const { return num_; }
  const multipoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_rational() const { return den_.is_one() && num_.is_constant(); }
  rat to_rat() const { return num_.constant_value(); }  // valid when is_rational()

  // Laurent order at the origin: min degree of num minus min degree of den.
  int order_at_origin() const {
    if (is_zero()) return 0;
    return static_cast<int>(num_.min_total_degree()) - static_cast<int>(den_.min_total_degree());
  }

  ratfun operator-() const;
  ratfun operator+(const ratfun& o) const;
  ratfun operator-(const ratfun& o) const { return *this + (-o); }
  ratfun operator*(const ratfun& o) const;
  ratfun operator/(const ratfun& o) const;
  ratfun& operator+=(const ratfun& o) { return *this = *this + o; }
  ratfun& operator-=(const ratfun& o) { return *this = *this - o; }
  ratfun& operator*=(const ratfun& o) { return *this = *this * o; }

  ratfun inverse() const;

  bool operator==(const ratfun& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const ratfun& o) const { return !(*this == o); }
  bool operator<(const ratfun& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
  }

 private:
  multipoly num_, den_;
};

inline ratfun ratfun_linear_diff(unsigned i, unsigned j) {
  return ratfun(multipoly::variable(i) - multipoly::variable(j));
}

}  // namespace mouldkit

#endif
