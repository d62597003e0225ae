#ifndef MOULDKIT_LINEAR_HPP
#define MOULDKIT_LINEAR_HPP

#include <functional>
#include <map>

#include "mouldkit/ratfun.hpp"
#include "mouldkit/series.hpp"
#include "mouldkit/word.hpp"

namespace mouldkit {

inline bool ring_is_zero(const ratfun& x) { return x.is_zero(); }

template <class C>
C ring_from_rat(const rat& q) {
  return C(q);
}
template <>
inline rat ring_from_rat<rat>(const rat& q) {
  return q;
}

/// Finite formal linear combination of words; zero coefficients are never
/// stored and words sit in canonical (length, lex) order.
template <class C>
class free_elem {
 public:
  using term_map = std::map<word, C>;

  free_elem() = default;

  static free_elem single(const word& w, C c = ring_from_rat<C>(rat(1))) {
    free_elem e;
    e.add_term(w, c);
    return e;
  }
  static free_elem unit() { return single(word{}); }

  bool is_zero() const { return t_.empty(); }
  const term_map& terms() const { return t_; }
  std::size_t term_count() const { return t_.size(); }

  C coeff(const word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? C{} : it->second;
  }

  void add_term(const word& w, const C& c) {
    if (ring_is_zero(c)) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
    } else {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) t_.erase(it);
    }
  }

  free_elem& operator+=(const free_elem& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  free_elem& operator-=(const free_elem& o) {
    for (const auto& [w, c] : o.t_) add_term(w, C{} - c);
    return *this;
  }
  free_elem operator+(const free_elem& o) const {
    free_elem r = *this;
    r += o;
    return r;
  }
  free_elem operator-(const free_elem& o) const {
    free_elem r = *this;
    r -= o;
    return r;
  }
  free_elem operator-() const {
    free_elem r;
    for (const auto& [w, c] : t_) r.t_.emplace(w, C{} - c);
    return r;
  }

  free_elem scaled(const C& c) const {
    free_elem r;
    if (ring_is_zero(c)) return r;
    for (const auto& [w, k] : t_) r.add_term(w, k * c);
    return r;
  }

  /// Linear extension of a word map.
  free_elem mapped(const std::function<free_elem(const word&)>& f) const {
    free_elem r;
    for (const auto& [w, c] : t_) r += f(w).scaled(c);
    return r;
  }

  bool operator==(const free_elem& o) const { return t_ == o.t_; }
  bool operator!=(const free_elem& o) const { return !(*this == o); }

 private:
  term_map t_;
};

template <class C>
class tensor_elem {
 public:
  using key = std::pair<word, word>;
  using term_map = std::map<key, C>;

  bool is_zero() const { return t_.empty(); }
  const term_map& terms() const { return t_; }

  C coeff(const word& a, const word& b) const {
    auto it = t_.find(key(a, b));
    return it == t_.end() ? C{} : it->second;
  }

  void add_term(const word& a, const word& b, const C& c) {
    if (ring_is_zero(c)) return;
    key k(a, b);
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(std::move(k), c);
    } else {
      it->second = it->second + c;
      if (ring_is_zero(it->second)) t_.erase(it);
    }
  }

  tensor_elem& operator+=(const tensor_elem& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
  }

  bool operator==(const tensor_elem& o) const { return t_ == o.t_; }
  bool operator!=(const tensor_elem& o) const { return !(*this == o); }

 private:
  term_map t_;
};

/// Deconcatenation coproduct: all prefix/suffix splittings, coefficient 1.
template <class C>
tensor_elem<C> deconcat(const word& w) {
  tensor_elem<C> r;
  for (std::size_t i = 0; i <= w.size(); ++i)
    r.add_term(w.prefix(i), w.suffix_from(i), ring_from_rat<C>(rat(1)));
  return r;
}

template <class C>
free_elem<C> to_free(const word& w) {
  return free_elem<C>::single(w);
}

inline free_elem<ratfun> lift_to_ratfun(const free_elem<rat>& e) {
  free_elem<ratfun> r;
  for (const auto& [w, c] : e.terms()) r.add_term(w, ratfun(c));
  return r;
}

}  // namespace mouldkit

#endif
