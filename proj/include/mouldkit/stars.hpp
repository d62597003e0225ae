#ifndef MOULDKIT_STARS_HPP
#define MOULDKIT_STARS_HPP

#include <functional>
#include <string>
#include <vector>

#include "mouldkit/linear.hpp"

namespace mouldkit {

template <class C>
using letter_comb = std::vector<std::pair<letter, C>>;

/// Commutative, associative product of single letters, the parameter of a
/// quasi-shuffle.  When genericity is required the product is only defined
/// on letter pairs from distinct partition blocks.
template <class C>
struct letter_product {
  std::string name;
  bool needs_generic = false;
  std::function<letter_comb<C>(const letter&, const letter&)> apply;
};

/// Difference of two letters as a coefficient: n - m for integer letters,
/// v_i - v_j for variable-indexed ones.
template <class C>
C letter_diff(const letter& a, const letter& b) {
  if (a.kind() == alphabet::integers)
    return ring_from_rat<C>(rat(a.int_value() - b.int_value()));
  if constexpr (std::is_same_v<C, ratfun>) {
    return ratfun(multipoly::variable(a.index()) - multipoly::variable(b.index()));
  } else {
    throw error(errc::invalid_argument, "variable letters need rational-function coefficients");
  }
}

namespace stars {

// [n] * [m] = [n+m]; also the odot product of bracketed integers.
template <class C>
letter_product<C> qsym() {
  return {"qsym", false, [](const letter& a, const letter& b) {
            return letter_comb<C>{{letter::pos_int(a.int_value() + b.int_value()),
                                   ring_from_rat<C>(rat(1))}};
          }};
}

// [i] * [j] = (i+j)/(ij) [i+j].
template <class C>
letter_product<C> qsul() {
  return {"qsul", false, [](const letter& a, const letter& b) {
            long long i = a.int_value(), j = b.int_value();
            return letter_comb<C>{{letter::pos_int(i + j),
                                   ring_from_rat<C>(rat(i + j) / rat(i * j))}};
          }};
}

// [n] * [m] = ([n] - [m]) / (n - m), defined on distinct letters only.
template <class C>
letter_product<C> divided() {
  return {"divided", true, [](const letter& a, const letter& b) {
            C inv = ring_from_rat<C>(rat(1));
            C d = letter_diff<C>(a, b);
            if constexpr (std::is_same_v<C, rat>) {
              inv = rat(1) / d;
            } else {
              inv = d.inverse();
            }
            return letter_comb<C>{{a, inv}, {b, C{} - inv}};
          }};
}

// (e1, v_i) * (e2, v_j) = ((e1+e2, v_i) - (e1+e2, v_j)) / (v_i - v_j),
// epsilons added mod 1; defined when the v-blocks are distinct.
inline letter_product<ratfun> bimould() {
  return {"bimould", true, [](const letter& a, const letter& b) {
            rat eps = mod_one(a.eps() + b.eps());
            ratfun inv = letter_diff<ratfun>(a, b).inverse();
            return letter_comb<ratfun>{{letter::bi(eps, a.index()), inv},
                                       {letter::bi(eps, b.index()), ratfun{} - inv}};
          }};
}

// (m1, b1) * (m2, b2) = -(1/m2)(m1+m2, b1) - (1/m1)(m1+m2, b2).
template <class C>
letter_product<C> ul() {
  return {"ul", false, [](const letter& a, const letter& b) {
            rat s = a.weight() + b.weight();
            return letter_comb<C>{
                {letter::weighted(s, a.index()), ring_from_rat<C>(-rat(1) / b.weight())},
                {letter::weighted(s, b.index()), ring_from_rat<C>(-rat(1) / a.weight())}};
          }};
}

}  // namespace stars

/// Left fold of a letter product over a sequence of letters; the product is
/// associative and commutative, so the fold order is immaterial.
template <class C>
letter_comb<C> iterated_star(const letter_product<C>& star, const std::vector<letter>& ls) {
  letter_comb<C> acc{{ls.at(0), ring_from_rat<C>(rat(1))}};
  for (std::size_t i = 1; i < ls.size(); ++i) {
    std::map<letter, C> next;
    for (const auto& [l, c] : acc)
      for (const auto& [l2, c2] : star.apply(l, ls[i])) {
        auto it = next.find(l2);
        if (it == next.end())
          next.emplace(l2, c * c2);
        else
          it->second = it->second + c * c2;
      }
    acc.clear();
    for (auto& [l, c] : next)
      if (!ring_is_zero(c)) acc.emplace_back(l, c);
  }
  return acc;
}

}  // namespace mouldkit

#endif
