#ifndef MOULDKIT_PRODUCTS_HPP
#define MOULDKIT_PRODUCTS_HPP

#include <map>

#include "mouldkit/stars.hpp"

namespace mouldkit {

template <class C>
free_elem<C> prepend(const letter& l, const free_elem<C>& e) {
  free_elem<C> r;
  for (const auto& [w, c] : e.terms()) {
    std::vector<letter> ls;
    ls.reserve(w.size() + 1);
    ls.push_back(l);
    ls.insert(ls.end(), w.letters().begin(), w.letters().end());
    r.add_term(word(std::move(ls)), c);
  }
  return r;
}

/// Recursive shuffle: interleavings preserving internal order.
template <class C>
free_elem<C> shuffle(const word& u, const word& w) {
  check_compatible(u, w);
  std::map<std::pair<std::size_t, std::size_t>, free_elem<C>> memo;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> const free_elem<C>& {
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    free_elem<C> r;
    if (i == u.size() && j == w.size()) {
      r = free_elem<C>::unit();
    } else {
      if (i < u.size()) r += prepend(u[i], self(self, i + 1, j));
      if (j < w.size()) r += prepend(w[j], self(self, i, j + 1));
    }
    return memo.emplace(key, std::move(r)).first->second;
  };
  return rec(rec, 0, 0);
}

/// Quasi-shuffle with a pluggable letter product in the merge slot.  When
/// the product needs generic position the argument pair is checked up
/// front; subpairs of a generic pair stay generic.
template <class C>
free_elem<C> quasi_shuffle(const word& u, const word& w, const letter_product<C>& star) {
  check_compatible(u, w);
  if (star.needs_generic && !generic_pair(u, w))
    throw error(errc::not_generic, "arguments not in generic position for " + star.name);
  std::map<std::pair<std::size_t, std::size_t>, free_elem<C>> memo;
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> const free_elem<C>& {
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    free_elem<C> r;
    if (i == u.size() && j == w.size()) {
      r = free_elem<C>::unit();
    } else if (i == u.size()) {
      r = free_elem<C>::single(w.suffix_from(j));
    } else if (j == w.size()) {
      r = free_elem<C>::single(u.suffix_from(i));
    } else {
      r += prepend(u[i], self(self, i + 1, j));
      r += prepend(w[j], self(self, i, j + 1));
      const free_elem<C>& rest = self(self, i + 1, j + 1);
      for (const auto& [l, c] : star.apply(u[i], w[j])) r += prepend(l, rest).scaled(c);
    }
    return memo.emplace(key, std::move(r)).first->second;
  };
  return rec(rec, 0, 0);
}

/// Four-term bimould recursion over W (quasi-shuffle with the bimould merge).
inline free_elem<ratfun> bimould_shuffle_w(const word& u, const word& w) {
  return quasi_shuffle<ratfun>(u, w, stars::bimould());
}

template <class C>
free_elem<C> shuffle_ul(const word& u, const word& w) {
  return quasi_shuffle<C>(u, w, stars::ul<C>());
}

/// Closed form of [n_1] * ... * [n_k] for the divided star on distinct
/// letters: sum_i [n_i] / prod_{j != i} (n_i - n_j).
template <class C>
free_elem<C> iterated_star_divided(const std::vector<letter>& ls) {
  for (std::size_t i = 0; i < ls.size(); ++i)
    for (std::size_t j = i + 1; j < ls.size(); ++j)
      if (ls[i].block() == ls[j].block())
        throw error(errc::not_generic, "iterated divided star needs distinct letters");
  free_elem<C> r;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    C denom = ring_from_rat<C>(rat(1));
    for (std::size_t j = 0; j < ls.size(); ++j) {
      if (j == i) continue;
      denom = denom * letter_diff<C>(ls[i], ls[j]);
    }
    if constexpr (std::is_same_v<C, rat>) {
      r.add_term(word({ls[i]}), rat(1) / denom);
    } else {
      r.add_term(word({ls[i]}), denom.inverse());
    }
  }
  return r;
}

/// Monoidal convention for generic products: zero on non-generic pairs.
template <class C, class Product>
free_elem<C> generic_tensor_product(const word& u, const word& w, Product&& prod) {
  if (!generic_pair(u, w)) return free_elem<C>{};
  return prod(u, w);
}

}  // namespace mouldkit

#endif
