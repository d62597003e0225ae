#ifndef MOULDKIT_WORD_HPP
#define MOULDKIT_WORD_HPP

#include <optional>
#include <set>
#include <span>
#include <tuple>
#include <vector>

#include "mouldkit/error.hpp"
#include "mouldkit/rational.hpp"

namespace mouldkit {

enum class alphabet { integers, variables, bimould, weighted };

inline const char* alphabet_name(alphabet a) {
  switch (a) {
    case alphabet::integers: return "N*";
    case alphabet::variables: return "V";
    case alphabet::bimould: return "W";
    case alphabet::weighted: return "MxB";
  }
  return "?";
}

/// One alphabet atom: a positive integer, a formal variable v_i, a pair
/// (eps mod 1, v_i), or a weighted basis letter (m, b_i).
class letter {
 public:
  static letter pos_int(long long n) {
    if (n < 1) throw error(errc::invalid_argument, "integer letters must be >= 1");
    letter l;
    l.kind_ = alphabet::integers;
    l.n_ = n;
    return l;
  }
  static letter var(unsigned i) {
    if (i < 1) throw error(errc::invalid_argument, "variable index must be >= 1");
    letter l;
    l.kind_ = alphabet::variables;
    l.n_ = i;
    return l;
  }
  static letter bi(const rat& eps, unsigned i) {
    if (i < 1) throw error(errc::invalid_argument, "variable index must be >= 1");
    letter l;
    l.kind_ = alphabet::bimould;
    l.n_ = i;
    l.q_ = mod_one(eps);
    return l;
  }
  static letter weighted(const rat& m, unsigned b) {
    if (m <= 0) throw error(errc::invalid_argument, "weight must be positive");
    if (b < 1) throw error(errc::invalid_argument, "basis index must be >= 1");
    letter l;
    l.kind_ = alphabet::weighted;
    l.n_ = b;
    l.q_ = m;
    return l;
  }

  alphabet kind() const { return kind_; }
  long long int_value() const { return n_; }
  unsigned index() const { return static_cast<unsigned>(n_); }
  const rat& eps() const { return q_; }
  const rat& weight() const { return q_; }

  /// Representative of the partition block this letter lies in.  The
  /// partition is trivial except over W, where the block is the v-index.
  letter block() const {
    if (kind_ == alphabet::bimould) return bi(rat(0), index());
    return *this;
  }

  bool operator==(const letter& o) const {
    return kind_ == o.kind_ && n_ == o.n_ && q_ == o.q_;
  }
  bool operator!=(const letter& o) const { return !(*this == o); }
  bool operator<(const letter& o) const {
    if (kind_ != o.kind_) return kind_ < o.kind_;
    if (n_ != o.n_) return n_ < o.n_;
    return q_ < o.q_;
  }

 private:
  alphabet kind_ = alphabet::integers;
  long long n_ = 1;  // integer value or variable/basis index
  rat q_;            // eps (bimould) or weight (weighted)
};

/// Finite sequence of letters of one alphabet kind; the empty word is the
/// unit and is compatible with every kind.
class word {
 public:
  word() = default;
  explicit word(std::vector<letter> ls) : ls_(std::move(ls)) {
    for (std::size_t i = 1; i < ls_.size(); ++i)
      if (ls_[i].kind() != ls_[0].kind())
        throw error(errc::mixed_alphabet, "letters of mixed alphabet kinds in one word");
  }

  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }
  const letter& operator[](std::size_t i) const { return ls_[i]; }
  const std::vector<letter>& letters() const { return ls_; }
  std::optional<alphabet> kind() const {
    if (ls_.empty()) return std::nullopt;
    return ls_[0].kind();
  }

  word prefix(std::size_t n) const {
    return word(std::vector<letter>(ls_.begin(), ls_.begin() + n));
  }
  word suffix_from(std::size_t n) const {
    return word(std::vector<letter>(ls_.begin() + n, ls_.end()));
  }
  word tail() const { return suffix_from(1); }

  // Canonical order: length, then lexicographic on letters.
  bool operator<(const word& o) const {
    if (ls_.size() != o.ls_.size()) return ls_.size() < o.ls_.size();
    return ls_ < o.ls_;
  }
  bool operator==(const word& o) const { return ls_ == o.ls_; }
  bool operator!=(const word& o) const { return !(*this == o); }

 private:
  std::vector<letter> ls_;
};

inline void check_compatible(const word& u, const word& w) {
  if (!u.empty() && !w.empty() && u.kind() != w.kind())
    throw error(errc::mixed_alphabet, "words over different alphabets");
}

inline word concat(const word& u, const word& w) {
  check_compatible(u, w);
  std::vector<letter> ls = u.letters();
  ls.insert(ls.end(), w.letters().begin(), w.letters().end());
  return word(std::move(ls));
}

/// True iff across the whole tensor no partition block contributes two
/// letters.
inline bool is_generic(std::span<const word> tensor) {
  std::set<letter> blocks;
  std::optional<alphabet> kind;
  for (const word& w : tensor) {
    if (!w.empty()) {
      if (kind && w.kind() != kind)
        throw error(errc::mixed_alphabet, "tensor mixes alphabet kinds");
      kind = w.kind();
    }
    for (const letter& l : w.letters())
      if (!blocks.insert(l.block()).second) return false;
  }
  return true;
}

inline bool is_generic(const word& w) {
  return is_generic(std::span<const word>(&w, 1));
}

inline bool generic_pair(const word& u, const word& w) {
  const word t[2] = {u, w};
  return is_generic(std::span<const word>(t, 2));
}

inline word underlying_word(std::span<const word> tensor) {
  word r;
  for (const word& w : tensor) r = concat(r, w);
  return r;
}

}  // namespace mouldkit

#endif
