// bracket.hpp -- bracket expressions, left-normed words, free-Lie rewriting.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "utlie/field.hpp"
#include "utlie/variable.hpp"

namespace utlie {

/// A left-normed commutator [w1, w2, ..., wk] = [[...[w1,w2],...], wk],
/// stored as its letter sequence. Length >= 1; a single letter is the
/// variable itself.
using LieWord = std::vector<Variable>;

using Multidegree = std::map<Variable, int>;

/// Immutable binary bracket tree: a leaf variable or [left, right].
class BracketExpr {
 public:
  static BracketExpr leaf(const Variable& v) {
    BracketExpr e;
    e.v_ = v;
    return e;
  }
  static BracketExpr node(BracketExpr l, BracketExpr r) {
    BracketExpr e;
    e.l_ = std::make_shared<BracketExpr>(std::move(l));
    e.r_ = std::make_shared<BracketExpr>(std::move(r));
    return e;
  }
  /// Left-normed fold of a word into a tree.
  static BracketExpr from_word(const LieWord& w) {
    if (w.empty()) throw std::invalid_argument("empty word");
    BracketExpr e = leaf(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) e = node(std::move(e), leaf(w[i]));
    return e;
  }

  bool is_leaf() const { return l_ == nullptr; }
  const Variable& var() const {
    if (!is_leaf()) throw std::logic_error("var() on an interior node");
    return v_;
  }
  const BracketExpr& left() const { return *l_; }
  const BracketExpr& right() const { return *r_; }

  void letters_into(std::vector<Variable>& out) const {
    if (is_leaf()) {
      out.push_back(v_);
      return;
    }
    l_->letters_into(out);
    r_->letters_into(out);
  }
  std::vector<Variable> letters() const {
    std::vector<Variable> out;
    letters_into(out);
    return out;
  }

 private:
  std::shared_ptr<const BracketExpr> l_, r_;
  Variable v_{};
};

/// Linear combination of left-normed words over one field, with the group
/// modulus carried explicitly so empty combinations stay well-typed.
struct WordCombo {
  FieldSpec field{};
  int modulus = 0;
  std::map<LieWord, Scalar> terms;
};

inline WordCombo make_combo(FieldSpec field, int modulus) {
  if (modulus < 2) throw std::invalid_argument("group modulus must be at least 2");
  return WordCombo{field, modulus, {}};
}

inline void check_word(const LieWord& w, int modulus) {
  if (w.empty()) throw std::invalid_argument("empty word");
  for (const auto& v : w)
    if (v.degree.modulus != modulus) throw std::invalid_argument("variable modulus mismatch");
}

inline void add_word(WordCombo& c, const LieWord& w, const Scalar& coeff) {
  check_word(w, c.modulus);
  if (!(coeff.field() == c.field)) throw std::invalid_argument("mixed-field combo term");
  if (coeff.is_zero()) return;
  auto [it, fresh] = c.terms.emplace(w, coeff);
  if (!fresh) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) c.terms.erase(it);
  }
}

inline void check_combo_pair(const WordCombo& a, const WordCombo& b) {
  if (!(a.field == b.field) || a.modulus != b.modulus)
    throw std::invalid_argument("combo field/modulus mismatch");
}

inline WordCombo combo_add(const WordCombo& a, const WordCombo& b) {
  check_combo_pair(a, b);
  WordCombo out = a;
  for (const auto& [w, c] : b.terms) add_word(out, w, c);
  return out;
}
inline WordCombo combo_scale(const WordCombo& a, const Scalar& s) {
  WordCombo out = make_combo(a.field, a.modulus);
  if (s.is_zero()) return out;
  for (const auto& [w, c] : a.terms) out.terms.emplace(w, c * s);
  return out;
}
inline WordCombo combo_neg(const WordCombo& a) { return combo_scale(a, -Scalar::one(a.field)); }
inline WordCombo combo_sub(const WordCombo& a, const WordCombo& b) {
  return combo_add(a, combo_neg(b));
}

// ---- degrees ----

inline GroupDegree degree_of(const LieWord& w, int n) {
  check_word(w, n);
  int acc = 0;
  for (const auto& v : w) acc += v.degree.value;
  return group_degree(acc, n);
}
inline GroupDegree degree_of(const BracketExpr& e, int n) { return degree_of(e.letters(), n); }

inline Multidegree multidegree_of(const LieWord& w) {
  Multidegree md;
  for (const auto& v : w) ++md[v];
  return md;
}
inline Multidegree multidegree_of(const BracketExpr& e) { return multidegree_of(e.letters()); }
/// Multidegree of a combo; throws when terms disagree (non-multihomogeneous).
inline Multidegree multidegree_of(const WordCombo& c) {
  Multidegree md;
  bool first = true;
  for (const auto& [w, coeff] : c.terms) {
    Multidegree cur = multidegree_of(w);
    if (first) {
      md = std::move(cur);
      first = false;
    } else if (cur != md) {
      throw std::invalid_argument("combo is not multihomogeneous");
    }
  }
  return md;
}

// ---- free-Lie rewriting ----

namespace detail {

/// Accumulates coeff * [u, v] as a signed sum of left-normed words, using
/// [u,[A,b]] = [[u,A],b] - [[u,b],A] on the right factor and the two-letter
/// alternation [x,x] = 0. Integer coefficients: the rewriting is defined
/// over Z and specialized to the field afterwards.
inline void bracket_words(const LieWord& u, const LieWord& v, long long coeff,
                          std::map<LieWord, long long>& acc) {
  if (v.size() == 1) {
    if (u.size() == 1 && u[0] == v[0]) return;
    LieWord w = u;
    w.push_back(v[0]);
    auto it = acc.emplace(std::move(w), 0).first;
    it->second += coeff;
    if (it->second == 0) acc.erase(it);
    return;
  }
  LieWord head(v.begin(), v.end() - 1);
  LieWord last{v.back()};
  std::map<LieWord, long long> ua;
  bracket_words(u, head, 1, ua);
  for (const auto& [w, cw] : ua) bracket_words(w, last, coeff * cw, acc);
  std::map<LieWord, long long> ub;
  bracket_words(u, last, 1, ub);
  for (const auto& [w, cw] : ub) bracket_words(w, head, -coeff * cw, acc);
}

inline std::map<LieWord, long long> normalize_ll(const BracketExpr& e) {
  if (e.is_leaf()) return {{LieWord{e.var()}, 1}};
  auto L = normalize_ll(e.left());
  auto R = normalize_ll(e.right());
  std::map<LieWord, long long> acc;
  for (const auto& [u, cu] : L)
    for (const auto& [v, cv] : R) bracket_words(u, v, cu * cv, acc);
  return acc;
}

}  // namespace detail

/// Rewrites an arbitrary bracket tree into a signed combination of
/// left-normed words, equal to the input in the free Lie algebra.
inline WordCombo left_normalize(const BracketExpr& e, FieldSpec field) {
  std::vector<Variable> ls = e.letters();
  int n = ls.front().degree.modulus;
  check_word(ls, n);
  WordCombo out = make_combo(field, n);
  for (const auto& [w, c] : detail::normalize_ll(e)) add_word(out, w, Scalar::of(c, field));
  return out;
}

/// Free-Lie identity w = -[[x, A], suffix] where A is the prefix before the
/// leftmost occurrence of x: returns an equal combination in which every
/// word starts with x.
inline WordCombo rotate_to_front(const LieWord& w, const Variable& x, FieldSpec field) {
  if (w.empty()) throw std::invalid_argument("empty word");
  int n = w.front().degree.modulus;
  check_word(w, n);
  auto pos = std::find(w.begin(), w.end(), x);
  if (pos == w.end()) throw std::invalid_argument("rotate_to_front: variable absent from word");
  WordCombo out = make_combo(field, n);
  if (pos == w.begin()) {
    add_word(out, w, Scalar::one(field));
    return out;
  }
  LieWord prefix(w.begin(), pos);
  LieWord suffix(pos + 1, w.end());
  std::map<LieWord, long long> xa;
  detail::bracket_words(LieWord{x}, prefix, 1, xa);
  for (const auto& [t, c] : xa) {
    LieWord full = t;
    full.insert(full.end(), suffix.begin(), suffix.end());
    add_word(out, full, Scalar::of(-c, field));
  }
  return out;
}

}  // namespace utlie
