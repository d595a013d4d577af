// normal.hpp -- normal form modulo the graded identity ideal of the upper
// triangular Lie algebra: zero test, reduction, monomial classification,
// enumeration, the leading-monomial order, and the embedding quasi-order.
#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "utlie/bracket.hpp"
#include "utlie/wqo.hpp"

namespace utlie {

/// Left-to-right death scan: with a = representative of the accumulated
/// prefix degree and b = the next letter's representative, the word is zero
/// mod the ideal when a + b >= n or a = b = 0. While the scan stays alive
/// the accumulated representative never wraps, so this is equivalent to
/// "first two letters both degree 0, or the representatives sum to >= n".
inline bool word_is_zero_mod_I(const LieWord& w, int n) {
  check_word(w, n);
  if (w.size() < 2) return false;
  int acc = w[0].degree.value;
  for (std::size_t t = 1; t < w.size(); ++t) {
    int b = w[t].degree.value;
    if (acc == 0 && b == 0) return true;
    if (acc + b >= n) return true;
    acc += b;
  }
  return false;
}

/// True when the word is in the canonical spanning form: a single letter, or
/// a surviving word whose head is the least nonzero-degree letter present
/// and whose maximal runs of degree-0 letters are sorted by index.
inline bool is_normal_word(const LieWord& w, int n) {
  check_word(w, n);
  if (w.size() == 1) return true;
  if (w[0] == w[1]) return false;  // [x, x, ...] vanishes in the free algebra
  if (word_is_zero_mod_I(w, n)) return false;
  if (w[0].degree.value == 0) return false;
  for (const auto& v : w)
    if (v.degree.value != 0 && v < w[0]) return false;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i].degree.value == 0 && w[i + 1].degree.value == 0 && w[i + 1].index < w[i].index)
      return false;
  return true;
}

/// A word in canonical spanning form, validated on construction.
class NormalMonomial {
 public:
  NormalMonomial(LieWord w, int n) : word_(std::move(w)), n_(n) {
    if (!is_normal_word(word_, n_)) throw std::invalid_argument("word is not in normal form");
  }
  const LieWord& word() const { return word_; }
  int modulus() const { return n_; }
  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;

 private:
  LieWord word_;
  int n_;
};

/// Reduced element: a combination of normal monomials.
struct LiePoly {
  FieldSpec field{};
  int modulus = 0;
  std::map<NormalMonomial, Scalar> terms;
  friend bool operator==(const LiePoly&, const LiePoly&) = default;
};

inline LiePoly make_poly(FieldSpec field, int modulus) {
  if (modulus < 2) throw std::invalid_argument("group modulus must be at least 2");
  return LiePoly{field, modulus, {}};
}

inline void add_mono(LiePoly& p, const NormalMonomial& m, const Scalar& coeff) {
  if (m.modulus() != p.modulus) throw std::invalid_argument("monomial modulus mismatch");
  if (!(coeff.field() == p.field)) throw std::invalid_argument("mixed-field poly term");
  if (coeff.is_zero()) return;
  auto [it, fresh] = p.terms.emplace(m, coeff);
  if (!fresh) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) p.terms.erase(it);
  }
}

inline void check_poly_pair(const LiePoly& a, const LiePoly& b) {
  if (!(a.field == b.field) || a.modulus != b.modulus)
    throw std::invalid_argument("poly field/modulus mismatch");
}
inline LiePoly poly_add(const LiePoly& a, const LiePoly& b) {
  check_poly_pair(a, b);
  LiePoly out = a;
  for (const auto& [m, c] : b.terms) add_mono(out, m, c);
  return out;
}
inline LiePoly poly_scale(const LiePoly& a, const Scalar& s) {
  LiePoly out = make_poly(a.field, a.modulus);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : a.terms) out.terms.emplace(m, c * s);
  return out;
}
inline LiePoly poly_neg(const LiePoly& a) { return poly_scale(a, -Scalar::one(a.field)); }
inline LiePoly poly_sub(const LiePoly& a, const LiePoly& b) { return poly_add(a, poly_neg(b)); }

inline WordCombo to_combo(const LiePoly& p) {
  WordCombo c = make_combo(p.field, p.modulus);
  for (const auto& [m, coeff] : p.terms) c.terms.emplace(m.word(), coeff);
  return c;
}

// ---- reduction ----

namespace detail {

inline void sort_y_runs(LieWord& w) {
  std::size_t i = 1;
  while (i < w.size()) {
    if (w[i].degree.value != 0) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < w.size() && w[j].degree.value == 0) ++j;
    std::sort(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
    i = j;
  }
}

inline void reduce_word_into(const LieWord& w, const Scalar& coeff, int n, LiePoly& out) {
  if (w.size() >= 2 && w[0] == w[1]) return;
  if (word_is_zero_mod_I(w, n)) return;
  if (w.size() == 1) {
    add_mono(out, NormalMonomial(w, n), coeff);
    return;
  }
  const Variable* least = nullptr;
  for (const auto& v : w)
    if (v.degree.value != 0 && (least == nullptr || v < *least)) least = &v;
  // A surviving word of length >= 2 has a nonzero-degree letter.
  if (w.front() == *least) {
    LieWord s = w;
    sort_y_runs(s);
    add_mono(out, NormalMonomial(s, n), coeff);
    return;
  }
  WordCombo rot = rotate_to_front(w, *least, out.field);
  for (const auto& [w2, c2] : rot.terms) reduce_word_into(w2, coeff * c2, n, out);
}

}  // namespace detail

/// Canonical coordinates of a multihomogeneous combination modulo the
/// ideal: dead words dropped, heads rotated to the least nonzero-degree
/// letter (sign-tracked), runs of degree-0 letters sorted. Linear and
/// idempotent; a complete normal form whenever each nonzero-degree variable
/// occurs once, and a spanning form otherwise.
inline LiePoly reduce(const WordCombo& c, int n) {
  if (c.modulus != 0 && c.modulus != n) throw std::invalid_argument("combo modulus mismatch");
  (void)multidegree_of(c);  // rejects non-multihomogeneous input
  LiePoly out = make_poly(c.field, n);
  for (const auto& [w, coeff] : c.terms) detail::reduce_word_into(w, coeff, n, out);
  return out;
}

/// Splits a combination into its multihomogeneous components, in the
/// deterministic order of their multidegrees.
inline std::vector<WordCombo> split_by_multidegree(const WordCombo& c) {
  std::map<Multidegree, WordCombo> parts;
  for (const auto& [w, coeff] : c.terms) {
    auto [it, fresh] = parts.emplace(multidegree_of(w), make_combo(c.field, c.modulus));
    it->second.terms.emplace(w, coeff);
  }
  std::vector<WordCombo> out;
  out.reserve(parts.size());
  for (auto& [md, part] : parts) out.push_back(std::move(part));
  return out;
}

/// Reduction of an arbitrary (possibly mixed-multidegree) combination,
/// componentwise.
inline LiePoly reduce_any(const WordCombo& c, int n) {
  LiePoly out = make_poly(c.field, n);
  for (const auto& part : split_by_multidegree(c)) out = poly_add(out, reduce(part, n));
  return out;
}

inline bool equal_mod_I(const WordCombo& f, const WordCombo& g, int n) {
  return reduce_any(combo_sub(f, g), n).terms.empty();
}

// ---- classification ----

/// The comparison handle of a normal monomial: the degree representatives of
/// its nonzero-degree positions in occurrence order, the stable rank
/// permutation of those occurrences in variable order, and one k-tuple of
/// per-block multiplicities for each occurring degree-0 variable (ascending
/// index). zVars/yVars are retained for the derivation machinery.
struct TypeSignature {
  std::vector<int> zDegrees;
  std::vector<int> sigma;  // 1-based ranks; head-least canonicalization forces sigma[0] = 1
  SeqVector V;
  std::vector<Variable> zVars;
  std::vector<Variable> yVars;
};

inline TypeSignature signature_of(const NormalMonomial& m) {
  const LieWord& w = m.word();
  TypeSignature sig;
  for (const auto& v : w)
    if (v.degree.value != 0) {
      sig.zVars.push_back(v);
      sig.zDegrees.push_back(v.degree.value);
    }
  int k = static_cast<int>(sig.zVars.size());
  std::vector<int> ord(k);
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(),
                   [&](int a, int b) { return sig.zVars[a] < sig.zVars[b]; });
  sig.sigma.assign(k, 0);
  for (int r = 0; r < k; ++r) sig.sigma[ord[r]] = r + 1;

  // Per-block multiplicities. Block s is the run of degree-0 letters after
  // the s-th nonzero-degree letter; a bare [y] word has k = 0 and one empty
  // tuple.
  std::map<Variable, std::vector<int>> rows;
  int block = 0;
  for (const auto& v : w) {
    if (v.degree.value != 0) {
      ++block;
      continue;
    }
    auto [it, fresh] = rows.emplace(v, std::vector<int>(k, 0));
    if (k > 0) ++it->second[block - 1];
  }
  std::vector<std::vector<int>> items;
  for (auto& [v, row] : rows) {
    sig.yVars.push_back(v);
    items.push_back(std::move(row));
  }
  sig.V = make_seq(k, std::move(items));
  return sig;
}

/// Quasi-order of the finite-basis argument: same degree tuple, same
/// occurrence permutation, and the block-multiplicity sequences embed.
inline bool b_leq(const NormalMonomial& f, const NormalMonomial& g) {
  TypeSignature sf = signature_of(f), sg = signature_of(g);
  if (sf.zDegrees != sg.zDegrees || sf.sigma != sg.sigma) return false;
  return seq_embed(sf.V, sg.V).has_value();
}

// ---- the leading-monomial order ----

namespace detail {

// Per-block y totals and exponent rows for blocks 1..k-1, with exponents
// listed per occurring y variable of the shared multidegree.
struct MlKey {
  std::vector<int> zDegrees;
  std::vector<int> sigma;
  int nonLastTotal = 0;
  std::vector<int> blockTotals;
  std::vector<std::vector<int>> blockExps;
};

inline MlKey ml_key(const NormalMonomial& m, const std::vector<Variable>& yUniverse) {
  TypeSignature sig = signature_of(m);
  MlKey key;
  key.zDegrees = sig.zDegrees;
  key.sigma = sig.sigma;
  int k = static_cast<int>(sig.zDegrees.size());
  for (int b = 0; b + 1 < k; ++b) {
    int total = 0;
    std::vector<int> exps;
    for (const auto& y : yUniverse) {
      int e = 0;
      auto it = std::find(sig.yVars.begin(), sig.yVars.end(), y);
      if (it != sig.yVars.end())
        e = sig.V.items[static_cast<std::size_t>(it - sig.yVars.begin())][b];
      exps.push_back(e);
      total += e;
    }
    key.nonLastTotal += total;
    key.blockTotals.push_back(total);
    key.blockExps.push_back(std::move(exps));
  }
  return key;
}

}  // namespace detail

/// Total order on normal monomials of one multidegree, largest last:
/// lexicographically smaller occurrence data means a larger monomial. The
/// cascade is: degree tuple (a deterministic extension for mixed-degree
/// multisets), then the occurrence permutation, then the total degree-0
/// multiplicity outside the last block (smaller total = larger monomial),
/// then per-block totals, then the full per-block exponent rows.
inline std::strong_ordering cmp_ml(const NormalMonomial& a, const NormalMonomial& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("cmp_ml modulus mismatch");
  Multidegree mda = multidegree_of(a.word());
  if (mda != multidegree_of(b.word())) throw std::invalid_argument("cmp_ml multidegree mismatch");
  std::vector<Variable> yUniverse;
  for (const auto& [v, cnt] : mda)
    if (v.degree.value == 0) yUniverse.push_back(v);
  detail::MlKey ka = detail::ml_key(a, yUniverse);
  detail::MlKey kb = detail::ml_key(b, yUniverse);
  if (ka.zDegrees != kb.zDegrees)
    return ka.zDegrees < kb.zDegrees ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
  if (ka.sigma != kb.sigma)
    return ka.sigma < kb.sigma ? std::strong_ordering::greater : std::strong_ordering::less;
  if (ka.nonLastTotal != kb.nonLastTotal)
    return ka.nonLastTotal < kb.nonLastTotal ? std::strong_ordering::greater
                                             : std::strong_ordering::less;
  if (ka.blockTotals != kb.blockTotals)
    return ka.blockTotals < kb.blockTotals ? std::strong_ordering::greater
                                           : std::strong_ordering::less;
  if (ka.blockExps != kb.blockExps)
    return ka.blockExps < kb.blockExps ? std::strong_ordering::greater
                                       : std::strong_ordering::less;
  // Same multidegree with identical occurrence data pins the word.
  return a.word() <=> b.word();
}

/// The maximal term of a nonzero single-multidegree polynomial, with its
/// coefficient.
inline std::pair<NormalMonomial, Scalar> leading(const LiePoly& f) {
  if (f.terms.empty()) throw std::invalid_argument("leading term of the zero polynomial");
  auto it = f.terms.begin();
  Multidegree md = multidegree_of(it->first.word());
  const NormalMonomial* best = &it->first;
  const Scalar* coeff = &it->second;
  for (++it; it != f.terms.end(); ++it) {
    if (multidegree_of(it->first.word()) != md)
      throw std::invalid_argument("leading term of a mixed-multidegree polynomial");
    if (cmp_ml(*best, it->first) == std::strong_ordering::less) {
      best = &it->first;
      coeff = &it->second;
    }
  }
  return {*best, *coeff};
}

// ---- enumeration ----

/// All normal monomials with exactly the given multidegree, ascending under
/// cmp_ml.
inline std::vector<NormalMonomial> enumerate_normal_monomials(int n, const Multidegree& md) {
  LieWord letters;
  for (const auto& [v, cnt] : md) {
    if (cnt <= 0) throw std::invalid_argument("multidegree entries must be positive");
    if (v.degree.modulus != n) throw std::invalid_argument("multidegree modulus mismatch");
    letters.insert(letters.end(), static_cast<std::size_t>(cnt), v);
  }
  std::vector<NormalMonomial> out;
  if (letters.empty()) return out;
  std::sort(letters.begin(), letters.end());
  do {
    if (is_normal_word(letters, n)) out.emplace_back(letters, n);
  } while (std::next_permutation(letters.begin(), letters.end()));
  std::sort(out.begin(), out.end(),
            [](const NormalMonomial& a, const NormalMonomial& b) {
              return cmp_ml(a, b) == std::strong_ordering::less;
            });
  return out;
}

}  // namespace utlie
