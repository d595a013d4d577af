// specht2.hpp -- the characteristic-2 infinite-chain counterexample at
// size 3: the c_k chain, its subset-indexed consequence family, their
// commutative shadows under the pinned substitution, span tests, and the
// characteristic contrast.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "utlie/derive.hpp"
#include "utlie/genmat.hpp"

namespace utlie {

/// A subset S of {1..k}; f_S additionally requires S nonempty and proper.
struct SubsetSpec {
  int k = 0;
  std::set<int> S;
};

namespace specht_detail {

constexpr int N = 3;

inline Variable z_var3() { return var(1, 1, N); }

inline void check_subset(const SubsetSpec& s, bool properNonempty) {
  if (s.k < 1) throw std::invalid_argument("subset universe must be nonempty");
  for (int i : s.S)
    if (i < 1 || i > s.k) throw std::invalid_argument("subset element out of range");
  if (properNonempty && (s.S.empty() || static_cast<int>(s.S.size()) == s.k))
    throw std::invalid_argument("subset must be nonempty and proper");
}

inline LiePoly word_poly(const LieWord& w, FieldSpec field) {
  WordCombo c = make_combo(field, N);
  add_word(c, w, Scalar::one(field));
  return reduce(c, N);
}

}  // namespace specht_detail

/// c_k = [z, y_1, ..., y_k, z], the k-th member of the chain.
inline LiePoly c_k(int k, FieldSpec field = make_field(2)) {
  if (k < 1) throw std::invalid_argument("chain index must be at least 1");
  LieWord w{specht_detail::z_var3()};
  for (int i = 1; i <= k; ++i) w.push_back(y_var(i, specht_detail::N));
  w.push_back(specht_detail::z_var3());
  return specht_detail::word_poly(w, field);
}

/// f_S = [z, Y_S, z, Y_{S^c}]: the S-indexed y's in block 1 and the
/// complement in block 2, each ascending.
inline LiePoly f_S(const SubsetSpec& s, FieldSpec field = make_field(2)) {
  specht_detail::check_subset(s, true);
  LieWord w{specht_detail::z_var3()};
  for (int i : s.S) w.push_back(y_var(i, specht_detail::N));
  w.push_back(specht_detail::z_var3());
  for (int i = 1; i <= s.k; ++i)
    if (!s.S.count(i)) w.push_back(y_var(i, specht_detail::N));
  return specht_detail::word_poly(w, field);
}

/// The evaluation substitution of the counterexample: z = e12 + e23 with
/// generic diagonal y's, over F2 unless another field is requested.
inline GenericAssignment specht_assignment(FieldSpec field = make_field(2)) {
  GenericAssignment a(specht_detail::N, field);
  UTMatrix z = UTMatrix::unit(specht_detail::N, 1, 2, Scalar::one(field)) +
               UTMatrix::unit(specht_detail::N, 2, 3, Scalar::one(field));
  a.set_matrix(specht_detail::z_var3(), std::move(z));
  return a;
}

/// h = the (1,3) entry of c_k under the counterexample substitution.
inline CPolynomial h_of(int k) {
  GenericAssignment a = specht_assignment();
  return evaluate(c_k(k), a).entry(1, 3);
}

/// Closed form of h: prod_i (g_i^1 + g_i^2) + prod_i (g_i^2 + g_i^3).
inline CPolynomial h_closed(int k) {
  if (k < 1) throw std::invalid_argument("chain index must be at least 1");
  FieldSpec F2 = make_field(2);
  CPolynomial lo = CPolynomial::constant(Scalar::one(F2));
  CPolynomial hi = lo;
  for (int i = 1; i <= k; ++i) {
    lo = lo * (CPolynomial::indeterminate(gamma_ind(i, 1), F2) +
               CPolynomial::indeterminate(gamma_ind(i, 2), F2));
    hi = hi * (CPolynomial::indeterminate(gamma_ind(i, 2), F2) +
               CPolynomial::indeterminate(gamma_ind(i, 3), F2));
  }
  return lo + hi;
}

/// h_S = the (1,3) entry of f_S under the counterexample substitution.
inline CPolynomial h_S_of(const SubsetSpec& s) {
  GenericAssignment a = specht_assignment();
  return evaluate(f_S(s), a).entry(1, 3);
}

/// Closed form: (prod_S (g^1+g^2) + prod_S (g^2+g^3)) prod_{S^c} (g^1+g^3).
inline CPolynomial h_S_closed(const SubsetSpec& s) {
  specht_detail::check_subset(s, true);
  FieldSpec F2 = make_field(2);
  CPolynomial lo = CPolynomial::constant(Scalar::one(F2));
  CPolynomial hi = lo;
  CPolynomial outer = lo;
  for (int i = 1; i <= s.k; ++i) {
    if (s.S.count(i)) {
      lo = lo * (CPolynomial::indeterminate(gamma_ind(i, 1), F2) +
                 CPolynomial::indeterminate(gamma_ind(i, 2), F2));
      hi = hi * (CPolynomial::indeterminate(gamma_ind(i, 2), F2) +
                 CPolynomial::indeterminate(gamma_ind(i, 3), F2));
    } else {
      outer = outer * (CPolynomial::indeterminate(gamma_ind(i, 1), F2) +
                       CPolynomial::indeterminate(gamma_ind(i, 3), F2));
    }
  }
  return (lo + hi) * outer;
}

/// All f_S for S nonempty proper, by ascending subset bitmask.
inline GeneratorSet conseck_span(int k) {
  if (k < 2) throw std::invalid_argument("span family needs k >= 2");
  FieldSpec F2 = make_field(2);
  std::vector<LiePoly> polys;
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    SubsetSpec s{k, {}};
    for (int i = 1; i <= k; ++i)
      if (mask & (1u << (i - 1))) s.S.insert(i);
    polys.push_back(f_S(s, F2));
  }
  return make_generator_set(std::move(polys), specht_detail::N, F2);
}

namespace specht_detail {

/// The component of c_k(z + [z, y_{k+1..k+extra}]) multilinear in the new
/// y's: replace one z occurrence at a time by the left-normed insert word.
inline LiePoly expand_component(int k, int extra, FieldSpec field) {
  if (k < 1 || extra < 1) throw std::invalid_argument("expansion indices must be positive");
  Variable z = z_var3();
  LieWord uw{z};
  for (int i = k + 1; i <= k + extra; ++i) uw.push_back(y_var(i, N));
  BracketExpr u = BracketExpr::from_word(uw);

  BracketExpr first = u;  // u in the head slot
  for (int i = 1; i <= k; ++i)
    first = BracketExpr::node(std::move(first), BracketExpr::leaf(y_var(i, N)));
  first = BracketExpr::node(std::move(first), BracketExpr::leaf(z));

  BracketExpr second = BracketExpr::leaf(z);  // u in the tail slot
  for (int i = 1; i <= k; ++i)
    second = BracketExpr::node(std::move(second), BracketExpr::leaf(y_var(i, N)));
  second = BracketExpr::node(std::move(second), std::move(u));

  WordCombo acc = combo_add(left_normalize(first, field), left_normalize(second, field));
  return reduce(acc, N);
}

}  // namespace specht_detail

struct ConseckExpandResult {
  LiePoly component;
  LiePoly subsetSum;
  bool holds = false;
};

/// Checks the expansion identity behind the chain argument over F2: the
/// multilinear component of substituting z -> z + [z, y_{k+1..k+extra}]
/// into c_k equals the sum over proper subsets S of C = {k+1..k+extra}
/// (including the empty one) of [z, y_1..y_k Y_S, z, Y_{S^c}].
inline ConseckExpandResult conseck_expand(int k, int extra) {
  FieldSpec F2 = make_field(2);
  ConseckExpandResult out;
  out.component = specht_detail::expand_component(k, extra, F2);

  WordCombo acc = make_combo(F2, specht_detail::N);
  Variable z = specht_detail::z_var3();
  for (unsigned mask = 0; mask + 1 < (1u << extra); ++mask) {
    LieWord w{z};
    for (int i = 1; i <= k; ++i) w.push_back(y_var(i, specht_detail::N));
    for (int i = 1; i <= extra; ++i)
      if (mask & (1u << (i - 1))) w.push_back(y_var(k + i, specht_detail::N));
    w.push_back(z);
    for (int i = 1; i <= extra; ++i)
      if (!(mask & (1u << (i - 1)))) w.push_back(y_var(k + i, specht_detail::N));
    add_word(acc, w, Scalar::one(F2));
  }
  out.subsetSum = reduce(acc, specht_detail::N);

  LiePoly diff = poly_sub(out.component, out.subsetSum);
  out.holds = diff.terms.empty() ||
              is_graded_identity(to_combo(diff), specht_detail::N, F2);
  return out;
}

/// The coefficient that survives outside characteristic 2: in the same
/// expansion with two inserted y's, the fully-left monomial
/// [z, y_1..y_{k+2}, z] appears with coefficient 2.
inline Scalar char_contrast(int k, FieldSpec field) {
  if (field.characteristic == 2)
    throw std::invalid_argument("contrast is defined away from characteristic 2");
  LiePoly comp = specht_detail::expand_component(k, 2, field);
  LieWord w{specht_detail::z_var3()};
  for (int i = 1; i <= k + 2; ++i) w.push_back(y_var(i, specht_detail::N));
  w.push_back(specht_detail::z_var3());
  NormalMonomial full(w, specht_detail::N);
  auto it = comp.terms.find(full);
  return it == comp.terms.end() ? Scalar::zero(field) : it->second;
}

struct NotInSpanResult {
  bool separated = false;  // rank grows when h joins the h_S family
  CMonomial witness;       // gamma_1^1 prod_{i>=2} gamma_i^2
  bool witnessOK = false;  // present in h, absent from every h_S
  int rankAllS = 0;
  int rankWithH = 0;
};

/// The rank argument that the chain is strict at k: h lies outside the
/// span of the h_S, witnessed by an explicit monomial.
inline NotInSpanResult not_in_span_check(int k) {
  if (k < 2) throw std::invalid_argument("span check needs k >= 2");
  NotInSpanResult out;
  CPolynomial h = h_of(k);
  std::vector<CPolynomial> family;
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    SubsetSpec s{k, {}};
    for (int i = 1; i <= k; ++i)
      if (mask & (1u << (i - 1))) s.S.insert(i);
    family.push_back(h_S_of(s));
  }
  out.rankAllS = rank_over_field(family).rank;
  std::vector<CPolynomial> withH;
  withH.push_back(h);
  withH.insert(withH.end(), family.begin(), family.end());
  out.rankWithH = rank_over_field(withH).rank;
  out.separated = out.rankWithH == out.rankAllS + 1;

  CMonomial wit;
  wit.exps[gamma_ind(1, 1)] = 1;
  for (int i = 2; i <= k; ++i) wit.exps[gamma_ind(i, 2)] = 1;
  out.witness = wit;
  bool ok = !h.coeff_of(wit).is_zero();
  for (const auto& hs : family) ok = ok && hs.coeff_of(wit).is_zero();
  out.witnessOK = ok;
  return out;
}

struct ChainRow {
  int k = 0;
  bool expandOK = false;  // every expansion of a smaller chain member lands in the family
  NotInSpanResult span;
};

struct ChainReport {
  int kmax = 0;
  std::vector<ChainRow> rows;
  bool allStrict = false;
};

/// Per-k verification that the chain of consequence ideals is strictly
/// increasing up to kmax over F2.
inline ChainReport chain_report(int kmax) {
  if (kmax < 2) throw std::invalid_argument("chain report needs kmax >= 2");
  ChainReport out;
  out.kmax = kmax;
  out.allStrict = true;
  for (int k = 2; k <= kmax; ++k) {
    ChainRow row;
    row.k = k;
    row.expandOK = true;
    for (int j = 1; j < k; ++j) row.expandOK = row.expandOK && conseck_expand(j, k - j).holds;
    row.span = not_in_span_check(k);
    out.allStrict = out.allStrict && row.expandOK && row.span.separated && row.span.witnessOK;
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace utlie
