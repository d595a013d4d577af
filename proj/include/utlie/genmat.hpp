// genmat.hpp -- generic upper-triangular matrix evaluation: the graded
// identity oracle and exact independence ranks.
#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "utlie/cpoly.hpp"
#include "utlie/linalg.hpp"
#include "utlie/normal.hpp"

namespace utlie {

/// Upper triangular n x n matrix with sparse polynomial entries, 1-based
/// positions (i, j), i <= j. Zero entries are never stored.
class UTMatrix {
 public:
  UTMatrix(int n, FieldSpec field) : n_(n), field_(field) {
    if (n < 1) throw std::invalid_argument("matrix size must be positive");
  }

  int size() const { return n_; }
  FieldSpec field() const { return field_; }
  bool is_zero() const { return entries_.empty(); }
  const std::map<std::pair<int, int>, CPolynomial>& entries() const { return entries_; }

  CPolynomial entry(int i, int j) const {
    check_pos(i, j);
    auto it = entries_.find({i, j});
    return it == entries_.end() ? CPolynomial(field_) : it->second;
  }
  void set_entry(int i, int j, CPolynomial p) {
    check_pos(i, j);
    if (!(p.field() == field_)) throw std::invalid_argument("mixed-field matrix entry");
    if (p.is_zero())
      entries_.erase({i, j});
    else
      entries_.insert_or_assign({i, j}, std::move(p));
  }
  void add_entry(int i, int j, const CPolynomial& p) { set_entry(i, j, entry(i, j) + p); }

  /// e_{ij} with a given coefficient.
  static UTMatrix unit(int n, int i, int j, const Scalar& c) {
    UTMatrix m(n, c.field());
    m.set_entry(i, j, CPolynomial::constant(c));
    return m;
  }

  friend UTMatrix operator+(const UTMatrix& a, const UTMatrix& b) {
    check_pair(a, b);
    UTMatrix out = a;
    for (const auto& [pos, p] : b.entries_) out.add_entry(pos.first, pos.second, p);
    return out;
  }
  friend UTMatrix operator-(const UTMatrix& a, const UTMatrix& b) {
    check_pair(a, b);
    UTMatrix out = a;
    for (const auto& [pos, p] : b.entries_) out.add_entry(pos.first, pos.second, -p);
    return out;
  }
  friend UTMatrix operator*(const UTMatrix& a, const UTMatrix& b) {
    check_pair(a, b);
    UTMatrix out(a.n_, a.field_);
    for (const auto& [pa, fa] : a.entries_)
      for (const auto& [pb, fb] : b.entries_)
        if (pa.second == pb.first) out.add_entry(pa.first, pb.second, fa * fb);
    return out;
  }
  friend bool operator==(const UTMatrix& a, const UTMatrix& b) {
    return a.n_ == b.n_ && a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  void check_pos(int i, int j) const {
    if (i < 1 || j < i || j > n_) throw std::invalid_argument("matrix position out of range");
  }
  static void check_pair(const UTMatrix& a, const UTMatrix& b) {
    if (a.n_ != b.n_ || !(a.field_ == b.field_))
      throw std::invalid_argument("matrix size/field mismatch");
  }

  int n_;
  FieldSpec field_;
  std::map<std::pair<int, int>, CPolynomial> entries_;
};

inline UTMatrix ut_bracket(const UTMatrix& a, const UTMatrix& b) { return a * b - b * a; }

/// Assignment of matrices to variables. Unpinned variables materialize on
/// first use as fully generic homogeneous matrices: a degree-0 variable y_i
/// becomes the diagonal sum of gamma(i, s) e_ss (slot 1 omitted when the
/// assignment zeroes first slots), a degree-g variable of index i the
/// staircase sum of t(g, i, s) e_{s, s+g}.
class GenericAssignment {
 public:
  GenericAssignment(int n, FieldSpec field, bool zeroFirstSlot = false)
      : n_(n), field_(field), zeroFirstSlot_(zeroFirstSlot) {
    if (n < 2) throw std::invalid_argument("matrix size must be at least 2");
  }

  int size() const { return n_; }
  FieldSpec field() const { return field_; }

  void set_matrix(const Variable& v, UTMatrix m) {
    if (m.size() != n_ || !(m.field() == field_))
      throw std::invalid_argument("assigned matrix size/field mismatch");
    int g = v.degree.value;
    for (const auto& [pos, p] : m.entries())
      if (pos.second - pos.first != g)
        throw std::invalid_argument("assigned matrix is not homogeneous of the variable degree");
    assigned_.insert_or_assign(v, std::move(m));
  }

  const UTMatrix& matrix_of(const Variable& v) {
    if (v.degree.modulus != n_) throw std::invalid_argument("variable modulus mismatch");
    auto it = assigned_.find(v);
    if (it != assigned_.end()) return it->second;
    return assigned_.emplace(v, generic_matrix(v)).first->second;
  }

 private:
  UTMatrix generic_matrix(const Variable& v) const {
    UTMatrix m(n_, field_);
    int g = v.degree.value;
    if (g == 0) {
      for (int s = zeroFirstSlot_ ? 2 : 1; s <= n_; ++s)
        m.set_entry(s, s, CPolynomial::indeterminate(gamma_ind(v.index, s), field_));
    } else {
      for (int s = 1; s + g <= n_; ++s)
        m.set_entry(s, s + g, CPolynomial::indeterminate(t_ind(g, v.index, s), field_));
    }
    return m;
  }

  int n_;
  FieldSpec field_;
  bool zeroFirstSlot_;
  std::map<Variable, UTMatrix> assigned_;
};

/// Fully generic assignment; the variable list is materialized eagerly so
/// the indeterminate layout is fixed up front.
inline GenericAssignment generic_assignment(const std::vector<Variable>& vars, int n,
                                            FieldSpec field, bool zeroFirstSlot = false) {
  GenericAssignment a(n, field, zeroFirstSlot);
  for (const auto& v : vars) a.matrix_of(v);
  return a;
}

/// Staircase pinning: the i-th listed variable of degree g_i becomes the
/// matrix unit e_{p, p+g_i} with p the running partial sum of degrees
/// starting at 1. Degree-0 variables stay generic diagonal, with the first
/// slot zeroed when requested.
inline GenericAssignment pinned_assignment(const std::vector<Variable>& zList, int n,
                                           FieldSpec field, bool diagZeroFirstSlot = false) {
  int total = 0;
  for (const auto& z : zList) {
    if (z.degree.value == 0) throw std::invalid_argument("pinned variable must have nonzero degree");
    total += z.degree.value;
  }
  if (total > n - 1) throw std::invalid_argument("pinned degree sum exceeds matrix size");
  GenericAssignment a(n, field, diagZeroFirstSlot);
  int p = 1;
  for (const auto& z : zList) {
    a.set_matrix(z, UTMatrix::unit(n, p, p + z.degree.value, Scalar::one(field)));
    p += z.degree.value;
  }
  return a;
}

// ---- evaluation ----

inline UTMatrix evaluate(const BracketExpr& e, GenericAssignment& a) {
  if (e.is_leaf()) return a.matrix_of(e.var());
  return ut_bracket(evaluate(e.left(), a), evaluate(e.right(), a));
}

inline UTMatrix evaluate(const LieWord& w, GenericAssignment& a) {
  check_word(w, a.size());
  UTMatrix m = a.matrix_of(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) m = ut_bracket(m, a.matrix_of(w[i]));
  return m;
}

inline UTMatrix evaluate(const WordCombo& c, GenericAssignment& a) {
  if (!(c.field == a.field())) throw std::invalid_argument("combo field mismatch");
  if (c.modulus != a.size()) throw std::invalid_argument("combo modulus mismatch");
  UTMatrix out(a.size(), a.field());
  for (const auto& [w, coeff] : c.terms) {
    UTMatrix val = evaluate(w, a);
    for (const auto& [pos, p] : val.entries()) out.add_entry(pos.first, pos.second, p.scaled(coeff));
  }
  return out;
}

inline UTMatrix evaluate(const LiePoly& f, GenericAssignment& a) { return evaluate(to_combo(f), a); }

/// The graded-identity oracle: true iff every multihomogeneous component of
/// f vanishes under one shared fully generic assignment. Over an infinite
/// field of the given characteristic this decides membership in the graded
/// T-ideal of the upper triangular algebra.
inline bool is_graded_identity(const WordCombo& f, int n, FieldSpec field) {
  if (!(f.field == field)) throw std::invalid_argument("combo field mismatch");
  GenericAssignment a(n, field);
  for (const auto& part : split_by_multidegree(f))
    if (!evaluate(part, a).is_zero()) return false;
  return true;
}

inline bool is_graded_identity(const BracketExpr& e, int n, FieldSpec field) {
  return is_graded_identity(left_normalize(e, field), n, field);
}

struct IndependenceResult {
  int rank = 0;
  std::vector<int> dependent;  // 0-based indices not in the greedy independent subset
};

/// Rank of the evaluations under one shared generic assignment, flattened
/// to coefficient vectors over (position, commutative monomial) columns.
/// Inputs must share a multidegree (zero polynomials are exempt and always
/// land in the dependent subset).
inline IndependenceResult independence_rank(const std::vector<LiePoly>& ms, int n,
                                            FieldSpec field) {
  bool haveMd = false;
  Multidegree md;
  for (const auto& f : ms) {
    if (!(f.field == field)) throw std::invalid_argument("poly field mismatch");
    if (f.terms.empty()) continue;
    Multidegree cur = multidegree_of(to_combo(f));
    if (!haveMd) {
      md = std::move(cur);
      haveMd = true;
    } else if (cur != md) {
      throw std::invalid_argument("independence_rank inputs have mixed multidegrees");
    }
  }
  GenericAssignment a(n, field);
  using FlatKey = std::pair<std::pair<int, int>, CMonomial>;
  std::vector<std::map<FlatKey, Scalar>> rows;
  rows.reserve(ms.size());
  for (const auto& f : ms) {
    UTMatrix val = evaluate(f, a);
    std::map<FlatKey, Scalar> row;
    for (const auto& [pos, p] : val.entries())
      for (const auto& [m, c] : p.terms()) row.emplace(FlatKey{pos, m}, c);
    rows.push_back(std::move(row));
  }
  RankResult rr = rank_rows(rows, field);
  IndependenceResult out;
  out.rank = rr.rank;
  std::size_t next = 0;
  for (int i = 0; i < static_cast<int>(ms.size()); ++i) {
    if (next < rr.independent.size() && rr.independent[next] == i)
      ++next;
    else
      out.dependent.push_back(i);
  }
  return out;
}

inline IndependenceResult independence_rank(const std::vector<NormalMonomial>& ms, int n,
                                            FieldSpec field) {
  std::vector<LiePoly> polys;
  polys.reserve(ms.size());
  for (const auto& m : ms) {
    LiePoly p = make_poly(field, n);
    add_mono(p, m, Scalar::one(field));
    polys.push_back(std::move(p));
  }
  return independence_rank(polys, n, field);
}

}  // namespace utlie
