// linalg.hpp -- exact rank computation over sparse rows, greedy pivots in input order.
#pragma once

#include <map>
#include <vector>

#include "utlie/cpoly.hpp"
#include "utlie/field.hpp"

namespace utlie {

struct RankResult {
  int rank = 0;
  std::vector<int> independent;  // greedy maximal independent subset, in input order
};

namespace detail {
template <class Key>
void add_scaled_into(std::map<Key, Scalar>& row, const Key& k, const Scalar& v) {
  if (v.is_zero()) return;
  auto [it, fresh] = row.emplace(k, v);
  if (!fresh) {
    it->second = it->second + v;
    if (it->second.is_zero()) row.erase(it);
  }
}
}  // namespace detail

/// Row echelon over any ordered column type. Rows are taken in input order;
/// a row that survives elimination becomes a pivot row (pivot = its least
/// remaining column), which makes the independent subset deterministic.
template <class Key>
RankResult rank_rows(const std::vector<std::map<Key, Scalar>>& rows, FieldSpec field) {
  std::map<Key, std::map<Key, Scalar>> pivots;
  RankResult out;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    std::map<Key, Scalar> r = rows[i];
    while (!r.empty()) {
      auto lead = r.begin();
      auto p = pivots.find(lead->first);
      if (p == pivots.end()) break;
      Scalar f = lead->second;
      for (const auto& [k, v] : p->second) detail::add_scaled_into(r, k, -(f * v));
    }
    if (r.empty()) continue;
    Scalar inv = r.begin()->second.inverse();
    for (auto& [k, v] : r) v = v * inv;
    Key pivotKey = r.begin()->first;
    pivots.emplace(std::move(pivotKey), std::move(r));
    out.independent.push_back(i);
    ++out.rank;
  }
  (void)field;
  return out;
}

/// Rank of a list of polynomials viewed as coefficient rows over the union
/// of their monomial supports.
inline RankResult rank_over_field(const std::vector<CPolynomial>& rows) {
  if (rows.empty()) return {};
  FieldSpec f = rows.front().field();
  std::vector<std::map<CMonomial, Scalar>> flat;
  flat.reserve(rows.size());
  for (const auto& p : rows) {
    if (!(p.field() == f)) throw std::invalid_argument("mixed-field rank input");
    flat.push_back(p.terms());
  }
  return rank_rows(flat, f);
}

}  // namespace utlie
