// wqo.hpp -- Higman sequence-embedding order, minimal bases, ascending pairs.
#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace utlie {

/// Finite sequence of k-tuples of non-negative integers, an element of
/// D(N^k).
struct SeqVector {
  int k = 0;
  std::vector<std::vector<int>> items;
  friend auto operator<=>(const SeqVector&, const SeqVector&) = default;
};

inline SeqVector make_seq(int k, std::vector<std::vector<int>> items) {
  if (k < 0) throw std::invalid_argument("negative arity");
  for (const auto& t : items) {
    if (static_cast<int>(t.size()) != k) throw std::invalid_argument("tuple arity mismatch");
    for (int v : t)
      if (v < 0) throw std::invalid_argument("negative tuple entry");
  }
  return SeqVector{k, std::move(items)};
}

/// Componentwise order on k-tuples.
inline bool tuple_leq(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tuple arity mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Strictly increasing 1-based index map witnessing an embedding.
struct EmbeddingWitness {
  std::vector<int> phi;
  friend bool operator==(const EmbeddingWitness&, const EmbeddingWitness&) = default;
};

/// Greedy leftmost matching: x embeds into y iff some order-preserving
/// injection dominates componentwise. Greedy is complete here because
/// tuple domination is monotone along the scan (standard exchange
/// argument), and it returns the lexicographically least witness.
inline std::optional<EmbeddingWitness> seq_embed(const SeqVector& x, const SeqVector& y) {
  if (x.k != y.k) throw std::invalid_argument("seq_embed arity mismatch");
  EmbeddingWitness w;
  w.phi.reserve(x.items.size());
  std::size_t j = 0;
  for (const auto& t : x.items) {
    while (j < y.items.size() && !tuple_leq(t, y.items[j])) ++j;
    if (j == y.items.size()) return std::nullopt;
    w.phi.push_back(static_cast<int>(j) + 1);
    ++j;
  }
  return w;
}

inline bool seq_leq(const SeqVector& x, const SeqVector& y) { return seq_embed(x, y).has_value(); }

/// Indices of the minimal elements of q under a quasi-order `leq`, keeping
/// the first representative of each equivalence class. Every element of q
/// dominates some returned element, and the returned elements are pairwise
/// incomparable (up to equivalence).
template <class T, class Leq>
std::vector<int> minimal_basis_indices(const std::vector<T>& q, Leq leq) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(q.size()); ++i) {
    bool keep = true;
    for (int j = 0; j < static_cast<int>(q.size()) && keep; ++j) {
      if (j == i) continue;
      bool ji = leq(q[j], q[i]);
      bool ij = leq(q[i], q[j]);
      if (ji && !ij) keep = false;
      else if (ji && ij && j < i) keep = false;
    }
    if (keep) out.push_back(i);
  }
  return out;
}

template <class T, class Leq>
std::vector<T> minimal_basis(const std::vector<T>& q, Leq leq) {
  std::vector<T> out;
  for (int i : minimal_basis_indices(q, leq)) out.push_back(q[i]);
  return out;
}

inline std::vector<SeqVector> minimal_basis(const std::vector<SeqVector>& q) {
  return minimal_basis(q, seq_leq);
}

/// First (i, j), 1-based, i < j, with seq_i <= seq_j in lexicographic (i, j)
/// scan order; nullopt means the list is pairwise non-ascending.
template <class T, class Leq>
std::optional<std::pair<int, int>> ascending_pair(const std::vector<T>& s, Leq leq) {
  for (int i = 0; i < static_cast<int>(s.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(s.size()); ++j)
      if (leq(s[i], s[j])) return std::make_pair(i + 1, j + 1);
  return std::nullopt;
}

inline std::optional<std::pair<int, int>> ascending_pair(const std::vector<SeqVector>& s) {
  return ascending_pair(s, seq_leq);
}

}  // namespace utlie
