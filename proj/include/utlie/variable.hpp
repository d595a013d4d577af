// variable.hpp -- graded variables of the free Lie algebra.
#pragma once

#include <compare>
#include <stdexcept>

namespace utlie {

/// Element of Z_n stored by its canonical representative in [0, n).
struct GroupDegree {
  int value = 0;
  int modulus = 2;
  friend auto operator<=>(const GroupDegree&, const GroupDegree&) = default;
};

inline GroupDegree group_degree(int value, int modulus) {
  if (modulus < 2) throw std::invalid_argument("group modulus must be at least 2");
  int v = value % modulus;
  if (v < 0) v += modulus;
  return {v, modulus};
}

/// A graded variable, identified by (degree, index). The default ordering
/// (degree representative first, then index) is the variable order used for
/// head canonicalization and block sorting throughout.
struct Variable {
  GroupDegree degree{};
  int index = 1;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable var(int degValue, int index, int modulus) {
  if (index < 1) throw std::invalid_argument("variable index must be positive");
  return {group_degree(degValue, modulus), index};
}
inline Variable y_var(int index, int modulus) { return var(0, index, modulus); }

}  // namespace utlie
