// derive.hpp -- substitutions, polarization, certified consequence
// derivations, leading-term lifting, and finite family reduction.
#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "utlie/normal.hpp"

namespace utlie {

// ---- elementary graded endomorphisms and operators ----

namespace detail {

/// Letter-by-letter variable map with identity fallback; no injectivity
/// requirement, so it also implements restitution (merging variables).
inline LiePoly map_letters(const LiePoly& f, const std::map<Variable, Variable>& m) {
  WordCombo acc = make_combo(f.field, f.modulus);
  for (const auto& [mono, c] : f.terms) {
    LieWord w = mono.word();
    for (auto& v : w) {
      auto it = m.find(v);
      if (it != m.end()) {
        if (!(it->second.degree == v.degree))
          throw std::invalid_argument("variable map changes a degree");
        v = it->second;
      }
    }
    add_word(acc, w, c);
  }
  return reduce_any(acc, f.modulus);
}

}  // namespace detail

/// Degree-preserving variable renaming. The map extended by the identity
/// must be injective on the variables of f, so distinct variables never
/// collapse.
inline LiePoly apply_rename(const LiePoly& f, const std::map<Variable, Variable>& m) {
  std::set<Variable> vars;
  for (const auto& [mono, c] : f.terms)
    for (const auto& v : mono.word()) vars.insert(v);
  std::set<Variable> image;
  for (const auto& v : vars) {
    auto it = m.find(v);
    const Variable& tgt = it == m.end() ? v : it->second;
    if (!(tgt.degree == v.degree)) throw std::invalid_argument("rename changes a degree");
    if (!image.insert(tgt).second) throw std::invalid_argument("rename is not injective");
  }
  return detail::map_letters(f, m);
}

/// Graded endomorphism sending v to the bracket expression e (of the same
/// group degree) and fixing every other variable; the result is reduced.
inline LiePoly substitute(const LiePoly& f, const Variable& v, const BracketExpr& e) {
  if (!(degree_of(e, f.modulus) == v.degree))
    throw std::invalid_argument("substitution changes the degree");
  WordCombo acc = make_combo(f.field, f.modulus);
  for (const auto& [mono, c] : f.terms) {
    const LieWord& w = mono.word();
    if (std::find(w.begin(), w.end(), v) == w.end()) {
      add_word(acc, w, c);
      continue;
    }
    auto atom = [&](const Variable& x) { return x == v ? e : BracketExpr::leaf(x); };
    BracketExpr t = atom(w[0]);
    for (std::size_t i = 1; i < w.size(); ++i) t = BracketExpr::node(std::move(t), atom(w[i]));
    acc = combo_add(acc, combo_scale(left_normalize(t, f.field), c));
  }
  return reduce_any(acc, f.modulus);
}

/// [f, v1, v2, ...]: right-bracket by each listed variable in order.
inline LiePoly apply_bracket_right(const LiePoly& f, const std::vector<Variable>& vars) {
  if (vars.empty()) throw std::invalid_argument("empty bracket list");
  WordCombo acc = make_combo(f.field, f.modulus);
  for (const auto& [mono, c] : f.terms) {
    LieWord w = mono.word();
    w.insert(w.end(), vars.begin(), vars.end());
    add_word(acc, w, c);
  }
  return reduce_any(acc, f.modulus);
}

// ---- derivation certificates ----

/// Steps reference prior values by index: value 0 is the derivation source
/// and step t produces value t+1.
struct RenameStep {
  int input = 0;
  std::map<Variable, Variable> map;
};
struct SubstituteZStep {
  int input = 0;
  Variable var;
  BracketExpr replacement;
};
struct BracketRightStep {
  int input = 0;
  std::vector<Variable> vars;
};
struct LinearCombineStep {
  std::vector<std::pair<int, Scalar>> parts;
};
using DerivationStep = std::variant<RenameStep, SubstituteZStep, BracketRightStep, LinearCombineStep>;

/// A machine-checkable certificate: replaying the steps from the source
/// must reproduce the result exactly.
struct Derivation {
  LiePoly source;
  std::vector<DerivationStep> steps;
  LiePoly result;
};

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline const LiePoly& pick(const std::vector<LiePoly>& values, int idx) {
  if (idx < 0 || idx >= static_cast<int>(values.size()))
    throw std::invalid_argument("derivation step references a missing value");
  return values[static_cast<std::size_t>(idx)];
}

}  // namespace detail

/// Replays all steps, returning every intermediate value (index 0 = source).
inline std::vector<LiePoly> replay_values(const LiePoly& source,
                                          const std::vector<DerivationStep>& steps) {
  std::vector<LiePoly> values{source};
  for (const auto& st : steps) {
    std::visit(detail::overloaded{
                   [&](const RenameStep& s) {
                     values.push_back(apply_rename(detail::pick(values, s.input), s.map));
                   },
                   [&](const SubstituteZStep& s) {
                     values.push_back(substitute(detail::pick(values, s.input), s.var, s.replacement));
                   },
                   [&](const BracketRightStep& s) {
                     values.push_back(apply_bracket_right(detail::pick(values, s.input), s.vars));
                   },
                   [&](const LinearCombineStep& s) {
                     if (s.parts.empty()) throw std::invalid_argument("empty linear combination");
                     LiePoly acc = make_poly(source.field, source.modulus);
                     for (const auto& [idx, c] : s.parts)
                       acc = poly_add(acc, poly_scale(detail::pick(values, idx), c));
                     values.push_back(std::move(acc));
                   }},
               st);
  }
  return values;
}

inline LiePoly replay(const Derivation& d) { return replay_values(d.source, d.steps).back(); }

inline bool verify_derivation(const Derivation& d) { return replay(d) == d.result; }

// ---- polarization ----

struct PolarizeResult {
  LiePoly component;             // the part multilinear in the split variables
  std::vector<Variable> parts;   // v itself followed by the fresh copies
  LiePoly restitution;           // component with all copies merged back to v
  bool restitutionExact = false; // restitution = d! f needs characteristic 0 or > d
};

/// Full polarization of v in f: substitute v by a sum of `parts` fresh
/// copies and keep the multilinear component, summing over all placements
/// of the copies into the occurrences of v. Requires v to occur exactly
/// `parts` >= 2 times in every term.
inline PolarizeResult polarize(const LiePoly& f, const Variable& v, int parts) {
  if (parts < 2) throw std::invalid_argument("polarization needs at least two parts");
  if (f.terms.empty()) throw std::invalid_argument("polarization of the zero polynomial");
  int maxIdx = v.index;
  for (const auto& [mono, c] : f.terms) {
    int occ = 0;
    for (const auto& x : mono.word()) {
      if (x == v) ++occ;
      if (x.degree == v.degree) maxIdx = std::max(maxIdx, x.index);
    }
    if (occ != parts)
      throw std::invalid_argument("variable multiplicity does not match the part count");
  }
  PolarizeResult out;
  out.parts.push_back(v);
  for (int t = 1; t < parts; ++t)
    out.parts.push_back(Variable{v.degree, maxIdx + t});

  WordCombo acc = make_combo(f.field, f.modulus);
  for (const auto& [mono, c] : f.terms) {
    const LieWord& w = mono.word();
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] == v) pos.push_back(i);
    std::vector<Variable> perm = out.parts;  // ascending: fresh indices exceed maxIdx
    do {
      LieWord t = w;
      for (std::size_t i = 0; i < pos.size(); ++i) t[pos[i]] = perm[i];
      add_word(acc, t, c);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  out.component = reduce_any(acc, f.modulus);

  std::map<Variable, Variable> merge;
  for (const auto& p : out.parts) merge.emplace(p, v);
  out.restitution = detail::map_letters(out.component, merge);
  unsigned p = f.field.characteristic;
  out.restitutionExact = p == 0 || static_cast<int>(p) > parts;
  return out;
}

// ---- consequence derivations ----

namespace detail {

/// The single term of a one-monomial, coefficient-one polynomial.
inline const NormalMonomial& sole_monomial(const LiePoly& f, const char* what) {
  if (f.terms.size() != 1 || !(f.terms.begin()->second == Scalar::one(f.field)))
    throw std::invalid_argument(std::string(what) + " requires a single monomial with coefficient 1");
  return f.terms.begin()->first;
}

/// Appends the steps inserting one copy of y into block `block` of the
/// monomial at values[base] (blocks 1..k, numbered after each
/// nonzero-degree position). Interior blocks use the telescoping sum of
/// head substitutions z_s -> [z_s, y], which needs pairwise distinct
/// nonzero-degree variables; the last block is a plain right bracket.
/// Returns the index of the inserted-monomial value.
inline int append_insertion(std::vector<LiePoly>& values, std::vector<DerivationStep>& steps,
                            int base, int block, const Variable& y) {
  const NormalMonomial& mono = sole_monomial(values[static_cast<std::size_t>(base)], "insertion");
  TypeSignature sig = signature_of(mono);
  int k = static_cast<int>(sig.zVars.size());
  if (block < 1 || block > k) throw std::invalid_argument("block index out of range");
  FieldSpec F = values.front().field;
  if (block == k) {
    steps.push_back(BracketRightStep{base, {y}});
    values.push_back(apply_bracket_right(values[static_cast<std::size_t>(base)], {y}));
  } else {
    std::set<Variable> distinct(sig.zVars.begin(), sig.zVars.end());
    if (static_cast<int>(distinct.size()) != k)
      throw std::invalid_argument(
          "interior insertion needs pairwise distinct nonzero-degree variables");
    std::vector<int> produced;
    for (int s = 0; s < block; ++s) {
      const Variable& zs = sig.zVars[static_cast<std::size_t>(s)];
      BracketExpr repl = BracketExpr::node(BracketExpr::leaf(zs), BracketExpr::leaf(y));
      steps.push_back(SubstituteZStep{base, zs, repl});
      values.push_back(substitute(values[static_cast<std::size_t>(base)], zs, repl));
      produced.push_back(static_cast<int>(values.size()) - 1);
    }
    if (block > 1) {
      LinearCombineStep lc;
      for (int idx : produced) lc.parts.emplace_back(idx, Scalar::one(F));
      LiePoly acc = make_poly(F, values.front().modulus);
      for (const auto& [idx, c] : lc.parts)
        acc = poly_add(acc, poly_scale(values[static_cast<std::size_t>(idx)], c));
      steps.push_back(std::move(lc));
      values.push_back(std::move(acc));
    }
  }
  int cur = static_cast<int>(values.size()) - 1;
  (void)sole_monomial(values[static_cast<std::size_t>(cur)], "insertion result");
  return cur;
}

}  // namespace detail

/// Certified derivation of the target monomial g from the monomial f: the
/// embedding order b_leq(f, g) is realized by a renaming along the
/// embedding witness followed by block insertions of the missing degree-0
/// letters, ascending block by block. Throws invalid_argument when the
/// monomials are not comparable, and when comparability cannot be realized
/// by honest variable operations (occurrence renaming not a function or not
/// injective; interior insertion on repeated nonzero-degree variables).
inline Derivation derive_consequence(const LiePoly& f, const NormalMonomial& g) {
  if (f.modulus != g.modulus()) throw std::invalid_argument("modulus mismatch");
  const NormalMonomial& m0 = detail::sole_monomial(f, "derive_consequence");
  TypeSignature sf = signature_of(m0);
  TypeSignature sg = signature_of(g);
  if (sf.zDegrees != sg.zDegrees || sf.sigma != sg.sigma)
    throw std::invalid_argument("not comparable");
  auto wit = seq_embed(sf.V, sg.V);
  if (!wit) throw std::invalid_argument("not comparable");

  std::map<Variable, Variable> rmap;
  for (std::size_t t = 0; t < sf.zVars.size(); ++t) {
    auto [it, fresh] = rmap.emplace(sf.zVars[t], sg.zVars[t]);
    if (!fresh && !(it->second == sg.zVars[t]))
      throw std::invalid_argument("occurrence renaming is not a function");
  }
  {
    std::set<Variable> image;
    for (const auto& [a, b] : rmap)
      if (!image.insert(b).second)
        throw std::invalid_argument("occurrence renaming is not injective");
  }
  for (std::size_t i = 0; i < wit->phi.size(); ++i)
    rmap.emplace(sf.yVars[i], sg.yVars[static_cast<std::size_t>(wit->phi[i] - 1)]);
  for (auto it = rmap.begin(); it != rmap.end();)
    it = it->first == it->second ? rmap.erase(it) : std::next(it);

  std::vector<LiePoly> values{f};
  std::vector<DerivationStep> steps;
  int cur = 0;
  if (!rmap.empty()) {
    steps.push_back(RenameStep{0, rmap});
    values.push_back(apply_rename(f, rmap));
    cur = 1;
    (void)detail::sole_monomial(values.back(), "renamed source");
  }

  int k = static_cast<int>(sg.zVars.size());
  std::vector<std::vector<int>> have(sg.yVars.size(), std::vector<int>(static_cast<std::size_t>(k), 0));
  for (std::size_t i = 0; i < wit->phi.size(); ++i)
    have[static_cast<std::size_t>(wit->phi[i] - 1)] = sf.V.items[i];
  for (int block = 1; block <= k; ++block)
    for (std::size_t r = 0; r < sg.yVars.size(); ++r) {
      int deficit = sg.V.items[r][static_cast<std::size_t>(block - 1)] -
                    have[r][static_cast<std::size_t>(block - 1)];
      for (int copy = 0; copy < deficit; ++copy)
        cur = detail::append_insertion(values, steps, cur, block, sg.yVars[r]);
    }

  LiePoly expected = make_poly(f.field, f.modulus);
  add_mono(expected, g, Scalar::one(f.field));
  if (!(values[static_cast<std::size_t>(cur)] == expected))
    throw std::logic_error("derivation replay does not reach the target");
  return Derivation{f, std::move(steps), std::move(expected)};
}

/// One-block insertion as a standalone certified derivation. Block k (the
/// last) is a single right bracket; interior blocks emit the telescoping
/// substitutions combined linearly.
inline Derivation insert_into_block(const LiePoly& f, int block, const Variable& y) {
  if (y.degree.value != 0) throw std::invalid_argument("inserted variable must have degree 0");
  if (y.degree.modulus != f.modulus) throw std::invalid_argument("modulus mismatch");
  (void)detail::sole_monomial(f, "insert_into_block");
  std::vector<LiePoly> values{f};
  std::vector<DerivationStep> steps;
  int cur = detail::append_insertion(values, steps, 0, block, y);
  return Derivation{f, std::move(steps), values[static_cast<std::size_t>(cur)]};
}

/// Replays the coefficient-1 derivation ml(f) => target on all of f. The
/// result h satisfies ml(h) = target and cl(h) = cl(f), which is checked.
inline Derivation lift_derivation(const LiePoly& f, const NormalMonomial& target) {
  auto [mlf, clf] = leading(f);
  if (mlf == target) return Derivation{f, {}, f};
  LiePoly seed = make_poly(f.field, f.modulus);
  add_mono(seed, mlf, Scalar::one(f.field));
  Derivation inner = derive_consequence(seed, target);
  LiePoly h = replay_values(f, inner.steps).back();
  auto [mlh, clh] = leading(h);
  if (!(mlh == target) || !(clh == clf))
    throw std::logic_error("lift does not preserve the leading data");
  return Derivation{f, std::move(inner.steps), std::move(h)};
}

inline LiePoly lift_to_leading(const LiePoly& f, const NormalMonomial& target) {
  return lift_derivation(f, target).result;
}

// ---- finite family reduction ----

/// Finite list of nonzero multihomogeneous polynomials over one field and
/// modulus; zero members are dropped on construction.
struct GeneratorSet {
  int modulus = 0;
  FieldSpec field{};
  std::vector<LiePoly> polys;
};

inline GeneratorSet make_generator_set(std::vector<LiePoly> polys, int n, FieldSpec field) {
  GeneratorSet F{n, field, {}};
  for (auto& p : polys) {
    if (p.terms.empty()) continue;
    if (!(p.field == field) || p.modulus != n)
      throw std::invalid_argument("generator field/modulus mismatch");
    (void)multidegree_of(to_combo(p));  // rejects mixed multidegrees
    F.polys.push_back(std::move(p));
  }
  return F;
}

/// One leading-term elimination: subtract coeff times the lifted basis
/// member named by basisIndex.
struct Elimination {
  int basisIndex = 0;
  Scalar coeff;
  Derivation lift;
};

/// Full reduction trace of one input member (index into the original set):
/// after the eliminations the remainder is basis[residualBasisIndex], or
/// zero when residualBasisIndex is -1.
struct FamilyCertificate {
  int member = 0;
  std::vector<Elimination> elims;
  int residualBasisIndex = -1;
};

struct ReducedFamily {
  GeneratorSet basis;
  std::vector<int> basisOrigin;  // input index that produced each basis member
  std::vector<FamilyCertificate> certificates;
};

/// Leading-term reduction of a finite family sharing one degree pattern on
/// the nonzero-degree positions. Members are processed by ascending total
/// degree; each is repeatedly stripped of its leading monomial by the first
/// basis member whose leading monomial embeds below it, and joins the basis
/// when none applies. Within the supported derivation domain the basis
/// leading monomials form an antichain under the embedding order.
inline ReducedFamily reduce_family(const GeneratorSet& F) {
  bool first = true;
  std::vector<int> pattern;
  for (const auto& p : F.polys)
    for (const auto& [m, c] : p.terms) {
      TypeSignature sig = signature_of(m);
      if (first) {
        pattern = sig.zDegrees;
        first = false;
      } else if (sig.zDegrees != pattern) {
        throw std::invalid_argument("family members have mixed degree patterns");
      }
    }

  std::vector<int> order(F.polys.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int i) {
    const LiePoly& p = F.polys[static_cast<std::size_t>(i)];
    int total = 0;
    for (const auto& [v, cnt] : multidegree_of(to_combo(p))) total += cnt;
    return std::make_pair(total, leading(p).first.word());
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });

  ReducedFamily out;
  out.basis.modulus = F.modulus;
  out.basis.field = F.field;
  for (int idx : order) {
    LiePoly r = F.polys[static_cast<std::size_t>(idx)];
    FamilyCertificate cert;
    cert.member = idx;
    while (!r.terms.empty()) {
      auto [mlr, clr] = leading(r);
      bool eliminated = false;
      for (int j = 0; j < static_cast<int>(out.basis.polys.size()) && !eliminated; ++j) {
        const LiePoly& bj = out.basis.polys[static_cast<std::size_t>(j)];
        auto [mlb, clb] = leading(bj);
        if (!b_leq(mlb, mlr)) continue;
        Derivation lift;
        try {
          lift = lift_derivation(bj, mlr);
        } catch (const std::invalid_argument&) {
          continue;  // comparability not realizable by supported insertions
        }
        Scalar c = clr * clb.inverse();
        r = poly_sub(r, poly_scale(lift.result, c));
        cert.elims.push_back(Elimination{j, c, std::move(lift)});
        eliminated = true;
      }
      if (!eliminated) break;
    }
    if (r.terms.empty()) {
      cert.residualBasisIndex = -1;
    } else {
      out.basis.polys.push_back(r);
      out.basisOrigin.push_back(idx);
      cert.residualBasisIndex = static_cast<int>(out.basis.polys.size()) - 1;
    }
    out.certificates.push_back(std::move(cert));
  }
  return out;
}

/// Replays every certificate: each original member must equal the sum of
/// its eliminations plus its residual basis member (or zero).
inline bool verify_family(const GeneratorSet& F, const ReducedFamily& R) {
  if (R.certificates.size() != F.polys.size()) return false;
  for (const auto& cert : R.certificates) {
    if (cert.member < 0 || cert.member >= static_cast<int>(F.polys.size())) return false;
    LiePoly acc = make_poly(F.field, F.modulus);
    for (const auto& e : cert.elims) {
      if (e.basisIndex < 0 || e.basisIndex >= static_cast<int>(R.basis.polys.size())) return false;
      if (!(e.lift.source == R.basis.polys[static_cast<std::size_t>(e.basisIndex)])) return false;
      if (!verify_derivation(e.lift)) return false;
      acc = poly_add(acc, poly_scale(e.lift.result, e.coeff));
    }
    if (cert.residualBasisIndex >= 0) {
      if (cert.residualBasisIndex >= static_cast<int>(R.basis.polys.size())) return false;
      acc = poly_add(acc, R.basis.polys[static_cast<std::size_t>(cert.residualBasisIndex)]);
    }
    if (!(acc == F.polys[static_cast<std::size_t>(cert.member)])) return false;
  }
  return true;
}

}  // namespace utlie
