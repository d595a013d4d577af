// test_generic_matrices.cpp -- matrix evaluation, identity testing, ranks.
#include <catch2/catch_amalgamated.hpp>

#include "utlie/utlie.hpp"

using namespace utlie;

namespace {
const FieldSpec Q = make_field(0);
const FieldSpec F2 = make_field(2);

WordCombo combo_of(const std::string& text, int n, FieldSpec F = Q) {
  return parse_combo(text, n, F);
}
}  // namespace

TEST_CASE("matrix units multiply like e_ij e_kl = delta_jk e_il") {
  UTMatrix a = UTMatrix::unit(3, 1, 2, Scalar::one(Q));
  UTMatrix b = UTMatrix::unit(3, 2, 3, Scalar::one(Q));
  UTMatrix ab = a * b;
  CHECK(ab.entry(1, 3) == CPolynomial::constant(Scalar::one(Q)));
  CHECK((b * a).is_zero());
  UTMatrix br = ut_bracket(a, b);
  CHECK(br.entry(1, 3) == CPolynomial::constant(Scalar::one(Q)));
  CHECK(ut_bracket(b, a).entry(1, 3) == CPolynomial::constant(-Scalar::one(Q)));
  CHECK(ut_bracket(a, a).is_zero());
}

TEST_CASE("matrix addition and equality are entrywise") {
  UTMatrix a = UTMatrix::unit(2, 1, 2, Scalar::of(2, Q));
  UTMatrix b = UTMatrix::unit(2, 1, 2, Scalar::of(-2, Q));
  CHECK((a + b).is_zero());
  CHECK(a == UTMatrix::unit(2, 1, 2, Scalar::of(2, Q)));
  CHECK_FALSE(a == b);
}

TEST_CASE("generic degree-0 matrices are diagonal, nonzero degrees are staircases") {
  int n = 3;
  GenericAssignment A(n, Q);
  const UTMatrix& y1 = A.matrix_of(y_var(1, n));
  for (int s = 1; s <= n; ++s)
    CHECK(y1.entry(s, s) == CPolynomial::indeterminate(gamma_ind(1, s), Q));
  CHECK(y1.entry(1, 2).is_zero());

  const UTMatrix& z1 = A.matrix_of(var(1, 1, n));
  CHECK(z1.entry(1, 2) == CPolynomial::indeterminate(t_ind(1, 1, 1), Q));
  CHECK(z1.entry(2, 3) == CPolynomial::indeterminate(t_ind(1, 1, 2), Q));
  CHECK(z1.entry(1, 3).is_zero());

  const UTMatrix& w1 = A.matrix_of(var(2, 1, n));
  CHECK(w1.entry(1, 3) == CPolynomial::indeterminate(t_ind(2, 1, 1), Q));
  CHECK(w1.entry(1, 2).is_zero());
}

TEST_CASE("the zero-first-slot option removes one diagonal coordinate") {
  int n = 3;
  GenericAssignment A(n, Q, true);
  const UTMatrix& y1 = A.matrix_of(y_var(1, n));
  CHECK(y1.entry(1, 1).is_zero());
  CHECK(y1.entry(2, 2) == CPolynomial::indeterminate(gamma_ind(1, 2), Q));
}

TEST_CASE("a pinned staircase substitution gives the classical difference coordinate") {
  int n = 3;
  Variable z1 = var(1, 1, n), z2 = var(1, 2, n), y1 = y_var(1, n);
  GenericAssignment A = pinned_assignment({z1, z2}, n, Q);
  UTMatrix m = evaluate(LieWord{z1, y1, z2}, A);
  // [e12, y1] = (g2-g1) e12, then bracket with e23 lands in slot (1,3)
  CPolynomial want = CPolynomial::indeterminate(gamma_ind(1, 2), Q) -
                     CPolynomial::indeterminate(gamma_ind(1, 1), Q);
  CHECK(m.entry(1, 3) == want);
  CHECK(m.entry(1, 2).is_zero());
}

TEST_CASE("pinned substitutions require the degrees to fit the staircase") {
  int n = 3;
  CHECK_THROWS_AS(pinned_assignment({var(1, 1, n), var(2, 1, n)}, n, Q),
                  std::invalid_argument);
}

TEST_CASE("evaluating a combination agrees with evaluating its canonical form") {
  int n = 3;
  const char* samples[] = {
      "[z2@1,y1,z1@1]",
      "[z1@1,[z2@1,y1]] - [w1,y1,y2]",
      "[z1@1,y1,z1@1,y2] + [z1@1,y2,z1@1,y1]",
  };
  for (const char* s : samples) {
    WordCombo c = combo_of(s, n);
    GenericAssignment A(n, Q);
    UTMatrix direct = evaluate(c, A);
    UTMatrix reduced = evaluate(reduce_any(c, n), A);
    CHECK(direct == reduced);
  }
}

TEST_CASE("identity testing accepts the defining relations and rejects non-identities") {
  for (int n : {2, 3, 4, 5}) {
    for (unsigned p : {0u, 2u, 3u, 5u}) {
      FieldSpec F = make_field(p);
      CHECK(is_graded_identity(combo_of("[y1,y2]", n, F), n, F));
      CHECK(is_graded_identity(combo_of("[z1@1,y1,y2] - [z1@1,y2,y1]", n, F), n, F));
      CHECK_FALSE(is_graded_identity(combo_of("[z1@1,y1]", n, F), n, F));
    }
  }
  // degree-sum overflow kills a bracket of nonzero-degree letters
  CHECK(is_graded_identity(combo_of("[z1@1,w1]", 3, Q), 3, Q));
  CHECK(is_graded_identity(combo_of("[w1,w2]", 3, Q), 3, Q));
  CHECK_FALSE(is_graded_identity(combo_of("[z1@1,w1]", 4, Q), 4, Q));
}

TEST_CASE("identity testing works on bracket trees directly") {
  int n = 3;
  Variable y1 = y_var(1, n), y2 = y_var(2, n);
  BracketExpr e = BracketExpr::node(BracketExpr::leaf(y1), BracketExpr::leaf(y2));
  CHECK(is_graded_identity(e, n, Q));
}

TEST_CASE("a multihomogeneous split is applied before testing") {
  // mixed multidegrees: each component must vanish separately
  int n = 3;
  CHECK(is_graded_identity(combo_of("[y1,y2] + [y1,y2,y1]", n, Q), n, Q));
  CHECK_FALSE(is_graded_identity(combo_of("[y1,y2] + [z1@1,y1]", n, Q), n, Q));
}

TEST_CASE("independence rank of the two-letter-head family is full") {
  int n = 3;
  auto mons = enumerate_normal_monomials(n, parse_multidegree("z1@1,z2@1,y1", n));
  IndependenceResult r = independence_rank(mons, n, Q);
  CHECK(r.rank == 2);
  CHECK(r.dependent.empty());
}

TEST_CASE("a repeated-letter triple carries one dependency") {
  int n = 3;
  auto mons = enumerate_normal_monomials(n, parse_multidegree("z1@1:2,y1,y2", n));
  REQUIRE(mons.size() == 3);
  for (unsigned p : {0u, 2u}) {
    FieldSpec F = make_field(p);
    IndependenceResult r = independence_rank(mons, n, F);
    CHECK(r.rank == 2);
    CHECK(r.dependent.size() == 1);
  }
}

TEST_CASE("independence rank accepts combinations sharing one multidegree") {
  int n = 3;
  std::vector<LiePoly> rows = {
      reduce_any(combo_of("[z1@1,y1,z2@1]", n), n),
      reduce_any(combo_of("[z1@1,y1,z2@1] + [z1@1,z2@1,y1]", n), n),
      reduce_any(combo_of("[z1@1,z2@1,y1]", n), n),
  };
  IndependenceResult r = independence_rank(rows, n, Q);
  CHECK(r.rank == 2);
  REQUIRE(r.dependent.size() == 1);
  CHECK(r.dependent[0] == 2);  // the last row is the sum of the gap of the first two
}

TEST_CASE("independence rank rejects rows of different multidegrees") {
  int n = 3;
  std::vector<LiePoly> rows = {
      reduce_any(combo_of("[z1@1,y1]", n), n),
      reduce_any(combo_of("[z1@1,y2]", n), n),
  };
  CHECK_THROWS_AS(independence_rank(rows, n, Q), std::invalid_argument);
}

TEST_CASE("characteristic-two evaluation distinguishes the merged pair") {
  int n = 3;
  WordCombo c = combo_of("[z1@1,y1,z1@1,y2] + [z1@1,y2,z1@1,y1]", n, F2);
  CHECK(is_graded_identity(c, n, F2));
  GenericAssignment A(n, F2);
  CHECK(evaluate(c, A).is_zero());
}
