// test_exact_arith.cpp -- scalar fields, commutative polynomials, row rank.
#include <catch2/catch_amalgamated.hpp>

#include "utlie/utlie.hpp"

using namespace utlie;

TEST_CASE("rational scalars are exact") {
  FieldSpec Q = make_field(0);
  Scalar a = Scalar::fraction(1, 3, Q);
  Scalar b = Scalar::fraction(1, 6, Q);
  CHECK(a + b == Scalar::fraction(1, 2, Q));
  CHECK(a - a == Scalar::zero(Q));
  CHECK(a * Scalar::of(3, Q) == Scalar::one(Q));
  CHECK(a / b == Scalar::of(2, Q));
  CHECK((-a).str() == "-1/3");
  CHECK(Scalar::fraction(2, 4, Q) == Scalar::fraction(1, 2, Q));
  CHECK(Scalar::of(7, Q).str() == "7");
  // repeated halving and doubling round-trips without drift
  Scalar x = Scalar::one(Q);
  for (int i = 0; i < 64; ++i) x = x / Scalar::of(2, Q);
  for (int i = 0; i < 64; ++i) x = x * Scalar::of(2, Q);
  CHECK(x == Scalar::one(Q));
}

TEST_CASE("prime field scalars reduce modulo the characteristic") {
  FieldSpec F5 = make_field(5);
  CHECK(Scalar::of(7, F5) == Scalar::of(2, F5));
  CHECK(Scalar::of(-1, F5) == Scalar::of(4, F5));
  CHECK((Scalar::of(3, F5) * Scalar::of(4, F5)).residue() == 2);
  CHECK(Scalar::of(2, F5).inverse() == Scalar::of(3, F5));
  CHECK(Scalar::of(2, F5) + Scalar::of(3, F5) == Scalar::zero(F5));
  FieldSpec F2 = make_field(2);
  CHECK(Scalar::one(F2) + Scalar::one(F2) == Scalar::zero(F2));
  CHECK(Scalar::one(F2).inverse() == Scalar::one(F2));
}

TEST_CASE("field construction rejects composite characteristics") {
  CHECK_NOTHROW(make_field(0));
  CHECK_NOTHROW(make_field(2));
  CHECK_NOTHROW(make_field(97));
  CHECK_THROWS_AS(make_field(1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(4), std::invalid_argument);
  CHECK_THROWS_AS(make_field(91), std::invalid_argument);  // 7*13
}

TEST_CASE("zero has no inverse") {
  CHECK_THROWS_AS(Scalar::zero(make_field(0)).inverse(), std::domain_error);
  CHECK_THROWS_AS(Scalar::zero(make_field(3)).inverse(), std::domain_error);
}

TEST_CASE("scalars of different fields do not mix") {
  CHECK_THROWS_AS(Scalar::one(make_field(0)) + Scalar::one(make_field(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(Scalar::one(make_field(3)) * Scalar::one(make_field(5)),
                  std::invalid_argument);
}

TEST_CASE("fractions are rejected over prime fields unless the denominator is a unit") {
  FieldSpec F5 = make_field(5);
  CHECK(Scalar::fraction(1, 2, F5) == Scalar::of(3, F5));
  CHECK_THROWS(Scalar::fraction(1, 5, F5));
}

TEST_CASE("commutative indeterminates have a stable total order") {
  CIndeterminate g11 = gamma_ind(1, 1);
  CIndeterminate g12 = gamma_ind(1, 2);
  CIndeterminate g21 = gamma_ind(2, 1);
  CIndeterminate t111 = t_ind(1, 1, 1);
  CHECK(g11 < g12);
  CHECK(g12 < g21);
  CHECK(g21 < t111);  // diagonal indeterminates sort before staircase ones
  CHECK(g11 == gamma_ind(1, 1));
}

TEST_CASE("polynomial arithmetic collects and cancels terms") {
  FieldSpec Q = make_field(0);
  CPolynomial x = CPolynomial::indeterminate(gamma_ind(1, 1), Q);
  CPolynomial y = CPolynomial::indeterminate(gamma_ind(1, 2), Q);
  CPolynomial p = (x + y) * (x - y);
  CPolynomial q = x * x - y * y;
  CHECK(p == q);
  CHECK((p - q).is_zero());
  CHECK(p.coeff_of(cmono({{gamma_ind(1, 1), 2}})) == Scalar::one(Q));
  CHECK(p.coeff_of(cmono({{gamma_ind(1, 1), 1}, {gamma_ind(1, 2), 1}})) == Scalar::zero(Q));
  CHECK((x * y) == (y * x));
}

TEST_CASE("polynomial arithmetic respects characteristic two") {
  FieldSpec F2 = make_field(2);
  CPolynomial x = CPolynomial::indeterminate(gamma_ind(1, 1), F2);
  CPolynomial y = CPolynomial::indeterminate(gamma_ind(1, 2), F2);
  CHECK((x + x).is_zero());
  CPolynomial p = (x + y) * (x + y);
  // Frobenius: the cross terms cancel
  CHECK(p == x * x + y * y);
}

TEST_CASE("row rank over the rationals") {
  FieldSpec Q = make_field(0);
  using Row = std::map<int, Scalar>;
  auto row = [&](std::initializer_list<std::pair<int, long long>> es) {
    Row r;
    for (auto [k, v] : es)
      if (v) r[k] = Scalar::of(v, Q);
    return r;
  };
  std::vector<Row> rows = {row({{0, 1}, {1, 2}}), row({{0, 2}, {1, 4}}), row({{1, 1}})};
  RankResult rr = rank_rows(rows, Q);
  CHECK(rr.rank == 2);
  // greedy scan keeps the earliest independent rows
  CHECK(rr.independent == std::vector<int>{0, 2});
}

TEST_CASE("row rank over a prime field sees characteristic cancellation") {
  FieldSpec F2 = make_field(2);
  using Row = std::map<int, Scalar>;
  Row r1{{0, Scalar::one(F2)}, {1, Scalar::one(F2)}};
  Row r2{{0, Scalar::one(F2)}};
  Row r3{{1, Scalar::one(F2)}};
  RankResult rr = rank_rows(std::vector<Row>{r1, r2, r3}, F2);
  CHECK(rr.rank == 2);
  CHECK(rr.independent == std::vector<int>{0, 1});
  // the same three rows over the rationals also have rank 2
  FieldSpec Q = make_field(0);
  Row q1{{0, Scalar::one(Q)}, {1, Scalar::one(Q)}};
  Row q2{{0, Scalar::one(Q)}};
  Row q3{{1, Scalar::one(Q)}};
  CHECK(rank_rows(std::vector<Row>{q1, q2, q3}, Q).rank == 2);
}

TEST_CASE("rank of polynomial rows uses monomials as coordinates") {
  FieldSpec Q = make_field(0);
  CPolynomial x = CPolynomial::indeterminate(gamma_ind(1, 1), Q);
  CPolynomial y = CPolynomial::indeterminate(gamma_ind(1, 2), Q);
  std::vector<CPolynomial> rows = {x + y, x - y, x};
  CHECK(rank_over_field(rows).rank == 2);
  std::vector<CPolynomial> rows2 = {x + y, x * CPolynomial::constant(Scalar::of(2, Q)) +
                                               y * CPolynomial::constant(Scalar::of(2, Q))};
  CHECK(rank_over_field(rows2).rank == 1);
}
