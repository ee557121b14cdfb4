#include "icr/orthant.hpp"
#include "icr/random.hpp"

#include <doctest.h>

using namespace icr;

TEST_CASE("rational parsing and printing") {
  CHECK(Rat::parse("6/4") == Rat(3, 2));
  CHECK(Rat::parse("-2").str() == "-2");
  CHECK(Rat(3, 2).str() == "3/2");
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("1.5"));
  CHECK_THROWS(Rat::parse(""));
  CHECK(Rat(1, 3).decimal(5) == "0.33333");
  CHECK(pow2_neg(3) == Rat(1, 8));
}

TEST_CASE("parse and print are inverse on canonical rationals") {
  Rng r(11);
  for (int i = 0; i < 200; ++i) {
    Rat q(r.between(-1000, 1000), r.between(1, 97));
    CHECK(Rat::parse(q.str()) == q);
  }
}

TEST_CASE("extended rationals order +inf above everything") {
  ExtRat inf = ExtRat::infinity();
  CHECK(ExtRat(Rat(5)) < inf);
  CHECK(max(ExtRat(Rat(2)), inf).is_inf());
  CHECK(min(ExtRat(Rat(2)), inf) == ExtRat(Rat(2)));
  CHECK((inf + ExtRat(Rat(1))).is_inf());
  CHECK_THROWS(inf.value());
}

TEST_CASE("orthant order") {
  CHECK(leq(VecPlus{1, 2}, VecPlus{1, 3}));
  CHECK_FALSE(leq(VecPlus{2, 1}, VecPlus{1, 3}));
  CHECK(leq(VecPlus::zeros(2), VecPlus{Rat(1, 9), 0}));
  CHECK_THROWS_AS(leq(VecPlus{1}, VecPlus{1, 2}), DimensionError);
  CHECK_THROWS(VecPlus{Rat(-1)});
}

TEST_CASE("support index") {
  CHECK(support_index(VecPlus{2, 0, 1}) == std::vector<std::size_t>{0, 2});
  CHECK(support_index(VecPlus::zeros(3)).empty());
  CHECK(support_index(VecPlus{1, 1}) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("coupling") {
  CHECK(coupling(VecPlus{1, 1}, VecPlus{3, 5}) == Rat(3));
  CHECK(coupling(VecPlus::zeros(2), VecPlus{7, 9}) == Rat(0));
  CHECK(coupling(VecPlus{2, 0}, VecPlus{0, 7}) == Rat(0));
}

TEST_CASE("coupling is increasing, homogeneous and superadditive in x") {
  Rng r(3);
  const GridSpec g{4, 0, 12};
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + r.below(3);
    VecPlus l = random_vec(r, n, g), x = random_vec(r, n, g), y = random_vec(r, n, g);
    Rat a = r.grid(4, 1, 12);
    CHECK(coupling(l, x.scaled(a)) == a * coupling(l, x));
    CHECK(coupling(l, x + y) >= coupling(l, x) + coupling(l, y));
    CHECK(coupling(l, x) <= coupling(l, x + y));
  }
}

TEST_CASE("elementary scalar functions") {
  CHECK(h_plus(VecPlus{1, 2}, 3, VecPlus{2, 1}) == Rat(3));
  CHECK(h_plus(VecPlus{1, 2}, 1, VecPlus{2, 3}) == Rat(6));
  CHECK(h_plus(VecPlus{5, 7}, 0, VecPlus::zeros(2)) == Rat(0));
  CHECK(h_check(VecPlus{1, 2}, 3, VecPlus{2, 1}) == ExtRat(Rat(3)));
  CHECK(h_check(VecPlus{1, 0}, 3, VecPlus{2, 1}).is_inf());
  CHECK(h_check(VecPlus{1, 0}, 3, VecPlus{2, 0}) == ExtRat(Rat(3)));
}

TEST_CASE("h_plus is co-radiant") {
  Rng r(5);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = 1 + r.below(3);
    VecPlus k = random_vec(r, n, {4, 0, 8}), x = random_vec(r, n, {4, 0, 8});
    Rat c = r.grid(4, 0, 8), t = r.grid(8, 1, 8);
    CHECK(h_plus(k, c, x.scaled(t)) >= t * h_plus(k, c, x));
  }
}

TEST_CASE("rng streams are reproducible and forks are independent") {
  Rng a(42), b(42);
  for (int i = 0; i < 50; ++i) CHECK(a.below(1000) == b.below(1000));
  Rng f1 = Rng(42).fork(1), f2 = Rng(42).fork(2);
  int same = 0;
  for (int i = 0; i < 50; ++i) same += f1.below(1u << 30) == f2.below(1u << 30);
  CHECK(same < 3);
}
