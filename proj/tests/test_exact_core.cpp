#include <doctest.h>

#include <map>
#include <vector>

#include "ribbons/field.hpp"
#include "ribbons/laurent.hpp"
#include "ribbons/matrix.hpp"
#include "ribbons/rng.hpp"

using namespace ribbons;

namespace {

const Field QQ = Field::rationals();

Scalar q(long long v) { return Scalar::from_int(v, QQ); }

LaurentPoly poly_from(const Field& f, const std::map<int, long long>& terms) {
  LaurentPoly p(f);
  for (const auto& [e, c] : terms) p.add_term(e, Scalar::from_int(c, f));
  return p;
}

ExactMatrix mat_from(const Field& f, const std::vector<std::vector<long long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  ExactMatrix m(f, r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Scalar::from_int(rows[i][j], f);
  return m;
}

LaurentPoly random_poly(const CounterRng& rng, uint64_t& ctr, const Field& f, int max_terms) {
  LaurentPoly p(f);
  const int nterms = static_cast<int>(rng.below(ctr++, max_terms + 1));
  for (int i = 0; i < nterms; ++i) {
    const int e = static_cast<int>(rng.int_in(ctr++, -8, 8));
    p.add_term(e, rng.scalar(ctr++, f));
  }
  return p;
}

// independent convolution, kept away from LaurentPoly::operator*
LaurentPoly slow_multiply(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<int, Scalar> acc;
  for (const auto& [e1, c1] : a.terms())
    for (const auto& [e2, c2] : b.terms()) {
      auto it = acc.find(e1 + e2);
      if (it == acc.end())
        acc.emplace(e1 + e2, c1 * c2);
      else
        it->second += c1 * c2;
    }
  LaurentPoly out(a.field());
  for (const auto& [e, c] : acc) out.add_term(e, c);
  return out;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q is exact") {
  const Scalar a = Scalar::parse("2/3", QQ);
  const Scalar b = Scalar::parse("-1/6", QQ);
  CHECK((a + b).str() == "1/2");
  CHECK((a * b).str() == "-1/9");
  CHECK((a / b).str() == "-4");
  CHECK((a - a).is_zero());
  CHECK(Scalar::parse("4/6", QQ) == a);  // canonical form
}

TEST_CASE("scalar arithmetic over F_p uses canonical residues") {
  const Field f7 = Field::prime(7);
  const Scalar a = Scalar::from_int(-2, f7);
  CHECK(a.res() == 5);
  CHECK((a * a).res() == 4);
  CHECK(a.inverse().res() == 3);  // 5*3 = 15 = 1 mod 7
  CHECK((Scalar::from_int(3, f7) / Scalar::from_int(5, f7)).res() == 2);
  CHECK_THROWS_AS(Scalar::zero(f7).inverse(), std::domain_error);
  CHECK_THROWS_AS((void)Field::prime(6), std::invalid_argument);
  CHECK_THROWS_AS((void)(a + Scalar::one(QQ)), std::invalid_argument);
}

TEST_CASE("primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(101));
  CHECK(is_prime_u64(103));
  CHECK(is_prime_u64(1000000007ull));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(6561));
}

TEST_CASE("reduce_mod maps rationals into F_p") {
  const Field f5 = Field::prime(5);
  CHECK(reduce_mod(Scalar::parse("7/3", QQ), f5).res() == 4);  // 2 * 3^{-1} = 2*2 = 4
  CHECK_THROWS_AS(reduce_mod(Scalar::parse("1/5", QQ), f5), std::domain_error);
}

TEST_CASE("laurent derivative: power rule") {
  // t^2 + 3t -> 2t + 3
  const LaurentPoly p = poly_from(QQ, {{2, 1}, {1, 3}});
  CHECK(p.derivative() == poly_from(QQ, {{1, 2}, {0, 3}}));
  // constants die
  CHECK(poly_from(QQ, {{0, 5}}).derivative().is_zero());
  // t^-2 over F_7 -> 5 t^-3
  const Field f7 = Field::prime(7);
  const LaurentPoly r = poly_from(f7, {{-2, 1}});
  CHECK(r.derivative() == poly_from(f7, {{-3, 5}}));
}

TEST_CASE("window keeps exactly the requested exponent band") {
  const LaurentPoly p = poly_from(QQ, {{3, 1}, {-1, 1}, {-9, 1}});
  CHECK(p.window(-5, -1) == poly_from(QQ, {{-1, 1}}));
  CHECK(LaurentPoly(QQ).window(-3, 7).is_zero());
  const LaurentPoly r = poly_from(QQ, {{-2, 2}, {-5, 1}});
  CHECK(r.window(-4, -1) == poly_from(QQ, {{-2, 2}}));
  CHECK_THROWS_AS(p.window(2, 1), std::invalid_argument);
}

TEST_CASE("window is idempotent and linear") {
  CounterRng rng(11);
  uint64_t ctr = 0;
  const Field f5 = Field::prime(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Field& f = (trial % 2) ? f5 : QQ;
    const LaurentPoly a = random_poly(rng, ctr, f, 8);
    const LaurentPoly b = random_poly(rng, ctr, f, 8);
    const Scalar c = rng.scalar(ctr++, f);
    const int lo = static_cast<int>(rng.int_in(ctr++, -8, 0));
    const int hi = lo + static_cast<int>(rng.below(ctr++, 9));
    CHECK(a.window(lo, hi).window(lo, hi) == a.window(lo, hi));
    CHECK((a + b * c).window(lo, hi) == a.window(lo, hi) + b.window(lo, hi) * c);
  }
}

TEST_CASE("derivative satisfies the Leibniz rule") {
  CounterRng rng(23);
  uint64_t ctr = 0;
  const Field f7 = Field::prime(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Field& f = (trial % 2) ? f7 : QQ;
    const LaurentPoly p = random_poly(rng, ctr, f, 8);
    const LaurentPoly q2 = random_poly(rng, ctr, f, 8);
    const LaurentPoly lhs = slow_multiply(p, q2).derivative();
    const LaurentPoly rhs = slow_multiply(p.derivative(), q2) + slow_multiply(p, q2.derivative());
    CHECK(lhs == rhs);
  }
}

TEST_CASE("product matches the independent convolution") {
  CounterRng rng(31);
  uint64_t ctr = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const LaurentPoly p = random_poly(rng, ctr, QQ, 6);
    const LaurentPoly q2 = random_poly(rng, ctr, QQ, 6);
    CHECK(p * q2 == slow_multiply(p, q2));
  }
}

TEST_CASE("rank_and_kernel on the stated matrices") {
  const ExactMatrix id3 = mat_from(QQ, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto rk = rank_and_kernel(id3);
  CHECK(rk.rank == 3);
  CHECK(rk.kernel.empty());

  const ExactMatrix z(QQ, 4, 2);
  rk = rank_and_kernel(z);
  CHECK(rk.rank == 0);
  CHECK(rk.kernel.size() == 2);

  const ExactMatrix m = mat_from(QQ, {{0, 2}, {1, 0}, {0, 0}, {0, 0}});
  rk = rank_and_kernel(m);
  CHECK(rk.rank == 2);
  CHECK(rk.kernel.empty());

  // cross-check: enumerate all null vectors of the mod-3 reduction
  const Field f3 = Field::prime(3);
  const ExactMatrix m3 = mat_from(f3, {{0, 2}, {1, 0}, {0, 0}, {0, 0}});
  int null_count = 0;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      const std::vector<Scalar> v{Scalar::from_int(x, f3), Scalar::from_int(y, f3)};
      const auto img = m3.apply(v);
      bool all_zero = true;
      for (const auto& s : img) all_zero = all_zero && s.is_zero();
      if (all_zero) ++null_count;
    }
  CHECK(null_count == 1);  // only the zero vector
  CHECK(rank_of(m3) == 2);
}

TEST_CASE("kernel vectors really are null vectors and dimensions add up") {
  CounterRng rng(47);
  uint64_t ctr = 0;
  const Field f101 = Field::prime(101);
  for (int trial = 0; trial < 50; ++trial) {
    const Field& f = (trial % 2) ? f101 : QQ;
    const int r = 1 + static_cast<int>(rng.below(ctr++, 6));
    const int c = 1 + static_cast<int>(rng.below(ctr++, 6));
    ExactMatrix m(f, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (rng.below(ctr++, 3) != 0) m.at(i, j) = rng.scalar(ctr++, f);
    const auto rk = rank_and_kernel(m);
    CHECK(rk.rank + static_cast<int>(rk.kernel.size()) == c);
    CHECK(rank_of(m.transposed()) == rk.rank);
    for (const auto& v : rk.kernel) {
      const auto img = m.apply(v);
      for (const auto& s : img) CHECK(s.is_zero());
    }
  }
}

TEST_CASE("rank over Q dominates rank over F_p, usually with equality") {
  CounterRng rng(59);
  uint64_t ctr = 0;
  const Field f101 = Field::prime(101);
  const Field f103 = Field::prime(103);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 2 + static_cast<int>(rng.below(ctr++, 5));
    const int c = 2 + static_cast<int>(rng.below(ctr++, 5));
    ExactMatrix mq(QQ, r, c);
    ExactMatrix m101(f101, r, c);
    ExactMatrix m103(f103, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        const long long v = rng.int_in(ctr++, -9, 9);
        mq.at(i, j) = Scalar::from_int(v, QQ);
        m101.at(i, j) = Scalar::from_int(v, f101);
        m103.at(i, j) = Scalar::from_int(v, f103);
      }
    const int rq = rank_of(mq);
    const int r1 = rank_of(m101);
    const int r2 = rank_of(m103);
    CHECK(rq >= r1);
    CHECK(rq >= r2);
    CHECK((rq == r1 || rq == r2));
  }
}

TEST_CASE("determinant by fraction-free elimination") {
  CHECK(determinant(mat_from(QQ, {{1, 2}, {3, 4}})) == q(-2));
  CHECK(determinant(mat_from(QQ, {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}})) == q(30));
  CHECK(determinant(mat_from(QQ, {{1, 2}, {2, 4}})).is_zero());
  const Field f7 = Field::prime(7);
  CHECK(determinant(mat_from(f7, {{1, 2}, {3, 4}})) == Scalar::from_int(-2, f7));
  // permutation needing a row swap
  CHECK(determinant(mat_from(QQ, {{0, 1}, {1, 0}})) == q(-1));
}

TEST_CASE("solve finds a particular solution or reports inconsistency") {
  const ExactMatrix a = mat_from(QQ, {{1, 1}, {0, 1}});
  const auto x = solve(a, {q(3), q(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == q(2));
  CHECK((*x)[1] == q(1));

  const ExactMatrix bad = mat_from(QQ, {{1, 1}, {1, 1}});
  CHECK_FALSE(solve(bad, {q(0), q(1)}).has_value());

  const ExactMatrix wide = mat_from(QQ, {{1, 2, 3}});
  const auto y = solve(wide, {q(6)});
  REQUIRE(y.has_value());
  auto img = wide.apply(*y);
  CHECK(img[0] == q(6));
}

TEST_CASE("bareiss keeps integer matrices integral along the way") {
  // a classic growth case: random 5x5 integer matrix; the result of
  // rank/determinant must agree with plain evaluation
  const ExactMatrix m = mat_from(QQ, {{3, 1, 4, 1, 5},
                                      {9, 2, 6, 5, 3},
                                      {5, 8, 9, 7, 9},
                                      {3, 2, 3, 8, 4},
                                      {6, 2, 6, 4, 3}});
  const Scalar d = determinant(m);
  CHECK(d.rat().get_den() == 1);
  CHECK(rank_of(m) == 5);
}
