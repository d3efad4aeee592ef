#include <doctest.h>

#include <random>

#include "gt/abelian.hpp"

using namespace gt;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

void check_smith(const IntMatrix& m) {
  SmithResult s = smith_normal_form(m);
  // U*M*V = D
  CHECK(s.U * m * s.V == s.D);
  // U and V are unimodular
  CHECK(abs(s.U.determinant()) == 1);
  CHECK(abs(s.V.determinant()) == 1);
  // D is diagonal, nonnegative, with the divisibility chain
  Int prev = 0;
  bool seen_zero = false;
  for (std::size_t r = 0; r < s.D.rows(); ++r) {
    for (std::size_t c = 0; c < s.D.cols(); ++c) {
      if (r != c) CHECK(s.D.at(r, c) == 0);
    }
    if (r < s.D.cols()) {
      const Int& d = s.D.at(r, r);
      CHECK(d >= 0);
      if (d == 0) seen_zero = true;
      else {
        CHECK(!seen_zero);  // zeros come last
        if (prev != 0) CHECK(d % prev == 0);
        prev = d;
      }
    }
  }
}

}  // namespace

TEST_CASE("matrix determinant") {
  CHECK(IntMatrix::identity(4).determinant() == 1);
  CHECK(from_rows({{2, 4}, {6, 8}}).determinant() == -8);
  CHECK(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).determinant() == 0);
}

TEST_CASE("smith normal form on known matrices") {
  SmithResult s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
  CHECK(s.D.at(0, 0) == 2);
  CHECK(s.D.at(1, 1) == 4);
  check_smith(from_rows({{2, 4}, {6, 8}}));

  // diag(2,3) has invariant factors 1, 6 after the divisibility fixup
  SmithResult t = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
  CHECK(t.D.at(0, 0) == 1);
  CHECK(t.D.at(1, 1) == 6);

  SmithResult z = smith_normal_form(from_rows({{0, 0}, {0, 0}}));
  CHECK(z.D.at(0, 0) == 0);
  CHECK(z.D.at(1, 1) == 0);

  // non-square shapes
  check_smith(from_rows({{3, 1, -2}}));
  check_smith(from_rows({{4}, {6}, {10}}));
}

TEST_CASE("smith normal form properties on random matrices") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<long> entry(-100, 100);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
    }
    check_smith(m);
  }
}

TEST_CASE("smith normal form is deterministic") {
  IntMatrix m = from_rows({{6, 4, 2}, {3, 9, 8}, {1, 0, 5}});
  SmithResult s1 = smith_normal_form(m);
  SmithResult s2 = smith_normal_form(m);
  CHECK(s1.U == s2.U);
  CHECK(s1.V == s2.V);
  CHECK(s1.D == s2.D);
}

TEST_CASE("relator exponent matrix") {
  IntMatrix m = relator_matrix(klein_bottle());
  REQUIRE(m.rows() == 1);
  REQUIRE(m.cols() == 2);
  CHECK(m.at(0, 0) == 2);  // y^-1 x y x
  CHECK(m.at(0, 1) == 0);
}

TEST_CASE("klein bottle abelianization is Z + Z/2") {
  Presentation p = klein_bottle();
  AbelianInvariants inv(p);
  CHECK(inv.torsion() == std::vector<Int>{2});
  CHECK(inv.free_rank() == 1);
  CHECK(inv.torsion_order(p.word("x")) == Int(2));
  CHECK(inv.torsion_order(p.word("x^2")) == Int(1));
  CHECK(!inv.torsion_order(p.word("y")));  // infinite order
  // x^2 dies in H1 but y does not
  bool x2_zero = true;
  for (const Int& v : inv.image(p.word("x^2"))) x2_zero = x2_zero && v == 0;
  CHECK(x2_zero);
  bool y_zero = true;
  for (const Int& v : inv.image(p.word("y"))) y_zero = y_zero && v == 0;
  CHECK(!y_zero);
}

TEST_CASE("rss abelianization: t has additive order p") {
  Presentation p = rss(5, 2, -3);
  AbelianInvariants inv(p);
  // rows (1-m, -1, 0), (1, 1, 0), (0, 0, p): H1 = Z/|m-2| + Z/p here Z/5 + Z/5
  CHECK(inv.torsion() == std::vector<Int>{5, 5});
  CHECK(inv.free_rank() == 0);
  CHECK(inv.torsion_order(p.word("t")) == Int(5));

  Presentation p2 = rss(9, 4, 0);
  AbelianInvariants inv2(p2);
  CHECK(inv2.torsion_order(p2.word("t")) == Int(9));
  // weight-9 products of conjugates of t die in H1
  bool zero = true;
  for (const Int& v : inv2.image(p2.word("t^9"))) zero = zero && v == 0;
  CHECK(zero);
}

TEST_CASE("fibonacci abelianizations are finite") {
  // m=3 gives Q8 with H1 = Z/2 + Z/2; m=4, 5 give cyclic groups of order 5, 11
  for (auto [m, order] : std::vector<std::pair<long, long>>{{3, 4}, {4, 5}, {5, 11}}) {
    AbelianInvariants inv(fibonacci(m));
    CHECK(inv.free_rank() == 0);
    Int prod = 1;
    for (const Int& d : inv.torsion()) prod *= d;
    CHECK(prod == order);
  }
}

TEST_CASE("free groups have free abelianization") {
  Presentation p;
  p.alphabet = make_alphabet({"a", "b"});
  AbelianInvariants inv(p);
  CHECK(inv.torsion().empty());
  CHECK(inv.free_rank() == 2);
  bool comm_zero = true;
  for (const Int& v : inv.image(p.word("a b a^-1 b^-1"))) comm_zero = comm_zero && v == 0;
  CHECK(comm_zero);
  bool a_zero = true;
  for (const Int& v : inv.image(p.word("a"))) a_zero = a_zero && v == 0;
  CHECK(!a_zero);
}
