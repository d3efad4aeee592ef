#include <doctest.h>

#include "gt/coset.hpp"

using namespace gt;

TEST_CASE("orders of the small fibonacci groups") {
  for (auto [m, order] : std::vector<std::pair<long, long>>{{3, 8}, {4, 5}, {5, 11}, {7, 29}}) {
    CosetTable t = enumerate_cosets(fibonacci(m), {});
    REQUIRE(t.status() == CosetTable::Status::Complete);
    CHECK(t.n_cosets() == order);
  }
}

TEST_CASE("enumeration over standard finite groups") {
  // symmetric group S3
  Presentation s3 = parse_presentation("gens: r s\nrel: r^3\nrel: s^2\nrel: (r s)^2\n");
  CosetTable t = enumerate_cosets(s3, {});
  REQUIRE(t.status() == CosetTable::Status::Complete);
  CHECK(t.n_cosets() == 6);
  CHECK(t.order_of(s3.word("r")) == 3);
  CHECK(t.order_of(s3.word("s")) == 2);
  CHECK(t.order_of(s3.word("r s")) == 2);
  CHECK(t.is_identity(s3.word("(r s)^2")));
  CHECK(!t.is_identity(s3.word("r")));

  // index of <r> in S3 is 2
  CosetTable sub = enumerate_cosets(s3, {s3.word("r")});
  REQUIRE(sub.status() == CosetTable::Status::Complete);
  CHECK(sub.n_cosets() == 2);

  // trivial presentation collapses to one coset
  Presentation triv = parse_presentation("gens: g\nrel: g\n");
  CHECK(enumerate_cosets(triv, {}).n_cosets() == 1);
}

TEST_CASE("subgroup enumeration in an infinite group") {
  Presentation p = klein_bottle();
  // <x, y^2> has index 2 in the Klein bottle group
  CosetTable t = enumerate_cosets(p, {p.word("x"), p.word("y^2")});
  REQUIRE(t.status() == CosetTable::Status::Complete);
  CHECK(t.n_cosets() == 2);
  // whole group: index 1
  CHECK(enumerate_cosets(p, {p.word("x"), p.word("y")}).n_cosets() == 1);
}

TEST_CASE("enumeration aborts at the coset limit") {
  CosetTable t = enumerate_cosets(klein_bottle(), {}, 100);
  CHECK(t.status() == CosetTable::Status::Aborted);
  CHECK(t.limit() == 100);
}

TEST_CASE("generator actions are permutations and respect relators") {
  Presentation p = fibonacci(5);
  CosetTable t = enumerate_cosets(p, {});
  REQUIRE(t.status() == CosetTable::Status::Complete);
  for (std::size_t g = 0; g < p.alphabet->size(); ++g) {
    const auto& perm = t.action(static_cast<int>(g));
    std::vector<bool> hit(perm.size(), false);
    for (long img : perm) {
      REQUIRE(img >= 0);
      REQUIRE(img < t.n_cosets());
      CHECK(!hit[static_cast<std::size_t>(img)]);
      hit[static_cast<std::size_t>(img)] = true;
    }
  }
  for (const Word& r : p.relators) CHECK(t.is_identity(r));
}

TEST_CASE("word evaluation in the regular representation") {
  Presentation p = fibonacci(4);
  CosetTable t = enumerate_cosets(p, {});
  REQUIRE(t.n_cosets() == 5);
  Word a = p.word("a1"), b = p.word("a2");
  // a1 generates the cyclic group of order 5
  CHECK(t.order_of(a) == 5);
  // the certificate product for m = 4: a * (a^{b^-2})^3 * a^{b^-1} = 1
  Word product = a * a.conjugated_by(b.pow(-2)).pow(3) * a.conjugated_by(b.inverse());
  CHECK(t.is_identity(product));
  CHECK(!t.is_identity(a));
  // evaluate handles huge exponents via cycle decomposition
  CHECK(t.evaluate(a.pow(Int("10000000000000000000000000001"))) == t.evaluate(a));
  CHECK(t.base_image(a) == t.action(0)[0]);
}

TEST_CASE("relators outside the alphabet are rejected") {
  Presentation p = klein_bottle();
  Presentation q = fibonacci(3);
  CHECK_THROWS(enumerate_cosets(p, {q.word("a1")}));
}
