// End-to-end acceptance checks, one pass/fail line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "gt/certfile.hpp"
#include "gt/classify.hpp"
#include "helpers.hpp"

using namespace gt;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  std::string name;
  std::function<bool()> run;
};

bool all_zero(const std::vector<Int>& v) {
  for (const Int& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Int fib(long n) {  // F_1 = F_2 = 1
  Int a = 1, b = 1;
  for (long i = 2; i < n; ++i) {
    Int t = a + b;
    a = b;
    b = t;
  }
  return n <= 0 ? Int(0) : b;
}

// ---- 1. orders of the small fibonacci groups, each within 5 seconds --------

bool small_fibonacci_orders() {
  for (auto [m, order] : std::vector<std::pair<long, long>>{{3, 8}, {4, 5}, {5, 11}, {7, 29}}) {
    auto t0 = Clock::now();
    CosetTable t = enumerate_cosets(fibonacci(m), {});
    double dt = seconds_since(t0);
    if (t.status() != CosetTable::Status::Complete || t.n_cosets() != order) return false;
    if (dt >= 5.0) return false;
  }
  return true;
}

// ---- 2. closed forms for the exponent sums of both recursions --------------

bool exponent_sum_closed_forms() {
  for (long m = 3; m <= 20; ++m) {
    for (long i = 3; i <= m; ++i) {
      if (canonical_expression(m, i).exponent_sum(1) != fib(i - 1)) return false;
    }
    for (long i = 1; i <= m; ++i) {
      Int sign = (m + i) % 2 == 0 ? 1 : -1;
      if (noncanonical_expression(m, i).exponent_sum(1) != sign * fib(m + 1 - i)) return false;
    }
  }
  return true;
}

// ---- 3. fibonacci certificates check out, small cases corroborated ---------

bool fibonacci_certificates() {
  auto t0 = Clock::now();
  for (long m = 3; m <= 12; ++m) {
    GtCertificate c = build_fibonacci_certificate(m);
    if (!(certificate_product(c) == c.proof.target)) return false;
    if (!check_proof(c.presentation, c.proof)) return false;
    if (m == 3 || m == 4 || m == 5 || m == 7) {
      VerificationReport rep = verify(c, {Method::Proof, Method::Abelian, Method::Coset});
      if (rep.coset != CheckStatus::Pass) return false;
      if (rep.overall != VerificationReport::Overall::Verified) return false;
    }
  }
  return seconds_since(t0) < 10.0;
}

// ---- 4. torus-bundle factorizations for 200 random case-shaped matrices ----

bool torus_bundle_factorizations() {
  std::mt19937 rng(1048573);
  int found = 0;
  while (found < 200) {
    Mat2 A = testutil::random_sl2(rng, 6, 5);
    if (!testutil::entries_within(A, 50) || A.trace() >= 0) continue;
    bool case1 = A.a <= 0 && A.d <= 0, case2 = A.a > 0 && A.d < 0;
    if (!case1 && !case2) continue;
    ++found;
    auto t0 = Clock::now();

    Presentation p = torus_bundle(A.a, A.b, A.c, A.d);
    Word l = p.word("l"), t = p.word("t");
    Word eps = Word::identity(p.alphabet);
    std::vector<std::pair<Word, Int>> factors;
    if (case1) {
      factors.push_back({eps, 1});
      if (A.d < 0) factors.push_back({t, -A.d});
      if (A.a < 0) factors.push_back({t, -A.a});
      factors.push_back({t * t, 1});
    } else {
      factors = {{eps, 1}, {t, -A.a - A.d}, {t * t, 1}};
    }
    Word product = eps;
    for (const auto& [conj, mult] : factors) {
      if (mult < 1) return false;
      product = product * l.conjugated_by(conj).pow(mult);
    }
    if (!tb_eval(A, product).is_identity()) return false;
    if (tb_eval(A, l).is_identity()) return false;
    if (seconds_since(t0) >= 1.0) return false;
  }
  return true;
}

// ---- 5. conjugation identities in 100 random torus-bundle groups -----------

bool torus_bundle_identities() {
  std::mt19937 rng(9973);
  for (int trial = 0; trial < 100; ++trial) {
    Mat2 A = testutil::random_sl2(rng, 6, 6);
    Presentation p = torus_bundle(A.a, A.b, A.c, A.d);
    Word l = p.word("l"), m = p.word("m"), t = p.word("t");
    Word lt = l.conjugated_by(t), mt = m.conjugated_by(t);
    TBElement lhs = tb_eval(A, lt.pow(-A.d));
    TBElement rhs = tb_eval(A, Word::power(p.alphabet, 0, -A.a * A.d) *
                                   Word::power(p.alphabet, 1, -A.b * A.d));
    if (!(lhs == rhs)) return false;
    if (!tb_eval(A, l * lt.pow(-A.d) * mt.pow(A.b)).is_identity()) return false;
  }
  return true;
}

// ---- 6. the full admissible rss grid --------------------------------------

bool rss_grid() {
  for (long p = 2; p <= 9; ++p) {
    for (long q = 1; 2 * q <= p; ++q) {
      if (2 * q <= 1 || gcd(Int(p), Int(q)) != 1) continue;
      for (long m = -5; m <= 5; ++m) {
        GtCertificate c = build_rss_certificate(p, q, m);
        if (!(certificate_product(c) == c.proof.target)) return false;
        if (!check_proof(c.presentation, c.proof)) return false;
        if (certificate_weight(c) != p) return false;

        AbelianInvariants inv(c.presentation);
        Word t = c.presentation.word("t");
        // weight * [t] dies in H1
        if (!all_zero(inv.image(t.pow(p)))) return false;
        auto ord = inv.torsion_order(t);
        if (!ord || Int(p) % *ord != 0) return false;
        // when H1 = Z/|m-2| + Z/p on the nose, [t] has order exactly p
        if (m != 2 && inv.torsion() == std::vector<Int>{Int(std::labs(m - 2)), Int(p)}) {
          if (*ord != p) return false;
        }
      }
    }
  }
  return true;
}

// ---- 7. 1000 commutator-power decompositions in the free group -------------

bool commutator_power_identities() {
  auto al = make_alphabet({"x", "y"});
  std::mt19937 rng(123456789);
  for (int trial = 0; trial < 1000; ++trial) {
    Word e = testutil::random_word(rng, al, 1 + static_cast<int>(rng() % 3));
    Word f = testutil::random_word(rng, al, 1 + static_cast<int>(rng() % 3));
    long alpha = 1 + static_cast<long>(rng() % 8);
    ConjugacyDecomposition d = build_commutator_power_certificate(e, f, alpha);
    if (d.conjugators.size() != static_cast<std::size_t>(alpha)) return false;
    Word prod = Word::identity(al);
    for (const Word& c : d.conjugators) prod = prod * d.base.conjugated_by(c);
    if (!(prod == commutator(e.pow(alpha), f))) return false;
  }
  return true;
}

// ---- 8. 1000 random claim decompositions ----------------------------------

bool claim_decompositions() {
  auto al = make_alphabet({"a", "b"});
  Word a = Word::power(al, 0, 1), b = Word::power(al, 1, 1);
  std::mt19937 rng(24601);
  for (int trial = 0; trial < 1000; ++trial) {
    int k = 1 + static_cast<int>(rng() % 6);
    Word w = Word::identity(al);
    Int bsum = 0;
    for (int i = 0; i < k; ++i) {
      Int ae = 1 + static_cast<long>(rng() % 5);
      Int be = static_cast<long>(rng() % 9) - 4;
      if (i == k - 1) be = -bsum;
      bsum += be;
      w = w * a.pow(ae) * b.pow(be);
    }
    Word prod = Word::identity(al);
    for (const auto& [conj, mult] : claim_decomposition(w)) {
      if (mult < 1) return false;
      prod = prod * a.conjugated_by(conj).pow(mult);
    }
    if (!(prod == w)) return false;
  }
  return true;
}

// ---- 9. smith normal form on 500 random matrices ---------------------------

bool smith_properties() {
  std::mt19937 rng(31415926);
  std::uniform_int_distribution<long> entry(-100, 100);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int trial = 0; trial < 500; ++trial) {
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = entry(rng);
    }
    SmithResult s = smith_normal_form(m);
    if (!(s.U * m * s.V == s.D)) return false;
    if (abs(s.U.determinant()) != 1 || abs(s.V.determinant()) != 1) return false;
    Int prev = 0;
    for (std::size_t i = 0; i < s.D.rows() && i < s.D.cols(); ++i) {
      for (std::size_t c = 0; c < s.D.cols(); ++c) {
        if (c != i && s.D.at(i, c) != 0) return false;
      }
      const Int& d = s.D.at(i, i);
      if (d < 0) return false;
      if (prev == 0 && d != 0 && i > 0) return false;  // zeros must come last
      if (prev != 0 && d != 0 && d % prev != 0) return false;
      prev = d;
    }
  }
  return true;
}

// ---- 10. classifier vs eigenvalue-sign oracle on 1000 random matrices ------

bool classifier_oracle() {
  std::mt19937 rng(816693);
  int n = 0;
  while (n < 1000) {
    Mat2 A = testutil::random_gl2(rng, 4, 3);
    if (!testutil::entries_within(A, 9)) continue;  // keep attached proofs small
    ++n;
    Verdict v = classify_torus_bundle(A);
    bool positive_eig = A.det() == -1 || (A.det() == 1 && A.trace() >= 2);
    if ((v.status == OrderStatus::BiOrderable) != positive_eig) return false;
    if (A.det() == -1 && v.status != OrderStatus::BiOrderable) return false;

    bool case_shaped = (A.a <= 0 && A.d <= 0) || (A.a > 0 && A.d < 0);
    if (A.det() == 1 && A.trace() <= -2 && case_shaped) {
      if (!v.certificate) return false;
      VerificationReport rep =
          verify(*v.certificate, {Method::Proof, Method::Abelian, Method::NormalForm});
      if (rep.overall != VerificationReport::Overall::Verified) return false;
      if (rep.normal_form != CheckStatus::Pass) return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"small fibonacci group orders via coset enumeration", small_fibonacci_orders},
      {"exponent-sum closed forms for both canonical recursions", exponent_sum_closed_forms},
      {"fibonacci certificates build, check, and corroborate", fibonacci_certificates},
      {"torus-bundle factor products vanish for 200 random monodromies",
       torus_bundle_factorizations},
      {"torus-bundle conjugation identities for 100 random monodromies",
       torus_bundle_identities},
      {"rss certificates and abelian invariants across the admissible grid", rss_grid},
      {"1000 commutator-power decompositions are free identities",
       commutator_power_identities},
      {"1000 claim decompositions reconstruct their words", claim_decompositions},
      {"smith normal form properties on 500 random matrices", smith_properties},
      {"classifier matches the eigenvalue-sign oracle on 1000 matrices", classifier_oracle},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    bool ok = false;
    try {
      ok = criteria[i].run();
    } catch (const std::exception& e) {
      std::cout << "criterion " << i + 1 << " threw: " << e.what() << "\n";
    }
    std::cout << (ok ? "PASS" : "FAIL") << ": " << criteria[i].name << std::endl;
    if (!ok) ++failed;
  }
  return failed;
}
