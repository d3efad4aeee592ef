#pragma once

#include <optional>
#include <set>

#include "gt/abelian.hpp"
#include "gt/coset.hpp"
#include "gt/derivation.hpp"

namespace gt {

struct certificate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EvidenceKind { AbelianizationNonzero, FiniteQuotient, NormalForm, Cited };

/// Machine-checkable (or cited) witness that the base element is nontrivial.
struct NontrivialityEvidence {
  EvidenceKind kind = EvidenceKind::Cited;
  // FiniteQuotient: relators appended to the presentation to reach a finite
  // quotient where the base survives; empty = the presentation itself
  std::vector<Word> extra_relators;
  // NormalForm: engine id, "klein" or "torusbundle"
  std::string engine;
  // Cited: justification text, no machine check
  std::string citation;
};

/// Witness that `base` is a generalized torsion element: a non-empty product
/// of conjugates of base equal to the identity, with a triviality proof for
/// the product and nontriviality evidence for the base.
struct GtCertificate {
  Presentation presentation;
  Word base;
  std::vector<std::pair<Word, Int>> factors;  // (conjugator, multiplicity >= 1)
  TrivialityProof proof;
  NontrivialityEvidence evidence;
};

// freely reduced product prod_i conjugate(base, c_i)^{m_i}
Word certificate_product(const GtCertificate& c);
// sum of multiplicities
Int certificate_weight(const GtCertificate& c);

// x * x^y = 1 in <x,y | y^-1 x y x>
GtCertificate build_klein_certificate();

/// Conditional decomposition: conjugators c_i with
/// prod_i base^{c_i} freely equal to [e^alpha, f], base = [e,f].
struct ConjugacyDecomposition {
  Word base;
  std::vector<Word> conjugators;
};
ConjugacyDecomposition build_commutator_power_certificate(const Word& e, const Word& f,
                                                          long alpha);

// monodromy [[a,b],[c,d]], det 1, trace < 0, and a,d <= 0 or a > 0 > d
GtCertificate build_torus_bundle_certificate(const Int& a, const Int& b, const Int& c,
                                             const Int& d);

// positive word equal to a_i in F(2,m), built from w_{i+2} = w_i w_{i+1}
// starting at a_1, a_2; b-exponent sum is Fibonacci(i-1)
Word canonical_expression(long m, long i);
// word equal to a_i built downward from a_m = b a^-1, a_{m-1} = a^2 b^-1
// via a_i = a_{i+2} a_{i+1}^-1; b-exponent sum is (-1)^{m+i} Fibonacci(m+1-i)
Word noncanonical_expression(long m, long i);

// w = a^{m1} b^{n1} ... a^{mk} b^{nk} with positive a-blocks and zero total
// b-sum -> factors (b^{-(n1+...+n_{j-1})}, m_j) whose conjugate-of-a product
// freely equals w
std::vector<std::pair<Word, Int>> claim_decomposition(const Word& w);

GtCertificate build_fibonacci_certificate(long m);

// G(p,q,m), gcd(p,q) = 1, p >= 2q > 1; base t with p factors total
GtCertificate build_rss_certificate(const Int& p, const Int& q, const Int& m);

// [x,y] in the unit-circle bundle over the Klein bottle <x,y | [x^2y^2,x], [x^2y^2,y]>
GtCertificate build_kbcircle_certificate();

enum class Method { Proof, Coset, NormalForm, Abelian };
enum class CheckStatus { Pass, Fail, Unavailable };

struct VerificationReport {
  CheckStatus proof = CheckStatus::Unavailable;
  CheckStatus coset = CheckStatus::Unavailable;
  CheckStatus normal_form = CheckStatus::Unavailable;
  CheckStatus abelian = CheckStatus::Unavailable;
  CheckStatus evidence = CheckStatus::Unavailable;
  enum class Overall { Verified, ConditionallyVerified, Failed };
  Overall overall = Overall::Failed;
};

// proof, abelian necessary condition, and evidence are always checked (they
// decide `overall`); Coset and NormalForm corroboration run only if requested
VerificationReport verify(const GtCertificate& c, const std::set<Method>& methods,
                          long max_cosets = 1'000'000);
VerificationReport verify(const GtCertificate& c);

// monodromy recovered from a torus-bundle family label, if present
std::optional<Mat2> monodromy_of(const Presentation& p);

}  // namespace gt
