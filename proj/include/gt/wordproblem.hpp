#pragma once

#include "gt/presentation.hpp"

namespace gt {

/// Normal form x^p y^q in the Klein bottle group <x,y | y^-1 x y x>.
/// Multiplication: (p,q)(p',q') = (p + (-1)^q p', q + q').
struct KleinElement {
  Int p = 0, q = 0;
  bool is_identity() const { return p == 0 && q == 0; }
  bool operator==(const KleinElement&) const = default;
  KleinElement operator*(const KleinElement& other) const;
};

KleinElement klein_eval(const Word& w);

/// Exact 2x2 integer matrix, used for monodromy actions.
struct Mat2 {
  Int a, b, c, d;  // [[a,b],[c,d]]
  bool operator==(const Mat2&) const = default;
  Int det() const { return a * d - b * c; }
  Int trace() const { return a + d; }
  static Mat2 identity() { return {1, 0, 0, 1}; }
  Mat2 operator*(const Mat2& other) const;
  // requires det = +-1; negative powers via the adjugate
  Mat2 pow(const Int& k) const;
  // column-vector action
  std::pair<Int, Int> apply(const Int& v1, const Int& v2) const;
};

/// Normal form l^{v1} m^{v2} t^k in the torus-bundle group with monodromy A;
/// conjugation by t maps the lattice by v -> A^T v, so t^-1 l t = l^a m^b.
struct TBElement {
  Int v1 = 0, v2 = 0, k = 0;
  bool is_identity() const { return v1 == 0 && v2 == 0 && k == 0; }
  bool operator==(const TBElement&) const = default;
};

TBElement tb_mul(const Mat2& A, const TBElement& x, const TBElement& y);
TBElement tb_eval(const Mat2& A, const Word& w);

/// One conjugated-relator factor of a triviality proof.
struct DerivationStep {
  Word conjugator;
  std::size_t relator_index;
  int sign;  // +1 or -1
};

/// Witness that `target` is trivial in the group: the free-group identity
/// target = prod_i conjugate(relator_{j_i}^{s_i}, u_i)  (g^u = u^-1 g u).
struct TrivialityProof {
  Word target;
  std::vector<DerivationStep> steps;
};

// true iff the conjugated-relator product freely reduces to proof.target;
// throws on an out-of-range relator index or alphabet mismatch
bool check_proof(const Presentation& p, const TrivialityProof& proof);

/// One relator-substitution rewrite: at letter offset `position` of the
/// current (freely reduced) word, delete an explicit occurrence of
/// relator^sign, or insert one.
struct RewriteOp {
  enum class Kind { Delete, Insert };
  Kind kind;
  Int position;
  std::size_t relator_index;
  int sign;
};

// replay a rewrite sequence start -> ... -> identity and emit the equivalent
// proof with target `start`; throws derivation_error if a Delete does not
// match the word or the trace does not end at the identity
struct derivation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TrivialityProof compile_rewrite_trace(const Presentation& p, const Word& start,
                                      const std::vector<RewriteOp>& trace);

}  // namespace gt
