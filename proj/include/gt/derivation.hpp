#pragma once

#include "gt/wordproblem.hpp"

namespace gt {

/// Proved group equality lhs = rhs, carried as the free-group identity
///   lhs * rhs^-1  =  prod_i conjugate(relator^sign_i, u_i).
/// All combinators preserve that invariant, so a derivation assembled from
/// relator axioms compiles directly into a checkable TrivialityProof.
struct Equation {
  Word lhs, rhs;
  std::vector<DerivationStep> steps;
};

// w = w
Equation eq_refl(const Word& w);
// r_j^sign = identity
Equation eq_relator(const Presentation& p, std::size_t j, int sign);
// lhs = rhs where lhs * rhs^-1 is exactly r_j^sign (throws otherwise)
Equation eq_relator_split(const Presentation& p, std::size_t j, int sign, const Word& lhs,
                          const Word& rhs);
// A = B  ->  B = A
Equation eq_symmetric(const Equation& e);
// A = B  ->  A^-1 = B^-1
Equation eq_inverted(const Equation& e);
// A = B, C = D  ->  AC = BD
Equation eq_product(const Equation& e1, const Equation& e2);
// A = B, B = C  ->  A = C   (reduced forms of the middle words must agree)
Equation eq_chain(const Equation& e1, const Equation& e2);
// A = B  ->  A^g = B^g
Equation eq_conjugated(const Equation& e, const Word& g);
// A = B  ->  A^k = B^k (k may be negative or zero)
Equation eq_power(const Equation& e, long k);

// requires rhs = identity
TrivialityProof to_proof(const Equation& e);

// verifies the free-group invariant directly (test oracle)
bool check_equation(const Presentation& p, const Equation& e);

// Proof that a word in the two generators of the commutator relator
// r_{rel} = g h g^-1 h^-1 with zero exponent sums is trivial, using only
// that relator.  Works by peeling unit squares off the closed lattice loop
// traced by z; the step count is bounded by the enclosed area.
TrivialityProof prove_lattice_trivial(const Presentation& p, std::size_t rel, const Word& z);

}  // namespace gt
