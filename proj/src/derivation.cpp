#include "gt/derivation.hpp"

namespace gt {

Equation eq_refl(const Word& w) { return {w, w, {}}; }

Equation eq_relator(const Presentation& p, std::size_t j, int sign) {
  if (j >= p.relators.size()) throw std::out_of_range("relator index out of range");
  const Word& r = p.relators[j];
  Word eps = Word::identity(r.alphabet_ptr());
  return {sign > 0 ? r : r.inverse(), eps, {{eps, j, sign}}};
}

Equation eq_relator_split(const Presentation& p, std::size_t j, int sign, const Word& lhs,
                          const Word& rhs) {
  if (j >= p.relators.size()) throw std::out_of_range("relator index out of range");
  const Word& r = p.relators[j];
  Word body = sign > 0 ? r : r.inverse();
  if (!(lhs * rhs.inverse() == body)) {
    throw derivation_error("lhs * rhs^-1 is not the requested relator");
  }
  return {lhs, rhs, {{Word::identity(lhs.alphabet_ptr()), j, sign}}};
}

Equation eq_symmetric(const Equation& e) {
  Equation out{e.rhs, e.lhs, {}};
  out.steps.reserve(e.steps.size());
  for (auto it = e.steps.rbegin(); it != e.steps.rend(); ++it) {
    out.steps.push_back({it->conjugator, it->relator_index, -it->sign});
  }
  return out;
}

Equation eq_inverted(const Equation& e) {
  Equation out{e.lhs.inverse(), e.rhs.inverse(), {}};
  out.steps.reserve(e.steps.size());
  for (auto it = e.steps.rbegin(); it != e.steps.rend(); ++it) {
    out.steps.push_back({it->conjugator * e.lhs, it->relator_index, -it->sign});
  }
  return out;
}

Equation eq_product(const Equation& e1, const Equation& e2) {
  Equation out{e1.lhs * e2.lhs, e1.rhs * e2.rhs, {}};
  out.steps.reserve(e1.steps.size() + e2.steps.size());
  Word a_inv = e1.lhs.inverse();
  for (const auto& s : e2.steps) {
    out.steps.push_back({s.conjugator * a_inv, s.relator_index, s.sign});
  }
  out.steps.insert(out.steps.end(), e1.steps.begin(), e1.steps.end());
  return out;
}

Equation eq_chain(const Equation& e1, const Equation& e2) {
  if (!(e1.rhs == e2.lhs)) throw derivation_error("chained equations do not meet");
  Equation out{e1.lhs, e2.rhs, e1.steps};
  out.steps.insert(out.steps.end(), e2.steps.begin(), e2.steps.end());
  return out;
}

Equation eq_conjugated(const Equation& e, const Word& g) {
  Equation out{e.lhs.conjugated_by(g), e.rhs.conjugated_by(g), {}};
  out.steps.reserve(e.steps.size());
  for (const auto& s : e.steps) {
    out.steps.push_back({s.conjugator * g, s.relator_index, s.sign});
  }
  return out;
}

Equation eq_power(const Equation& e, long k) {
  Word eps = Word::identity(e.lhs.alphabet_ptr());
  Equation base = k < 0 ? eq_inverted(e) : e;
  long n = std::labs(k);
  Equation out = eq_refl(eps);
  for (long i = 0; i < n; ++i) out = eq_product(out, base);
  return out;
}

TrivialityProof to_proof(const Equation& e) {
  if (!e.rhs.is_identity()) throw derivation_error("equation rhs is not the identity");
  return {e.lhs, e.steps};
}

bool check_equation(const Presentation& p, const Equation& e) {
  TrivialityProof proof{e.lhs * e.rhs.inverse(), e.steps};
  return check_proof(p, proof);
}

TrivialityProof prove_lattice_trivial(const Presentation& p, std::size_t rel, const Word& z) {
  if (rel >= p.relators.size()) throw std::out_of_range("relator index out of range");
  const Word& r = p.relators[rel];
  const auto& rs = r.syllables();
  if (rs.size() != 4 || rs[0].exp != 1 || rs[1].exp != 1 || rs[2].exp != -1 || rs[3].exp != -1 ||
      rs[0].gen != rs[2].gen || rs[1].gen != rs[3].gen) {
    throw derivation_error("relator is not a commutator of two generators");
  }
  const int G = rs[0].gen, H = rs[1].gen;
  const AlphabetPtr& alpha = z.alphabet_ptr();
  if (!(*alpha == r.alphabet())) throw word_error("alphabet mismatch");

  if (z.exponent_sum(G) != 0 || z.exponent_sum(H) != 0) {
    throw derivation_error("word does not have zero exponent sums");
  }
  if (z.is_identity()) return {z, {}};
  if (z.length() > 2'000'000) throw derivation_error("lattice word too long");

  // letters of z
  std::vector<std::pair<int, int>> letters;  // (axis, dir); axis 0 = g, 1 = h
  for (const auto& s : z.syllables()) {
    if (s.gen != G && s.gen != H) {
      throw derivation_error("word uses generators outside the commutator relator");
    }
    int axis = s.gen == G ? 0 : 1;
    int dir = s.exp > 0 ? 1 : -1;
    long n = static_cast<long>(abs(s.exp));
    for (long i = 0; i < n; ++i) letters.emplace_back(axis, dir);
  }

  // sort all g-letters in front of all h-letters by adjacent swaps; the sorted
  // word is g^0 h^0 because both exponent sums vanish.  an adjacent swap
  // x y -> y x (x an h-letter, y a g-letter) inserts A [x,y] A^-1 where A is
  // the prefix before x, and each such [x,y] is a conjugate of r^+-1:
  //   [h, g]       = r^-1
  //   [h, g^-1]    = g^-1 r g
  //   [h^-1, g]    = h^-1 r h
  //   [h^-1, g^-1] = (g h)^-1 r^-1 (g h)
  Word g1 = Word::power(alpha, G, 1);
  Word h1 = Word::power(alpha, H, 1);
  Word eps = Word::identity(alpha);
  Word gh = g1 * h1;

  // the prefix letters[0..i), kept in freely reduced form
  std::vector<Syllable> reduced;
  auto push_reduced = [&](int axis, int dir) {
    int gen = axis == 0 ? G : H;
    if (!reduced.empty() && reduced.back().gen == gen) {
      reduced.back().exp += dir;
      if (reduced.back().exp == 0) reduced.pop_back();
    } else {
      reduced.push_back({gen, Int(dir)});
    }
  };

  TrivialityProof proof{z, {}};
  std::size_t i = 0;
  while (i < letters.size()) {
    if (i == 0 || !(letters[i - 1].first == 1 && letters[i].first == 0)) {
      push_reduced(letters[i].first, letters[i].second);
      ++i;
      continue;
    }
    auto [xa, xd] = letters[i - 1];  // h-letter
    auto [ya, yd] = letters[i];      // g-letter
    push_reduced(xa, -xd);  // drop x: the conjugating prefix is letters[0..i-1)
    const Word* u;
    int sign;
    if (xd > 0 && yd > 0) {
      u = &eps;
      sign = -1;
    } else if (xd > 0) {
      u = &g1;
      sign = 1;
    } else if (yd > 0) {
      u = &h1;
      sign = 1;
    } else {
      u = &gh;
      sign = -1;
    }
    Word prefix(alpha, reduced);
    proof.steps.push_back({*u * prefix.inverse(), rel, sign});
    std::swap(letters[i - 1], letters[i]);
    --i;
  }
  return proof;
}

}  // namespace gt
