#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gt/words.hpp"

namespace gt {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finitely presented group: ordered generators plus relator words
/// (each relator is a word equal to the identity).
struct Presentation {
  AlphabetPtr alphabet;
  std::vector<Word> relators;
  std::string label;

  Word word(const std::string& text) const { return parse_word(alphabet, text); }
};

// line-oriented presentation grammar:
//   gens: <name> <name> ...     (exactly one, first non-comment line)
//   rel: <word>                 (zero or more)
// '#' starts a comment
Presentation parse_presentation(const std::string& text);
std::string render_presentation(const Presentation& p);

// <x,y | y^-1 x y x>
Presentation klein_bottle();

// F(2,m): m generators a1..am, relators a_i a_{i+1} a_{i+2}^{-1}, indices cyclic in 1..m
Presentation fibonacci(long m);

// <l,m,t | [l,m], t^-1 l t (l^a m^b)^-1, t^-1 m t (l^c m^d)^-1>, ad - bc = +-1
Presentation torus_bundle(const Int& a, const Int& b, const Int& c, const Int& d);

// G(p,q,m) = <a,b,t | t^-1 a t (a b a^{m-1})^-1, t^-1 b t a, t^p [a,b]^q>, gcd(p,q) = 1
Presentation rss(const Int& p, const Int& q, const Int& m);

// nontrivial circle bundle over the Klein bottle: <x,y | [x^2 y^2, x], [x^2 y^2, y]>
Presentation kb_circle_bundle();

// family shorthand accepted by the CLI:
//   fibonacci:m=8  torusbundle:a=0,b=-1,c=1,d=-1  rss:p=5,q=2,m=-3  klein  kbcircle
std::optional<Presentation> parse_family(const std::string& shorthand);

}  // namespace gt
