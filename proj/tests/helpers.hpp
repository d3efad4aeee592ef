#pragma once

#include <random>

#include "gt/wordproblem.hpp"

namespace testutil {

// nonempty freely reduced word with syllable exponents in [-max_exp, max_exp]
inline gt::Word random_word(std::mt19937& rng, const gt::AlphabetPtr& al, int n_syllables,
                            int max_exp = 3) {
  std::uniform_int_distribution<int> gen_dist(0, static_cast<int>(al->size()) - 1);
  std::uniform_int_distribution<int> exp_dist(1, max_exp);
  gt::Word w = gt::Word::identity(al);
  int last = -1;
  for (int i = 0; i < n_syllables; ++i) {
    int g = gen_dist(rng);
    if (g == last) g = (g + 1) % static_cast<int>(al->size());
    last = al->size() > 1 ? g : -1;
    int e = exp_dist(rng) * (rng() % 2 ? 1 : -1);
    w = w * gt::Word::power(al, g, e);
  }
  return w;
}

// random product of elementary shear matrices: always in SL2(Z)
inline gt::Mat2 random_sl2(std::mt19937& rng, int n_shears, int shear_bound) {
  std::uniform_int_distribution<int> k_dist(-shear_bound, shear_bound);
  gt::Mat2 m = gt::Mat2::identity();
  for (int i = 0; i < n_shears; ++i) {
    int k = k_dist(rng);
    gt::Mat2 s = rng() % 2 ? gt::Mat2{1, k, 0, 1} : gt::Mat2{1, 0, k, 1};
    m = m * s;
  }
  return m;
}

// as above but with a reflection half the time: det is +-1
inline gt::Mat2 random_gl2(std::mt19937& rng, int n_shears, int shear_bound) {
  gt::Mat2 m = random_sl2(rng, n_shears, shear_bound);
  if (rng() % 2) m = m * gt::Mat2{1, 0, 0, -1};
  return m;
}

inline bool entries_within(const gt::Mat2& m, long bound) {
  return abs(m.a) <= bound && abs(m.b) <= bound && abs(m.c) <= bound && abs(m.d) <= bound;
}

}  // namespace testutil
