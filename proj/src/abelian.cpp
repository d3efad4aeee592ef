#include "gt/abelian.hpp"

namespace gt {

IntMatrix relator_matrix(const Presentation& p) {
  const std::size_t g = p.alphabet->size();
  IntMatrix m(p.relators.size(), g);
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    auto v = p.relators[r].exponent_vector();
    for (std::size_t c = 0; c < g; ++c) m.at(r, c) = v[c];
  }
  return m;
}

AbelianInvariants::AbelianInvariants(const Presentation& p)
    : alphabet_(p.alphabet), transform_(0, 0) {
  const std::size_t g = p.alphabet->size();
  IntMatrix m = relator_matrix(p);
  SmithResult snf = smith_normal_form(m);
  transform_ = std::move(snf.V);
  // rowspace(M) * V = rowspace(D): coordinate i of x*V is taken mod d_i
  const std::size_t rank_bound = std::min(m.rows(), g);
  for (std::size_t i = 0; i < g; ++i) {
    Int d = i < rank_bound ? snf.D.at(i, i) : Int(0);
    if (d == 0) {
      free_cols_.push_back(i);
    } else if (d >= 2) {
      torsion_cols_.push_back(i);
      torsion_.push_back(d);
    }
    // d == 1: coordinate dies
  }
  free_rank_ = free_cols_.size();
}

std::vector<Int> AbelianInvariants::image(const Word& w) const {
  if (!(w.alphabet() == *alphabet_)) throw word_error("alphabet mismatch");
  auto e = w.exponent_vector();
  const std::size_t g = alphabet_->size();
  auto coord = [&](std::size_t col) {
    Int y = 0;
    for (std::size_t r = 0; r < g; ++r) y += e[r] * transform_.at(r, col);
    return y;
  };
  std::vector<Int> out;
  out.reserve(torsion_cols_.size() + free_cols_.size());
  for (std::size_t i = 0; i < torsion_cols_.size(); ++i) {
    Int y = coord(torsion_cols_[i]) % torsion_[i];
    if (y < 0) y += torsion_[i];
    out.push_back(y);
  }
  for (std::size_t col : free_cols_) out.push_back(coord(col));
  return out;
}

std::optional<Int> AbelianInvariants::torsion_order(const Word& w) const {
  auto y = image(w);
  Int order = 1;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Int o = torsion_[i] / gcd(torsion_[i], y[i]);
    order = lcm(order, o);
  }
  for (std::size_t i = torsion_.size(); i < y.size(); ++i) {
    if (y[i] != 0) return std::nullopt;
  }
  return order;
}

}  // namespace gt
