#pragma once

#include <optional>
#include <vector>

#include "gt/presentation.hpp"
#include "gt/words.hpp"

namespace gt {

/// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  static IntMatrix identity(std::size_t n);
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix&) const = default;

  // exact determinant by fraction-free elimination (used in tests)
  Int determinant() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Int> entries_;
};

struct SmithResult {
  IntMatrix U, D, V;  // U*M*V = D, U and V unimodular, D diagonal with d1 | d2 | ...
};

// deterministic: pivot is the smallest nonzero absolute value,
// ties broken by lowest (row, col)
SmithResult smith_normal_form(const IntMatrix& m);

/// Invariants of the abelianization Z^gens / rowspace(relator exponent matrix),
/// with enough change-of-basis data to map words to canonical coordinates.
class AbelianInvariants {
 public:
  explicit AbelianInvariants(const Presentation& p);

  const std::vector<Int>& torsion() const { return torsion_; }  // d1 | d2 | ..., each >= 2
  std::size_t free_rank() const { return free_rank_; }

  // canonical coordinates: torsion coordinates (mod d_i) first, then free coordinates;
  // zero vector iff the word dies in H1
  std::vector<Int> image(const Word& w) const;

  // additive order of image(w); nullopt = infinite
  std::optional<Int> torsion_order(const Word& w) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Int> torsion_;
  std::size_t free_rank_ = 0;
  // columns of V corresponding to torsion coordinates, then free coordinates
  IntMatrix transform_;
  std::vector<std::size_t> torsion_cols_, free_cols_;
};

// relator exponent matrix: one row per relator, one column per generator
IntMatrix relator_matrix(const Presentation& p);

}  // namespace gt
