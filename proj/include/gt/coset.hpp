#pragma once

#include <vector>

#include "gt/presentation.hpp"

namespace gt {

struct coset_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Completed (or aborted) coset table over a subgroup.  When complete,
/// every generator acts as a permutation of {1..n_cosets}, every relator
/// acts as the identity, and coset 1 is the base point.
class CosetTable {
 public:
  enum class Status { Complete, Aborted };

  Status status() const { return status_; }
  long limit() const { return limit_; }
  long n_cosets() const { return n_; }
  const Alphabet& alphabet() const { return *alphabet_; }

  // permutation action of one generator, 0-based points
  const std::vector<long>& action(int gen) const { return fwd_.at(static_cast<std::size_t>(gen)); }

  // full permutation of a word (0-based image vector); requires Complete
  std::vector<long> evaluate(const Word& w) const;
  // image of the base coset under w
  long base_image(const Word& w) const;
  bool is_identity(const Word& w) const;
  // order of the permutation evaluate(w)
  Int order_of(const Word& w) const;

 private:
  friend CosetTable enumerate_cosets(const Presentation&, const std::vector<Word>&, long);
  Status status_ = Status::Aborted;
  long limit_ = 0;
  long n_ = 0;
  AlphabetPtr alphabet_;
  std::vector<std::vector<long>> fwd_, inv_;  // per generator
};

// Felsch-style enumeration over <subgroup_gens>; Aborted status (not an
// exception) when live cosets would exceed max_cosets
CosetTable enumerate_cosets(const Presentation& p, const std::vector<Word>& subgroup_gens,
                            long max_cosets = 1'000'000);

}  // namespace gt
