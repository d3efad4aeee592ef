#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gt {

using Int = boost::multiprecision::cpp_int;

struct word_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ordered generator alphabet.  Names are unique identifiers
/// (ASCII letter followed by letters/digits/underscore); equality
/// is structural, so words from different groups never mix silently.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int g) const { return names_.at(static_cast<std::size_t>(g)); }
  const std::vector<std::string>& names() const { return names_; }

  // -1 when the name is unknown
  int index_of(const std::string& name) const;

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }

  static bool valid_name(const std::string& name);

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names);

struct Syllable {
  int gen;  // index into the alphabet
  Int exp;  // nonzero
  bool operator==(const Syllable&) const = default;
};

/// Freely reduced word in syllable (run-length) form.  Immutable after
/// construction; all operations are pure.
class Word {
 public:
  Word() = default;  // placeholder; usable only after assignment
  explicit Word(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}
  Word(AlphabetPtr alpha, std::span<const Syllable> raw);

  static Word identity(AlphabetPtr alpha) { return Word(std::move(alpha)); }
  // single-syllable convenience: g^exp (exp may be 0 -> identity)
  static Word power(AlphabetPtr alpha, int gen, Int exp);

  const AlphabetPtr& alphabet_ptr() const { return alpha_; }
  const Alphabet& alphabet() const { return *alpha_; }
  const std::vector<Syllable>& syllables() const { return syls_; }

  bool is_identity() const { return syls_.empty(); }
  std::size_t syllable_count() const { return syls_.size(); }
  // total letter length (sum of |exp|)
  Int length() const;

  Word operator*(const Word& other) const;
  Word inverse() const;
  Word pow(const Int& k) const;
  // g^c = c^{-1} g c
  Word conjugated_by(const Word& c) const;

  Int exponent_sum(int gen) const;
  Int exponent_sum(const std::string& gen_name) const;
  std::vector<Int> exponent_vector() const;

  bool operator==(const Word& other) const;

  std::string str() const;

 private:
  void push_syllable(int gen, const Int& exp);

  AlphabetPtr alpha_;
  std::vector<Syllable> syls_;

  friend Word reduce(AlphabetPtr, std::span<const Syllable>);
};

// the unique freely reduced form of a raw syllable sequence
Word reduce(AlphabetPtr alpha, std::span<const Syllable> raw);

Word commutator(const Word& u, const Word& v);

// word text syntax: whitespace-separated `name` / `name^k` tokens,
// parenthesized subwords `( ... )^k`, `1` for the identity
Word parse_word(const AlphabetPtr& alpha, const std::string& text);

}  // namespace gt
