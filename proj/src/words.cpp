#include "gt/words.hpp"

#include <cctype>
#include <sstream>

namespace gt {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) {
      throw word_error("invalid generator name: '" + names_[i] + "'");
    }
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw word_error("duplicate generator name: '" + names_[i] + "'");
      }
    }
  }
}

int Alphabet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool Alphabet::valid_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char ch : name) {
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  }
  return true;
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
  return std::make_shared<const Alphabet>(std::move(names));
}

namespace {

void check_same_alphabet(const Word& u, const Word& v) {
  if (u.alphabet_ptr() == v.alphabet_ptr()) return;
  if (!(u.alphabet() == v.alphabet())) {
    throw word_error("alphabet mismatch");
  }
}

}  // namespace

Word::Word(AlphabetPtr alpha, std::span<const Syllable> raw) : alpha_(std::move(alpha)) {
  for (const auto& s : raw) push_syllable(s.gen, s.exp);
}

Word Word::power(AlphabetPtr alpha, int gen, Int exp) {
  Word w(std::move(alpha));
  w.push_syllable(gen, exp);
  return w;
}

void Word::push_syllable(int gen, const Int& exp) {
  if (exp == 0) return;
  if (gen < 0 || static_cast<std::size_t>(gen) >= alpha_->size()) {
    throw word_error("generator index out of range");
  }
  if (!syls_.empty() && syls_.back().gen == gen) {
    syls_.back().exp += exp;
    if (syls_.back().exp == 0) syls_.pop_back();
  } else {
    syls_.push_back({gen, exp});
  }
}

Int Word::length() const {
  Int n = 0;
  for (const auto& s : syls_) n += abs(s.exp);
  return n;
}

Word Word::operator*(const Word& other) const {
  check_same_alphabet(*this, other);
  Word r = *this;
  for (const auto& s : other.syls_) r.push_syllable(s.gen, s.exp);
  return r;
}

Word Word::inverse() const {
  Word r(alpha_);
  r.syls_.reserve(syls_.size());
  for (auto it = syls_.rbegin(); it != syls_.rend(); ++it) {
    r.syls_.push_back({it->gen, -it->exp});
  }
  return r;
}

Word Word::pow(const Int& k) const {
  if (k == 0 || syls_.empty()) return Word(alpha_);
  const Word base = k < 0 ? inverse() : *this;
  Int n = abs(k);
  // peel conjugating tails: w = c y c^{-1} with y cyclically reduced,
  // so w^n = c y^n c^{-1} and y^n repeats with at most a seam merge
  std::vector<Syllable> syls = base.syls_;
  std::size_t lo = 0, hi = syls.size();
  Word head(alpha_);
  while (hi - lo >= 2) {
    Syllable& f = syls[lo];
    Syllable& l = syls[hi - 1];
    if (f.gen != l.gen || (f.exp > 0) == (l.exp > 0)) break;
    if (abs(f.exp) <= abs(l.exp)) {
      head.push_syllable(f.gen, f.exp);
      l.exp += f.exp;
      ++lo;
      if (l.exp == 0) --hi;
    } else {
      head.push_syllable(f.gen, -l.exp);
      f.exp += l.exp;
      --hi;
    }
  }
  Word core(alpha_);
  for (std::size_t i = lo; i < hi; ++i) core.syls_.push_back(syls[i]);
  Word result = head;
  if (core.syls_.size() == 1) {
    result.push_syllable(core.syls_[0].gen, core.syls_[0].exp * n);
  } else {
    if (n * Int(core.syls_.size()) > 10'000'000) {
      throw word_error("word power too large to materialize");
    }
    std::size_t reps = static_cast<std::size_t>(n);
    // seam syllables may merge (same generator, same sign) but never cancel
    for (std::size_t i = 0; i < reps; ++i) {
      for (const auto& s : core.syls_) result.push_syllable(s.gen, s.exp);
    }
  }
  for (auto it = head.syls_.rbegin(); it != head.syls_.rend(); ++it) {
    result.push_syllable(it->gen, -it->exp);
  }
  return result;
}

Word Word::conjugated_by(const Word& c) const {
  check_same_alphabet(*this, c);
  return c.inverse() * *this * c;
}

Int Word::exponent_sum(int gen) const {
  if (gen < 0 || static_cast<std::size_t>(gen) >= alpha_->size()) {
    throw word_error("generator index out of range");
  }
  Int n = 0;
  for (const auto& s : syls_) {
    if (s.gen == gen) n += s.exp;
  }
  return n;
}

Int Word::exponent_sum(const std::string& gen_name) const {
  int g = alpha_->index_of(gen_name);
  if (g < 0) throw word_error("unknown generator '" + gen_name + "'");
  return exponent_sum(g);
}

std::vector<Int> Word::exponent_vector() const {
  std::vector<Int> v(alpha_->size(), Int(0));
  for (const auto& s : syls_) v[static_cast<std::size_t>(s.gen)] += s.exp;
  return v;
}

bool Word::operator==(const Word& other) const {
  if (!(alphabet() == other.alphabet())) return false;
  return syls_ == other.syls_;
}

std::string Word::str() const {
  if (syls_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syls_) {
    if (!first) os << ' ';
    first = false;
    os << alpha_->name(s.gen);
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

Word reduce(AlphabetPtr alpha, std::span<const Syllable> raw) {
  return Word(std::move(alpha), raw);
}

Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

namespace {

struct WordParser {
  const AlphabetPtr& alpha;
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw word_error("word syntax error at offset " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  Int parse_int() {
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer exponent");
    return Int(text.substr(start, pos - start));
  }

  Int parse_opt_exponent() {
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      Int e = parse_int();
      if (e == 0) fail("exponent must be nonzero");
      return e;
    }
    return 1;
  }

  // parses a sequence of atoms until end of input or a closing paren
  Word parse_sequence() {
    Word w = Word::identity(alpha);
    while (!at_end() && text[pos] != ')') {
      w = w * parse_atom();
    }
    return w;
  }

  Word parse_atom() {
    skip_ws();
    char ch = text[pos];
    if (ch == '(') {
      ++pos;
      Word inner = parse_sequence();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')') fail("unbalanced parenthesis");
      ++pos;
      return inner.pow(parse_opt_exponent());
    }
    if (ch == '1') {
      // bare identity token (not a generator name, which must start with a letter)
      std::size_t next = pos + 1;
      if (next >= text.size() || std::isspace(static_cast<unsigned char>(text[next])) ||
          text[next] == ')' || text[next] == '(') {
        ++pos;
        return Word::identity(alpha);
      }
      fail("unexpected token starting with '1'");
    }
    if (!std::isalpha(static_cast<unsigned char>(ch))) fail("unexpected character");
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    std::string name = text.substr(start, pos - start);
    int g = alpha->index_of(name);
    if (g < 0) fail("unknown generator '" + name + "'");
    return Word::power(alpha, g, parse_opt_exponent());
  }
};

}  // namespace

Word parse_word(const AlphabetPtr& alpha, const std::string& text) {
  WordParser p{alpha, text};
  Word w = p.parse_sequence();
  if (!p.at_end()) p.fail("trailing input");
  return w;
}

}  // namespace gt
