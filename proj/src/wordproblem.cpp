#include "gt/wordproblem.hpp"

namespace gt {

KleinElement KleinElement::operator*(const KleinElement& other) const {
  Int sign = (q % 2 == 0) ? 1 : -1;
  return {p + sign * other.p, q + other.q};
}

KleinElement klein_eval(const Word& w) {
  const Alphabet& al = w.alphabet();
  int xi = al.index_of("x"), yi = al.index_of("y");
  if (al.size() != 2 || xi < 0 || yi < 0) throw word_error("klein_eval expects alphabet {x, y}");
  KleinElement e;
  for (const auto& s : w.syllables()) {
    if (s.gen == xi) {
      e.p += (e.q % 2 == 0) ? s.exp : -s.exp;
    } else {
      e.q += s.exp;
    }
  }
  return e;
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::pair<Int, Int> Mat2::apply(const Int& v1, const Int& v2) const {
  return {a * v1 + b * v2, c * v1 + d * v2};
}

Mat2 Mat2::pow(const Int& k) const {
  Mat2 base = *this;
  if (k < 0) {
    Int dt = det();
    if (dt != 1 && dt != -1) throw word_error("matrix is not invertible over the integers");
    // inverse = adjugate / det, and det = +-1
    base = Mat2{d * dt, -b * dt, -c * dt, a * dt};
  }
  Mat2 result = Mat2::identity();
  Int n = abs(k);
  while (n > 0) {
    if ((n & 1) != 0) result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

TBElement tb_mul(const Mat2& A, const TBElement& x, const TBElement& y) {
  // lattice conjugation by t is v -> A^T v
  Mat2 phi{A.a, A.c, A.b, A.d};
  auto [w1, w2] = phi.pow(-x.k).apply(y.v1, y.v2);
  return {x.v1 + w1, x.v2 + w2, x.k + y.k};
}

TBElement tb_eval(const Mat2& A, const Word& w) {
  Int dt = A.det();
  if (dt != 1 && dt != -1) throw word_error("monodromy determinant must be +-1");
  const Alphabet& al = w.alphabet();
  int li = al.index_of("l"), mi = al.index_of("m"), ti = al.index_of("t");
  if (al.size() != 3 || li < 0 || mi < 0 || ti < 0) {
    throw word_error("tb_eval expects alphabet {l, m, t}");
  }
  Mat2 phi{A.a, A.c, A.b, A.d};
  TBElement e;
  for (const auto& s : w.syllables()) {
    if (s.gen == ti) {
      e.k += s.exp;
      continue;
    }
    Int u1 = s.gen == li ? s.exp : Int(0);
    Int u2 = s.gen == mi ? s.exp : Int(0);
    auto [w1, w2] = phi.pow(-e.k).apply(u1, u2);
    e.v1 += w1;
    e.v2 += w2;
  }
  return e;
}

bool check_proof(const Presentation& p, const TrivialityProof& proof) {
  Word acc = Word::identity(proof.target.alphabet_ptr());
  for (const auto& step : proof.steps) {
    if (step.relator_index >= p.relators.size()) {
      throw std::out_of_range("relator index out of range");
    }
    if (step.sign != 1 && step.sign != -1) throw derivation_error("step sign must be +1 or -1");
    const Word& r = p.relators[step.relator_index];
    Word body = step.sign > 0 ? r : r.inverse();
    acc = acc * body.conjugated_by(step.conjugator);
  }
  return acc == proof.target;
}

namespace {

// split a reduced word into prefix of `pos` letters and the rest
std::pair<Word, Word> split_at(const Word& w, const Int& pos) {
  if (pos < 0 || pos > w.length()) throw derivation_error("rewrite position out of range");
  std::vector<Syllable> pre, post;
  Int remaining = pos;
  for (const auto& s : w.syllables()) {
    Int len = abs(s.exp);
    if (remaining >= len) {
      pre.push_back(s);
      remaining -= len;
    } else if (remaining > 0) {
      Int sign = s.exp > 0 ? 1 : -1;
      pre.push_back({s.gen, sign * remaining});
      post.push_back({s.gen, s.exp - sign * remaining});
      remaining = 0;
    } else {
      post.push_back(s);
    }
  }
  return {Word(w.alphabet_ptr(), pre), Word(w.alphabet_ptr(), post)};
}

}  // namespace

TrivialityProof compile_rewrite_trace(const Presentation& p, const Word& start,
                                      const std::vector<RewriteOp>& trace) {
  TrivialityProof proof{start, {}};
  Word cur = start;
  for (const auto& op : trace) {
    if (op.relator_index >= p.relators.size()) {
      throw std::out_of_range("relator index out of range");
    }
    if (op.sign != 1 && op.sign != -1) throw derivation_error("rewrite sign must be +1 or -1");
    const Word& r = p.relators[op.relator_index];
    Word block = op.sign > 0 ? r : r.inverse();
    auto [u, v] = split_at(cur, op.position);
    if (op.kind == RewriteOp::Kind::Delete) {
      // v must literally begin with `block`: no cancellation across the seam
      Word rest = block.inverse() * v;
      if (block.length() + rest.length() != v.length()) {
        throw derivation_error("relator occurrence does not match the word");
      }
      cur = u * rest;
      proof.steps.push_back({u.inverse(), op.relator_index, op.sign});
    } else {
      cur = u * block * v;
      proof.steps.push_back({u.inverse(), op.relator_index, -op.sign});
    }
  }
  if (!cur.is_identity()) throw derivation_error("rewrite trace does not end at the identity");
  return proof;
}

}  // namespace gt
