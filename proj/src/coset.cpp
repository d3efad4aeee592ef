#include "gt/coset.hpp"

#include <deque>
#include <numeric>

namespace gt {

namespace {

// letters: generator g forward = 2g, inverse = 2g+1
int inv_letter(int x) { return x ^ 1; }

std::vector<int> word_letters(const Word& w) {
  std::vector<int> out;
  for (const auto& s : w.syllables()) {
    if (abs(s.exp) > 1'000'000) throw coset_error("relator exponent too large for enumeration");
    long e = static_cast<long>(s.exp);
    int letter = e > 0 ? 2 * s.gen : 2 * s.gen + 1;
    for (long i = 0; i < std::labs(e); ++i) out.push_back(letter);
  }
  return out;
}

struct Enumerator {
  int ncols;
  long max_cosets;
  std::vector<std::vector<long>> tab;  // tab[coset][letter], -1 undefined
  std::vector<long> rep;               // union-find, survivor is the smaller index
  std::vector<std::pair<long, int>> deductions;
  std::deque<std::pair<long, long>> coincidences;
  std::vector<std::vector<int>> relators;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> by_letter;
  long alive = 0;
  bool aborted = false;

  Enumerator(std::size_t ngens, long max) : ncols(static_cast<int>(2 * ngens)), max_cosets(max) {
    by_letter.resize(static_cast<std::size_t>(ncols));
  }

  long find(long c) {
    while (rep[static_cast<std::size_t>(c)] != c) {
      rep[static_cast<std::size_t>(c)] = rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(c)])];
      c = rep[static_cast<std::size_t>(c)];
    }
    return c;
  }

  long get(long c, int x) {
    long d = tab[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
    if (d == -1) return -1;
    d = find(d);
    tab[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = d;
    return d;
  }

  long new_coset() {
    if (alive >= max_cosets) {
      aborted = true;
      return -1;
    }
    long c = static_cast<long>(tab.size());
    tab.emplace_back(static_cast<std::size_t>(ncols), -1L);
    rep.push_back(c);
    ++alive;
    return c;
  }

  // install edge c --x--> d, queueing coincidences on conflicts
  void merge_edge(long c, int x, long d) {
    c = find(c);
    d = find(d);
    long e = get(c, x);
    if (e != -1) {
      if (e != d) coincidences.emplace_back(e, d);
      return;
    }
    long f = get(d, inv_letter(x));
    if (f != -1 && f != c) coincidences.emplace_back(f, c);
    tab[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)] = d;
    tab[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv_letter(x))] = c;
    deductions.emplace_back(c, x);
    deductions.emplace_back(d, inv_letter(x));
  }

  void process_coincidences() {
    while (!coincidences.empty()) {
      auto [a, b] = coincidences.front();
      coincidences.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      rep[static_cast<std::size_t>(b)] = a;
      --alive;
      for (int x = 0; x < ncols; ++x) {
        long d = tab[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)];
        if (d == -1) continue;
        tab[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] = -1;
        if (tab[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv_letter(x))] == b) {
          tab[static_cast<std::size_t>(d)][static_cast<std::size_t>(inv_letter(x))] = -1;
        }
        merge_edge(a, x, find(d));
      }
    }
  }

  // scan relator `ri` as a cyclic word starting at offset `pos`, based at coset c
  void scan(long c, std::size_t ri, std::size_t pos) {
    const auto& r = relators[ri];
    const std::size_t len = r.size();
    auto at = [&](std::size_t i) { return r[(pos + i) % len]; };
    long f = find(c);
    std::size_t i = 0;
    while (i < len) {
      long next = get(f, at(i));
      if (next == -1) break;
      f = next;
      ++i;
    }
    if (i == len) {
      if (f != find(c)) coincidences.emplace_back(f, find(c));
      return;
    }
    long b = find(c);
    std::size_t j = len;
    while (j > i) {
      long next = get(b, inv_letter(at(j - 1)));
      if (next == -1) break;
      b = next;
      --j;
    }
    if (j == i) {
      if (f != b) coincidences.emplace_back(f, b);
    } else if (j == i + 1) {
      merge_edge(f, at(i), b);
    }
    // gap > 1: nothing to deduce (Felsch defines cosets only in the main loop)
  }

  void process() {
    while (!deductions.empty() || !coincidences.empty()) {
      process_coincidences();
      if (deductions.empty()) continue;
      auto [c, x] = deductions.back();
      deductions.pop_back();
      c = find(c);
      if (get(c, x) == -1) continue;  // edge vanished in a coincidence
      for (auto [ri, pos] : by_letter[static_cast<std::size_t>(x)]) {
        scan(c, ri, pos);
      }
    }
  }

  void run(const std::vector<std::vector<int>>& subgroup_words) {
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      for (std::size_t pos = 0; pos < relators[ri].size(); ++pos) {
        by_letter[static_cast<std::size_t>(relators[ri][pos])].emplace_back(ri, pos);
      }
    }
    long base = new_coset();
    (void)base;
    // close the subgroup generators at the base coset first
    for (const auto& w : subgroup_words) {
      fill_word(0, w);
      if (aborted) return;
      process();
    }
    long cursor = 0;
    while (!aborted) {
      // first live coset with an undefined entry, letters in order
      while (cursor < static_cast<long>(tab.size()) && find(cursor) != cursor) ++cursor;
      long c = -1;
      int x = -1;
      for (long i = cursor; i < static_cast<long>(tab.size()) && c == -1; ++i) {
        if (find(i) != i) continue;
        for (int y = 0; y < ncols; ++y) {
          if (get(i, y) == -1) {
            c = i;
            x = y;
            break;
          }
        }
      }
      if (c == -1) return;  // complete
      long d = new_coset();
      if (d == -1) return;
      merge_edge(c, x, d);
      process();
    }
  }

  // force a full path for `w` from base back to base (HLT-style fill for subgroup words)
  void fill_word(long start, const std::vector<int>& w) {
    long c = find(start);
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      long next = get(c, w[i]);
      if (next == -1) {
        next = new_coset();
        if (next == -1) return;
        merge_edge(c, w[i], next);
      }
      c = find(c);
      long again = get(c, w[i]);
      c = again == -1 ? find(next) : again;
    }
    if (!w.empty()) merge_edge(c, w.back(), find(start));
  }
};

std::vector<long> perm_power(const std::vector<long>& perm, const Int& k) {
  const long n = static_cast<long>(perm.size());
  std::vector<long> out(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (long s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<long> cycle;
    long p = s;
    do {
      cycle.push_back(p);
      seen[static_cast<std::size_t>(p)] = 1;
      p = perm[static_cast<std::size_t>(p)];
    } while (p != s);
    const long len = static_cast<long>(cycle.size());
    long shift = static_cast<long>(((k % len) + len) % len);
    for (long i = 0; i < len; ++i) {
      out[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] =
          cycle[static_cast<std::size_t>((i + shift) % len)];
    }
  }
  return out;
}

}  // namespace

std::vector<long> CosetTable::evaluate(const Word& w) const {
  if (status_ != Status::Complete) throw coset_error("coset table is not complete");
  if (!(w.alphabet() == *alphabet_)) throw word_error("alphabet mismatch");
  std::vector<long> perm(static_cast<std::size_t>(n_));
  std::iota(perm.begin(), perm.end(), 0L);
  for (const auto& s : w.syllables()) {
    auto step = perm_power(fwd_[static_cast<std::size_t>(s.gen)], s.exp);
    for (auto& p : perm) p = step[static_cast<std::size_t>(p)];
  }
  return perm;
}

long CosetTable::base_image(const Word& w) const { return evaluate(w)[0]; }

bool CosetTable::is_identity(const Word& w) const {
  auto perm = evaluate(w);
  for (long i = 0; i < n_; ++i) {
    if (perm[static_cast<std::size_t>(i)] != i) return false;
  }
  return true;
}

Int CosetTable::order_of(const Word& w) const {
  auto perm = evaluate(w);
  std::vector<char> seen(perm.size(), 0);
  Int order = 1;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    long len = 0;
    long p = static_cast<long>(s);
    do {
      seen[static_cast<std::size_t>(p)] = 1;
      p = perm[static_cast<std::size_t>(p)];
      ++len;
    } while (p != static_cast<long>(s));
    order = lcm(order, Int(len));
  }
  return order;
}

CosetTable enumerate_cosets(const Presentation& p, const std::vector<Word>& subgroup_gens,
                            long max_cosets) {
  if (max_cosets < 1) throw coset_error("max_cosets must be >= 1");
  Enumerator en(p.alphabet->size(), max_cosets);
  for (const auto& r : p.relators) {
    auto letters = word_letters(r);
    if (!letters.empty()) en.relators.push_back(std::move(letters));
  }
  std::vector<std::vector<int>> sub;
  for (const auto& w : subgroup_gens) {
    if (!(w.alphabet() == *p.alphabet)) throw word_error("alphabet mismatch");
    auto letters = word_letters(w);
    if (!letters.empty()) sub.push_back(std::move(letters));
  }
  en.run(sub);

  CosetTable t;
  t.alphabet_ = p.alphabet;
  t.limit_ = max_cosets;
  if (en.aborted) {
    t.status_ = CosetTable::Status::Aborted;
    return t;
  }
  // compact: live cosets keep definition order
  std::vector<long> number(en.tab.size(), -1);
  long n = 0;
  for (long c = 0; c < static_cast<long>(en.tab.size()); ++c) {
    if (en.find(c) == c) number[static_cast<std::size_t>(c)] = n++;
  }
  t.status_ = CosetTable::Status::Complete;
  t.n_ = n;
  const std::size_t ngens = p.alphabet->size();
  t.fwd_.assign(ngens, std::vector<long>(static_cast<std::size_t>(n), -1));
  t.inv_.assign(ngens, std::vector<long>(static_cast<std::size_t>(n), -1));
  for (long c = 0; c < static_cast<long>(en.tab.size()); ++c) {
    if (en.find(c) != c) continue;
    for (std::size_t g = 0; g < ngens; ++g) {
      long d = en.get(c, static_cast<int>(2 * g));
      if (d == -1) throw coset_error("internal error: incomplete row in completed table");
      t.fwd_[g][static_cast<std::size_t>(number[static_cast<std::size_t>(c)])] =
          number[static_cast<std::size_t>(d)];
    }
  }
  for (std::size_t g = 0; g < ngens; ++g) {
    for (long i = 0; i < n; ++i) {
      long img = t.fwd_[g][static_cast<std::size_t>(i)];
      if (img < 0 || t.inv_[g][static_cast<std::size_t>(img)] != -1) {
        throw coset_error("internal error: generator action is not a bijection");
      }
      t.inv_[g][static_cast<std::size_t>(img)] = i;
    }
  }
  return t;
}

}  // namespace gt
