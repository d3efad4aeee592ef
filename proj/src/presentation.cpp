#include "gt/presentation.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace gt {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  for (char ch : s) {
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Presentation p;
  int lineno = 0;
  bool have_gens = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    auto where = [&](const std::string& msg) {
      return parse_error("line " + std::to_string(lineno) + ": " + msg);
    };
    if (!have_gens) {
      if (body.rfind("gens:", 0) != 0) throw where("expected 'gens:' line");
      std::istringstream gs(body.substr(5));
      std::vector<std::string> names;
      std::string name;
      while (gs >> name) names.push_back(name);
      if (names.empty()) throw where("empty generator list");
      try {
        p.alphabet = make_alphabet(std::move(names));
      } catch (const word_error& e) {
        throw where(e.what());
      }
      have_gens = true;
      continue;
    }
    if (body.rfind("rel:", 0) != 0) throw where("expected 'rel:' line");
    try {
      p.relators.push_back(parse_word(p.alphabet, body.substr(4)));
    } catch (const word_error& e) {
      throw where(e.what());
    }
  }
  if (!have_gens) throw parse_error("missing 'gens:' line");
  return p;
}

std::string render_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gens:";
  for (const auto& n : p.alphabet->names()) os << ' ' << n;
  os << '\n';
  for (const auto& r : p.relators) os << "rel: " << r.str() << '\n';
  return os.str();
}

Presentation klein_bottle() {
  Presentation p;
  p.alphabet = make_alphabet({"x", "y"});
  p.relators = {p.word("y^-1 x y x")};
  p.label = "klein";
  return p;
}

Presentation fibonacci(long m) {
  if (m < 1) throw parse_error("fibonacci: m must be >= 1");
  std::vector<std::string> names;
  for (long i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
  Presentation p;
  p.alphabet = make_alphabet(std::move(names));
  auto wrap = [m](long i) { return static_cast<int>((i - 1) % m); };  // 1-based -> 0-based
  for (long i = 1; i <= m; ++i) {
    Word r = Word::power(p.alphabet, wrap(i), 1) * Word::power(p.alphabet, wrap(i + 1), 1) *
             Word::power(p.alphabet, wrap(i + 2), -1);
    p.relators.push_back(r);
  }
  p.label = "fibonacci:m=" + std::to_string(m);
  return p;
}

Presentation torus_bundle(const Int& a, const Int& b, const Int& c, const Int& d) {
  if (abs(a * d - b * c) != 1) throw parse_error("torus_bundle: determinant must be +-1");
  Presentation p;
  p.alphabet = make_alphabet({"l", "m", "t"});
  const Word l = Word::power(p.alphabet, 0, 1);
  const Word mm = Word::power(p.alphabet, 1, 1);
  const Word t = Word::power(p.alphabet, 2, 1);
  auto lattice = [&](const Int& u, const Int& v) {
    return Word::power(p.alphabet, 0, u) * Word::power(p.alphabet, 1, v);
  };
  p.relators = {commutator(l, mm),
                t.inverse() * l * t * lattice(a, b).inverse(),
                t.inverse() * mm * t * lattice(c, d).inverse()};
  std::ostringstream os;
  os << "torusbundle:a=" << a << ",b=" << b << ",c=" << c << ",d=" << d;
  p.label = os.str();
  return p;
}

Presentation rss(const Int& p, const Int& q, const Int& m) {
  if (gcd(p, q) != 1) throw parse_error("rss: gcd(p,q) must be 1");
  Presentation pr;
  pr.alphabet = make_alphabet({"a", "b", "t"});
  const Word a = Word::power(pr.alphabet, 0, 1);
  const Word b = Word::power(pr.alphabet, 1, 1);
  const Word t = Word::power(pr.alphabet, 2, 1);
  pr.relators = {
      t.inverse() * a * t * (a * b * Word::power(pr.alphabet, 0, m - 1)).inverse(),
      t.inverse() * b * t * a,
      t.pow(p) * commutator(a, b).pow(q),
  };
  std::ostringstream os;
  os << "rss:p=" << p << ",q=" << q << ",m=" << m;
  pr.label = os.str();
  return pr;
}

Presentation kb_circle_bundle() {
  Presentation p;
  p.alphabet = make_alphabet({"x", "y"});
  const Word x = Word::power(p.alphabet, 0, 1);
  const Word y = Word::power(p.alphabet, 1, 1);
  const Word z = x * x * y * y;  // x^2 y^2, central
  p.relators = {commutator(z, x), commutator(z, y)};
  p.label = "kbcircle";
  return p;
}

namespace {

std::map<std::string, Int> parse_params(const std::string& s) {
  std::map<std::string, Int> out;
  std::istringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw parse_error("bad family parameter '" + item + "'");
    try {
      out[item.substr(0, eq)] = Int(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw parse_error("bad integer in family parameter '" + item + "'");
    }
  }
  return out;
}

Int need(const std::map<std::string, Int>& ps, const std::string& key) {
  auto it = ps.find(key);
  if (it == ps.end()) throw parse_error("missing family parameter '" + key + "'");
  return it->second;
}

}  // namespace

std::optional<Presentation> parse_family(const std::string& shorthand) {
  if (shorthand == "klein") return klein_bottle();
  if (shorthand == "kbcircle") return kb_circle_bundle();
  auto colon = shorthand.find(':');
  if (colon == std::string::npos) return std::nullopt;
  std::string family = shorthand.substr(0, colon);
  auto ps = parse_params(shorthand.substr(colon + 1));
  if (family == "fibonacci") {
    Int m = need(ps, "m");
    if (m < 1 || m > 1'000'000) throw parse_error("fibonacci: m out of range");
    return fibonacci(static_cast<long>(m));
  }
  if (family == "torusbundle") {
    return torus_bundle(need(ps, "a"), need(ps, "b"), need(ps, "c"), need(ps, "d"));
  }
  if (family == "rss") {
    return rss(need(ps, "p"), need(ps, "q"), need(ps, "m"));
  }
  return std::nullopt;
}

}  // namespace gt
