#include "gt/certfile.hpp"

#include <fstream>
#include <sstream>

namespace gt {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t bar = s.find('|', start);
    if (bar == std::string::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, bar - start)));
    start = bar + 1;
  }
}

}  // namespace

std::string write_certificate(const GtCertificate& c) {
  if (c.presentation.label.empty() || !parse_family(c.presentation.label)) {
    throw certificate_error("presentation has no family shorthand to serialize");
  }
  std::ostringstream os;
  os << "format: gtcert/1\n";
  os << "presentation: " << c.presentation.label << '\n';
  os << "base: " << c.base.str() << '\n';
  for (const auto& [conj, mult] : c.factors) {
    os << "factor: " << conj.str() << " | " << mult << '\n';
  }
  os << "target: " << c.proof.target.str() << '\n';
  for (const auto& s : c.proof.steps) {
    os << "step: " << s.conjugator.str() << " | " << s.relator_index << " | "
       << (s.sign > 0 ? "+1" : "-1") << '\n';
  }
  switch (c.evidence.kind) {
    case EvidenceKind::AbelianizationNonzero:
      os << "evidence: abelian-nonzero\n";
      break;
    case EvidenceKind::FiniteQuotient: {
      os << "evidence: finite-quotient";
      for (std::size_t i = 0; i < c.evidence.extra_relators.size(); ++i) {
        os << (i == 0 ? " " : " | ") << c.evidence.extra_relators[i].str();
      }
      os << '\n';
      break;
    }
    case EvidenceKind::NormalForm:
      os << "evidence: normal-form " << c.evidence.engine << '\n';
      break;
    case EvidenceKind::Cited:
      os << "evidence: cited " << c.evidence.citation << '\n';
      break;
  }
  return os.str();
}

GtCertificate read_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_format = false, have_presentation = false, have_base = false, have_target = false,
       have_evidence = false;
  GtCertificate cert;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = trim(line);
    if (body.empty() || body[0] == '#') continue;
    auto where = [&](const std::string& msg) {
      return parse_error("certificate line " + std::to_string(lineno) + ": " + msg);
    };
    auto colon = body.find(':');
    if (colon == std::string::npos) throw where("expected 'key: value'");
    std::string key = trim(body.substr(0, colon));
    std::string value = trim(body.substr(colon + 1));

    if (!have_format) {
      if (key != "format" || value != "gtcert/1") throw where("expected 'format: gtcert/1'");
      have_format = true;
      continue;
    }
    if (key == "presentation") {
      if (auto p = parse_family(value)) {
        cert.presentation = std::move(*p);
      } else {
        std::ifstream f(value);
        if (!f) throw where("unknown family and unreadable path '" + value + "'");
        std::ostringstream os;
        os << f.rdbuf();
        cert.presentation = parse_presentation(os.str());
        cert.presentation.label = value;
      }
      have_presentation = true;
      continue;
    }
    if (!have_presentation) throw where("'presentation:' must come before '" + key + ":'");
    const AlphabetPtr& al = cert.presentation.alphabet;
    try {
      if (key == "base") {
        cert.base = parse_word(al, value);
        have_base = true;
      } else if (key == "factor") {
        auto fields = split_fields(value);
        if (fields.size() != 2) throw where("expected '<word> | <multiplicity>'");
        cert.factors.push_back({parse_word(al, fields[0]), Int(fields[1])});
      } else if (key == "target") {
        cert.proof.target = parse_word(al, value);
        have_target = true;
      } else if (key == "step") {
        auto fields = split_fields(value);
        if (fields.size() != 3) throw where("expected '<word> | <index> | <sign>'");
        Int idx(fields[1]);
        if (idx < 0 || idx >= Int(cert.presentation.relators.size())) {
          throw where("relator index out of range");
        }
        int sign;
        if (fields[2] == "+1" || fields[2] == "1") sign = 1;
        else if (fields[2] == "-1") sign = -1;
        else throw where("sign must be +1 or -1");
        cert.proof.steps.push_back(
            {parse_word(al, fields[0]), static_cast<std::size_t>(idx), sign});
      } else if (key == "evidence") {
        auto space = value.find(' ');
        std::string kind = space == std::string::npos ? value : value.substr(0, space);
        std::string payload = space == std::string::npos ? "" : trim(value.substr(space + 1));
        if (kind == "abelian-nonzero") {
          cert.evidence = {EvidenceKind::AbelianizationNonzero, {}, "", ""};
        } else if (kind == "finite-quotient") {
          cert.evidence = {EvidenceKind::FiniteQuotient, {}, "", ""};
          if (!payload.empty()) {
            for (const auto& w : split_fields(payload)) {
              cert.evidence.extra_relators.push_back(parse_word(al, w));
            }
          }
        } else if (kind == "normal-form") {
          if (payload.empty()) throw where("normal-form evidence needs an engine id");
          cert.evidence = {EvidenceKind::NormalForm, {}, payload, ""};
        } else if (kind == "cited") {
          cert.evidence = {EvidenceKind::Cited, {}, "", payload};
        } else {
          throw where("unknown evidence kind '" + kind + "'");
        }
        have_evidence = true;
      } else {
        throw where("unknown key '" + key + "'");
      }
    } catch (const word_error& e) {
      throw where(e.what());
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const parse_error*>(&e)) throw;
      throw where(e.what());
    }
  }
  if (!have_format) throw parse_error("certificate: missing 'format:' line");
  if (!have_presentation) throw parse_error("certificate: missing 'presentation:' line");
  if (!have_base) throw parse_error("certificate: missing 'base:' line");
  if (!have_target) throw parse_error("certificate: missing 'target:' line");
  if (!have_evidence) throw parse_error("certificate: missing 'evidence:' line");
  if (cert.factors.empty()) throw parse_error("certificate: needs at least one 'factor:' line");
  return cert;
}

void save_certificate(const GtCertificate& c, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << write_certificate(c);
}

GtCertificate load_certificate(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return read_certificate(os.str());
}

}  // namespace gt
