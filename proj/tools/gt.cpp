#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gt/certfile.hpp"
#include "gt/classify.hpp"

namespace {

using namespace gt;

long default_max_cosets() {
  if (const char* env = std::getenv("GTCERT_MAX_COSETS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw parse_error("GTCERT_MAX_COSETS must be a positive integer");
  }
  return 1'000'000;
}

Presentation load_presentation(const std::string& arg) {
  if (auto p = parse_family(arg)) return *p;
  std::ifstream f(arg);
  if (!f) throw parse_error("'" + arg + "' is neither a family shorthand nor a readable file");
  std::ostringstream os;
  os << f.rdbuf();
  Presentation p = parse_presentation(os.str());
  if (p.label.empty()) p.label = arg;
  return p;
}

std::string status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::Unavailable: return "Unavailable";
  }
  return "Unavailable";
}

std::string overall_str(VerificationReport::Overall o) {
  switch (o) {
    case VerificationReport::Overall::Verified: return "Verified";
    case VerificationReport::Overall::ConditionallyVerified: return "ConditionallyVerified";
    case VerificationReport::Overall::Failed: return "Failed";
  }
  return "Failed";
}

std::set<Method> parse_methods(const std::string& spec) {
  std::set<Method> out;
  std::istringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "proof") out.insert(Method::Proof);
    else if (item == "coset") out.insert(Method::Coset);
    else if (item == "normalform" || item == "normal-form") out.insert(Method::NormalForm);
    else if (item == "abelian") out.insert(Method::Abelian);
    else throw parse_error("unknown verification method '" + item + "'");
  }
  return out;
}

int cmd_info(const std::string& pres_arg) {
  Presentation p = load_presentation(pres_arg);
  std::cout << "label=" << (p.label.empty() ? "(none)" : p.label) << '\n';
  std::cout << "generators=";
  for (std::size_t i = 0; i < p.alphabet->size(); ++i) {
    std::cout << (i ? " " : "") << p.alphabet->name(static_cast<int>(i));
  }
  std::cout << '\n' << "n_relators=" << p.relators.size() << '\n';
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    std::cout << "relator." << i << "=" << p.relators[i].str() << '\n';
  }
  return 0;
}

int cmd_abelianize(const std::string& pres_arg, const std::string& word_text) {
  Presentation p = load_presentation(pres_arg);
  AbelianInvariants inv(p);
  std::cout << "torsion=";
  for (std::size_t i = 0; i < inv.torsion().size(); ++i) {
    std::cout << (i ? "," : "") << inv.torsion()[i];
  }
  std::cout << '\n' << "free_rank=" << inv.free_rank() << '\n';
  if (!word_text.empty()) {
    Word w = p.word(word_text);
    auto img = inv.image(w);
    std::cout << "image=";
    for (std::size_t i = 0; i < img.size(); ++i) std::cout << (i ? "," : "") << img[i];
    std::cout << '\n';
    auto ord = inv.torsion_order(w);
    std::cout << "torsion_order=" << (ord ? ord->str() : "infinite") << '\n';
  }
  return 0;
}

int cmd_enumerate(const std::string& pres_arg, long max_cosets, const std::string& subgroup,
                  bool print_action) {
  Presentation p = load_presentation(pres_arg);
  std::vector<Word> gens;
  if (!subgroup.empty()) {
    std::istringstream in(subgroup);
    std::string item;
    while (std::getline(in, item, ',')) gens.push_back(p.word(item));
  }
  CosetTable t = enumerate_cosets(p, gens, max_cosets);
  if (t.status() != CosetTable::Status::Complete) {
    std::cout << "status=aborted\nlimit=" << t.limit() << '\n';
    return 1;
  }
  std::cout << "status=complete\nn_cosets=" << t.n_cosets() << '\n';
  if (gens.empty()) std::cout << "order=" << t.n_cosets() << '\n';
  if (print_action) {
    for (std::size_t g = 0; g < p.alphabet->size(); ++g) {
      std::cout << "action." << p.alphabet->name(static_cast<int>(g)) << "=";
      const auto& perm = t.action(static_cast<int>(g));
      for (std::size_t i = 0; i < perm.size(); ++i) std::cout << (i ? "," : "") << perm[i];
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_certify(const std::string& family, const std::vector<std::string>& params,
                const std::string& out_path) {
  std::map<std::string, Int> ps;
  for (const auto& item : params) {
    std::istringstream in(item);
    std::string kv;
    while (std::getline(in, kv, ',')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw parse_error("bad --param '" + kv + "'");
      ps[kv.substr(0, eq)] = Int(kv.substr(eq + 1));
    }
  }
  auto need = [&](const std::string& k) {
    auto it = ps.find(k);
    if (it == ps.end()) throw parse_error("family '" + family + "' needs --param " + k + "=...");
    return it->second;
  };
  GtCertificate cert;
  if (family == "klein") {
    cert = build_klein_certificate();
  } else if (family == "kbcircle") {
    cert = build_kbcircle_certificate();
  } else if (family == "fibonacci") {
    Int m = need("m");
    if (m < 3 || m > 10'000) throw parse_error("fibonacci: m out of range");
    cert = build_fibonacci_certificate(static_cast<long>(m));
  } else if (family == "torusbundle") {
    cert = build_torus_bundle_certificate(need("a"), need("b"), need("c"), need("d"));
  } else if (family == "rss") {
    cert = build_rss_certificate(need("p"), need("q"), need("m"));
  } else {
    throw parse_error("unknown family '" + family + "'");
  }
  save_certificate(cert, out_path);
  std::cout << "out=" << out_path << '\n';
  std::cout << "base=" << cert.base.str() << '\n';
  std::cout << "n_factors=" << cert.factors.size() << '\n';
  std::cout << "weight=" << certificate_weight(cert) << '\n';
  std::cout << "n_steps=" << cert.proof.steps.size() << '\n';
  return 0;
}

int cmd_verify(const std::vector<std::string>& paths, const std::string& methods_arg,
               long max_cosets) {
  std::set<Method> methods = methods_arg.empty()
                                 ? std::set<Method>{Method::Proof, Method::Abelian}
                                 : parse_methods(methods_arg);
  if (paths.empty()) {
    std::cout << "0 certificates\n";
    return 0;
  }
  bool all_ok = true;
  for (const auto& path : paths) {
    std::ostringstream line;
    line << path << ": ";
    try {
      GtCertificate cert = load_certificate(path);
      VerificationReport rep = verify(cert, methods, max_cosets);
      line << "overall=" << overall_str(rep.overall);
      line << " proof=" << status_str(rep.proof);
      line << " abelian=" << status_str(rep.abelian);
      line << " evidence=" << status_str(rep.evidence);
      if (methods.count(Method::Coset)) line << " coset=" << status_str(rep.coset);
      if (methods.count(Method::NormalForm)) {
        line << " normalform=" << status_str(rep.normal_form);
      }
      all_ok = all_ok && rep.overall != VerificationReport::Overall::Failed;
    } catch (const std::exception& e) {
      line << "error=" << e.what();
      all_ok = false;
    }
    std::cout << line.str() << '\n';
  }
  return all_ok ? 0 : 1;
}

Mat2 parse_matrix(const std::string& text) {
  std::vector<Int> vals;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) vals.push_back(Int(item));
  if (vals.size() != 4) throw parse_error("expected a,b,c,d");
  return {vals[0], vals[1], vals[2], vals[3]};
}

int report_verdict(const Verdict& v, const std::string& cert_path) {
  switch (v.status) {
    case OrderStatus::BiOrderable: std::cout << "status=bi-orderable\n"; break;
    case OrderStatus::NotBiOrderable: std::cout << "status=not-bi-orderable\n"; break;
    case OrderStatus::OutOfScope: std::cout << "status=out-of-scope\n"; break;
  }
  std::cout << "reason=" << v.reason << '\n';
  if (v.certificate) {
    if (!cert_path.empty()) {
      save_certificate(*v.certificate, cert_path);
      std::cout << "certificate=" << cert_path << '\n';
    } else {
      std::cout << "certificate=available (pass --out to save)\n";
    }
  } else {
    std::cout << "certificate=none\n";
  }
  return 0;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "yes") return true;
  if (v == "false" || v == "no") return false;
  throw parse_error("expected true/false, got '" + v + "'");
}

int cmd_classify(const std::string& tb, const std::string& sol, const std::string& circle,
                 const std::string& out_path) {
  int given = (!tb.empty()) + (!sol.empty()) + (!circle.empty());
  if (given != 1) {
    throw parse_error("pass exactly one of --torus-bundle, --sol, --circle-bundle");
  }
  if (!tb.empty()) return report_verdict(classify_torus_bundle(parse_matrix(tb)), out_path);
  if (!sol.empty()) {
    SolDescriptor d{SolDescriptor::Kind::TorusBundle, Mat2::identity()};
    if (sol == "twisted-i-bundle") {
      d.kind = SolDescriptor::Kind::TwistedIBundleKlein;
    } else if (sol == "semibundle") {
      d.kind = SolDescriptor::Kind::KleinOrTorusSemibundle;
    } else if (sol.rfind("torusbundle:", 0) == 0) {
      d.monodromy = *monodromy_of(*parse_family(sol));
    } else {
      throw parse_error("unknown Sol descriptor '" + sol + "'");
    }
    return report_verdict(classify_sol(d), out_path);
  }
  SurfaceDescriptor base;
  bool orientable_bundle = true;
  SpecialManifold special = SpecialManifold::None;
  std::istringstream in(circle);
  std::string kv;
  while (std::getline(in, kv, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw parse_error("bad descriptor item '" + kv + "'");
    std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
    if (k == "base") {
      if (v == "s2") base.kind = SurfaceDescriptor::Kind::S2;
      else if (v == "p2") base.kind = SurfaceDescriptor::Kind::P2;
      else if (v == "klein") base.kind = SurfaceDescriptor::Kind::Klein;
      else if (v == "other") base.kind = SurfaceDescriptor::Kind::Other;
      else throw parse_error("unknown base surface '" + v + "'");
    } else if (k == "orientable") {
      orientable_bundle = parse_bool(v);
    } else if (k == "genus") {
      base.genus = std::stol(v);
    } else if (k == "base-orientable") {
      base.orientable = parse_bool(v);
    } else if (k == "boundary") {
      base.n_boundary = std::stol(v);
    } else if (k == "special") {
      if (v == "s3") special = SpecialManifold::S3;
      else if (v == "s1xs2") special = SpecialManifold::S1xS2;
      else if (v == "twisted-s1xs2") special = SpecialManifold::TwistedS1S2;
      else if (v == "solid-klein") special = SpecialManifold::SolidKlein;
      else throw parse_error("unknown special manifold '" + v + "'");
    } else {
      throw parse_error("unknown descriptor key '" + k + "'");
    }
  }
  return report_verdict(classify_circle_bundle(base, orientable_bundle, special), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized torsion certificates for finitely presented groups"};
  app.require_subcommand(1);
  bool timings = false;
  app.add_flag("--timings", timings, "print elapsed time to stderr");

  std::string pres_arg, word_text, subgroup, methods, family, out_path;
  std::string tb, sol, circle;
  std::vector<std::string> params, paths;
  long max_cosets = -1;
  bool print_action = false;

  auto* info = app.add_subcommand("info", "show a presentation");
  info->add_option("presentation", pres_arg)->required();

  auto* ab = app.add_subcommand("abelianize", "abelianization invariants");
  ab->add_option("presentation", pres_arg)->required();
  ab->add_option("--word", word_text, "also map a word to canonical coordinates");

  auto* en = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  en->add_option("presentation", pres_arg)->required();
  en->add_option("--max-cosets", max_cosets);
  en->add_option("--subgroup", subgroup, "comma-separated subgroup generator words");
  en->add_flag("--action", print_action, "print the permutation action");

  auto* ce = app.add_subcommand("certify", "build a certificate for a group family");
  ce->add_option("--family", family)->required();
  ce->add_option("--param", params, "family parameters k=v (repeatable)");
  ce->add_option("--out", out_path)->required();

  auto* ve = app.add_subcommand("verify", "verify certificate files");
  ve->add_option("files", paths);
  ve->add_option("--method", methods, "comma list: proof,coset,normalform,abelian");
  ve->add_option("--max-cosets", max_cosets);

  auto* cl = app.add_subcommand("classify", "bi-orderability verdicts");
  cl->add_option("--torus-bundle", tb, "monodromy a,b,c,d");
  cl->add_option("--sol", sol, "twisted-i-bundle | semibundle | torusbundle:a=..,b=..,c=..,d=..");
  cl->add_option("--circle-bundle", circle, "base=..,orientable=..[,special=..]");
  cl->add_option("--out", out_path, "write the emitted certificate here");

  auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    app.parse(argc, argv);
    if (max_cosets < 0) max_cosets = default_max_cosets();
    if (info->parsed()) code = cmd_info(pres_arg);
    else if (ab->parsed()) code = cmd_abelianize(pres_arg, word_text);
    else if (en->parsed()) code = cmd_enumerate(pres_arg, max_cosets, subgroup, print_action);
    else if (ce->parsed()) code = cmd_certify(family, params, out_path);
    else if (ve->parsed()) code = cmd_verify(paths, methods, max_cosets);
    else if (cl->parsed()) code = cmd_classify(tb, sol, circle, out_path);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (timings) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    std::cerr << "elapsed_ms=" << ms << '\n';
  }
  return code;
}
