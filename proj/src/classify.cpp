#include "gt/classify.hpp"

namespace gt {

Verdict classify_torus_bundle(const Mat2& A) {
  Int det = A.det();
  if (det != 1 && det != -1) throw certificate_error("monodromy determinant must be +-1");
  Int tr = A.trace();
  if (det == -1) {
    // eigenvalues are real with product -1: one is always positive
    return {OrderStatus::BiOrderable, "determinant -1: eigenvalues have opposite signs", {}};
  }
  if (tr >= 2) {
    // real eigenvalues with product 1 and positive sum
    return {OrderStatus::BiOrderable, "determinant 1, trace >= 2: positive eigenvalue pair", {}};
  }
  Verdict v{OrderStatus::NotBiOrderable, "no positive eigenvalue", {}};
  if (tr < 0 && ((A.a <= 0 && A.d <= 0) || (A.a > 0 && A.d < 0))) {
    v.certificate = build_torus_bundle_certificate(A.a, A.b, A.c, A.d);
    v.reason = "negative trace: the fiber class is a generalized torsion element";
  }
  return v;
}

Verdict classify_circle_bundle(const SurfaceDescriptor& base, bool bundle_orientable,
                               SpecialManifold special) {
  switch (special) {
    case SpecialManifold::S3:
      return {OrderStatus::BiOrderable, "trivial fundamental group", {}};
    case SpecialManifold::S1xS2:
    case SpecialManifold::TwistedS1S2:
    case SpecialManifold::SolidKlein:
      return {OrderStatus::BiOrderable, "infinite cyclic fundamental group", {}};
    case SpecialManifold::None:
      break;
  }
  if (!bundle_orientable) {
    return {OrderStatus::NotBiOrderable,
            "non-orientable circle bundle outside the infinite-cyclic exceptions",
            {}};
  }
  switch (base.kind) {
    case SurfaceDescriptor::Kind::S2:
    case SurfaceDescriptor::Kind::P2:
      return {OrderStatus::NotBiOrderable, "finite cyclic quotient forces torsion", {}};
    case SurfaceDescriptor::Kind::Klein: {
      Verdict v{OrderStatus::NotBiOrderable,
                "Klein bottle base: [x,y] is a generalized torsion element since x^2 y^2 "
                "is central",
                {}};
      v.certificate = build_kbcircle_certificate();
      return v;
    }
    case SurfaceDescriptor::Kind::Other:
      return {OrderStatus::BiOrderable,
              "orientable circle bundle over a surface other than S^2, P^2, Klein bottle",
              {}};
  }
  throw certificate_error("malformed surface descriptor");
}

Verdict classify_sol(const SolDescriptor& d) {
  switch (d.kind) {
    case SolDescriptor::Kind::TorusBundle:
      return classify_torus_bundle(d.monodromy);
    case SolDescriptor::Kind::TwistedIBundleKlein: {
      Verdict v{OrderStatus::NotBiOrderable,
                "Klein bottle group: x * x^y = 1 with x nontrivial",
                {}};
      v.certificate = build_klein_certificate();
      return v;
    }
    case SolDescriptor::Kind::KleinOrTorusSemibundle: {
      Verdict v{OrderStatus::NotBiOrderable,
                "contains a pi1-injective Klein bottle, so x * x^y = 1 transfers",
                {}};
      GtCertificate cert = build_klein_certificate();
      cert.evidence = {EvidenceKind::Cited,
                       {},
                       "",
                       "base is nontrivial in the ambient group via a pi1-injective "
                       "Klein bottle subgroup"};
      v.certificate = std::move(cert);
      return v;
    }
  }
  throw certificate_error("malformed Sol descriptor");
}

}  // namespace gt
