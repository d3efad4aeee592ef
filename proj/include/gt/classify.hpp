#pragma once

#include "gt/certificates.hpp"

namespace gt {

enum class OrderStatus { BiOrderable, NotBiOrderable, OutOfScope };

struct Verdict {
  OrderStatus status;
  std::string reason;
  std::optional<GtCertificate> certificate;  // only with NotBiOrderable
};

// bi-orderable iff the monodromy has a positive real eigenvalue, decided by
// integer sign analysis: det = -1 always qualifies; det = 1 needs trace >= 2.
// For det = 1, trace < 0 and a case-shaped matrix, a certificate is attached.
Verdict classify_torus_bundle(const Mat2& A);

struct SurfaceDescriptor {
  enum class Kind { S2, P2, Klein, Other };
  Kind kind = Kind::Other;
  long genus = 0;        // Other only
  bool orientable = true;
  long n_boundary = 0;
};

enum class SpecialManifold { None, S3, S1xS2, TwistedS1S2, SolidKlein };

Verdict classify_circle_bundle(const SurfaceDescriptor& base, bool bundle_orientable,
                               SpecialManifold special = SpecialManifold::None);

struct SolDescriptor {
  enum class Kind { TorusBundle, TwistedIBundleKlein, KleinOrTorusSemibundle };
  Kind kind;
  Mat2 monodromy{1, 0, 0, 1};  // TorusBundle only
};

Verdict classify_sol(const SolDescriptor& d);

}  // namespace gt
