#pragma once

#include "gt/certificates.hpp"

namespace gt {

/// Line-oriented certificate format, version gtcert/1:
///   format: gtcert/1
///   presentation: <family shorthand>  (or a path to a presentation file)
///   base: <word>
///   factor: <conjugator word> | <multiplicity>     (repeated, ordered)
///   target: <word>
///   step: <conjugator word> | <relator index> | <+1|-1>
///   evidence: abelian-nonzero
///             finite-quotient [<w1> | <w2> | ...]
///             normal-form <engine>
///             cited <text>
std::string write_certificate(const GtCertificate& c);
GtCertificate read_certificate(const std::string& text);

void save_certificate(const GtCertificate& c, const std::string& path);
GtCertificate load_certificate(const std::string& path);

}  // namespace gt
