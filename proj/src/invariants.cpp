#include "knotdef/invariants.hpp"

#include <cstdlib>

namespace knotdef {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Definite: return "Definite";
        case Verdict::NotDefinite: return "NotDefinite";
        case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string_view to_string(DefiniteSign s) {
    switch (s) {
        case DefiniteSign::Positive: return "Positive";
        case DefiniteSign::Negative: return "Negative";
        case DefiniteSign::NotApplicable: return "NotApplicable";
    }
    return "NotApplicable";
}

std::string_view to_string(CertificateReason r) {
    switch (r) {
        case CertificateReason::FullSignature: return "FullSignature";
        case CertificateReason::WidthSigmaMismatch: return "WidthSigmaMismatch";
        case CertificateReason::SigmaDeficitOnMinimalSurface: return "SigmaDeficitOnMinimalSurface";
        case CertificateReason::PossiblyNonMinimalSurface: return "PossiblyNonMinimalSurface";
    }
    return "PossiblyNonMinimalSurface";
}

long long signature(const SeifertMatrix& s) { return inertia(symmetrize(s)).signature(); }

DefinitenessCertificate certify_definite(const SeifertMatrix& s, bool minimal_genus_asserted) {
    DefinitenessCertificate cert;
    const auto n = static_cast<long long>(s.size());
    cert.sigma = signature(s);
    cert.width = alexander_width(s);
    cert.surface_genus = surface_genus(s);
    const long long abs_sigma = std::llabs(cert.sigma);

    if (abs_sigma == n) {
        cert.verdict = Verdict::Definite;
        cert.sign = cert.sigma > 0   ? DefiniteSign::Positive
                    : cert.sigma < 0 ? DefiniteSign::Negative
                                     : DefiniteSign::NotApplicable;
        cert.minimal_genus_established = true;
        cert.reason = CertificateReason::FullSignature;
    } else if (cert.width != abs_sigma) {
        cert.verdict = Verdict::NotDefinite;
        cert.reason = CertificateReason::WidthSigmaMismatch;
        // width/2 <= g(K) <= n/2
        cert.minimal_genus_established = cert.width == n;
    } else if (minimal_genus_asserted) {
        cert.verdict = Verdict::NotDefinite;
        cert.reason = CertificateReason::SigmaDeficitOnMinimalSurface;
    } else {
        cert.verdict = Verdict::Unknown;
        cert.reason = CertificateReason::PossiblyNonMinimalSurface;
    }
    return cert;
}

}  // namespace knotdef
