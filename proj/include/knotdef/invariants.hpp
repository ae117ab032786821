#pragma once

#include <string_view>

#include "knotdef/seifert.hpp"

namespace knotdef {

enum class Verdict { Definite, NotDefinite, Unknown };
enum class DefiniteSign { Positive, Negative, NotApplicable };

enum class CertificateReason {
    /// |σ| equals the dimension: the symmetrized form itself is definite.
    FullSignature,
    /// width(Δ) ≠ |σ|, impossible for a definite knot.
    WidthSigmaMismatch,
    /// The surface is asserted minimal genus but its form is not definite.
    SigmaDeficitOnMinimalSurface,
    /// |σ| = width < dimension; the presented surface may not be minimal.
    PossiblyNonMinimalSurface,
};

std::string_view to_string(Verdict v);
std::string_view to_string(DefiniteSign s);
std::string_view to_string(CertificateReason r);

struct DefinitenessCertificate {
    Verdict verdict = Verdict::Unknown;
    DefiniteSign sign = DefiniteSign::NotApplicable;
    long long sigma = 0;
    int width = 0;
    std::size_t surface_genus = 0;
    bool minimal_genus_established = false;
    CertificateReason reason = CertificateReason::PossiblyNonMinimalSurface;

    friend bool operator==(const DefinitenessCertificate&, const DefinitenessCertificate&) = default;
};

/// Knot signature: signature of V + Vᵀ.
long long signature(const SeifertMatrix& s);

/// Genus of the presented surface, dim/2. Not necessarily the knot genus.
inline std::size_t surface_genus(const SeifertMatrix& s) { return s.size() / 2; }

/// Decide definiteness from signature, Alexander width and dimension.
///
/// A definite form of dimension n has |σ| = n and forces the surface to be minimal genus.
/// A definite knot always has width(Δ) = |σ|, so a mismatch rules definiteness out. When
/// |σ| = width < n the answer depends on whether the presented surface is minimal, which
/// the caller may assert through `minimal_genus_asserted`.
DefinitenessCertificate certify_definite(const SeifertMatrix& s, bool minimal_genus_asserted = false);

}  // namespace knotdef
