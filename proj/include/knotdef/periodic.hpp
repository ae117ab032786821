#pragma once

#include <string>
#include <vector>

#include "knotdef/invariants.hpp"
#include "knotdef/linking.hpp"

namespace knotdef {

/// p-fold symmetric connected sum of a quotient knot with itself. The Z/p rotation permutes
/// the summands cyclically, so the cover's Seifert matrix is the p-fold block sum and the
/// quotient of the equivariant surface is the quotient's surface.
struct PeriodicModel {
    int period = 2;
    std::string name;
    SeifertMatrix quotient;
    SeifertMatrix cover;
};

/// Throws Error(BadPeriod) for p < 2.
PeriodicModel make_periodic_model(const SeifertMatrix& quotient, int p, std::string name = {});

struct AssertionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct TheoremReport {
    std::string name;
    int period = 0;
    long long quotient_sigma = 0;
    long long cover_sigma = 0;
    LaurentPoly quotient_alexander;
    LaurentPoly cover_alexander;
    int quotient_width = 0;
    int cover_width = 0;
    DefinitenessCertificate quotient_certificate;
    DefinitenessCertificate cover_certificate;
    std::vector<AssertionResult> assertions;

    [[nodiscard]] bool passed() const;
};

/// Checks on the model:
///   sigma_scaling     σ(cover) = p·σ(quotient)
///   alexander_power   Δ_cover = Δ_quotient^p
///   width_scaling     width(cover) = p·width(quotient)
///   verdict_transfer  equal verdicts, and a definite cover has a definite quotient of the
///                     same sign
TheoremReport check_theorem(const PeriodicModel& m, bool minimal_genus_asserted = false);

struct ScalingReport {
    int period = 0;
    long long base_linking = 0;
    long long lifted_linking = 0;
    std::size_t lifted_components_a = 0;
    std::size_t lifted_components_b = 0;

    [[nodiscard]] long long expected() const { return period * base_linking; }
    [[nodiscard]] bool passed() const { return lifted_linking == expected(); }
};

/// Compares lk of the full preimages with p times the base linking number.
ScalingReport check_lk_scaling(const CylindricalCurve& a, const CylindricalCurve& b, int p,
                               const LinkingOptions& opts = {});

/// Self-linking variant: b is the radial pushoff of a.
ScalingReport check_self_lk_scaling(const CylindricalCurve& a, int p, const LinkingOptions& opts = {});

}  // namespace knotdef
