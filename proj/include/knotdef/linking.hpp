#pragma once

#include <span>

#include "knotdef/curve.hpp"

namespace knotdef {

struct LinkingOptions {
    int initial_segments = 16;
    /// Refinement cap per edge.
    int max_segments = 1 << 14;
};

struct LinkingResult {
    long long value = 0;
    /// Finest refinement used, segments per edge.
    int segments = 0;
    /// Smallest polygon distance seen at that refinement and the chord error it had to beat.
    double min_distance = 0.0;
    double error_bound = 0.0;
};

/// Linking number of two disjoint closed curves by signed crossings in a generic projection.
///
/// Both curves are polygonalized with N segments per edge, N = 16, 32, ... . The count at N
/// is accepted once it agrees with the count at N/2 and the polygons are farther apart than
/// their combined chord error, which rules out any crossing change between polygon and curve.
/// Throws Error(CurvesIntersect) if the distance certificate still fails at the cap and
/// Error(NoConvergence) if the counts never stabilize.
LinkingResult linking_number(const CylindricalCurve& a, const CylindricalCurve& b, const LinkingOptions& opts = {});

/// Sum of pairwise linking numbers between two families of components.
long long linking_number(std::span<const CylindricalCurve> a, std::span<const CylindricalCurve> b,
                         const LinkingOptions& opts = {});

}  // namespace knotdef
