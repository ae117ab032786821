#pragma once

#include <array>
#include <vector>

#include "knotdef/exactalg.hpp"

namespace knotdef {

/// Point in cylindrical coordinates about the rotation axis. `theta` is measured in turns
/// and is a lift to the reals, so 1 and 0 name the same direction.
struct CylPoint {
    Rational r;
    Rational theta;
    Rational z;

    friend bool operator==(const CylPoint&, const CylPoint&) = default;
};

/// Closed curve in the complement of the axis. Edges interpolate linearly in (r, θ, z), so an
/// edge with Δθ ≠ 0 is a helical arc. The vertex list is explicitly closed: the last vertex
/// repeats the first with θ advanced by the integer winding number.
class CylindricalCurve {
public:
    /// Throws Error(CurveMeetsAxis) if some r <= 0 and Error(CurveNotClosed) if the last
    /// vertex is not the first shifted by whole turns, or if there are too few vertices.
    explicit CylindricalCurve(std::vector<CylPoint> vertices);

    [[nodiscard]] const std::vector<CylPoint>& vertices() const noexcept { return vertices_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return vertices_.size() - 1; }
    /// Total change of θ in turns.
    [[nodiscard]] long long winding() const noexcept { return winding_; }

    /// Same curve with every θ shifted by `turns`.
    [[nodiscard]] CylindricalCurve rotated(const Rational& turns) const;
    /// Radial pushoff by `delta`.
    [[nodiscard]] CylindricalCurve pushed_off(const Rational& delta) const;
    /// Minimum over vertices of r and over distinct vertex pairs of their (r, z) distance.
    [[nodiscard]] double feature_size() const;

    friend bool operator==(const CylindricalCurve&, const CylindricalCurve&) = default;

private:
    std::vector<CylPoint> vertices_;
    long long winding_ = 0;
};

/// Radial pushoff at 1/1000 of the curve's feature size. It meets c whenever c contains a small
/// radial translate of one of its own points, as any curve lying in a half-plane θ = const does.
CylindricalCurve positive_pushoff(const CylindricalCurve& c);

/// Preimage under the p-fold branched cover (r, θ, z) -> (r, pθ, z): gcd(w, p) components,
/// the k-th rotated by k/p turn, each running p/gcd(w, p) times around the base curve.
/// Throws Error(BadPeriod) for p < 2.
std::vector<CylindricalCurve> lift_curve(const CylindricalCurve& c, int p);

/// Image of a point under the p-fold cover map.
CylPoint cover_map(const CylPoint& q, int p);

using Vec3 = std::array<double, 3>;

Vec3 to_cartesian(const CylPoint& q);

/// Point on edge `edge` at parameter u in [0, 1].
Vec3 point_on_edge(const CylindricalCurve& c, std::size_t edge, double u);

/// Upper bound on the distance between edge `edge` and its inscribed polygon with
/// `segments` equal-parameter pieces: h²/8 · max|γ''|.
double chord_error_bound(const CylindricalCurve& c, std::size_t edge, int segments);

}  // namespace knotdef
