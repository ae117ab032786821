#pragma once

// Curves and matrices shared by the unit and acceptance tests.

#include <array>
#include <vector>

#include "knotdef/curve.hpp"
#include "knotdef/exactalg.hpp"

namespace fixture {

using knotdef::CylindricalCurve;
using knotdef::CylPoint;
using knotdef::IntMatrix;
using knotdef::Rational;

inline const IntMatrix& trefoil() {
    static const IntMatrix m = IntMatrix::from_rows({{-1, 1}, {0, -1}});
    return m;
}

inline const IntMatrix& figure_eight() {
    static const IntMatrix m = IntMatrix::from_rows({{1, 1}, {0, -1}});
    return m;
}

/// Horizontal circle of radius r around the axis at height z, four helical edges, w = 1.
inline CylindricalCurve axis_circle(Rational r = 2, Rational z = 0) {
    std::vector<CylPoint> v;
    for (int k = 0; k <= 4; ++k) v.push_back({r, Rational(k, 4), z});
    return CylindricalCurve(std::move(v));
}

/// Square with diagonals along r and z, centered at (rc, zc) in the half-plane θ = th; w = 0.
inline CylindricalCurve meridian_diamond(Rational rc, Rational zc, Rational th = 0, Rational half = 1) {
    return CylindricalCurve({{rc - half, th, zc},
                             {rc, th, zc + half},
                             {rc + half, th, zc},
                             {rc, th, zc - half},
                             {rc - half, th, zc}});
}

/// Thin loop at height 0 that passes through meridian_diamond(2, 0) without circling the axis.
inline CylindricalCurve finger() {
    const Rational e(1, 10);
    return CylindricalCurve({{2, -e, 0}, {2, e, 0}, {4, e, 0}, {4, -e, 0}, {2, -e, 0}});
}

/// Curve on the torus around axis_circle(2) running `laps` times around its meridian while
/// going `turns` times around the axis.
inline CylindricalCurve torus_curve(int turns, int laps) {
    const std::array<std::array<Rational, 2>, 4> off{{{Rational(1, 2), 0}, {0, Rational(1, 2)},
                                                      {Rational(-1, 2), 0}, {0, Rational(-1, 2)}}};
    std::vector<CylPoint> v;
    const int steps = 4 * laps;
    for (int k = 0; k <= steps; ++k)
        v.push_back({2 + off[k % 4][0], Rational(turns * k, steps), off[k % 4][1]});
    return CylindricalCurve(std::move(v));
}

}  // namespace fixture
