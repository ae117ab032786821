#include "knotdef/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "knotdef/error.hpp"

namespace knotdef {

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace

CylindricalCurve::CylindricalCurve(std::vector<CylPoint> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw Error(ErrorCode::CurveNotClosed, "a closed curve needs at least two vertices");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].r <= 0) {
            throw Error(ErrorCode::CurveMeetsAxis, "vertex " + std::to_string(i) + " has r <= 0");
        }
    }
    const CylPoint& first = vertices_.front();
    const CylPoint& last = vertices_.back();
    const Rational turns = last.theta - first.theta;
    if (last.r != first.r || last.z != first.z || denominator(turns) != 1) {
        throw Error(ErrorCode::CurveNotClosed, "last vertex must repeat the first up to whole turns of theta");
    }
    winding_ = numerator(turns).convert_to<long long>();
    if (winding_ == 0 && vertices_.size() < 4) {
        throw Error(ErrorCode::CurveNotClosed, "a curve that does not wind around the axis needs three distinct vertices");
    }
}

CylindricalCurve CylindricalCurve::rotated(const Rational& turns) const {
    std::vector<CylPoint> out = vertices_;
    for (auto& v : out) v.theta += turns;
    return CylindricalCurve(std::move(out));
}

CylindricalCurve CylindricalCurve::pushed_off(const Rational& delta) const {
    std::vector<CylPoint> out = vertices_;
    for (auto& v : out) v.r += delta;
    return CylindricalCurve(std::move(out));
}

double CylindricalCurve::feature_size() const {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t m = vertices_.size() - 1;
    for (std::size_t i = 0; i < m; ++i) {
        best = std::min(best, to_double(vertices_[i].r));
        for (std::size_t j = i + 1; j < m; ++j) {
            const double dr = to_double(vertices_[i].r - vertices_[j].r);
            const double dz = to_double(vertices_[i].z - vertices_[j].z);
            const double d = std::hypot(dr, dz);
            if (d > 0) best = std::min(best, d);
        }
    }
    return best;
}

CylindricalCurve positive_pushoff(const CylindricalCurve& c) {
    // Rationalize the offset so the pushed curve stays exact.
    const double size = c.feature_size() / 1000.0;
    const long long scale = 1LL << 40;
    Rational delta(static_cast<long long>(std::floor(size * static_cast<double>(scale))), scale);
    if (delta <= 0) delta = Rational(1, scale);
    return c.pushed_off(delta);
}

std::vector<CylindricalCurve> lift_curve(const CylindricalCurve& c, int p) {
    if (p < 2) throw Error(ErrorCode::BadPeriod, "period must be at least 2, got " + std::to_string(p));
    const long long w = c.winding();
    const long long g = std::gcd(w, static_cast<long long>(p));  // gcd(0, p) = p
    const long long traversals = p / g;
    const auto& base = c.vertices();
    const std::size_t m = base.size() - 1;

    std::vector<CylindricalCurve> components;
    components.reserve(static_cast<std::size_t>(g));
    for (long long k = 0; k < g; ++k) {
        std::vector<CylPoint> pts;
        pts.reserve(static_cast<std::size_t>(traversals) * m + 1);
        for (long long t = 0; t < traversals; ++t) {
            for (std::size_t i = 0; i < m; ++i) {
                const CylPoint& q = base[i];
                pts.push_back({q.r, (q.theta + Rational(t * w + k)) / p, q.z});
            }
        }
        pts.push_back({base[0].r, (base[0].theta + Rational(traversals * w + k)) / p, base[0].z});
        components.emplace_back(std::move(pts));
    }
    return components;
}

CylPoint cover_map(const CylPoint& q, int p) { return {q.r, q.theta * p, q.z}; }

Vec3 to_cartesian(const CylPoint& q) {
    const double r = to_double(q.r);
    const double phi = 2.0 * std::numbers::pi * to_double(q.theta);
    return {r * std::cos(phi), r * std::sin(phi), to_double(q.z)};
}

Vec3 point_on_edge(const CylindricalCurve& c, std::size_t edge, double u) {
    const CylPoint& a = c.vertices()[edge];
    const CylPoint& b = c.vertices()[edge + 1];
    const double r = to_double(a.r) + u * to_double(b.r - a.r);
    const double theta = to_double(a.theta) + u * to_double(b.theta - a.theta);
    const double z = to_double(a.z) + u * to_double(b.z - a.z);
    const double phi = 2.0 * std::numbers::pi * theta;
    return {r * std::cos(phi), r * std::sin(phi), z};
}

double chord_error_bound(const CylindricalCurve& c, std::size_t edge, int segments) {
    // γ(u) = r(u) e^{iφ(u)} + z(u) k with r, φ, z linear, so
    // |γ''| <= 2|r'||φ'| + r_max φ'^2 and the chord error is at most h^2/8 · |γ''|.
    const CylPoint& a = c.vertices()[edge];
    const CylPoint& b = c.vertices()[edge + 1];
    const double dr = std::abs(to_double(b.r - a.r));
    const double dphi = 2.0 * std::numbers::pi * std::abs(to_double(b.theta - a.theta));
    const double r_max = std::max(to_double(a.r), to_double(b.r));
    const double h = 1.0 / segments;
    return h * h / 8.0 * (2.0 * dr * dphi + r_max * dphi * dphi);
}

}  // namespace knotdef
