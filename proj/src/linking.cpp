#include "knotdef/linking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "knotdef/error.hpp"

namespace knotdef {

namespace {

constexpr std::size_t kBlock = 64;
constexpr int kMaxShears = 16;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct Box {
    Vec3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
            std::numeric_limits<double>::infinity()};
    Vec3 hi{-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity(),
            -std::numeric_limits<double>::infinity()};

    void add(const Vec3& p) {
        for (int k = 0; k < 3; ++k) {
            lo[k] = std::min(lo[k], p[k]);
            hi[k] = std::max(hi[k], p[k]);
        }
    }
};

double box_distance(const Box& a, const Box& b, int dims = 3) {
    double s = 0.0;
    for (int k = 0; k < dims; ++k) {
        const double gap = std::max({0.0, a.lo[k] - b.hi[k], b.lo[k] - a.hi[k]});
        s += gap * gap;
    }
    return std::sqrt(s);
}

/// Closed polygon with a bounding box per block of consecutive segments.
struct Polygon {
    std::vector<Vec3> pts;
    std::vector<Box> blocks;
    double chord_error = 0.0;

    [[nodiscard]] std::size_t segments() const { return pts.size(); }
    [[nodiscard]] const Vec3& start(std::size_t i) const { return pts[i]; }
    [[nodiscard]] const Vec3& end(std::size_t i) const { return pts[(i + 1) % pts.size()]; }
};

Polygon polygonalize(const CylindricalCurve& c, int n) {
    Polygon poly;
    poly.pts.reserve(c.edge_count() * static_cast<std::size_t>(n));
    for (std::size_t e = 0; e < c.edge_count(); ++e) {
        for (int s = 0; s < n; ++s) poly.pts.push_back(point_on_edge(c, e, static_cast<double>(s) / n));
        poly.chord_error = std::max(poly.chord_error, chord_error_bound(c, e, n));
    }
    for (std::size_t i = 0; i < poly.segments(); i += kBlock) {
        Box box;
        for (std::size_t j = i; j < std::min(i + kBlock, poly.segments()); ++j) {
            box.add(poly.start(j));
            box.add(poly.end(j));
        }
        poly.blocks.push_back(box);
    }
    return poly;
}

// Closest distance between segments p1q1 and p2q2 (Ericson, Real-Time Collision Detection 5.1.9).
double segment_distance(const Vec3& p1, const Vec3& q1, const Vec3& p2, const Vec3& q2) {
    const Vec3 d1 = sub(q1, p1), d2 = sub(q2, p2), r = sub(p1, p2);
    const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
    constexpr double tiny = 1e-300;
    double s = 0.0, t = 0.0;
    if (a <= tiny && e <= tiny) {
        s = t = 0.0;
    } else if (a <= tiny) {
        t = std::clamp(f / e, 0.0, 1.0);
    } else {
        const double c = dot(d1, r);
        if (e <= tiny) {
            s = std::clamp(-c / a, 0.0, 1.0);
        } else {
            const double b = dot(d1, d2);
            const double denom = a * e - b * b;
            s = denom > 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
            t = (b * s + f) / e;
            if (t < 0.0) {
                t = 0.0;
                s = std::clamp(-c / a, 0.0, 1.0);
            } else if (t > 1.0) {
                t = 1.0;
                s = std::clamp((b - c) / a, 0.0, 1.0);
            }
        }
    }
    const Vec3 c1{p1[0] + d1[0] * s, p1[1] + d1[1] * s, p1[2] + d1[2] * s};
    const Vec3 c2{p2[0] + d2[0] * t, p2[1] + d2[1] * t, p2[2] + d2[2] * t};
    const Vec3 d = sub(c1, c2);
    return std::sqrt(dot(d, d));
}

double min_distance(const Polygon& a, const Polygon& b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t ba = 0; ba < a.blocks.size(); ++ba) {
        for (std::size_t bb = 0; bb < b.blocks.size(); ++bb) {
            if (box_distance(a.blocks[ba], b.blocks[bb]) >= best) continue;
            const std::size_t ia_end = std::min((ba + 1) * kBlock, a.segments());
            const std::size_t ib_end = std::min((bb + 1) * kBlock, b.segments());
            for (std::size_t i = ba * kBlock; i < ia_end; ++i)
                for (std::size_t j = bb * kBlock; j < ib_end; ++j)
                    best = std::min(best, segment_distance(a.start(i), a.end(i), b.start(j), b.end(j)));
        }
    }
    return best;
}

struct Projected {
    double x, y, height;
};

// Parallel projection along (-k/7, -k/13, 1) onto z = 0; height is z.
Projected project(const Vec3& p, int shear) {
    return {p[0] + shear * p[2] / 7.0, p[1] + shear * p[2] / 13.0, p[2]};
}

double orient(const Projected& a, const Projected& b, const Projected& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int sign_of(double v) { return (v > 0) - (v < 0); }

/// Signed count of crossings where a passes over b, or nothing if the projection is degenerate.
std::optional<long long> count_crossings(const Polygon& a, const Polygon& b, int shear, double scale) {
    const double tol = 1e-11 * scale * scale;
    auto project_blocks = [&](const Polygon& poly) {
        std::vector<Box> boxes;
        for (std::size_t i = 0; i < poly.segments(); i += kBlock) {
            Box box;
            for (std::size_t j = i; j < std::min(i + kBlock, poly.segments()); ++j) {
                for (const Vec3* p : {&poly.start(j), &poly.end(j)}) {
                    const Projected q = project(*p, shear);
                    box.add({q.x, q.y, 0.0});
                }
            }
            boxes.push_back(box);
        }
        return boxes;
    };
    const auto boxes_a = project_blocks(a);
    const auto boxes_b = project_blocks(b);

    long long total = 0;
    for (std::size_t ba = 0; ba < boxes_a.size(); ++ba) {
        for (std::size_t bb = 0; bb < boxes_b.size(); ++bb) {
            if (box_distance(boxes_a[ba], boxes_b[bb], 2) > 1e-9 * scale) continue;
            const std::size_t ia_end = std::min((ba + 1) * kBlock, a.segments());
            const std::size_t ib_end = std::min((bb + 1) * kBlock, b.segments());
            for (std::size_t i = ba * kBlock; i < ia_end; ++i) {
                const Projected a0 = project(a.start(i), shear), a1 = project(a.end(i), shear);
                for (std::size_t j = bb * kBlock; j < ib_end; ++j) {
                    const Projected b0 = project(b.start(j), shear), b1 = project(b.end(j), shear);
                    const double o1 = orient(a0, a1, b0), o2 = orient(a0, a1, b1);
                    const double o3 = orient(b0, b1, a0), o4 = orient(b0, b1, a1);
                    const bool near_a = std::abs(o1) < tol || std::abs(o2) < tol;
                    const bool near_b = std::abs(o3) < tol || std::abs(o4) < tol;
                    const bool straddle_a = sign_of(o1) != sign_of(o2);
                    const bool straddle_b = sign_of(o3) != sign_of(o4);
                    if ((near_a && (straddle_b || near_b)) || (near_b && (straddle_a || near_a))) return std::nullopt;
                    if (!straddle_a || !straddle_b) continue;

                    const double ta = o3 / (o3 - o4);
                    const double tb = o1 / (o1 - o2);
                    const double za = a0.height + ta * (a1.height - a0.height);
                    const double zb = b0.height + tb * (b1.height - b0.height);
                    if (std::abs(za - zb) < 1e-12 * scale) return std::nullopt;
                    if (za < zb) continue;
                    const double cross = (a1.x - a0.x) * (b1.y - b0.y) - (a1.y - a0.y) * (b1.x - b0.x);
                    total += sign_of(cross);
                }
            }
        }
    }
    return total;
}

double extent(const Polygon& a, const Polygon& b) {
    Box box;
    for (const auto& p : a.pts) box.add(p);
    for (const auto& p : b.pts) box.add(p);
    const Vec3 d = sub(box.hi, box.lo);
    return std::max(1.0, std::sqrt(dot(d, d)));
}

}  // namespace

LinkingResult linking_number(const CylindricalCurve& a, const CylindricalCurve& b, const LinkingOptions& opts) {
    long long previous = 0;
    bool have_previous = false;
    bool last_certified = false;
    LinkingResult result;
    for (int n = opts.initial_segments; n <= opts.max_segments; n *= 2) {
        const Polygon pa = polygonalize(a, n);
        const Polygon pb = polygonalize(b, n);
        const double scale = extent(pa, pb);
        result.segments = n;
        result.min_distance = min_distance(pa, pb);
        result.error_bound = pa.chord_error + pb.chord_error + 1e-9 * scale;
        last_certified = result.min_distance > result.error_bound;
        if (!last_certified) {
            have_previous = false;
            continue;
        }

        std::optional<long long> count;
        for (int shear = 1; shear <= kMaxShears && !count; ++shear) count = count_crossings(pa, pb, shear, scale);
        if (!count) throw Error(ErrorCode::NoConvergence, "projection stayed degenerate after repeated shears");

        if (have_previous && previous == *count) {
            result.value = *count;
            return result;
        }
        previous = *count;
        have_previous = true;
    }
    if (!last_certified) {
        throw Error(ErrorCode::CurvesIntersect, "curves are within the polygonalization error at " +
                                                    std::to_string(opts.max_segments) + " segments per edge");
    }
    throw Error(ErrorCode::NoConvergence, "crossing counts did not stabilize below the refinement cap");
}

long long linking_number(std::span<const CylindricalCurve> a, std::span<const CylindricalCurve> b,
                         const LinkingOptions& opts) {
    long long total = 0;
    for (const auto& ca : a)
        for (const auto& cb : b) total += linking_number(ca, cb, opts).value;
    return total;
}

}  // namespace knotdef
