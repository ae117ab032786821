#include "knotdef/seifert.hpp"

#include <sstream>

#include "knotdef/error.hpp"

namespace knotdef {

SeifertMatrix::SeifertMatrix(IntMatrix v) : v_(std::move(v)) {
    if (v_.size() % 2 != 0) {
        throw Error(ErrorCode::OddDimension, "Seifert matrix of a knot has even dimension, got " +
                                                 std::to_string(v_.size()));
    }
    const BigInt d = det(v_ - v_.transposed());
    if (abs(d) != 1) {
        std::ostringstream os;
        os << "|det(V - V^T)| must be 1, got " << abs(d);
        throw Error(ErrorCode::NotUnimodularIntersection, os.str());
    }
}

IntMatrix symmetrize(const SeifertMatrix& s) { return s.matrix() + s.matrix().transposed(); }

LaurentPoly alexander_raw(const SeifertMatrix& s) {
    const IntMatrix& v = s.matrix();
    const std::size_t n = v.size();
    const auto xs = interpolation_nodes(n + 1);
    std::vector<Rational> ys;
    ys.reserve(xs.size());
    const IntMatrix vt = v.transposed();
    for (const Rational& x : xs) {
        ys.emplace_back(det(vt - numerator(x) * v));
    }
    auto poly = interpolate_integer_poly(xs, ys);
    if (!poly) throw Error(ErrorCode::Internal, "det(V^T - tV) interpolated to non-integral coefficients");
    return *poly;
}

LaurentPoly alexander_polynomial(const SeifertMatrix& s) {
    auto normalized = symmetric_normalization(alexander_raw(s));
    if (!normalized) {
        throw Error(ErrorCode::InvalidSeifertMatrix, "det(V^T - tV) admits no symmetric normalization");
    }
    return *normalized;
}

int alexander_width(const SeifertMatrix& s) { return alexander_polynomial(s).width(); }

}  // namespace knotdef
