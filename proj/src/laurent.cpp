#include "knotdef/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "knotdef/error.hpp"

namespace knotdef {

LaurentPoly::LaurentPoly(const BigInt& constant) {
    if (constant != 0) terms_.emplace(0, constant);
}

LaurentPoly LaurentPoly::monomial(const BigInt& coefficient, int exponent) {
    LaurentPoly p;
    p.add_term(exponent, coefficient);
    return p;
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, BigInt>>& pairs) {
    LaurentPoly p;
    for (const auto& [e, c] : pairs) p.add_term(e, c);
    return p;
}

void LaurentPoly::add_term(int exponent, const BigInt& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw Error(ErrorCode::Internal, "min_exponent of the zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw Error(ErrorCode::Internal, "max_exponent of the zero polynomial");
    return terms_.rbegin()->first;
}

int LaurentPoly::width() const { return terms_.empty() ? 0 : max_exponent() - min_exponent(); }

BigInt LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::vector<std::pair<int, BigInt>> LaurentPoly::pairs() const { return {terms_.begin(), terms_.end()}; }

Rational LaurentPoly::evaluate(const Rational& t) const {
    if (terms_.empty()) return 0;
    if (t == 0 && min_exponent() < 0) throw Error(ErrorCode::Internal, "evaluating a negative power at 0");
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
        Rational power = 1;
        const Rational base = e >= 0 ? t : Rational(1) / t;
        for (int k = 0; k < std::abs(e); ++k) power *= base;
        sum += Rational(c) * power;
    }
    return sum;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
    return p;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
    return p;
}

LaurentPoly LaurentPoly::pow(unsigned exponent) const {
    LaurentPoly result(1);
    for (unsigned i = 0; i < exponent; ++i) result = result * *this;
    return result;
}

bool LaurentPoly::associate_of(const LaurentPoly& other) const {
    if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
    const LaurentPoly aligned = other.shifted(min_exponent() - other.min_exponent());
    return aligned == *this || -aligned == *this;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 't';
        if (e != 1) os << '^' << e;
    }
    return os.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly p;
    for (const auto& [e, c] : a.terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
    return p;
}

std::optional<LaurentPoly> exact_divide(const LaurentPoly& numerator, const LaurentPoly& denominator) {
    if (denominator.is_zero()) throw Error(ErrorCode::Internal, "division by the zero polynomial");
    LaurentPoly rem = numerator;
    LaurentPoly quotient;
    const int dmax = denominator.max_exponent();
    const int dmin = denominator.min_exponent();
    const BigInt lead = denominator.coefficient(dmax);
    const int lowest_quotient_exponent = numerator.is_zero() ? 0 : numerator.min_exponent() - dmin;
    while (!rem.is_zero()) {
        const int e = rem.max_exponent();
        if (e - dmax < lowest_quotient_exponent) return std::nullopt;
        const BigInt c = rem.coefficient(e);
        if (c % lead != 0) return std::nullopt;
        const LaurentPoly term = LaurentPoly::monomial(c / lead, e - dmax);
        quotient += term;
        rem -= term * denominator;
    }
    return quotient;
}

std::optional<LaurentPoly> symmetric_normalization(const LaurentPoly& p) {
    if (p.is_zero()) return std::nullopt;
    const int span = p.min_exponent() + p.max_exponent();
    if (span % 2 != 0) return std::nullopt;
    LaurentPoly centered = p.shifted(-span / 2);
    const Rational at_one = centered.evaluate(1);
    if (at_one == -1) {
        centered = -centered;
    } else if (at_one != 1) {
        return std::nullopt;
    }
    if (centered.inverted() != centered) return std::nullopt;
    return centered;
}

std::vector<Rational> interpolation_nodes(std::size_t count) {
    std::vector<Rational> xs;
    xs.reserve(count);
    for (std::size_t i = 0; xs.size() < count; ++i) {
        if (i == 0) {
            xs.emplace_back(0);
            continue;
        }
        xs.emplace_back(static_cast<long long>(i));
        if (xs.size() < count) xs.emplace_back(-static_cast<long long>(i));
    }
    return xs;
}

std::optional<LaurentPoly> interpolate_integer_poly(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n) throw Error(ErrorCode::Internal, "interpolation: size mismatch");
    if (n == 0) return LaurentPoly{};

    // Newton divided differences, then expand the Newton form into monomials.
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);

    std::vector<Rational> coeffs{dd[n - 1]};
    for (std::size_t k = n - 1; k-- > 0;) {
        // coeffs <- coeffs * (t - xs[k]) + dd[k]
        std::vector<Rational> next(coeffs.size() + 1);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * xs[k];
        }
        next[0] += dd[k];
        coeffs = std::move(next);
    }

    LaurentPoly out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (denominator(coeffs[i]) != 1) return std::nullopt;
        out += LaurentPoly::monomial(numerator(coeffs[i]), static_cast<int>(i));
    }
    return out;
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
    LaurentMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly(1);
    return m;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw Error(ErrorCode::NotSquare, "Laurent matrix dimension mismatch");
    LaurentMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw Error(ErrorCode::NotSquare, "Laurent matrix dimension mismatch");
    LaurentMatrix c = a;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) -= b(i, j);
    return c;
}

LaurentPoly det(const LaurentMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly(1);

    LaurentMatrix shifted(n);
    int total_shift = 0;
    int degree_bound = 0;
    for (std::size_t i = 0; i < n; ++i) {
        int lo = 0, hi = 0;
        bool any = false;
        for (std::size_t j = 0; j < n; ++j) {
            const LaurentPoly& e = m(i, j);
            if (e.is_zero()) continue;
            lo = any ? std::min(lo, e.min_exponent()) : e.min_exponent();
            hi = any ? std::max(hi, e.max_exponent()) : e.max_exponent();
            any = true;
        }
        if (!any) return LaurentPoly{};
        for (std::size_t j = 0; j < n; ++j) shifted(i, j) = m(i, j).shifted(-lo);
        total_shift += lo;
        degree_bound += hi - lo;
    }

    const auto xs = interpolation_nodes(static_cast<std::size_t>(degree_bound) + 1);
    std::vector<Rational> ys;
    ys.reserve(xs.size());
    for (const Rational& x : xs) {
        IntMatrix at(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) at(i, j) = numerator(shifted(i, j).evaluate(x));
        ys.emplace_back(det(at));
    }
    auto poly = interpolate_integer_poly(xs, ys);
    if (!poly) throw Error(ErrorCode::Internal, "interpolated determinant has non-integral coefficients");
    return poly->shifted(total_shift);
}

}  // namespace knotdef
