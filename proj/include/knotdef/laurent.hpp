#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotdef/exactalg.hpp"

namespace knotdef {

/// Integer Laurent polynomial in one variable t. Zero coefficients are never stored,
/// so the zero polynomial has no terms.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const BigInt& constant);  // NOLINT: implicit from integers is intended
    LaurentPoly(long long constant) : LaurentPoly(BigInt(constant)) {}

    static LaurentPoly monomial(const BigInt& coefficient, int exponent);
    static LaurentPoly t() { return monomial(1, 1); }
    /// Ascending exponent/coefficient pairs; zero coefficients are dropped.
    static LaurentPoly from_pairs(const std::vector<std::pair<int, BigInt>>& pairs);

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] int min_exponent() const;
    [[nodiscard]] int max_exponent() const;
    /// max - min exponent; 0 for the zero polynomial.
    [[nodiscard]] int width() const;
    [[nodiscard]] BigInt coefficient(int exponent) const;
    [[nodiscard]] const std::map<int, BigInt>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::vector<std::pair<int, BigInt>> pairs() const;

    [[nodiscard]] Rational evaluate(const Rational& t) const;
    [[nodiscard]] LaurentPoly shifted(int k) const;  // multiply by t^k
    [[nodiscard]] LaurentPoly inverted() const;      // substitute t -> t^-1
    [[nodiscard]] LaurentPoly pow(unsigned exponent) const;

    /// True when P = ±t^k Q for some k and sign.
    [[nodiscard]] bool associate_of(const LaurentPoly& other) const;

    /// Human-readable form, e.g. "t^-1 - 1 + t".
    [[nodiscard]] std::string to_string() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    void add_term(int exponent, const BigInt& coefficient);

    std::map<int, BigInt> terms_;
};

inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

/// Exact division of polynomials; returns the quotient or nothing when the remainder
/// is nonzero or the quotient is not integral.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& numerator, const LaurentPoly& denominator);

/// Multiply by ±t^k so the result is palindromic about exponent 0 and takes the value +1
/// at t = 1. Returns nothing when no such unit exists (e.g. P(1) ≠ ±1).
std::optional<LaurentPoly> symmetric_normalization(const LaurentPoly& p);

/// Unique polynomial of degree < xs.size() through the points (xs[i], ys[i]), with all
/// coefficients required to be integers. Returns nothing if some coefficient is fractional.
std::optional<LaurentPoly> interpolate_integer_poly(const std::vector<Rational>& xs,
                                                    const std::vector<Rational>& ys);

/// Sample points 0, 1, -1, 2, -2, ... (count of them).
std::vector<Rational> interpolation_nodes(std::size_t count);

/// Square matrix with Laurent-polynomial entries, row-major.
class LaurentMatrix {
public:
    explicit LaurentMatrix(std::size_t n) : n_(n), entries_(n * n) {}
    static LaurentMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
    friend LaurentMatrix operator-(const LaurentMatrix& a, const LaurentMatrix& b);

private:
    std::size_t n_;
    std::vector<LaurentPoly> entries_;
};

/// Determinant by evaluation at integer nodes and exact interpolation. Each row is first
/// shifted to an ordinary polynomial so the degree bound is known in advance.
LaurentPoly det(const LaurentMatrix& m);

}  // namespace knotdef
