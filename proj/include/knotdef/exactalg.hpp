#pragma once

// Exact integer and rational linear algebra. Nothing in here touches floating point.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace knotdef {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Square matrix of arbitrary-precision integers, row-major. The 0x0 matrix is legal.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    /// Throws Error(NotSquare) when the rows do not form a square array.
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    static IntMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] bool empty() const noexcept { return n_ == 0; }

    BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    [[nodiscard]] IntMatrix transposed() const;
    [[nodiscard]] bool is_symmetric() const;
    [[nodiscard]] std::vector<std::vector<BigInt>> rows() const;

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator*(const BigInt& k, const IntMatrix& a);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct Inertia {
    std::size_t n_plus = 0;
    std::size_t n_zero = 0;
    std::size_t n_minus = 0;

    [[nodiscard]] std::size_t dimension() const noexcept { return n_plus + n_zero + n_minus; }
    [[nodiscard]] long long signature() const noexcept {
        return static_cast<long long>(n_plus) - static_cast<long long>(n_minus);
    }

    friend Inertia operator+(const Inertia& a, const Inertia& b) {
        return {a.n_plus + b.n_plus, a.n_zero + b.n_zero, a.n_minus + b.n_minus};
    }
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

std::ostream& operator<<(std::ostream& os, const Inertia& in);

enum class FormClass { Positive, Negative, Indefinite, Degenerate };

std::string_view to_string(FormClass c);

/// Fraction-free (Bareiss) determinant. det of the 0x0 matrix is 1.
BigInt det(const IntMatrix& m);

/// Determinant of a dense rational matrix given row-major, by Gaussian elimination.
Rational det_rational(std::vector<Rational> entries, std::size_t n);

/// Inertia of a symmetric matrix by congruence diagonalization over the rationals.
/// Pivots on the first nonzero diagonal entry; when the remaining diagonal is zero,
/// splits off the first hyperbolic block [[0,a],[a,0]], which contributes (1,0,1).
/// Throws Error(NotSymmetric).
Inertia inertia(const IntMatrix& s);

/// Positive iff inertia is (n,0,0); Negative iff (0,0,n); Degenerate iff n_zero > 0.
/// The 0x0 form is vacuously Positive.
FormClass classify_form(const IntMatrix& s);
inline FormClass is_definite(const IntMatrix& s) { return classify_form(s); }

/// Block-diagonal matrix of the summands in order.
IntMatrix direct_sum(std::span<const IntMatrix> ms);
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);
IntMatrix direct_power(const IntMatrix& m, std::size_t copies);

/// Uᵀ S U.
IntMatrix congruent(const IntMatrix& s, const IntMatrix& u);

}  // namespace knotdef
