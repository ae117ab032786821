#pragma once

#include "knotdef/exactalg.hpp"
#include "knotdef/laurent.hpp"

namespace knotdef {

/// A validated Seifert matrix: even dimension and |det(V - Vᵀ)| = 1.
class SeifertMatrix {
public:
    /// Throws Error(OddDimension) or Error(NotUnimodularIntersection).
    explicit SeifertMatrix(IntMatrix v);

    [[nodiscard]] const IntMatrix& matrix() const noexcept { return v_; }
    [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }

    friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

private:
    IntMatrix v_;
};

inline SeifertMatrix validate(IntMatrix v) { return SeifertMatrix(std::move(v)); }

/// V + Vᵀ.
IntMatrix symmetrize(const SeifertMatrix& s);

/// Raw det(Vᵀ - tV) as an ordinary polynomial of degree <= n.
LaurentPoly alexander_raw(const SeifertMatrix& s);

/// det(Vᵀ - tV) multiplied by the unit ±t^k that makes it palindromic with value +1 at t = 1.
LaurentPoly alexander_polynomial(const SeifertMatrix& s);

/// Span of exponents of the Alexander polynomial; 0 for the unknot.
int alexander_width(const SeifertMatrix& s);

}  // namespace knotdef
