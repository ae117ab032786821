#pragma once

#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "knotdef/laurent.hpp"
#include "knotdef/seifert.hpp"

namespace knotdef {

/// A braid word whose closure is a knot. Letter i stands for the positive crossing σ_i,
/// -i for σ_i⁻¹.
class BraidWord {
public:
    /// Validates the word. When `strands` is absent it is max|letter| + 1.
    /// Throws Error with EmptyWord, IndexOutOfRange, MissingGenerator or NotAKnot.
    BraidWord(std::vector<int> letters, std::optional<int> strands = std::nullopt);

    [[nodiscard]] int strands() const noexcept { return strands_; }
    [[nodiscard]] const std::vector<int>& letters() const noexcept { return letters_; }

    /// Every letter negated.
    [[nodiscard]] BraidWord mirrored() const;
    /// Appends σ_s on a new strand (Markov stabilization).
    [[nodiscard]] BraidWord stabilized(bool positive = true) const;

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_;
    std::vector<int> letters_;
};

/// Whitespace- or comma-separated signed integers, optionally prefixed by `strands=N`.
BraidWord parse_braid(std::string_view text);

/// Seifert matrix of the surface built by Seifert's algorithm on the braid closure.
SeifertMatrix seifert_matrix_from_braid(const BraidWord& b);

/// Reduced Burau image of the braid, (s-1)x(s-1) over Z[t, t⁻¹].
LaurentMatrix reduced_burau(const BraidWord& b);

/// Δ of the closure from det(ρ̄(b) - I)·(1 - t)/(1 - tˢ), symmetrically normalized.
LaurentPoly burau_alexander(const BraidWord& b);

/// Uniformly random word with 2..max_strands strands and length <= max_length whose
/// closure is a knot. Retries until every constraint holds.
BraidWord random_knot_braid(std::mt19937_64& rng, int max_strands, int max_length);

}  // namespace knotdef
