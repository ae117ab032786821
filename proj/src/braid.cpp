#include "knotdef/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <string>

#include "knotdef/error.hpp"

namespace knotdef {

namespace {

// Closure permutation: follow strand positions through each crossing.
bool closure_is_single_cycle(const std::vector<int>& letters, int strands) {
    std::vector<int> perm(static_cast<std::size_t>(strands));
    std::iota(perm.begin(), perm.end(), 0);
    for (int letter : letters) {
        const int i = std::abs(letter) - 1;
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    }
    int length = 0;
    int at = 0;
    do {
        at = perm[static_cast<std::size_t>(at)];
        ++length;
    } while (at != 0);
    return length == strands;
}

}  // namespace

BraidWord::BraidWord(std::vector<int> letters, std::optional<int> strands) : letters_(std::move(letters)) {
    if (letters_.empty()) throw Error(ErrorCode::EmptyWord, "braid word has no letters");
    int max_index = 0;
    for (int letter : letters_) {
        if (letter == 0) throw Error(ErrorCode::IndexOutOfRange, "braid letter 0 is not a generator");
        max_index = std::max(max_index, std::abs(letter));
    }
    strands_ = strands.value_or(max_index + 1);
    if (strands_ < 2) throw Error(ErrorCode::IndexOutOfRange, "a braid needs at least 2 strands");
    if (max_index > strands_ - 1) {
        throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(max_index) + " needs more than " +
                                                    std::to_string(strands_) + " strands");
    }
    std::vector<bool> seen(static_cast<std::size_t>(strands_), false);
    for (int letter : letters_) seen[static_cast<std::size_t>(std::abs(letter))] = true;
    for (int i = 1; i < strands_; ++i) {
        if (!seen[static_cast<std::size_t>(i)]) {
            throw Error(ErrorCode::MissingGenerator, "generator " + std::to_string(i) + " never occurs");
        }
    }
    if (!closure_is_single_cycle(letters_, strands_)) {
        throw Error(ErrorCode::NotAKnot, "closure permutation is not a single cycle; the closure is a link");
    }
}

BraidWord BraidWord::mirrored() const {
    std::vector<int> out(letters_);
    for (int& l : out) l = -l;
    return BraidWord(std::move(out), strands_);
}

BraidWord BraidWord::stabilized(bool positive) const {
    std::vector<int> out(letters_);
    out.push_back(positive ? strands_ : -strands_);
    return BraidWord(std::move(out), strands_ + 1);
}

BraidWord parse_braid(std::string_view text) {
    std::optional<int> strands;
    std::vector<int> letters;
    std::size_t pos = 0;
    auto skip_separators = [&] {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
    };
    auto read_int = [&](std::string_view what) {
        int value = 0;
        const char* begin = text.data() + pos;
        const char* end = text.data() + text.size();
        if (begin != end && *begin == '+') ++begin;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr == begin) {
            throw Error(ErrorCode::ParseError, "expected " + std::string(what) + " at offset " + std::to_string(pos) +
                                                   " in \"" + std::string(text) + "\"");
        }
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != ',') {
            throw Error(ErrorCode::ParseError, "unexpected character '" + std::string(1, text[pos]) + "' at offset " +
                                                   std::to_string(pos));
        }
        return value;
    };

    skip_separators();
    constexpr std::string_view prefix = "strands=";
    if (text.substr(pos, prefix.size()) == prefix) {
        pos += prefix.size();
        strands = read_int("strand count");
    }
    for (skip_separators(); pos < text.size(); skip_separators()) letters.push_back(read_int("braid letter"));
    return BraidWord(std::move(letters), strands);
}

SeifertMatrix seifert_matrix_from_braid(const BraidWord& b) {
    // Seifert's algorithm on a closed braid gives s stacked, coherently oriented disks and
    // one half-twisted band per letter joining disk i to disk i+1. The loop x_{i,j} runs up
    // band j of index i, across disk i+1, down band j+1 and back across disk i.
    const auto& letters = b.letters();
    const int s = b.strands();

    struct Loop {
        int index;
        std::size_t first;   // position of the band it climbs
        std::size_t second;  // position of the band it descends
    };
    std::vector<Loop> loops;
    for (int i = 1; i < s; ++i) {
        std::optional<std::size_t> prev;
        for (std::size_t p = 0; p < letters.size(); ++p) {
            if (std::abs(letters[p]) != i) continue;
            if (prev) loops.push_back({i, *prev, p});
            prev = p;
        }
    }

    auto sign_at = [&](std::size_t p) { return letters[p] > 0 ? 1 : -1; };
    const std::size_t n = loops.size();
    IntMatrix v(n);
    for (std::size_t a = 0; a < n; ++a) {
        const Loop& x = loops[a];
        // Each half-twist rotates the pushoff by half a turn around the core: a positive
        // band contributes -1/2 to lk(x, x⁺), a negative one +1/2.
        v(a, a) = -(sign_at(x.first) + sign_at(x.second)) / 2;

        for (std::size_t c = 0; c < n; ++c) {
            if (c == a) continue;
            const Loop& y = loops[c];
            if (y.index == x.index && y.first == x.second) {
                // Consecutive loops share one band. Near a positive band the pushoff of the
                // later loop passes under the earlier loop's band; near a negative band the
                // roles swap and the crossing changes sign.
                if (sign_at(x.second) > 0) v(a, c) = 1;
                else v(c, a) = -1;
            } else if (y.index == x.index + 1) {
                // Loops on neighbouring indices meet only on the shared disk x.index + 1,
                // where their chords cross exactly when the band positions interleave.
                // x lies at or below that disk and y⁺ strictly above it, so lk(x, y⁺) = 0 and
                // lk(y, x⁺) is the intersection number of the two chords.
                if (x.first < y.first && y.first < x.second && x.second < y.second) v(c, a) = -1;
                else if (y.first < x.first && x.first < y.second && y.second < x.second) v(c, a) = 1;
            }
        }
    }
    return SeifertMatrix(std::move(v));
}

LaurentMatrix reduced_burau(const BraidWord& b) {
    const int s = b.strands();
    const std::size_t m = static_cast<std::size_t>(s - 1);
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly t_inv = LaurentPoly::monomial(1, -1);

    LaurentMatrix acc = LaurentMatrix::identity(m);
    for (int letter : b.letters()) {
        const std::size_t i = static_cast<std::size_t>(std::abs(letter)) - 1;  // 0-based row of σ_i
        LaurentMatrix g = LaurentMatrix::identity(m);
        if (letter > 0) {
            // σ_i: row i becomes (.., t, -t, 1, ..) centred on the diagonal.
            g(i, i) = -t;
            if (i > 0) g(i, i - 1) = t;
            if (i + 1 < m) g(i, i + 1) = LaurentPoly(1);
        } else {
            // σ_i⁻¹: row i becomes (.., 1, -t⁻¹, t⁻¹, ..).
            g(i, i) = -t_inv;
            if (i > 0) g(i, i - 1) = LaurentPoly(1);
            if (i + 1 < m) g(i, i + 1) = t_inv;
        }
        acc = acc * g;
    }
    return acc;
}

LaurentPoly burau_alexander(const BraidWord& b) {
    const int s = b.strands();
    const std::size_t m = static_cast<std::size_t>(s - 1);
    const LaurentPoly numerator = det(reduced_burau(b) - LaurentMatrix::identity(m)) * (LaurentPoly(1) - LaurentPoly::t());
    const LaurentPoly denominator = LaurentPoly(1) - LaurentPoly::monomial(1, s);
    auto quotient = exact_divide(numerator, denominator);
    if (!quotient) throw Error(ErrorCode::Internal, "1 - t^s does not divide the Burau determinant");
    auto normalized = symmetric_normalization(*quotient);
    if (!normalized) throw Error(ErrorCode::Internal, "Burau Alexander polynomial is not symmetric");
    return *normalized;
}

BraidWord random_knot_braid(std::mt19937_64& rng, int max_strands, int max_length) {
    if (max_strands < 2 || max_length < 1) throw Error(ErrorCode::Internal, "random_knot_braid: bad bounds");
    std::uniform_int_distribution<int> strand_dist(2, max_strands);
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;) {
        const int s = strand_dist(rng);
        if (max_length < s - 1) continue;
        std::uniform_int_distribution<int> length_dist(s - 1, max_length);
        std::uniform_int_distribution<int> index_dist(1, s - 1);
        std::vector<int> letters(static_cast<std::size_t>(length_dist(rng)));
        for (int& l : letters) l = index_dist(rng) * (coin(rng) ? 1 : -1);
        try {
            return BraidWord(std::move(letters), s);
        } catch (const Error&) {
            // rejected: link closure or a missing generator
        }
    }
}

}  // namespace knotdef
