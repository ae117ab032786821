#include "knotdef/exactalg.hpp"

#include <ostream>
#include <utility>

#include "knotdef/error.hpp"

namespace knotdef {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::OddDimension: return "OddDimension";
        case ErrorCode::NotUnimodularIntersection: return "NotUnimodularIntersection";
        case ErrorCode::InvalidSeifertMatrix: return "InvalidSeifertMatrix";
        case ErrorCode::EmptyWord: return "EmptyWord";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::MissingGenerator: return "MissingGenerator";
        case ErrorCode::NotAKnot: return "NotAKnot";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BadPeriod: return "BadPeriod";
        case ErrorCode::CurveMeetsAxis: return "CurveMeetsAxis";
        case ErrorCode::CurveNotClosed: return "CurveNotClosed";
        case ErrorCode::CurvesIntersect: return "CurvesIntersect";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

std::string_view to_string(FormClass c) {
    switch (c) {
        case FormClass::Positive: return "Positive";
        case FormClass::Negative: return "Negative";
        case FormClass::Indefinite: return "Indefinite";
        case FormClass::Degenerate: return "Degenerate";
    }
    return "Unknown";
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows) {
    IntMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) {
            throw Error(ErrorCode::NotSquare, "row " + std::to_string(i) + " has " +
                                                  std::to_string(rows[i].size()) + " entries, expected " +
                                                  std::to_string(rows.size()));
        }
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<BigInt>> r;
    for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
    return from_rows(r);
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool IntMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

std::vector<std::vector<BigInt>> IntMatrix::rows() const {
    std::vector<std::vector<BigInt>> out(n_, std::vector<BigInt>(n_));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
    return out;
}

namespace {

void require_same_size(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::NotSquare, "dimension mismatch: " + std::to_string(a.size()) + " vs " +
                                              std::to_string(b.size()));
    }
}

}  // namespace

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require_same_size(a, b);
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] += b.entries_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    require_same_size(a, b);
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.entries_.size(); ++i) c.entries_[i] -= b.entries_[i];
    return c;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require_same_size(a, b);
    const std::size_t n = a.size();
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntMatrix operator*(const BigInt& k, const IntMatrix& a) {
    IntMatrix c = a;
    for (auto& e : c.entries_) e *= k;
    return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) os << ", ";
        os << '[';
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) os << ", ";
            os << m(i, j);
        }
        os << ']';
    }
    return os << ']';
}

std::ostream& operator<<(std::ostream& os, const Inertia& in) {
    return os << '(' << in.n_plus << ',' << in.n_zero << ',' << in.n_minus << ')';
}

BigInt det(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<BigInt>> a = m.rows();
    BigInt prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Sylvester's identity makes this division exact.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev_pivot;
            }
        }
        prev_pivot = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Rational det_rational(std::vector<Rational> a, std::size_t n) {
    if (a.size() != n * n) throw Error(ErrorCode::NotSquare, "det_rational: entry count is not n*n");
    Rational result = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot * n + k] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
            result = -result;
        }
        const Rational p = a[k * n + k];
        result *= p;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i * n + k] == 0) continue;
            const Rational f = a[i * n + k] / p;
            for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
        }
    }
    return result;
}

Inertia inertia(const IntMatrix& s) {
    if (!s.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "inertia requires a symmetric matrix");

    const std::size_t n = s.size();
    std::vector<Rational> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rational(s(i, j));
    auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

    std::vector<bool> active(n, true);
    std::size_t remaining = n;
    Inertia out;

    while (remaining > 0) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (active[i] && at(i, i) != 0) {
                k = i;
                break;
            }
        }
        if (k != n) {
            const Rational pivot = at(k, k);
            if (pivot > 0) ++out.n_plus;
            else ++out.n_minus;
            active[k] = false;
            --remaining;
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i] || at(i, k) == 0) continue;
                const Rational f = at(i, k) / pivot;
                for (std::size_t j = 0; j < n; ++j)
                    if (active[j]) at(i, j) -= f * at(k, j);
            }
            continue;
        }

        // Zero diagonal on the active block: look for a hyperbolic pair.
        std::size_t p = n, q = n;
        for (std::size_t i = 0; i < n && p == n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (active[j] && at(i, j) != 0) {
                    p = i;
                    q = j;
                    break;
                }
            }
        }
        if (p == n) {
            out.n_zero += remaining;
            break;
        }

        // [[0,c],[c,0]] has eigenvalues ±c. Eliminate it by its Schur complement:
        // A_ij -= (A_ip A_qj + A_iq A_pj) / c.
        const Rational c = at(p, q);
        ++out.n_plus;
        ++out.n_minus;
        active[p] = false;
        active[q] = false;
        remaining -= 2;
        std::vector<Rational> col_p(n), col_q(n);
        for (std::size_t i = 0; i < n; ++i) {
            col_p[i] = at(i, p);
            col_q[i] = at(i, q);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j]) continue;
                at(i, j) -= (col_p[i] * col_q[j] + col_q[i] * col_p[j]) / c;
            }
        }
    }
    return out;
}

FormClass classify_form(const IntMatrix& s) {
    const Inertia in = inertia(s);
    const std::size_t n = s.size();
    if (in.n_plus == n) return FormClass::Positive;
    if (in.n_minus == n) return FormClass::Negative;
    if (in.n_zero > 0) return FormClass::Degenerate;
    return FormClass::Indefinite;
}

IntMatrix direct_sum(std::span<const IntMatrix> ms) {
    std::size_t total = 0;
    for (const auto& m : ms) total += m.size();
    IntMatrix out(total);
    std::size_t offset = 0;
    for (const auto& m : ms) {
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m.size(); ++j) out(offset + i, offset + j) = m(i, j);
        offset += m.size();
    }
    return out;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    const IntMatrix parts[] = {a, b};
    return direct_sum(parts);
}

IntMatrix direct_power(const IntMatrix& m, std::size_t copies) {
    const std::vector<IntMatrix> parts(copies, m);
    return direct_sum(parts);
}

IntMatrix congruent(const IntMatrix& s, const IntMatrix& u) { return u.transposed() * s * u; }

}  // namespace knotdef
