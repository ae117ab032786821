#include "knotdef/periodic.hpp"

#include <algorithm>
#include <sstream>

#include "knotdef/error.hpp"

namespace knotdef {

PeriodicModel make_periodic_model(const SeifertMatrix& quotient, int p, std::string name) {
    if (p < 2) throw Error(ErrorCode::BadPeriod, "period must be at least 2, got " + std::to_string(p));
    SeifertMatrix cover(direct_power(quotient.matrix(), static_cast<std::size_t>(p)));
    return {p, std::move(name), quotient, std::move(cover)};
}

bool TheoremReport::passed() const {
    return std::all_of(assertions.begin(), assertions.end(), [](const AssertionResult& a) { return a.passed; });
}

TheoremReport check_theorem(const PeriodicModel& m, bool minimal_genus_asserted) {
    TheoremReport r;
    r.name = m.name;
    r.period = m.period;
    r.quotient_sigma = signature(m.quotient);
    r.cover_sigma = signature(m.cover);
    r.quotient_alexander = alexander_polynomial(m.quotient);
    r.cover_alexander = alexander_polynomial(m.cover);
    r.quotient_width = r.quotient_alexander.width();
    r.cover_width = r.cover_alexander.width();
    r.quotient_certificate = certify_definite(m.quotient, minimal_genus_asserted);
    r.cover_certificate = certify_definite(m.cover, minimal_genus_asserted);

    const long long p = m.period;
    {
        std::ostringstream os;
        os << r.cover_sigma << " vs " << p << "*" << r.quotient_sigma;
        r.assertions.push_back({"sigma_scaling", r.cover_sigma == p * r.quotient_sigma, os.str()});
    }
    {
        const LaurentPoly power = r.quotient_alexander.pow(static_cast<unsigned>(p));
        r.assertions.push_back({"alexander_power", r.cover_alexander == power,
                                r.cover_alexander.to_string() + " vs (" + r.quotient_alexander.to_string() + ")^" +
                                    std::to_string(p)});
    }
    {
        std::ostringstream os;
        os << r.cover_width << " vs " << p << "*" << r.quotient_width;
        r.assertions.push_back({"width_scaling", r.cover_width == p * r.quotient_width, os.str()});
    }
    {
        const auto& qc = r.quotient_certificate;
        const auto& cc = r.cover_certificate;
        bool ok = qc.verdict == cc.verdict;
        if (cc.verdict == Verdict::Definite) ok = ok && qc.verdict == Verdict::Definite && qc.sign == cc.sign;
        std::string detail = std::string(to_string(cc.verdict)) + "/" + std::string(to_string(cc.sign)) + " vs " +
                             std::string(to_string(qc.verdict)) + "/" + std::string(to_string(qc.sign));
        r.assertions.push_back({"verdict_transfer", ok, std::move(detail)});
    }
    return r;
}

ScalingReport check_lk_scaling(const CylindricalCurve& a, const CylindricalCurve& b, int p, const LinkingOptions& opts) {
    ScalingReport r;
    r.period = p;
    r.base_linking = linking_number(a, b, opts).value;
    const auto lifted_a = lift_curve(a, p);
    const auto lifted_b = lift_curve(b, p);
    r.lifted_components_a = lifted_a.size();
    r.lifted_components_b = lifted_b.size();
    r.lifted_linking = linking_number(lifted_a, lifted_b, opts);
    return r;
}

ScalingReport check_self_lk_scaling(const CylindricalCurve& a, int p, const LinkingOptions& opts) {
    return check_lk_scaling(a, positive_pushoff(a), p, opts);
}

}  // namespace knotdef
