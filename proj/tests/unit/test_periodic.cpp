#include <doctest.h>

#include "fixtures.hpp"
#include "knotdef/error.hpp"
#include "knotdef/periodic.hpp"

using namespace knotdef;

TEST_CASE("periodic model sizes") {
    CHECK(make_periodic_model(validate(fixture::trefoil()), 2).cover.size() == 4);
    CHECK(make_periodic_model(validate(IntMatrix()), 5).cover.size() == 0);
    CHECK(make_periodic_model(validate(fixture::figure_eight()), 3).cover.size() == 6);
    CHECK_THROWS_AS(make_periodic_model(validate(fixture::trefoil()), 1), Error);
}

TEST_CASE("trefoil with period 3") {
    const auto r = check_theorem(make_periodic_model(validate(fixture::trefoil()), 3, "trefoil"));
    CHECK(r.passed());
    CHECK(r.assertions.size() == 4);
    CHECK(r.cover_sigma == -6);
    CHECK(r.quotient_sigma == -2);
    CHECK(r.cover_alexander == r.quotient_alexander.pow(3));
    CHECK(r.cover_width == 6);
    CHECK(r.cover_certificate.verdict == Verdict::Definite);
    CHECK(r.cover_certificate.sign == DefiniteSign::Negative);
    CHECK(r.quotient_certificate.sign == DefiniteSign::Negative);
}

TEST_CASE("unknot model is trivial") {
    for (int p : {2, 3, 5}) {
        const auto r = check_theorem(make_periodic_model(validate(IntMatrix()), p));
        CHECK(r.passed());
        CHECK(r.cover_sigma == 0);
        CHECK(r.cover_alexander == LaurentPoly(1));
        CHECK(r.cover_certificate.verdict == Verdict::Definite);
    }
}

TEST_CASE("figure-eight model is not definite on either side") {
    const auto r = check_theorem(make_periodic_model(validate(fixture::figure_eight()), 2));
    CHECK(r.passed());
    CHECK(r.cover_certificate.verdict == Verdict::NotDefinite);
    CHECK(r.quotient_certificate.verdict == Verdict::NotDefinite);
}

TEST_CASE("assertion names") {
    const auto r = check_theorem(make_periodic_model(validate(fixture::trefoil()), 2));
    std::vector<std::string> names;
    for (const auto& a : r.assertions) names.push_back(a.name);
    CHECK(names == std::vector<std::string>{"sigma_scaling", "alexander_power", "width_scaling", "verdict_transfer"});
}

TEST_CASE("linking scaling on sample pairs") {
    for (int p : {2, 3}) {
        CHECK(check_lk_scaling(fixture::axis_circle(), fixture::meridian_diamond(5, 0), p).passed());
        const auto hopf = check_lk_scaling(fixture::axis_circle(), fixture::meridian_diamond(2, 0), p);
        CHECK(hopf.passed());
        CHECK(std::abs(hopf.base_linking) == 1);
        CHECK(hopf.lifted_linking == p * hopf.base_linking);
        const auto local = check_lk_scaling(fixture::meridian_diamond(2, 0), fixture::finger(), p);
        CHECK(local.passed());
        CHECK(local.lifted_components_a == static_cast<std::size_t>(p));
        CHECK(check_self_lk_scaling(fixture::torus_curve(2, 3), p).passed());
    }
}
