#include "homcalc/curve_ring.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace homcalc;

TEST_CASE("sections_curve counts") {
    CHECK(sections_curve(0, 0).size() == 1);
    CHECK(sections_curve(1, 1).size() == 4);
    CHECK(sections_curve(3, 1).size() == 6);
    CHECK(sections_curve(-1, 0).empty());
    CHECK(sections_curve(0, -2).empty());
}

TEST_CASE("sections_curve monomial bases") {
    auto names = [](int a, int b) {
        std::set<std::string> out;
        for (const auto& m : sections_curve(a, b)) out.insert(m.str());
        return out;
    };
    CHECK(names(1, 1) == std::set<std::string>{"s u", "s v", "t u", "t v"});
    // (3,1): 8 bidegree monomials minus the two with s^2 u | m
    CHECK(names(3, 1) ==
          std::set<std::string>{"s t^2 u", "s t^2 v", "t^3 u", "t^3 v", "s^2 t v", "s^3 v"});
}

TEST_CASE("normal form kills s^2 u") {
    CHECK(mono_s2() * mono_u() == CurveRingElement::zero({2, 1}));
    CHECK((mono_s() * mono_su()).is_zero());
    CHECK_FALSE((mono_s() * mono_u()).is_zero());
    // su * s * anything dies, su * t * anything survives
    CHECK((mono_su() * mono_s()).is_zero());
    CHECK_FALSE((mono_su() * mono_t()).is_zero());
}

TEST_CASE("ring arithmetic") {
    CurveRingElement x = mono_s() + mono_t();
    CurveRingElement y = x * x;  // s^2 + 2 s t + t^2
    CHECK(y.terms().size() == 3);
    CHECK(y.terms().at({2, 0, 0, 0}) == 1);
    CHECK(y.terms().at({1, 1, 0, 0}) == 2);
    CHECK((x - x).is_zero());
    CHECK_THROWS_AS(mono_s() + mono_u(), Error);
}

TEST_CASE("chart section spaces") {
    // On the sv-chart u = 0, so bidegree (0,0) sections are s^-j t^j v^0.
    auto sv = chart_sections(Chart::SV, {0, 0}, 4);
    CHECK(sv.size() == 5);  // j = 0..4
    for (const auto& m : sv) {
        CHECK(m.u == 0);
        CHECK(m.t >= 0);
        CHECK(m.s + m.t == 0);
    }

    // On the tu-chart s^2 = 0.
    for (const auto& m : chart_sections(Chart::TU, {1, 2}, 5)) {
        CHECK(m.s <= 1);
        CHECK(m.s >= 0);
        CHECK(m.v >= 0);
    }

    // tv keeps the full relation: no monomial with s>=2 and u>=1
    for (const auto& m : chart_sections(Chart::TV, {4, 3}, 6)) CHECK_FALSE((m.s >= 2 && m.u >= 1));

    // global sections embed into every chart containing them
    for (const auto& m : sections_curve(2, 1)) {
        CHECK(chart_keeps(Chart::TV, m, 10));
        if (m.u == 0) CHECK(chart_keeps(Chart::SV, m, 10) == (m.t >= 0));
    }
}

TEST_CASE("chart sections respect the cutoff monotonically") {
    for (Chart ch : {Chart::SV, Chart::TU, Chart::TV, Chart::STV, Chart::TUV}) {
        auto small = chart_sections(ch, {1, -1}, 4);
        auto big = chart_sections(ch, {1, -1}, 6);
        CHECK(small.size() <= big.size());
        for (const auto& m : small) CHECK(chart_keeps(ch, m, 6));
    }
}
