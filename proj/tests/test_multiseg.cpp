#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "semican/homext.hpp"
#include "semican/io.hpp"
#include "semican/multiseg.hpp"
#include "semican/compgraph.hpp"

using namespace semican;

TEST_CASE("degree") {
    Multisegment m = multisegment_parse("[1,5]+[2,3]+[3,3]+[5,5]");
    CHECK(degree(m, 5) == GradedDim{1, 2, 3, 1, 2});
    CHECK(degree(Multisegment{}, 3) == GradedDim{0, 0, 0});
    CHECK(degree(multisegment_parse("2[1,1]"), 3) == GradedDim{2, 0, 0});
}

TEST_CASE("msm_max") {
    CHECK(to_string(msm_max({1, 2, 3, 1, 2})) == "[1,5]+[2,3]+[3,3]+[5,5]");
    CHECK(msm_max({0, 0, 0}).empty());
    CHECK(to_string(msm_max({2, 0})) == "2[1,1]");
}

TEST_CASE("degree after msm_max is the identity") {
    std::uint64_t s = 42;
    for (int trial = 0; trial < 200; ++trial) {
        GradedDim d(5);
        for (auto& x : d) {
            s = mix64(s);
            x = static_cast<long long>(s % 5);
        }
        CHECK(degree(msm_max(d), 5) == d);
    }
}

TEST_CASE("multisegment text round trip") {
    for (const char* txt : {"[1,5]+[2,3]+[3,3]+[5,5]", "2[1,1]", "0", "[1,1]+2[2,4]+[3,3]"})
        CHECK(to_string(multisegment_parse(txt)) == txt);
}

TEST_CASE("rep_of") {
    Rep seg = rep_of(multisegment_parse("[2,4]"), 5);
    CHECK(seg.dims == segment_rep(2, 4, 5).dims);
    Rep m40 = rep_of(multisegment_parse("[1,1]+[2,2]+[3,3]+[4,4]"), 4);
    CHECK(m40.dims == GradedDim{1, 1, 1, 1});
    for (const auto& m : m40.mats) CHECK(m.is_zero());
    Multisegment m = multisegment_parse("[1,2]+[2,3]+[3,3]+[4,4]");
    CHECK(rep_of(m, 4).dims == degree(m, 4));
}

TEST_CASE("msm_max_tilde") {
    TildeDim single;
    single.add(1, 0, 1);
    single.add(2, 0, 2);
    single.add(3, 0, 3);
    single.add(4, 0, 1);
    single.add(5, 0, 2);
    CHECK(to_string(msm_max_tilde(single, 5)) == "[1,5]+[2,3]+[3,3]+[5,5]");

    // shift invariance
    TildeDim shifted;
    for (const auto& [k, c] : single.v) shifted.add(k.first, k.second + 7, c);
    CHECK(msm_max_tilde(shifted, 5) == msm_max_tilde(single, 5));

    // the covering dimension vector of the worked delta example
    TildeDim d = tilde_from_json("[[1,2,1],[3,1,1],[2,1,2],[4,0,1],[3,0,1],[5,-1,1],[4,-1,1]]");
    CHECK(to_string(msm_max_tilde(d, 5)) == "[1,1]+[2,2]+[2,3]+[3,4]+[4,5]");
}

TEST_CASE("psi hits the two exceptional classes") {
    CHECK(to_string(psi(psi_exceptional_first(), 5)) == "2[1,1]+[2,2]+[2,4]+[3,3]+[4,5]");
    CHECK(to_string(psi(psi_exceptional_second(), 5)) == "[1,2]+[2,4]+[3,3]+[4,4]+2[5,5]");
    // and differs from the plain level-wise value exactly there
    CHECK(to_string(msm_max_tilde(psi_exceptional_first(), 5)) == "[1,1]+[1,2]+[2,4]+[3,3]+[4,5]");
    CHECK(to_string(msm_max_tilde(psi_exceptional_second(), 5)) == "[1,2]+[2,4]+[3,3]+[4,5]+[5,5]");
    // fixtures carry the same two vectors
    TildeDim e3 = tilde_from_json(fixture_text("e3star.json"));
    TildeDim e5 = tilde_from_json(fixture_text("e5.json"));
    CHECK(e3 == psi_exceptional_first());
    CHECK(e5 == psi_exceptional_second());
}

TEST_CASE("psi is msm_max_tilde away from the exceptions") {
    // single-level vectors are never exceptional
    TildeDim t;
    t.add(1, 0, 2);
    t.add(2, 0, 1);
    CHECK(psi(t, 5) == msm_max_tilde(t, 5));
    std::uint64_t s = 7;
    for (int trial = 0; trial < 100; ++trial) {
        TildeDim d;
        for (int col = 1; col <= 5; ++col)
            for (int lev = 0; lev < 3; ++lev) {
                s = mix64(s);
                d.add(col, lev, static_cast<long long>(s % 3));
            }
        d.canonicalize();
        if (d == psi_exceptional_first() || d == psi_exceptional_second()) continue;
        CHECK(psi(d, 5) == msm_max_tilde(d, 5));
    }
}

TEST_CASE("all forty components: nilpotent lift, dense orbit after sampling") {
    auto comps = indec_components(4);
    REQUIRE(comps.size() == 40);
    for (size_t i = 0; i < comps.size(); ++i) {
        Rep base = rep_of(comps[i], 4);
        CHECK(is_nilpotent(lift_to_double(base)));
        Rep x = fiber_sample(base, 500 + i);
        CHECK(is_nilpotent(x));
        CHECK(orbit_dim_check(x, comps[i]));
    }
}

TEST_CASE("projective multisegments") {
    CHECK(to_string(projective_multisegment(1, 4)) == "[1,1]+[2,2]+[3,3]+[4,4]");
    CHECK(to_string(projective_multisegment(2, 4)) == "[1,2]+[2,3]+[3,4]");
    CHECK(to_string(projective_multisegment(4, 4)) == "[1,4]");
    CHECK(to_string(projective_multisegment(3, 5)) == "[1,3]+[2,4]+[3,5]");
}
