#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tanner/cycle_formulas.hpp"
#include "tanner/fixtures.hpp"
#include "tanner/spectral.hpp"

using namespace tanner;

namespace {

ScalarParityMatrix k33() {
    return {3, 3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
}

struct Prepared {
    BiregularProfile profile;
    PowerSumTable T;
    ShiftedMomentTable E;
    int girth;
};

Prepared prepare(const ScalarParityMatrix& H, int K) {
    Prepared p;
    p.profile = validate_biregular(H);
    p.T = gram_power_traces(H, K);
    p.E = shifted_moments(p.T, p.profile);
    p.girth = bfs_girth(build_tanner_graph(H));
    return p;
}

}  // namespace

TEST_CASE("pair power-sum recursion") {
    // xi^2 - 3 xi + 2: roots 1 and 2, so S_k = 1 + 2^k
    auto s = s_sequence(3, 2, 6);
    Int two = 2;
    for (int k = 1; k <= 6; ++k) {
        CHECK(s.S[k] == 1 + two);
        two *= 2;
    }
}

TEST_CASE("lifted sums match the per-eigenvalue recursion") {
    // synthetic shifted spectrum alpha in {-2, 0, 1, 3, 3}, q1 q2 = 6
    std::vector<long> alphas = {-2, 0, 1, 3, 3};
    const int K = 8;
    ShiftedMomentTable E;
    E.K = K;
    E.E.assign(K + 1, 0);
    E.E[0] = static_cast<long>(alphas.size());
    for (long a : alphas) {
        Int p = 1;
        for (int k = 1; k <= K; ++k) {
            p *= a;
            E.E[k] += p;
        }
    }
    auto lifted = lifted_s_sums(E, 6, K);
    for (int k = 1; k <= K; ++k) {
        Int direct = 0;
        for (long a : alphas) direct += s_sequence(a, 6, K).S[k];
        CHECK(lifted[k] == direct);
    }
}

TEST_CASE("girth constants for (q1,q2) = (2,4)") {
    auto A = a_constants(2, 4);
    CHECK(A.at(2) == 7);
    CHECK(A.at(3) == 57);
    CHECK(A.at(4) == 503);
    CHECK(A.at(5) == 4665);
    CHECK(A.at(6) == 44759);
    CHECK(A.at(7) == 440217);
    CHECK_THROWS_AS(A.at(8), Error);
    CHECK_THROWS_AS(A.at(1), Error);
}

TEST_CASE("girth constants at q1 == q2 agree with high-girth traces") {
    // Fano-plane incidence: (3,3)-regular with girth 6, so T_2 = |E| A_4
    ScalarParityMatrix heawood{7, 7,
                               {{0, 1, 3},
                                {1, 2, 4},
                                {2, 3, 5},
                                {3, 4, 6},
                                {0, 4, 5},
                                {1, 5, 6},
                                {0, 2, 6}}};
    auto p = prepare(heawood, 3);
    auto A = a_constants(p.profile.q1, p.profile.q2);
    CHECK(p.T.at(2) == p.profile.edge_count * A.at(2));
    // girth is exactly 6, so the j = 3 condition must fail
    CHECK(p.T.at(3) != p.profile.edge_count * A.at(3));
}

TEST_CASE("three formula routes agree on the Tanner code") {
    auto p = prepare(expand_qc(tanner_155_fixture()), 7);
    auto rec = count_recursive(p.profile, p.E, 7);
    auto ek = count_via_ek(p.profile, p.E, 7);
    auto lam = count_via_lambda(p.profile, p.T, p.girth, 7);
    CHECK(rec.counts == ek.counts);
    CHECK(rec.counts == lam.counts);
    CHECK(rec.counts.at(2) == 0);
    CHECK(rec.counts.at(3) == 0);
    CHECK(rec.counts.at(4) == 465);
    CHECK(rec.counts.at(5) == 3720);
    CHECK(rec.counts.at(6) == 22630);
    CHECK(rec.counts.at(7) == 156240);
}

TEST_CASE("K33 counts within the certified range") {
    auto p = prepare(k33(), 7);
    CHECK(p.girth == 4);
    auto rec = count_recursive(p.profile, p.E, 3);
    CHECK(rec.counts.at(1) == 0);
    CHECK(rec.counts.at(2) == 9);
    CHECK(rec.counts.at(3) == 6);
    auto ek = count_via_ek(p.profile, p.E, 3);
    CHECK(ek.counts == rec.counts);
    // lambda route: only k <= 3 is gated as low as girth 4
    auto lam = count_via_lambda(p.profile, p.T, p.girth, 3);
    CHECK(lam.counts == rec.counts);
}

TEST_CASE("lambda route enforces its girth gates") {
    auto p = prepare(k33(), 7);
    CHECK(lambda_k_limit(4) == 3);
    CHECK(lambda_k_limit(6) == 5);
    CHECK(lambda_k_limit(8) == 7);
    CHECK(lambda_k_limit(kInfiniteGirth) == 7);
    try {
        count_via_lambda(p.profile, p.T, p.girth, 4);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::girth_precondition_unmet);
    }
}

TEST_CASE("ek route is tabulated only through k = 7") {
    auto p = prepare(expand_qc(tanner_155_fixture()), 8);
    try {
        count_via_ek(p.profile, p.E, 8);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == errc::k_too_large);
    }
    // the recursion route keeps going past 7, but outside the certified
    // range (here k = 8 > girth - 1 = 7) its numerator need not divide 2k
    try {
        auto rec = count_recursive(p.profile, p.E, 8);
        CHECK(rec.counts.count(8) == 1);
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_integer_count);
    }
}

TEST_CASE("monomial family closed forms") {
    for (int n : {5, 7, 9, 11}) {
        auto p = prepare(expand_qc(monomial_fixture(n).pm), 5);
        auto rec = count_recursive(p.profile, p.E, 5);
        Int nn = n;
        CHECK(rec.counts.at(2) == 0);
        CHECK(rec.counts.at(3) == nn * nn * (nn - 1));
        CHECK(rec.counts.at(4) == 3 * nn * nn * (nn - 1) * (3 * nn - 5) / 4);
        CHECK(rec.counts.at(5) == 3 * nn * nn * (nn - 1) * (nn - 2) * (nn - 2));
    }
}

TEST_CASE("girth certificate") {
    auto tan = prepare(expand_qc(tanner_155_fixture()), 7);
    auto cert = girth_certificate(tan.profile, tan.T);
    CHECK(cert.certified_girth == 8);
    CHECK(cert.certified_girth == tan.girth);
    REQUIRE(cert.conditions.size() >= 3);
    CHECK(cert.conditions[0] == std::pair<int, bool>{2, true});
    CHECK(cert.conditions[1] == std::pair<int, bool>{3, true});
    CHECK(cert.conditions[2] == std::pair<int, bool>{4, false});

    auto k = prepare(k33(), 7);
    auto ck = girth_certificate(k.profile, k.T);
    CHECK(ck.certified_girth == 4);
    CHECK(ck.conditions[0] == std::pair<int, bool>{2, false});

    for (int n : {5, 7, 9}) {
        auto m = prepare(expand_qc(monomial_fixture(n).pm), 7);
        CHECK(girth_certificate(m.profile, m.T).certified_girth == 6);
    }
}
