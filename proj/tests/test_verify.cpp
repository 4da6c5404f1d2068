#include <doctest.h>

#include "chowlab/verify.hpp"
#include "oracles.hpp"

using namespace chowlab;

namespace {

IntPolynomial P(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

} // namespace

TEST_CASE("eulerian polynomials") {
    CHECK(eulerian(0) == P({1}));
    CHECK(eulerian(1) == P({1}));
    CHECK(eulerian(2) == P({1, 1}));
    CHECK(eulerian(4) == P({1, 11, 11, 1}));
    for (int n = 0; n <= 7; ++n) CHECK(eulerian(n) == oracles::eulerian_by_descents(n));
    CHECK_THROWS_AS(eulerian(11), CapacityError);
}

TEST_CASE("euler recursion and cross-check") {
    // (n,m) = (1,1): A_2 = A_1 A_1 + x C(1,1) C(1,1) A_1 A_1 A_0
    VerificationReport r = check_euler_recursion(1, 1);
    CHECK(r.pass);
    CHECK(r.lhs == "1 + x");
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; n + m <= 8; ++m) CHECK(check_euler_recursion(n, m).pass);
    for (int n = 1; n <= 5; ++n) CHECK(check_euler_hilbert(n).pass);
    CHECK_THROWS_AS(check_euler_recursion(0, 1), ArgumentError);
    CHECK_THROWS_AS(check_euler_recursion(6, 5), CapacityError);
}

TEST_CASE("hilbert identities on spec instances") {
    Matroid b1 = boolean_matroid(1), b2 = boolean_matroid(2), u23 = uniform_matroid(2, 3);

    VerificationReport t11 = check_thm1_hilbert(b1, b1);
    CHECK(t11.pass);
    CHECK(t11.lhs == "1 + x"); // 1 + x = 1*1 + x*1*1*1

    CHECK(check_thm1_hilbert(b2, b1).pass);
    CHECK(check_thm1_hilbert(u23, u23).pass);
    CHECK(check_thm2_hilbert(b1, b1).pass);
    CHECK(check_thm2_hilbert(b2, b2).pass);

    VerificationReport a11 = check_aug_hilbert(b1, b1);
    CHECK(a11.pass);
    CHECK(a11.lhs == "1 + 3x + x^2"); // G(B_2)
    CHECK(check_aug_hilbert(b2, b1).pass);

    VerificationReport c11 = check_corirred(b1, b1);
    CHECK(c11.pass);
    CHECK(c11.rhs == "1 + x"); // k=0 and k=1 flag pairs
    CHECK(check_corirred(b2, b1).pass);
}

TEST_CASE("thm1 and thm2 sums coincide termwise when N has rank one") {
    // remark after the two decompositions: with rk(N) = 1 the summand
    // multisets agree
    Matroid M = uniform_matroid(2, 3), N = boolean_matroid(1);
    FlatLattice LM = lattice_of_flats(M), LN = lattice_of_flats(N);
    Matroid S = direct_sum(M, N);
    FlatLattice LS = lattice_of_flats(S);
    IncidenceFunction HM = chow_function(characteristic(LM.poset));
    IncidenceFunction HN = chow_function(characteristic(LN.poset));
    IncidenceFunction HS = chow_function(characteristic(LS.poset));
    std::vector<std::string> t1, t2;
    for (Flat F : M.flats) {
        if (F == 0) continue;
        for (Flat G : N.flats) {
            if (G == 0) continue;
            t1.push_back((HS.at(LS.index_of(F | (G << M.ground)), LS.top()) *
                          HM.at(LM.bottom(), LM.index_of(F)) *
                          HN.at(LN.bottom(), LN.index_of(G)))
                             .str());
        }
    }
    for (Flat F : M.flats) {
        if (F == M.full()) continue;
        for (Flat G : N.flats) {
            if (G == N.full()) continue;
            t2.push_back((HS.at(LS.bottom(), LS.index_of(F | (G << M.ground))) *
                          HM.at(LM.index_of(F), LM.top()) *
                          HN.at(LN.index_of(G), LN.top()))
                             .str());
        }
    }
    std::sort(t1.begin(), t1.end());
    std::sort(t2.begin(), t2.end());
    CHECK(t1 == t2);
}

TEST_CASE("coloop decompositions") {
    Matroid b2 = boolean_matroid(2), b3 = boolean_matroid(3);
    CHECK(check_coloop_decomposition(b2, 0).pass);
    CHECK(check_coloop_decomposition(b2, 1).pass);
    for (int i = 0; i < 3; ++i) CHECK(check_coloop_decomposition(b3, i).pass);
    CHECK_THROWS_AS(check_coloop_decomposition(uniform_matroid(2, 3), 0), ArgumentError);
    CHECK_THROWS_AS(check_coloop_decomposition(boolean_matroid(1), 0), ArgumentError);
}

TEST_CASE("product-poset incidence identities") {
    for (auto [m, n] : std::vector<std::pair<Matroid, Matroid>>{
             {boolean_matroid(1), boolean_matroid(2)},
             {boolean_matroid(2), uniform_matroid(2, 3)},
             {uniform_matroid(2, 3), uniform_matroid(2, 3)}}) {
        for (const auto& r : check_product_identities(m, n)) {
            INFO(r.name);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("explicit check wraps the assembled map") {
    ModelCache cache;
    VerificationReport r =
        check_explicit(boolean_matroid(1), boolean_matroid(1), PhiVariant::thm1, cache, "B_1,B_1");
    CHECK(r.pass);
    CHECK(r.name == "explicit-thm1");
}

TEST_CASE("suite runner") {
    SuiteOptions opts;
    opts.hilbert_rank_bound = 3;
    opts.explicit_rank_bound = 2;
    std::vector<CorpusEntry> corpus = {{"B_1", boolean_matroid(1)},
                                       {"B_2", boolean_matroid(2)},
                                       {"U_{1,2}", uniform_matroid(1, 2)}};
    for (const char* name :
         {"thm1", "thm2", "aug", "corirred", "euler", "coloop", "explicit", "all"}) {
        std::string s(name);
        auto reports = run_suite(s, corpus, opts);
        CHECK(!reports.empty());
        for (const auto& r : reports) {
            std::string ctx = s + " / " + r.name + " " + r.instance;
            INFO(ctx);
            CHECK(r.pass);
        }
    }
    CHECK_THROWS_AS(run_suite("nope", corpus, opts), ArgumentError);
}
