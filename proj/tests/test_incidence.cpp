#include <doctest.h>

#include <random>

#include "chowlab/incidence.hpp"
#include "chowlab/matroid.hpp"
#include "oracles.hpp"

using namespace chowlab;

namespace {

IntPolynomial P(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

PosetPtr lattice(const Matroid& m) { return lattice_of_flats(m).poset; }

} // namespace

TEST_CASE("convolution basics") {
    PosetPtr chain = WeaklyRankedPoset::chain(1);
    IncidenceFunction z = IncidenceFunction::zeta(chain);
    IncidenceFunction i = IncidenceFunction::identity(chain);
    CHECK(inc_mul(z, i) == z);
    CHECK(inc_mul(i, z) == z);
    CHECK(inc_mul(z, z).at(0, 1) == P({2}));

    PosetPtr b2 = lattice(boolean_matroid(2));
    CHECK(inc_mul(mobius(b2), IncidenceFunction::zeta(b2)) == IncidenceFunction::identity(b2));

    PosetPtr other = WeaklyRankedPoset::chain(1);
    CHECK_THROWS_AS(inc_mul(IncidenceFunction::zeta(chain), IncidenceFunction::zeta(other)),
                    ArgumentError);
}

TEST_CASE("triangular inversion") {
    PosetPtr chain = WeaklyRankedPoset::chain(1);
    IncidenceFunction i = IncidenceFunction::identity(chain);
    CHECK(inc_inverse(i) == i);

    IncidenceFunction a = IncidenceFunction::identity(chain);
    a.at(0, 1) = P({0, 0, 5}); // arbitrary entry p
    CHECK(inc_inverse(a).at(0, 1) == -P({0, 0, 5}));

    IncidenceFunction bad(chain);
    bad.at(0, 0) = P({2});
    bad.at(1, 1) = P({1});
    CHECK_THROWS_AS(inc_inverse(bad), InversionError);
}

TEST_CASE("mobius matches the recursive definition") {
    for (const Matroid& m : {boolean_matroid(3), uniform_matroid(2, 4),
                             direct_sum(boolean_matroid(2), uniform_matroid(2, 3))}) {
        PosetPtr p = lattice(m);
        IncidenceFunction mu = mobius(p);
        CHECK(mu == oracles::mobius_by_recursion(p));
        CHECK(inc_mul(mu, IncidenceFunction::zeta(p)) == IncidenceFunction::identity(p));
        CHECK(inc_mul(IncidenceFunction::zeta(p), mu) == IncidenceFunction::identity(p));
    }
    // mu on B_3 is (-1)^{|T \ S|}
    PosetPtr b3 = lattice(boolean_matroid(3));
    IncidenceFunction mu = mobius(b3);
    CHECK(mu.at(0, b3->size() - 1) == P({-1}));
    CHECK(mu.at(0, 1) == P({-1}));
}

TEST_CASE("rev") {
    PosetPtr chain = WeaklyRankedPoset::chain(1);
    IncidenceFunction i = IncidenceFunction::identity(chain);
    CHECK(rev(i) == i);

    IncidenceFunction a = IncidenceFunction::identity(chain);
    a.at(0, 1) = P({-1, 1});
    CHECK(rev(a).at(0, 1) == P({1, -1}));

    IncidenceFunction bad = IncidenceFunction::identity(chain);
    bad.at(0, 1) = P({0, 0, 1}); // degree 2 on a rank-1 interval
    CHECK_THROWS_AS(rev(bad), DomainError);
}

TEST_CASE("rev is an involution on randomized J_rk elements") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coef(-6, 6);
    std::vector<PosetPtr> posets = {lattice(boolean_matroid(3)), lattice(uniform_matroid(2, 4)),
                                    lattice(uniform_matroid(3, 4)),
                                    WeaklyRankedPoset::chain(4)};
    for (int trial = 0; trial < 100; ++trial) {
        PosetPtr p = posets[trial % posets.size()];
        IncidenceFunction a(p);
        for (auto [s, t] : p->pairs()) {
            std::vector<mpz_class> cs(p->rank(s, t) + 1);
            for (auto& c : cs) c = coef(rng);
            a.at(s, t) = IntPolynomial(std::move(cs));
        }
        REQUIRE(a.in_Jrk());
        CHECK(rev(rev(a)) == a);
    }
}

TEST_CASE("characteristic function") {
    PosetPtr chain = WeaklyRankedPoset::chain(1);
    CHECK(characteristic(chain).at(0, 1) == P({-1, 1}));

    PosetPtr b2 = lattice(boolean_matroid(2));
    CHECK(characteristic(b2).at(0, 3) == P({1, -2, 1}));

    for (PosetPtr p : {lattice(uniform_matroid(2, 3)), lattice(boolean_matroid(3))}) {
        IncidenceFunction chi = characteristic(p);
        for (int s = 0; s < p->size(); ++s) CHECK(chi.at(s, s) == IntPolynomial::one());
        // alternative description: chi_{s,t} = sum_u mu_{s,u} x^{rk(u,t)}
        IncidenceFunction mu = mobius(p);
        IncidenceFunction alt(p);
        for (auto [s, t] : p->pairs()) {
            IntPolynomial acc;
            int pid = p->pair_id(s, t);
            for (int u : p->interval(pid))
                acc += mu.at(s, u) * IntPolynomial::monomial(p->rank(u, t));
            alt.at(s, t) = acc;
        }
        CHECK(chi == alt);
    }
}

TEST_CASE("kernels and reduced kernels") {
    for (const Matroid& m : {boolean_matroid(2), boolean_matroid(3), uniform_matroid(2, 3),
                             uniform_matroid(3, 4)}) {
        PosetPtr p = lattice(m);
        CHECK(is_kernel(characteristic(p)));
        CHECK(is_kernel(IncidenceFunction::identity(p)));
        CHECK(!is_kernel(IncidenceFunction::zeta(p)));
    }

    PosetPtr chain = WeaklyRankedPoset::chain(1);
    IncidenceFunction kbar = reduced_kernel(characteristic(chain));
    CHECK(kbar.at(0, 0) == P({-1}));
    CHECK(kbar.at(0, 1) == P({1}));

    IncidenceFunction bad = IncidenceFunction::identity(chain);
    bad.at(0, 1) = P({1}); // not divisible by x-1
    CHECK_THROWS_AS(reduced_kernel(bad), KernelError);
}

TEST_CASE("chow function examples") {
    PosetPtr chain = WeaklyRankedPoset::chain(1); // lattice of U_{1,1}
    IncidenceFunction h1 = chow_function(characteristic(chain));
    CHECK(h1.at(0, 1) == P({1}));
    CHECK(h1.at(0, 0) == P({1}));

    PosetPtr b2 = lattice(boolean_matroid(2));
    CHECK(chow_function(characteristic(b2)).at(0, 3) == P({1, 1}));

    PosetPtr b3 = lattice(boolean_matroid(3));
    IncidenceFunction h3 = chow_function(characteristic(b3));
    CHECK(h3.at(0, 7) == P({1, 4, 1}));
    CHECK(h3.at(0, 7) == oracles::eulerian_by_descents(3));

    // positivity and top degree rk-1 on matroid lattices
    for (PosetPtr p : {b2, b3, lattice(uniform_matroid(2, 4))}) {
        IncidenceFunction h = chow_function(characteristic(p));
        CHECK(h.all_nonneg());
        for (auto [s, t] : p->pairs())
            if (s != t) CHECK(h.at(s, t).degree() == p->rank(s, t) - 1);
    }

    CHECK_THROWS_AS(chow_function(IncidenceFunction::zeta(b2)), DomainError);
}

TEST_CASE("KLS functions") {
    // rank-1 interval forces f = 1
    PosetPtr chain = WeaklyRankedPoset::chain(1);
    CHECK(kls_right(characteristic(chain)).at(0, 1) == P({1}));

    // KL polynomial of a boolean matroid is 1 everywhere
    for (int n : {2, 3, 4}) {
        PosetPtr p = lattice(boolean_matroid(n));
        IncidenceFunction f = kls_right(characteristic(p));
        IncidenceFunction g = kls_left(characteristic(p));
        for (auto [s, t] : p->pairs()) {
            CHECK(f.at(s, t) == P({1}));
            CHECK(g.at(s, t) == P({1}));
        }
    }

    // defining equations hold on a non-boolean lattice
    PosetPtr p = lattice(uniform_matroid(3, 4));
    IncidenceFunction chi = characteristic(p);
    IncidenceFunction f = kls_right(chi), g = kls_left(chi);
    CHECK(rev(f) == inc_mul(chi, f));
    CHECK(rev(g) == inc_mul(g, chi));
    for (auto [s, t] : p->pairs()) {
        if (s == t) {
            CHECK(f.at(s, t) == P({1}));
        } else {
            CHECK(2 * f.at(s, t).degree() < p->rank(s, t));
        }
    }
}

TEST_CASE("augmented chow functions") {
    PosetPtr chain = WeaklyRankedPoset::chain(1);
    IncidenceFunction G = aug_chow_left(characteristic(chain));
    CHECK(G.at(0, 1) == P({1, 1}));
    CHECK(G.at(0, 0) == P({1}));
    CHECK(G.at(1, 1) == P({1}));

    IncidenceFunction F = aug_chow_right(characteristic(chain));
    CHECK(F.at(0, 1) == P({1, 1}));

    PosetPtr b2 = lattice(boolean_matroid(2));
    CHECK(aug_chow_left(characteristic(b2)).at(0, 3) == P({1, 3, 1}));
}

TEST_CASE("KLS solve is independent of element labeling") {
    // same lattice presented with permuted element indices must give equal
    // polynomials, interval by interval
    Matroid m = uniform_matroid(2, 4);
    PosetPtr p = lattice(m);
    int n = p->size();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = n - 1 - i; // reverse, still consistent after re-sorting
    std::vector<char> leq(n * n, 0);
    std::vector<int> rank(n * n, 0);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (p->leq(s, t)) {
                leq[perm[s] * n + perm[t]] = 1;
                rank[perm[s] * n + perm[t]] = p->rank(s, t);
            }
    PosetPtr q = std::make_shared<WeaklyRankedPoset>(n, std::move(leq), std::move(rank));
    IncidenceFunction fp = kls_right(characteristic(p));
    IncidenceFunction fq = kls_right(characteristic(q));
    for (auto [s, t] : p->pairs()) CHECK(fp.at(s, t) == fq.at(perm[s], perm[t]));
}
