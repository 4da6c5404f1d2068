#pragma once

// Test-only oracles, deliberately independent of the library code paths they
// cross-check.

#include <algorithm>
#include <numeric>
#include <vector>

#include "chowlab/incidence.hpp"
#include "chowlab/poly.hpp"
#include "chowlab/poset.hpp"

namespace oracles {

// Eulerian polynomial by counting descents over all permutations of [n].
inline chowlab::IntPolynomial eulerian_by_descents(int n) {
    std::vector<mpz_class> coeff(std::max(1, n), mpz_class(0));
    if (n == 0) return chowlab::IntPolynomial(1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int des = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (perm[i] > perm[i + 1]) ++des;
        coeff[des] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return chowlab::IntPolynomial(std::move(coeff));
}

// Mobius function straight from the recursive definition.
inline chowlab::IncidenceFunction mobius_by_recursion(chowlab::PosetPtr p) {
    using namespace chowlab;
    IncidenceFunction mu(p);
    for (int pid = 0; pid < p->pair_count(); ++pid) {
        auto [s, t] = p->pairs()[pid];
        if (s == t) {
            mu.at(s, t) = IntPolynomial::one();
            continue;
        }
        IntPolynomial acc;
        for (int u : p->interval(pid))
            if (u != t) acc += mu.at(s, u);
        mu.at(s, t) = -acc;
    }
    return mu;
}

} // namespace oracles
