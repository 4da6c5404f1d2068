#include <doctest.h>

#include "chowlab/incidence.hpp"
#include "chowlab/linalg.hpp"
#include "chowlab/ring_model.hpp"

using namespace chowlab;

namespace {

IntPolynomial P(std::initializer_list<long> cs) {
    std::vector<mpz_class> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

std::vector<Matroid> corpus() {
    return {boolean_matroid(1), boolean_matroid(2), boolean_matroid(3), boolean_matroid(4),
            uniform_matroid(1, 2), uniform_matroid(2, 3), uniform_matroid(2, 4),
            uniform_matroid(3, 4)};
}

} // namespace

TEST_CASE("hilbert functions of small models") {
    CHECK(hilbert(GradedRingModel::build(boolean_matroid(2), RingKind::chow)) == P({1, 1}));
    CHECK(hilbert(GradedRingModel::build(uniform_matroid(1, 1), RingKind::augmented)) ==
          P({1, 1}));
    CHECK(hilbert(GradedRingModel::build(boolean_matroid(3), RingKind::chow)) == P({1, 4, 1}));
    CHECK(hilbert(GradedRingModel::build(uniform_matroid(2, 3), RingKind::chow)) == P({1, 1}));
    CHECK(hilbert(GradedRingModel::build(boolean_matroid(2), RingKind::augmented)) ==
          P({1, 3, 1}));
    CHECK(hilbert(GradedRingModel::build(boolean_matroid(1), RingKind::chow)) == P({1}));
}

TEST_CASE("model hilbert agrees with the poset-side H and G") {
    for (const Matroid& m : corpus()) {
        FlatLattice L = lattice_of_flats(m);
        IncidenceFunction chi = characteristic(L.poset);
        GradedRingModel ch = GradedRingModel::build(m, RingKind::chow);
        GradedRingModel ach = GradedRingModel::build(m, RingKind::augmented);
        CHECK(hilbert(ch) == chow_function(chi).at(L.bottom(), L.top()));
        CHECK(hilbert(ach) == aug_chow_left(chi).at(L.bottom(), L.top()));
    }
}

TEST_CASE("hilbert vectors are palindromic and end-dimensions are 1") {
    for (const Matroid& m : corpus())
        for (RingKind k : {RingKind::chow, RingKind::augmented}) {
            GradedRingModel mod = GradedRingModel::build(m, k);
            CHECK(mod.dim(0) == 1);
            CHECK(mod.dim(mod.top()) == 1);
            CHECK(hilbert(mod).palindromic(mod.top()));
        }
}

TEST_CASE("multiplication and the degree map") {
    GradedRingModel b2 = GradedRingModel::build(boolean_matroid(2), RingKind::chow);
    RingElement one = RingElement::one(b2);
    RingElement x1 = var_element(b2, 0b01);
    CHECK((one * x1).coords == x1.coords);
    CHECK(x1.degree_map() == 1); // rank 2: degree 1 is the top

    GradedRingModel b3 = GradedRingModel::build(boolean_matroid(3), RingKind::chow);
    // incomparability: x_{1} x_{2} = 0
    CHECK((var_element(b3, 0b001) * var_element(b3, 0b010)).is_zero());
    RingElement flag = monomial_element(b3, {0b001, 0b011});
    CHECK(flag.degree_map() == 1);
    CHECK(var_element(b3, 0b001).degree_map() == 0); // below top degree

    CHECK_THROWS_WITH_AS(b3.multiply(2, b3.reduce_monomial({0, 3}), 1, x1.coords),
                         doctest::Contains("degree overflow"), ArgumentError);
}

TEST_CASE("degree map is 1 on every maximal flag monomial") {
    for (const Matroid& m : corpus())
        for (RingKind k : {RingKind::chow, RingKind::augmented})
            CHECK(GradedRingModel::build(m, k).check_degree_normalization());
}

TEST_CASE("poincare pairing is non-degenerate") {
    GradedRingModel b3 = GradedRingModel::build(boolean_matroid(3), RingKind::chow);
    QMat g1 = b3.poincare_matrix(1);
    CHECK(g1.size() == 4);
    CHECK(rank_of(g1) == 4);

    QMat g0 = b3.poincare_matrix(0);
    CHECK(g0.size() == 1);
    CHECK(g0[0][0] != 0);

    for (const Matroid& m : corpus())
        for (RingKind k : {RingKind::chow, RingKind::augmented}) {
            GradedRingModel mod = GradedRingModel::build(m, k);
            for (int d = 0; d <= mod.top(); ++d) {
                QMat g = mod.poincare_matrix(d);
                CHECK(static_cast<int>(g.size()) == mod.dim(d));
                CHECK(rank_of(g) == std::min(mod.dim(d), mod.dim(mod.top() - d)));
            }
        }
}

TEST_CASE("model rejects rank-0 input") {
    Matroid zero = contraction(uniform_matroid(1, 1), Flat(1));
    CHECK_THROWS_AS(GradedRingModel::build(zero, RingKind::chow), ArgumentError);
}
