#include <doctest.h>

#include <bit>

#include "chowlab/matroid.hpp"

using namespace chowlab;

TEST_CASE("boolean matroids") {
    Matroid b1 = boolean_matroid(1);
    CHECK(b1.flat_count() == 2);
    CHECK(b1.rank_of(Flat(1)) == 1);

    Matroid b2 = boolean_matroid(2);
    CHECK(b2.flat_count() == 4);
    CHECK(b2.rank() == 2);

    Matroid b3 = boolean_matroid(3);
    CHECK(b3.flat_count() == 8);
    int rank1 = 0;
    for (int i = 0; i < b3.flat_count(); ++i)
        if (b3.flat_rank[i] == 1) ++rank1;
    CHECK(rank1 == 3);

    CHECK_THROWS_AS(boolean_matroid(0), ArgumentError);
    CHECK_THROWS_AS(boolean_matroid(21), CapacityError);
}

TEST_CASE("uniform matroids") {
    Matroid u13 = uniform_matroid(1, 3);
    CHECK(u13.flat_count() == 2);
    CHECK(u13.rank() == 1);

    Matroid u23 = uniform_matroid(2, 3);
    CHECK(u23.flat_count() == 5); // empty, three singletons, top
    CHECK(u23.rank_of(u23.full()) == 2);

    CHECK(uniform_matroid(3, 3) == boolean_matroid(3));
    CHECK_THROWS_AS(uniform_matroid(3, 2), ArgumentError);
}

TEST_CASE("from_flats validates and round-trips") {
    CHECK(from_flats(2, {0b00, 0b01, 0b10, 0b11}) == boolean_matroid(2));
    CHECK(from_flats(2, {0b00, 0b11}) == uniform_matroid(1, 2));

    // {1} cannot be the only atom: 2 is covered by no flat over the empty set.
    CHECK_THROWS_WITH_AS(from_flats(2, {0b00, 0b01, 0b11}),
                         doctest::Contains("cover-partition"), ValidationError);
    CHECK_THROWS_WITH_AS(from_flats(2, {0b00, 0b01, 0b10}), doctest::Contains("ground-set"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(from_flats(2, {0b01, 0b11}), doctest::Contains("looplessness"),
                         ValidationError);
    // intersection of {0,1} and {1,2} is {1}, missing
    CHECK_THROWS_WITH_AS(from_flats(3, {0b000, 0b011, 0b110, 0b111}),
                         doctest::Contains("intersection"), ValidationError);

    // every constructor output revalidates
    for (const Matroid& m :
         {boolean_matroid(3), uniform_matroid(2, 4), direct_sum(uniform_matroid(2, 3), boolean_matroid(1))}) {
        Matroid again = from_flats(m.ground, m.flats);
        CHECK(again == m);
        CHECK(again.flat_rank == m.flat_rank);
    }
}

TEST_CASE("direct sum") {
    CHECK(direct_sum(boolean_matroid(1), boolean_matroid(1)) == boolean_matroid(2));

    Matroid m = uniform_matroid(2, 3);
    Matroid s = direct_sum(m, uniform_matroid(1, 1));
    CHECK(s.flat_count() == 2 * m.flat_count());

    Matroid t = direct_sum(uniform_matroid(2, 3), uniform_matroid(1, 2));
    CHECK(t.flat_count() == 10);
    CHECK(t.rank() == 3);
}

TEST_CASE("restriction, contraction, minors") {
    Matroid b3 = boolean_matroid(3);
    CHECK(restriction(b3, 0b011) == boolean_matroid(2));
    CHECK(contraction(b3, 0b001) == boolean_matroid(2));

    Matroid u11 = uniform_matroid(1, 1);
    Matroid zero = contraction(u11, u11.full());
    CHECK(zero.ground == 0);
    CHECK(zero.rank() == 0);
    CHECK(zero.flat_count() == 1);

    CHECK_THROWS_AS(restriction(uniform_matroid(2, 3), 0b011), ArgumentError);

    // (M^G)_F = (M_F)^{G\F} up to the canonical relabeling
    Matroid m = direct_sum(uniform_matroid(2, 3), boolean_matroid(2));
    for (Flat g : m.flats)
        for (Flat f : m.flats) {
            if ((f & ~g) != 0) continue;
            Matroid a = minor(m, f, g);
            Matroid b = restriction(contraction(m, f), compress_bits(g & ~f, m.full() & ~f));
            CHECK(a == b);
        }
}

TEST_CASE("coloops") {
    for (int i = 0; i < 3; ++i) CHECK(is_coloop(boolean_matroid(3), i));
    for (int i = 0; i < 3; ++i) CHECK(!is_coloop(uniform_matroid(2, 3), i));
    CHECK(is_coloop(uniform_matroid(1, 1), 0));
    CHECK_THROWS_AS(is_coloop(boolean_matroid(2), 2), ArgumentError);
}

TEST_CASE("lattice of flats") {
    FlatLattice l2 = lattice_of_flats(boolean_matroid(2));
    CHECK(l2.poset->size() == 4);
    CHECK(l2.poset->pair_count() == 9);

    FlatLattice l1 = lattice_of_flats(uniform_matroid(1, 1));
    CHECK(l1.poset->size() == 2);
    CHECK(l1.poset->rank(0, 1) == 1);

    // maximal chains in B_3 have 4 elements
    FlatLattice l3 = lattice_of_flats(boolean_matroid(3));
    CHECK(l3.poset->rank(l3.bottom(), l3.top()) == 3);
    CHECK(l3.poset->interval(l3.poset->pair_id(0, l3.top())).size() == 8);
}

TEST_CASE("lattice of a direct sum is the product of the lattices") {
    Matroid m = uniform_matroid(2, 3), n = boolean_matroid(2);
    Matroid s = direct_sum(m, n);
    FlatLattice lm = lattice_of_flats(m), ln = lattice_of_flats(n), ls = lattice_of_flats(s);
    PosetPtr prod = product_poset(lm.poset, ln.poset);
    REQUIRE(prod->size() == ls.poset->size());
    // explicit order isomorphism (i,j) -> index of F | (G << m.ground)
    std::vector<int> iso(prod->size());
    for (int i = 0; i < lm.poset->size(); ++i)
        for (int j = 0; j < ln.poset->size(); ++j)
            iso[product_index(ln.poset, i, j)] =
                ls.index_of(lm.flat(i) | (ln.flat(j) << m.ground));
    for (int a = 0; a < prod->size(); ++a)
        for (int b = 0; b < prod->size(); ++b) {
            CHECK(prod->leq(a, b) == ls.poset->leq(iso[a], iso[b]));
            if (prod->leq(a, b)) CHECK(prod->rank(a, b) == ls.poset->rank(iso[a], iso[b]));
        }
}

TEST_CASE("closure and set-lex order") {
    Matroid u24 = uniform_matroid(2, 4);
    CHECK(u24.closure(0b0011) == u24.full());
    CHECK(u24.closure(0b0010) == 0b0010);
    CHECK(set_lex_less(0b101, 0b010));  // {0,2} before {1}
    CHECK(set_lex_less(0b001, 0b011));  // {0} before {0,1}
    CHECK(!set_lex_less(0b011, 0b001));
}
