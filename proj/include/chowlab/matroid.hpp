#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "chowlab/errors.hpp"
#include "chowlab/poset.hpp"

namespace chowlab {

/// A flat as a bit-vector over the ground set; element i <-> bit i.
using Flat = std::uint64_t;

constexpr int kMaxGround = 64;

std::string flat_str(Flat f);

/// Order used everywhere for subsets of equal footing: the set whose sorted
/// element list is lexicographically smaller comes first.
bool set_lex_less(Flat a, Flat b);

/// Compress the bits of `f` sitting at the positions of `mask` down to
/// positions 0..popcount(mask)-1, and the inverse operation.
Flat compress_bits(Flat f, Flat mask);
Flat expand_bits(Flat f, Flat mask);

/// Loopless matroid given by its family of flats.
///
/// `flats` is sorted by (rank, set-lex); this is also the linear extension
/// used by the lattice of flats, so flats.front() == 0 (the empty flat) and
/// flats.back() is the full ground set.
struct Matroid {
    int ground = 0;
    std::vector<Flat> flats{0};
    std::vector<int> flat_rank{0};

    Flat full() const { return ground == 64 ? ~Flat(0) : (Flat(1) << ground) - 1; }
    int rank() const { return flat_rank.back(); }
    int flat_count() const { return static_cast<int>(flats.size()); }

    int index_of(Flat f) const; // -1 if f is not a flat
    bool is_flat(Flat f) const { return index_of(f) >= 0; }
    int rank_of(Flat f) const;  // ArgumentError if not a flat

    /// Smallest flat containing s (well defined by intersection closure).
    Flat closure(Flat s) const;

    /// Flats covering f, in flat order.
    std::vector<Flat> covers_of(Flat f) const;

    bool operator==(const Matroid& o) const { return ground == o.ground && flats == o.flats; }
};

/// All 2^n subsets are flats, rank = cardinality.  1 <= n <= 20.
Matroid boolean_matroid(int n);

/// Flats are the subsets of size < r together with the full set.  1 <= r <= n.
Matroid uniform_matroid(int r, int n);

/// Validates the flat axioms (ground set, looplessness, intersection closure,
/// cover partition) and computes ranks by longest-chain height.  Throws
/// ValidationError naming the failed axiom and a witness.
Matroid from_flats(int n, const std::vector<Flat>& flats);

/// Ground [m] ++ [n]; flats are exactly the unions F | (G << m).
Matroid direct_sum(const Matroid& M, const Matroid& N);

/// Restriction M^S to a flat S, ground relabeled to 0..|S|-1 in increasing
/// element order (compress_bits with mask S recovers the relabeling).
Matroid restriction(const Matroid& M, Flat S);

/// Contraction M_F, ground relabeled to 0..m-|F|-1 the same way.
Matroid contraction(const Matroid& M, Flat F);

/// Minor M_F^G = (M^G)_F for flats F <= G.
Matroid minor(const Matroid& M, Flat F, Flat G);

/// i is a coloop iff ground \ {i} is a flat.
bool is_coloop(const Matroid& M, int i);

/// The lattice of flats as a weakly ranked poset; element i of the poset is
/// M.flats[i], leq is inclusion, interval rank is the rank difference.
struct FlatLattice {
    Matroid matroid;
    PosetPtr poset;

    Flat flat(int i) const { return matroid.flats[i]; }
    int index_of(Flat f) const { return matroid.index_of(f); }
    int bottom() const { return 0; }
    int top() const { return matroid.flat_count() - 1; }
};

FlatLattice lattice_of_flats(const Matroid& M);

} // namespace chowlab
