#include "chowlab/matroid.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace chowlab {

std::string flat_str(Flat f) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int i = 0; i < kMaxGround; ++i)
        if (f >> i & 1) {
            if (!first) os << ",";
            os << i;
            first = false;
        }
    os << "}";
    return os.str();
}

bool set_lex_less(Flat a, Flat b) {
    // Compare the sorted element lists position by position.
    while (true) {
        if (a == b) return false;
        if (a == 0) return true; // proper prefix
        if (b == 0) return false;
        int pa = std::countr_zero(a), pb = std::countr_zero(b);
        if (pa != pb) return pa < pb;
        a &= a - 1;
        b &= b - 1;
    }
}

Flat compress_bits(Flat f, Flat mask) {
    Flat out = 0;
    int pos = 0;
    for (int i = 0; i < kMaxGround; ++i)
        if (mask >> i & 1) {
            if (f >> i & 1) out |= Flat(1) << pos;
            ++pos;
        }
    return out;
}

Flat expand_bits(Flat f, Flat mask) {
    Flat out = 0;
    int pos = 0;
    for (int i = 0; i < kMaxGround; ++i)
        if (mask >> i & 1) {
            if (f >> pos & 1) out |= Flat(1) << i;
            ++pos;
        }
    return out;
}

namespace {

bool flat_order_less(int rank_a, Flat a, int rank_b, Flat b) {
    if (rank_a != rank_b) return rank_a < rank_b;
    return set_lex_less(a, b);
}

void sort_canonically(Matroid& m) {
    std::vector<int> idx(m.flats.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) {
        return flat_order_less(m.flat_rank[i], m.flats[i], m.flat_rank[j], m.flats[j]);
    });
    std::vector<Flat> fs(idx.size());
    std::vector<int> rs(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) {
        fs[i] = m.flats[idx[i]];
        rs[i] = m.flat_rank[idx[i]];
    }
    m.flats = std::move(fs);
    m.flat_rank = std::move(rs);
}

} // namespace

int Matroid::index_of(Flat f) const {
    for (size_t i = 0; i < flats.size(); ++i)
        if (flats[i] == f) return static_cast<int>(i);
    return -1;
}

int Matroid::rank_of(Flat f) const {
    int i = index_of(f);
    if (i < 0) throw ArgumentError("rank_of: " + flat_str(f) + " is not a flat");
    return flat_rank[i];
}

Flat Matroid::closure(Flat s) const {
    // Intersection of all flats containing s; a flat by intersection closure.
    Flat c = full();
    for (Flat f : flats)
        if ((s & ~f) == 0) c &= f;
    return c;
}

std::vector<Flat> Matroid::covers_of(Flat f) const {
    std::vector<Flat> ups;
    for (Flat g : flats)
        if (g != f && (f & ~g) == 0) ups.push_back(g);
    std::vector<Flat> covers;
    for (Flat g : ups) {
        bool minimal = true;
        for (Flat h : ups)
            if (h != g && (h & ~g) == 0) {
                minimal = false;
                break;
            }
        if (minimal) covers.push_back(g);
    }
    return covers;
}

Matroid boolean_matroid(int n) {
    if (n < 1) throw ArgumentError("boolean_matroid: n must be positive");
    if (n > 20) throw CapacityError("boolean_matroid: n > 20 exceeds desk scale");
    Matroid m;
    m.ground = n;
    m.flats.clear();
    m.flat_rank.clear();
    for (Flat f = 0; f < (Flat(1) << n); ++f) {
        m.flats.push_back(f);
        m.flat_rank.push_back(std::popcount(f));
    }
    sort_canonically(m);
    return m;
}

Matroid uniform_matroid(int r, int n) {
    if (r < 1 || n < 1) throw ArgumentError("uniform_matroid: r, n must be positive");
    if (r > n) throw ArgumentError("uniform_matroid: r > n");
    if (n > 20) throw CapacityError("uniform_matroid: n > 20 exceeds desk scale");
    Matroid m;
    m.ground = n;
    m.flats.clear();
    m.flat_rank.clear();
    for (Flat f = 0; f < (Flat(1) << n); ++f)
        if (std::popcount(f) < r) {
            m.flats.push_back(f);
            m.flat_rank.push_back(std::popcount(f));
        }
    m.flats.push_back(m.full());
    m.flat_rank.push_back(r);
    sort_canonically(m);
    return m;
}

Matroid from_flats(int n, const std::vector<Flat>& flats_in) {
    if (n < 0 || n > kMaxGround)
        throw CapacityError("from_flats: ground size must be between 0 and 64");
    Matroid m;
    m.ground = n;
    m.flats = flats_in;
    std::sort(m.flats.begin(), m.flats.end());
    m.flats.erase(std::unique(m.flats.begin(), m.flats.end()), m.flats.end());

    Flat full = m.full();
    for (Flat f : m.flats)
        if ((f & ~full) != 0)
            throw ValidationError("from_flats: " + flat_str(f) + " is not a subset of the ground set");
    if (std::find(m.flats.begin(), m.flats.end(), full) == m.flats.end())
        throw ValidationError("from_flats: ground-set axiom fails, " + flat_str(full) +
                              " is not a flat");
    if (std::find(m.flats.begin(), m.flats.end(), Flat(0)) == m.flats.end())
        throw ValidationError("from_flats: looplessness fails, the empty set is not a flat");

    auto is_flat = [&](Flat f) {
        return std::binary_search(m.flats.begin(), m.flats.end(), f);
    };
    for (Flat a : m.flats)
        for (Flat b : m.flats)
            if (!is_flat(a & b))
                throw ValidationError("from_flats: intersection-closure fails, " + flat_str(a) +
                                      " and " + flat_str(b) + " meet in the non-flat " +
                                      flat_str(a & b));

    // Cover-partition axiom: the flats covering F partition the complement of F.
    for (Flat f : m.flats) {
        std::vector<Flat> ups;
        for (Flat g : m.flats)
            if (g != f && (f & ~g) == 0) ups.push_back(g);
        std::vector<Flat> covers;
        for (Flat g : ups) {
            bool minimal = true;
            for (Flat h : ups)
                if (h != g && (h & ~g) == 0) minimal = false;
            if (minimal) covers.push_back(g);
        }
        for (int a = 0; a < n; ++a) {
            if (f >> a & 1) continue;
            int hits = 0;
            for (Flat g : covers)
                if (g >> a & 1) ++hits;
            if (hits != 1)
                throw ValidationError("from_flats: cover-partition fails, element " +
                                      std::to_string(a) + " over flat " + flat_str(f) + " lies in " +
                                      std::to_string(hits) + " covering flats");
        }
    }

    // Ranks by longest-chain height, processing flats by cardinality.
    std::vector<int> order(m.flats.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return std::popcount(m.flats[i]) < std::popcount(m.flats[j]);
    });
    std::map<Flat, int> rank;
    for (int i : order) {
        Flat f = m.flats[i];
        int r = 0;
        for (const auto& [g, rg] : rank)
            if (g != f && (g & ~f) == 0) r = std::max(r, rg + 1);
        rank[f] = r;
    }
    m.flat_rank.resize(m.flats.size());
    for (size_t i = 0; i < m.flats.size(); ++i) m.flat_rank[i] = rank[m.flats[i]];

    // Consequence of the axioms; a failure here means a bug above.
    for (Flat f : m.flats)
        for (Flat g : m.covers_of(f))
            if (rank[g] != rank[f] + 1)
                throw ValidationError("from_flats: lattice not graded, cover " + flat_str(g) +
                                      " over " + flat_str(f) + " jumps rank");

    sort_canonically(m);
    return m;
}

Matroid direct_sum(const Matroid& M, const Matroid& N) {
    if (M.ground + N.ground > kMaxGround)
        throw CapacityError("direct_sum: combined ground set exceeds 64 elements");
    Matroid s;
    s.ground = M.ground + N.ground;
    s.flats.clear();
    s.flat_rank.clear();
    for (size_t i = 0; i < M.flats.size(); ++i)
        for (size_t j = 0; j < N.flats.size(); ++j) {
            s.flats.push_back(M.flats[i] | (N.flats[j] << M.ground));
            s.flat_rank.push_back(M.flat_rank[i] + N.flat_rank[j]);
        }
    sort_canonically(s);
    return s;
}

Matroid restriction(const Matroid& M, Flat S) {
    if (!M.is_flat(S)) throw ArgumentError("restriction: " + flat_str(S) + " is not a flat");
    Matroid r;
    r.ground = std::popcount(S);
    r.flats.clear();
    r.flat_rank.clear();
    for (size_t i = 0; i < M.flats.size(); ++i)
        if ((M.flats[i] & ~S) == 0) {
            r.flats.push_back(compress_bits(M.flats[i], S));
            r.flat_rank.push_back(M.flat_rank[i]);
        }
    sort_canonically(r);
    return r;
}

Matroid contraction(const Matroid& M, Flat F) {
    if (!M.is_flat(F)) throw ArgumentError("contraction: " + flat_str(F) + " is not a flat");
    Flat mask = M.full() & ~F;
    int rF = M.rank_of(F);
    Matroid c;
    c.ground = std::popcount(mask);
    c.flats.clear();
    c.flat_rank.clear();
    for (size_t i = 0; i < M.flats.size(); ++i)
        if ((F & ~M.flats[i]) == 0) {
            c.flats.push_back(compress_bits(M.flats[i] & mask, mask));
            c.flat_rank.push_back(M.flat_rank[i] - rF);
        }
    sort_canonically(c);
    return c;
}

Matroid minor(const Matroid& M, Flat F, Flat G) {
    if (!M.is_flat(F) || !M.is_flat(G))
        throw ArgumentError("minor: arguments must be flats");
    if ((F & ~G) != 0)
        throw ArgumentError("minor: need F <= G, got " + flat_str(F) + " and " + flat_str(G));
    Matroid res = restriction(M, G);
    return contraction(res, compress_bits(F, G));
}

bool is_coloop(const Matroid& M, int i) {
    if (i < 0 || i >= M.ground) throw ArgumentError("is_coloop: element out of range");
    return M.is_flat(M.full() & ~(Flat(1) << i));
}

FlatLattice lattice_of_flats(const Matroid& M) {
    int n = M.flat_count();
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    std::vector<int> rank(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((M.flats[i] & ~M.flats[j]) == 0) {
                leq[i * n + j] = 1;
                rank[i * n + j] = M.flat_rank[j] - M.flat_rank[i];
            }
    FlatLattice L;
    L.matroid = M;
    L.poset = std::make_shared<WeaklyRankedPoset>(n, std::move(leq), std::move(rank));
    return L;
}

} // namespace chowlab
