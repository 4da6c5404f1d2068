#include "chowlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace chowlab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

VerificationReport make_report(std::string name, std::string instance, const IntPolynomial& lhs,
                               const IntPolynomial& rhs, Clock::time_point t0) {
    VerificationReport r;
    r.name = std::move(name);
    r.instance = std::move(instance);
    r.lhs = lhs.str();
    r.rhs = rhs.str();
    r.pass = lhs == rhs;
    r.millis = ms_since(t0);
    return r;
}

IntPolynomial xpoly() { return IntPolynomial::monomial(1); }

// Everything the Hilbert-identity checks need about one pair (M, N).
struct PairData {
    Matroid S;
    FlatLattice LM, LN, LS;
    IncidenceFunction HM, HN, HS;

    PairData(const Matroid& M, const Matroid& N)
        : S(direct_sum(M, N)), LM(lattice_of_flats(M)), LN(lattice_of_flats(N)),
          LS(lattice_of_flats(S)), HM(chow_function(characteristic(LM.poset))),
          HN(chow_function(characteristic(LN.poset))),
          HS(chow_function(characteristic(LS.poset))) {}

    int sum_index(Flat F, Flat G) const { return LS.index_of(F | (G << LM.matroid.ground)); }
};

} // namespace

IntPolynomial eulerian(int n) {
    if (n < 0) throw ArgumentError("eulerian: n must be nonnegative");
    if (n > 10) throw CapacityError("eulerian: n > 10 exceeds the descent-counting budget");
    if (n == 0) return IntPolynomial::one();
    std::vector<mpz_class> coeff(n, mpz_class(0));
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int des = 0;
        for (int i = 0; i + 1 < n; ++i)
            if (perm[i] > perm[i + 1]) ++des;
        coeff[des] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return IntPolynomial(std::move(coeff));
}

VerificationReport check_thm1_hilbert(const Matroid& M, const Matroid& N,
                                      const std::string& instance) {
    auto t0 = Clock::now();
    PairData d(M, N);
    IntPolynomial lhs = d.HS.at(d.LS.bottom(), d.LS.top());
    IntPolynomial sum;
    for (Flat F : M.flats) {
        if (F == 0) continue;
        for (Flat G : N.flats) {
            if (G == 0) continue;
            // H(M_F (+) N_G) is the interval above F u G in the sum lattice
            sum += d.HS.at(d.sum_index(F, G), d.LS.top()) *
                   d.HM.at(d.LM.bottom(), d.LM.index_of(F)) *
                   d.HN.at(d.LN.bottom(), d.LN.index_of(G));
        }
    }
    IntPolynomial rhs =
        d.HM.at(d.LM.bottom(), d.LM.top()) * d.HN.at(d.LN.bottom(), d.LN.top()) + xpoly() * sum;
    return make_report("thm1-hilbert", instance, lhs, rhs, t0);
}

VerificationReport check_thm2_hilbert(const Matroid& M, const Matroid& N,
                                      const std::string& instance) {
    auto t0 = Clock::now();
    PairData d(M, N);
    IntPolynomial lhs = d.HS.at(d.LS.bottom(), d.LS.top());
    IntPolynomial sum;
    for (Flat F : M.flats) {
        if (F == M.full()) continue;
        for (Flat G : N.flats) {
            if (G == N.full()) continue;
            sum += d.HS.at(d.LS.bottom(), d.sum_index(F, G)) *
                   d.HM.at(d.LM.index_of(F), d.LM.top()) *
                   d.HN.at(d.LN.index_of(G), d.LN.top());
        }
    }
    IntPolynomial rhs =
        d.HM.at(d.LM.bottom(), d.LM.top()) * d.HN.at(d.LN.bottom(), d.LN.top()) + xpoly() * sum;
    return make_report("thm2-hilbert", instance, lhs, rhs, t0);
}

VerificationReport check_aug_hilbert(const Matroid& M, const Matroid& N,
                                     const std::string& instance) {
    auto t0 = Clock::now();
    PairData d(M, N);
    IncidenceFunction GM = aug_chow_left(characteristic(d.LM.poset));
    IncidenceFunction GN = aug_chow_left(characteristic(d.LN.poset));
    IncidenceFunction GS = aug_chow_left(characteristic(d.LS.poset));
    IntPolynomial lhs = GS.at(d.LS.bottom(), d.LS.top());
    IntPolynomial sum;
    for (Flat F : M.flats) {
        if (F == M.full()) continue;
        for (Flat G : N.flats) {
            if (G == N.full()) continue;
            sum += GS.at(d.LS.bottom(), d.sum_index(F, G)) *
                   d.HM.at(d.LM.index_of(F), d.LM.top()) *
                   d.HN.at(d.LN.index_of(G), d.LN.top());
        }
    }
    IntPolynomial rhs =
        GM.at(d.LM.bottom(), d.LM.top()) * GN.at(d.LN.bottom(), d.LN.top()) + xpoly() * sum;
    return make_report("aug-hilbert", instance, lhs, rhs, t0);
}

namespace {

// For each k, the sum over flags bottom < F_1 < ... < F_k of nonempty flats
// (F_k possibly the top) of the product of interval Chow polynomials along
// the extended flag bottom, F_1, ..., F_k, top.
std::vector<IntPolynomial> flag_sums(const FlatLattice& L, const IncidenceFunction& H) {
    int rank = L.matroid.rank();
    std::vector<IntPolynomial> sums(rank + 1);
    sums[0] = H.at(L.bottom(), L.top());
    struct Frame {
        int last;
        int length;
        IntPolynomial partial;
    };
    std::vector<Frame> stack{{L.bottom(), 0, IntPolynomial::one()}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        for (int u = 0; u < L.poset->size(); ++u) {
            if (u == f.last || u == L.bottom()) continue;
            if (!L.poset->leq(f.last, u)) continue;
            Frame g{u, f.length + 1, f.partial * H.at(f.last, u)};
            if (g.length <= rank) {
                sums[g.length] += g.partial * H.at(u, L.top());
                stack.push_back(g);
            }
        }
    }
    return sums;
}

} // namespace

VerificationReport check_corirred(const Matroid& M, const Matroid& N,
                                  const std::string& instance) {
    auto t0 = Clock::now();
    PairData d(M, N);
    IntPolynomial lhs = d.HS.at(d.LS.bottom(), d.LS.top());
    std::vector<IntPolynomial> sm = flag_sums(d.LM, d.HM);
    std::vector<IntPolynomial> sn = flag_sums(d.LN, d.HN);
    IntPolynomial rhs;
    IntPolynomial xk = IntPolynomial::one();
    for (size_t k = 0; k < std::min(sm.size(), sn.size()); ++k) {
        rhs += xk * sm[k] * sn[k];
        xk *= xpoly();
    }
    return make_report("corirred", instance, lhs, rhs, t0);
}

VerificationReport check_euler_recursion(int n, int m) {
    if (n < 1 || m < 1) throw ArgumentError("euler recursion: need n, m >= 1");
    if (n + m > 10) throw CapacityError("euler recursion: n + m > 10");
    auto t0 = Clock::now();
    std::vector<IntPolynomial> A(n + m + 1);
    for (int k = 0; k <= n + m; ++k) A[k] = eulerian(k);
    IntPolynomial sum;
    for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= m; ++s) {
            mpz_class c1, c2;
            mpz_bin_uiui(c1.get_mpz_t(), n, r);
            mpz_bin_uiui(c2.get_mpz_t(), m, s);
            sum += IntPolynomial(c1 * c2) * A[r] * A[s] * A[n + m - r - s];
        }
    IntPolynomial rhs = A[n] * A[m] + xpoly() * sum;
    return make_report("euler-recursion", "n=" + std::to_string(n) + ",m=" + std::to_string(m),
                       A[n + m], rhs, t0);
}

VerificationReport check_euler_hilbert(int n) {
    auto t0 = Clock::now();
    FlatLattice L = lattice_of_flats(boolean_matroid(n));
    IntPolynomial viaH = chow_function(characteristic(L.poset)).at(L.bottom(), L.top());
    return make_report("euler-hilbert", "n=" + std::to_string(n), eulerian(n), viaH, t0);
}

VerificationReport check_coloop_decomposition(const Matroid& M, int i,
                                              const std::string& instance) {
    if (!is_coloop(M, i))
        throw ArgumentError("coloop decomposition: element " + std::to_string(i) +
                            " is not a coloop");
    if (M.rank() < 2)
        throw ArgumentError("coloop decomposition: the deletion M \\ i must have positive rank");
    auto t0 = Clock::now();
    Flat mask = M.full() & ~(Flat(1) << i);
    Matroid del = restriction(M, mask);
    FlatLattice LM = lattice_of_flats(M), LD = lattice_of_flats(del);
    IncidenceFunction HM = chow_function(characteristic(LM.poset));
    IncidenceFunction HD = chow_function(characteristic(LD.poset));
    IncidenceFunction GM = aug_chow_left(characteristic(LM.poset));
    IncidenceFunction GD = aug_chow_left(characteristic(LD.poset));
    IntPolynomial one_plus_x = IntPolynomial::one() + xpoly();

    // chow: H(M) = (1+x) H(M\i) + x sum_{0 < F < M\i} H(M_{F u i}) H(M^F)
    // aug:  G(M) = (1+x) G(M\i) + x sum_{F < M\i, incl. empty} G(M^F) H(M_{F u i})
    IntPolynomial chow_lhs = HM.at(LM.bottom(), LM.top());
    IntPolynomial aug_lhs = GM.at(LM.bottom(), LM.top());
    IntPolynomial chow_sum, aug_sum;
    for (Flat Fd : del.flats) {
        if (Fd == del.full()) continue;
        Flat F = expand_bits(Fd, mask); // as a flat of M
        Flat Fi = F | (Flat(1) << i);   // flat of M because i is a coloop
        IntPolynomial contr = HM.at(LM.index_of(Fi), LM.top());
        if (F != 0) chow_sum += contr * HM.at(LM.bottom(), LM.index_of(F));
        aug_sum += GM.at(LM.bottom(), LM.index_of(F)) * contr;
    }
    IntPolynomial chow_rhs = one_plus_x * HD.at(LD.bottom(), LD.top()) + xpoly() * chow_sum;
    IntPolynomial aug_rhs = one_plus_x * GD.at(LD.bottom(), LD.top()) + xpoly() * aug_sum;

    VerificationReport r;
    r.name = "coloop";
    r.instance = instance.empty() ? "i=" + std::to_string(i) : instance;
    r.lhs = chow_lhs.str() + " | " + aug_lhs.str();
    r.rhs = chow_rhs.str() + " | " + aug_rhs.str();
    r.pass = chow_lhs == chow_rhs && aug_lhs == aug_rhs;
    r.millis = ms_since(t0);
    return r;
}

VerificationReport check_explicit(const Matroid& M, const Matroid& N, PhiVariant variant,
                                  ModelCache& cache, const std::string& instance) {
    auto t0 = Clock::now();
    AssembleReport rep = assemble_phi(M, N, variant, cache, instance);
    VerificationReport r;
    r.name = variant == PhiVariant::thm1   ? "explicit-thm1"
             : variant == PhiVariant::thm2 ? "explicit-thm2"
                                           : "explicit-aug";
    r.instance = instance;
    std::string ranks, dims;
    for (const auto& dg : rep.degrees) {
        if (!ranks.empty()) {
            ranks += ",";
            dims += ",";
        }
        ranks += "deg" + std::to_string(dg.degree) + ":" + std::to_string(dg.rank) + "/" +
                 std::to_string(dg.dom_dim);
        dims += "deg" + std::to_string(dg.degree) + ":" + std::to_string(dg.cod_dim) + "/" +
                std::to_string(dg.cod_dim);
    }
    r.lhs = ranks; // rank achieved / domain dimension, per degree
    r.rhs = dims;  // codomain dimension twice, the full-rank target
    r.pass = rep.pass();
    r.millis = ms_since(t0);
    return r;
}

std::vector<VerificationReport> check_product_identities(const Matroid& M, const Matroid& N,
                                                         const std::string& instance) {
    std::vector<VerificationReport> out;
    auto t0 = Clock::now();
    FlatLattice LM = lattice_of_flats(M), LN = lattice_of_flats(N);
    PosetPtr prod = product_poset(LM.poset, LN.poset);
    IncidenceFunction chi1 = characteristic(LM.poset), chi2 = characteristic(LN.poset);
    IncidenceFunction kernel = tensor(prod, chi1, chi2);
    IncidenceFunction I = IncidenceFunction::identity(prod);
    IntPolynomial x = xpoly();
    IntPolynomial xm1 = x - IntPolynomial::one();

    auto push = [&](const std::string& name, const IncidenceFunction& lhs,
                    const IncidenceFunction& rhs) {
        VerificationReport r;
        r.name = name;
        r.instance = instance;
        int bottom = 0, top = prod->size() - 1;
        r.lhs = lhs.at(bottom, top).str() + " (corner entry; all entries compared)";
        r.rhs = rhs.at(bottom, top).str() + " (corner entry; all entries compared)";
        r.pass = lhs == rhs;
        r.millis = ms_since(t0);
        out.push_back(std::move(r));
        t0 = Clock::now();
    };

    {
        VerificationReport r;
        r.name = "tensor-kernel";
        r.instance = instance;
        r.lhs = "is_kernel(chi1 (x) chi2) and chi1 (x) chi2 == chi of the product";
        r.rhs = "true";
        r.pass = is_kernel(kernel) && kernel == characteristic(prod);
        r.millis = ms_since(t0);
        out.push_back(std::move(r));
        t0 = Clock::now();
    }

    IncidenceFunction kbar = reduced_kernel(kernel);
    IncidenceFunction kbar1 = reduced_kernel(chi1), kbar2 = reduced_kernel(chi2);
    IncidenceFunction I1 = IncidenceFunction::identity(LM.poset);
    IncidenceFunction I2 = IncidenceFunction::identity(LN.poset);
    push("kernelrek", kbar,
         tensor(prod, kbar1, kbar2).scaled(xm1) + tensor(prod, kbar1, I2).scaled(x) +
             tensor(prod, I1, kbar2).scaled(x) + I.scaled(x));

    IncidenceFunction H = chow_function(kernel);
    IncidenceFunction H12 = tensor(prod, chow_function(chi1), chow_function(chi2));
    IncidenceFunction IH2 = tensor(prod, I1, chow_function(chi2));
    IncidenceFunction H1I = tensor(prod, chow_function(chi1), I2);
    push("rowH1", H,
         H12 + inc_mul(H, H12).scaled(x) - inc_mul(H, IH2).scaled(x) -
             inc_mul(H, H1I).scaled(x) + H.scaled(x));
    push("rowH2", H,
         H12 + inc_mul(H12, H).scaled(x) - inc_mul(IH2, H).scaled(x) -
             inc_mul(H1I, H).scaled(x) + H.scaled(x));

    IncidenceFunction Fa = aug_chow_right(kernel);
    IncidenceFunction F12 = tensor(prod, aug_chow_right(chi1), aug_chow_right(chi2));
    push("fkerrel", Fa,
         F12 + inc_mul(H12, Fa).scaled(x) - inc_mul(IH2, Fa).scaled(x) -
             inc_mul(H1I, Fa).scaled(x) + Fa.scaled(x));

    IncidenceFunction Ga = aug_chow_left(kernel);
    IncidenceFunction G12 = tensor(prod, aug_chow_left(chi1), aug_chow_left(chi2));
    push("gkerrel", Ga,
         G12 + inc_mul(Ga, H12).scaled(x) - inc_mul(Ga, IH2).scaled(x) -
             inc_mul(Ga, H1I).scaled(x) + Ga.scaled(x));

    {
        VerificationReport r;
        r.name = "tensor-kls";
        r.instance = instance;
        bool right_ok = tensor(prod, kls_right(chi1), kls_right(chi2)) == kls_right(kernel);
        bool left_ok = tensor(prod, kls_left(chi1), kls_left(chi2)) == kls_left(kernel);
        r.lhs = "f1 (x) f2, g1 (x) g2";
        r.rhs = "right/left KLS functions of the tensor kernel";
        r.pass = right_ok && left_ok;
        r.millis = ms_since(t0);
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CorpusEntry> default_corpus() {
    return {{"B_1", boolean_matroid(1)},
            {"B_2", boolean_matroid(2)},
            {"B_3", boolean_matroid(3)},
            {"B_4", boolean_matroid(4)},
            {"U_{1,2}", uniform_matroid(1, 2)},
            {"U_{2,3}", uniform_matroid(2, 3)},
            {"U_{2,4}", uniform_matroid(2, 4)},
            {"U_{3,4}", uniform_matroid(3, 4)}};
}

std::vector<VerificationReport> run_suite(const std::string& suite,
                                          const std::vector<CorpusEntry>& corpus,
                                          const SuiteOptions& opts) {
    std::vector<VerificationReport> out;
    auto pairs_within = [&](int bound) {
        std::vector<std::pair<const CorpusEntry*, const CorpusEntry*>> ps;
        for (const auto& a : corpus)
            for (const auto& b : corpus)
                if (a.matroid.rank() + b.matroid.rank() <= bound) ps.emplace_back(&a, &b);
        return ps;
    };
    auto instance = [](const CorpusEntry& a, const CorpusEntry& b) {
        return a.name + "," + b.name;
    };

    bool all = suite == "all";
    if (all || suite == "thm1")
        for (auto [a, b] : pairs_within(opts.hilbert_rank_bound))
            out.push_back(check_thm1_hilbert(a->matroid, b->matroid, instance(*a, *b)));
    if (all || suite == "thm2")
        for (auto [a, b] : pairs_within(opts.hilbert_rank_bound))
            out.push_back(check_thm2_hilbert(a->matroid, b->matroid, instance(*a, *b)));
    if (all || suite == "aug")
        for (auto [a, b] : pairs_within(opts.hilbert_rank_bound))
            out.push_back(check_aug_hilbert(a->matroid, b->matroid, instance(*a, *b)));
    if (all || suite == "corirred")
        for (auto [a, b] : pairs_within(opts.hilbert_rank_bound))
            out.push_back(check_corirred(a->matroid, b->matroid, instance(*a, *b)));
    if (all || suite == "euler") {
        for (int n = 1; n <= 5; ++n) out.push_back(check_euler_hilbert(n));
        for (int n = 1; n < opts.euler_sum_bound; ++n)
            for (int m = 1; n + m <= opts.euler_sum_bound; ++m)
                out.push_back(check_euler_recursion(n, m));
    }
    if (all || suite == "coloop")
        for (const auto& e : corpus) {
            if (e.matroid.rank() < 2) continue; // the deletion must stay nonempty
            for (int i = 0; i < e.matroid.ground; ++i)
                if (is_coloop(e.matroid, i))
                    out.push_back(check_coloop_decomposition(
                        e.matroid, i, e.name + ",i=" + std::to_string(i)));
        }
    if (all || suite == "explicit") {
        ModelCache cache;
        for (auto [a, b] : pairs_within(opts.explicit_rank_bound))
            for (PhiVariant v : {PhiVariant::thm1, PhiVariant::thm2, PhiVariant::aug})
                out.push_back(check_explicit(a->matroid, b->matroid, v, cache, instance(*a, *b)));
    }
    if (out.empty() && !all) throw ArgumentError("unknown suite: " + suite);
    return out;
}

} // namespace chowlab
