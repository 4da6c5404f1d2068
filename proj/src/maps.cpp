#include "chowlab/maps.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace chowlab {

namespace {

// Products that land above the top degree vanish in the graded ring; the
// checks below use this instead of the erroring operator*.
RingElement mul_or_zero(const RingElement& a, const RingElement& b) {
    int k = a.degree + b.degree;
    if (k > a.model->top()) return RingElement{a.model, k, {}};
    return a * b;
}

void accumulate(RingElement& e, const RingElement& v) {
    for (size_t i = 0; i < e.coords.size(); ++i) e.coords[i] += v.coords[i];
}

} // namespace

TensorBasis::TensorBasis(std::vector<const GradedRingModel*> parts) : parts_(std::move(parts)) {
    top_ = 0;
    for (auto* p : parts_) top_ += p->top();
    refs_.resize(top_ + 1);
    int np = static_cast<int>(parts_.size());
    for (int k = 0; k <= top_; ++k) {
        std::vector<int> degs(np, 0), idx(np, 0);
        std::function<void(int, int)> walk_deg = [&](int f, int rest) {
            if (f == np - 1) {
                if (rest > parts_[f]->top()) return;
                degs[f] = rest;
                std::function<void(int)> walk_idx = [&](int g) {
                    if (g == np) {
                        refs_[k].push_back({degs, idx});
                        return;
                    }
                    for (idx[g] = 0; idx[g] < parts_[g]->dim(degs[g]); ++idx[g]) walk_idx(g + 1);
                    idx[g] = 0;
                };
                walk_idx(0);
                degs[f] = 0;
                return;
            }
            for (degs[f] = 0; degs[f] <= std::min(rest, parts_[f]->top()); ++degs[f])
                walk_deg(f + 1, rest - degs[f]);
            degs[f] = 0;
        };
        walk_deg(0, k);
    }
}

int TensorBasis::dim(int k) const {
    if (k < 0 || k > top_) return 0;
    return static_cast<int>(refs_[k].size());
}

mpq_class TensorBasis::pairing(const Ref& a, const Ref& b) const {
    mpq_class out(1);
    for (size_t f = 0; f < parts_.size(); ++f) {
        const GradedRingModel* P = parts_[f];
        if (a.degs[f] + b.degs[f] != P->top()) return 0;
        QVec ea(P->dim(a.degs[f]), mpq_class(0)), eb(P->dim(b.degs[f]), mpq_class(0));
        ea[a.idx[f]] = 1;
        eb[b.idx[f]] = 1;
        out *= P->degree_map(P->top(), P->multiply(a.degs[f], ea, b.degs[f], eb));
        if (out == 0) return 0;
    }
    return out;
}

namespace {

// sum_{G' flat of N} x_{F u G'} viewed in the model of the direct sum
RingElement iota_image_left(const GradedRingModel& S, const Matroid& M, const Matroid& N,
                            Flat f) {
    RingElement e = RingElement::zero(S, 1);
    for (Flat g : N.flats) accumulate(e, var_element(S, f | (g << M.ground)));
    return e;
}

RingElement iota_image_right(const GradedRingModel& S, const Matroid& M, const Matroid& N,
                             Flat g) {
    RingElement e = RingElement::zero(S, 1);
    for (Flat f : M.flats) accumulate(e, var_element(S, f | (g << M.ground)));
    return e;
}

// The defining relations of `part`, pushed through per-variable images, must
// vanish in the codomain.
bool relations_vanish(const GradedRingModel& part, const GradedRingModel& codomain,
                      const std::vector<RingElement>& img) {
    for (const auto& gen : part.linear_generators()) {
        RingElement acc = RingElement::zero(codomain, 1);
        for (auto [v, c] : gen) accumulate(acc, img[v].scaled(mpq_class(c)));
        if (!acc.is_zero()) return false;
    }
    for (const auto& [Lv, F] : part.quadratic_generators()) {
        RingElement acc = RingElement::zero(codomain, 1);
        for (int v : Lv) accumulate(acc, img[v]);
        if (!mul_or_zero(acc, img[F]).is_zero()) return false;
    }
    for (auto [v, w] : part.incomparable_pairs())
        if (!mul_or_zero(img[v], img[w]).is_zero()) return false;
    return true;
}

} // namespace

GradedLinearMap iota(const GradedRingModel& A, const GradedRingModel& B,
                     const GradedRingModel& S) {
    const Matroid& M = A.matroid();
    const Matroid& N = B.matroid();
    if (!(S.matroid() == direct_sum(M, N)))
        throw ArgumentError("iota: codomain is not the model of the direct sum");
    if (A.kind() != B.kind() || A.kind() != S.kind())
        throw ArgumentError("iota: mixed ring kinds");

    std::vector<RingElement> imA, imB;
    for (int v = 0; v < A.var_count(); ++v)
        imA.push_back(iota_image_left(S, M, N, A.var_flat(v)));
    for (int w = 0; w < B.var_count(); ++w)
        imB.push_back(iota_image_right(S, M, N, B.var_flat(w)));
    if (!relations_vanish(A, S, imA) || !relations_vanish(B, S, imB))
        throw TheoryError("iota: factor relations do not vanish, not a homomorphism");

    TensorBasis TB({&A, &B});
    GradedLinearMap out;
    out.shift = 0;
    out.cols.resize(TB.top() + 1);
    for (int k = 0; k <= TB.top(); ++k)
        for (const auto& ref : TB.refs(k)) {
            RingElement e = RingElement::one(S);
            for (int v : A.basis(ref.degs[0])[ref.idx[0]]) e = e * imA[v];
            for (int w : B.basis(ref.degs[1])[ref.idx[1]]) e = e * imB[w];
            out.cols[k].push_back(std::move(e.coords));
        }
    return out;
}

GradedLinearMap psi_pushforward(const GradedRingModel& S, Flat E, const GradedRingModel& C,
                                const GradedRingModel& R) {
    const Matroid& SM = S.matroid();
    if (!SM.is_flat(E) || E == SM.full())
        throw ArgumentError("psi: E must be a proper flat");
    if (S.kind() == RingKind::chow && E == 0)
        throw ArgumentError("psi: E must be nonempty in the non-augmented case");
    if (!(C.matroid() == contraction(SM, E)) || !(R.matroid() == restriction(SM, E)))
        throw ArgumentError("psi: C and R must be the minors of S at E");
    if (C.kind() != RingKind::chow || R.kind() != S.kind())
        throw ArgumentError("psi: kind mismatch (contraction side is always chow)");

    Flat cmask = SM.full() & ~E;
    std::vector<RingElement> liftC, liftR;
    for (int v = 0; v < C.var_count(); ++v)
        liftC.push_back(var_element(S, expand_bits(C.var_flat(v), cmask) | E));
    for (int v = 0; v < R.var_count(); ++v)
        liftR.push_back(var_element(S, expand_bits(R.var_flat(v), E)));

    // Well-definedness: x_E kills the lifted relation space of both factors.
    RingElement xE = var_element(S, E);
    auto killed = [&](const GradedRingModel& part, const std::vector<RingElement>& lift) {
        for (const auto& gen : part.linear_generators()) {
            RingElement acc = RingElement::zero(S, 1);
            for (auto [v, c] : gen) accumulate(acc, lift[v].scaled(mpq_class(c)));
            if (!mul_or_zero(xE, acc).is_zero()) return false;
        }
        for (const auto& [Lv, F] : part.quadratic_generators()) {
            RingElement acc = RingElement::zero(S, 1);
            for (int v : Lv) accumulate(acc, lift[v]);
            if (!mul_or_zero(mul_or_zero(acc, lift[F]), xE).is_zero()) return false;
        }
        for (auto [v, w] : part.incomparable_pairs())
            if (!mul_or_zero(mul_or_zero(lift[v], lift[w]), xE).is_zero()) return false;
        return true;
    };
    if (!killed(C, liftC) || !killed(R, liftR))
        throw TheoryError("psi: lifted relation space not killed by x_E");

    TensorBasis TB({&C, &R});
    GradedLinearMap out;
    out.shift = 1;
    out.cols.resize(TB.top() + 1);
    for (int k = 0; k <= TB.top(); ++k)
        for (const auto& ref : TB.refs(k)) {
            // The image of a monomial pair is the single chain monomial
            // x_E * (lifted contraction part) * (lifted restriction part).
            std::vector<Flat> flats{E};
            for (int v : C.basis(ref.degs[0])[ref.idx[0]])
                flats.push_back(expand_bits(C.var_flat(v), cmask) | E);
            for (int v : R.basis(ref.degs[1])[ref.idx[1]])
                flats.push_back(expand_bits(R.var_flat(v), E));
            out.cols[k].push_back(monomial_element(S, flats).coords);
        }
    return out;
}

Tensor2 Tensor2::zero(const GradedRingModel& A, const GradedRingModel& B, int degree) {
    Tensor2 t;
    t.A = &A;
    t.B = &B;
    t.degree = degree;
    t.blocks.resize(degree + 1);
    for (int k1 = 0; k1 <= degree; ++k1)
        t.blocks[k1].assign(static_cast<size_t>(A.dim(k1)) * B.dim(degree - k1), mpq_class(0));
    return t;
}

Tensor2 Tensor2::one(const GradedRingModel& A, const GradedRingModel& B) {
    Tensor2 t = zero(A, B, 0);
    t.blocks[0][0] = 1;
    return t;
}

bool Tensor2::is_zero() const {
    for (const auto& blk : blocks)
        for (const auto& v : blk)
            if (v != 0) return false;
    return true;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
    if (A != o.A || B != o.B || degree != o.degree)
        throw ArgumentError("tensor2 sum: mismatched factors or degree");
    for (size_t k = 0; k < blocks.size(); ++k)
        for (size_t i = 0; i < blocks[k].size(); ++i) blocks[k][i] += o.blocks[k][i];
    return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
    if (A != o.A || B != o.B || degree != o.degree)
        throw ArgumentError("tensor2 difference: mismatched factors or degree");
    for (size_t k = 0; k < blocks.size(); ++k)
        for (size_t i = 0; i < blocks[k].size(); ++i) blocks[k][i] -= o.blocks[k][i];
    return *this;
}

Tensor2 Tensor2::scaled(const mpq_class& c) const {
    Tensor2 t = *this;
    for (auto& blk : t.blocks)
        for (auto& v : blk) v *= c;
    return t;
}

Tensor2 Tensor2::operator*(const Tensor2& o) const {
    Tensor2 out = zero(*A, *B, degree + o.degree);
    for (int k1 = 0; k1 <= degree; ++k1) {
        int k2 = degree - k1;
        int dB1 = B->dim(k2);
        if (A->dim(k1) == 0 || dB1 == 0) continue;
        for (int l1 = 0; l1 <= o.degree; ++l1) {
            int l2 = o.degree - l1;
            int dB2 = B->dim(l2);
            if (A->dim(l1) == 0 || dB2 == 0) continue;
            int rk1 = k1 + l1, rk2 = k2 + l2;
            if (rk1 > A->top() || rk2 > B->top()) continue;
            int dBr = B->dim(rk2);
            for (int i = 0; i < A->dim(k1); ++i)
                for (int j = 0; j < dB1; ++j) {
                    const mpq_class& v = blocks[k1][static_cast<size_t>(i) * dB1 + j];
                    if (v == 0) continue;
                    for (int i2 = 0; i2 < A->dim(l1); ++i2)
                        for (int j2 = 0; j2 < dB2; ++j2) {
                            const mpq_class& w =
                                o.blocks[l1][static_cast<size_t>(i2) * dB2 + j2];
                            if (w == 0) continue;
                            QVec ea(A->dim(k1), mpq_class(0)), eb(A->dim(l1), mpq_class(0));
                            ea[i] = 1;
                            eb[i2] = 1;
                            QVec pa = A->multiply(k1, ea, l1, eb);
                            QVec fa(dB1, mpq_class(0)), fb(dB2, mpq_class(0));
                            fa[j] = 1;
                            fb[j2] = 1;
                            QVec pb = B->multiply(k2, fa, l2, fb);
                            mpq_class c = v * w;
                            for (int ia = 0; ia < A->dim(rk1); ++ia) {
                                if (pa[ia] == 0) continue;
                                for (int jb = 0; jb < dBr; ++jb)
                                    if (pb[jb] != 0)
                                        out.blocks[rk1][static_cast<size_t>(ia) * dBr + jb] +=
                                            c * pa[ia] * pb[jb];
                            }
                        }
                }
        }
    }
    return out;
}

QVec Tensor2::flattened() const {
    QVec out;
    for (const auto& blk : blocks) out.insert(out.end(), blk.begin(), blk.end());
    return out;
}

GradedLinearMap phi_pullback(const GradedRingModel& S, Flat E, const GradedRingModel& C,
                             const GradedRingModel& R) {
    const Matroid& SM = S.matroid();
    if (S.kind() != RingKind::chow || C.kind() != RingKind::chow || R.kind() != RingKind::chow)
        throw ArgumentError("phi_pullback: chow kind only");
    if (!SM.is_flat(E) || E == 0 || E == SM.full())
        throw ArgumentError("phi_pullback: E must be a nonempty proper flat");
    if (!(C.matroid() == contraction(SM, E)) || !(R.matroid() == restriction(SM, E)))
        throw ArgumentError("phi_pullback: C and R must be the minors of S at E");

    Flat cmask = SM.full() & ~E;
    int i0 = std::countr_zero(E);     // fixed element inside E
    int j0 = std::countr_zero(cmask); // fixed element outside E

    auto var_tensor = [&](bool left, int var) {
        Tensor2 t = Tensor2::zero(C, R, 1);
        if (left) {
            const QVec& red = C.reduce_monomial({var});
            for (int i = 0; i < C.dim(1); ++i)
                t.blocks[1][static_cast<size_t>(i) * R.dim(0)] = red[i];
        } else {
            const QVec& red = R.reduce_monomial({var});
            for (int j = 0; j < R.dim(1); ++j) t.blocks[0][j] = red[j];
        }
        return t;
    };

    std::vector<Tensor2> img;
    for (int v = 0; v < S.var_count(); ++v) {
        Flat H = S.var_flat(v);
        if (H == E) {
            // restriction of the divisor to its own star:
            // -sum_{i0 in K < E} 1 (x) x_K - sum_{j0 not in K, E < K} x_{K\E} (x) 1
            Tensor2 t = Tensor2::zero(C, R, 1);
            for (Flat K : SM.flats) {
                if ((K >> i0 & 1) && (K & ~E) == 0 && K != E)
                    t -= var_tensor(false, R.var_of_flat(compress_bits(K, E)));
                if (!(K >> j0 & 1) && (E & ~K) == 0 && K != E && K != SM.full())
                    t -= var_tensor(true, C.var_of_flat(compress_bits(K & cmask, cmask)));
            }
            img.push_back(std::move(t));
        } else if ((E & ~H) == 0) { // E strictly below H
            img.push_back(var_tensor(true, C.var_of_flat(compress_bits(H & cmask, cmask))));
        } else if ((H & ~E) == 0) { // H strictly below E
            img.push_back(var_tensor(false, R.var_of_flat(compress_bits(H, E))));
        } else {
            img.push_back(Tensor2::zero(C, R, 1));
        }
    }

    for (const auto& gen : S.linear_generators()) {
        Tensor2 acc = Tensor2::zero(C, R, 1);
        for (auto [v, c] : gen) acc += img[v].scaled(mpq_class(c));
        if (!acc.is_zero()) throw TheoryError("phi_pullback: linear relations do not vanish");
    }
    for (auto [v, w] : S.incomparable_pairs())
        if (!(img[v] * img[w]).is_zero())
            throw TheoryError("phi_pullback: incomparability relations do not vanish");

    GradedLinearMap out;
    out.shift = 0;
    out.cols.resize(S.top() + 1);
    for (int k = 0; k <= S.top(); ++k)
        for (const Monomial& mon : S.basis(k)) {
            Tensor2 e = Tensor2::one(C, R);
            for (int v : mon) e = e * img[v];
            out.cols[k].push_back(e.flattened());
        }
    return out;
}

namespace {

SummandImages build_general_summand(const GradedRingModel& MS, const Matroid& M,
                                    const Matroid& N, Flat F, Flat G, PhiVariant variant,
                                    ModelCache& cache) {
    int m = M.ground;
    Flat E = F | (G << m);
    bool thm1 = variant == PhiVariant::thm1;

    // thm1 factors:     ch(M_F (+) N_G), ch(M^F), ch(N^G)
    // thm2/aug factors: ch/ach(M^F (+) N^G), ch(M_F), ch(N_G)
    const GradedRingModel* C1;
    const GradedRingModel* P2;
    const GradedRingModel* P3;
    if (thm1) {
        C1 = &cache.get(direct_sum(contraction(M, F), contraction(N, G)), RingKind::chow);
        P2 = &cache.get(restriction(M, F), RingKind::chow);
        P3 = &cache.get(restriction(N, G), RingKind::chow);
    } else {
        C1 = &cache.get(direct_sum(restriction(M, F), restriction(N, G)),
                        variant == PhiVariant::aug ? RingKind::augmented : RingKind::chow);
        P2 = &cache.get(contraction(M, F), RingKind::chow);
        P3 = &cache.get(contraction(N, G), RingKind::chow);
    }

    // Lift of a factor-1 variable to a flat of the direct sum, through the
    // minor relabelings used by the pushforward at E.
    int split = thm1 ? m - std::popcount(F) : std::popcount(F);
    Flat lowmask = split == 0 ? Flat(0) : (~Flat(0) >> (64 - split));
    auto factor1_flat = [&, lowmask, split](int v) -> Flat {
        Flat h = C1->var_flat(v);
        Flat hM = h & lowmask, hN = h >> split;
        if (thm1)
            return expand_bits(hM, M.full() & ~F) | (expand_bits(hN, N.full() & ~G) << m) | E;
        return expand_bits(hM, F) | (expand_bits(hN, G) << m);
    };

    // Images of the other two factors through the inner iota followed by the
    // pushforward lift; each variable maps to a sum of generators.
    std::vector<RingElement> img2, img3;
    if (thm1) {
        for (int v = 0; v < P2->var_count(); ++v) {
            RingElement e = RingElement::zero(MS, 1);
            Flat f2 = expand_bits(P2->var_flat(v), F);
            for (Flat g : N.flats)
                if ((g & ~G) == 0) accumulate(e, var_element(MS, f2 | (g << m)));
            img2.push_back(std::move(e));
        }
        for (int v = 0; v < P3->var_count(); ++v) {
            RingElement e = RingElement::zero(MS, 1);
            Flat g2 = expand_bits(P3->var_flat(v), G);
            for (Flat f : M.flats)
                if ((f & ~F) == 0) accumulate(e, var_element(MS, f | (g2 << m)));
            img3.push_back(std::move(e));
        }
    } else {
        for (int v = 0; v < P2->var_count(); ++v) {
            RingElement e = RingElement::zero(MS, 1);
            Flat fpart = F | expand_bits(P2->var_flat(v), M.full() & ~F);
            for (Flat g : N.flats)
                if ((G & ~g) == 0) accumulate(e, var_element(MS, fpart | (g << m)));
            img2.push_back(std::move(e));
        }
        for (int v = 0; v < P3->var_count(); ++v) {
            RingElement e = RingElement::zero(MS, 1);
            Flat gpart = G | expand_bits(P3->var_flat(v), N.full() & ~G);
            for (Flat f : M.flats)
                if ((F & ~f) == 0) accumulate(e, var_element(MS, f | (gpart << m)));
            img3.push_back(std::move(e));
        }
    }

    SummandImages s{SummandImages::Type::general, F, G, 1, TensorBasis({C1, P2, P3}), {}};
    s.images.resize(s.basis.top() + 1);
    for (int k = 0; k <= s.basis.top(); ++k)
        for (const auto& ref : s.basis.refs(k)) {
            std::vector<Flat> flats{E};
            for (int v : C1->basis(ref.degs[0])[ref.idx[0]]) flats.push_back(factor1_flat(v));
            RingElement e = monomial_element(MS, flats);
            for (int v : P2->basis(ref.degs[1])[ref.idx[1]]) e = e * img2[v];
            for (int v : P3->basis(ref.degs[2])[ref.idx[2]]) e = e * img3[v];
            s.images[k].push_back(std::move(e.coords));
        }
    return s;
}

SummandImages build_corner_summand(const GradedRingModel& MS, const Matroid& M,
                                   const Matroid& N, PhiVariant variant, ModelCache& cache) {
    int m = M.ground;
    const GradedRingModel& A = cache.get(M, RingKind::chow);
    const GradedRingModel& B = cache.get(N, RingKind::chow);
    SummandImages s{SummandImages::Type::corner, M.full(), N.full(), 1, TensorBasis({&A, &B}),
                    {}};
    s.images.resize(s.basis.top() + 1);
    if (variant != PhiVariant::aug) {
        // u at the corner flat [m]: the image of a monomial pair is the single
        // chain monomial x_{[m]} prod x_f prod x_{[m] u g}.
        for (int k = 0; k <= s.basis.top(); ++k)
            for (const auto& ref : s.basis.refs(k)) {
                std::vector<Flat> flats{M.full()};
                for (int v : A.basis(ref.degs[0])[ref.idx[0]]) flats.push_back(A.var_flat(v));
                for (int w : B.basis(ref.degs[1])[ref.idx[1]])
                    flats.push_back(M.full() | (B.var_flat(w) << m));
                s.images[k].push_back(monomial_element(MS, flats).coords);
            }
    } else {
        // x_empty . iota_{M,N}(-): ch(M (+) N) sitting inside ach as the
        // ideal generated by x_empty.
        s.F = 0;
        s.G = 0;
        std::vector<RingElement> imA, imB;
        for (int v = 0; v < A.var_count(); ++v)
            imA.push_back(iota_image_left(MS, M, N, A.var_flat(v)));
        for (int w = 0; w < B.var_count(); ++w)
            imB.push_back(iota_image_right(MS, M, N, B.var_flat(w)));
        RingElement xempty = var_element(MS, 0);
        for (int k = 0; k <= s.basis.top(); ++k)
            for (const auto& ref : s.basis.refs(k)) {
                RingElement e = xempty;
                for (int v : A.basis(ref.degs[0])[ref.idx[0]]) e = e * imA[v];
                for (int w : B.basis(ref.degs[1])[ref.idx[1]]) e = e * imB[w];
                s.images[k].push_back(std::move(e.coords));
            }
    }
    return s;
}

} // namespace

PhiAssembly build_phi(const Matroid& M, const Matroid& N, PhiVariant variant, ModelCache& cache) {
    Matroid S = direct_sum(M, N);
    RingKind kindS = variant == PhiVariant::aug ? RingKind::augmented : RingKind::chow;
    const GradedRingModel& MS = cache.get(S, kindS);

    PhiAssembly out;
    out.variant = variant;
    out.codomain = &MS;
    out.M = M;
    out.N = N;

    const GradedRingModel& A = cache.get(M, kindS);
    const GradedRingModel& B = cache.get(N, kindS);
    GradedLinearMap im = iota(A, B, MS);
    out.summands.push_back(
        {SummandImages::Type::iota_block, 0, 0, 0, TensorBasis({&A, &B}), std::move(im.cols)});

    bool thm1 = variant == PhiVariant::thm1;
    for (Flat F : M.flats) {
        if (thm1 ? F == 0 : F == M.full()) continue;
        for (Flat G : N.flats) {
            if (thm1 ? G == 0 : G == N.full()) continue;
            bool corner = thm1 ? (F == M.full() && G == N.full()) : (F == 0 && G == 0);
            if (corner)
                out.summands.push_back(build_corner_summand(MS, M, N, variant, cache));
            else
                out.summands.push_back(build_general_summand(MS, M, N, F, G, variant, cache));
        }
    }
    return out;
}

AssembleReport PhiAssembly::report(const std::string& instance) const {
    AssembleReport rep;
    rep.instance = instance;
    rep.full_rank = true;
    rep.hilbert_equal = true;
    for (int k = 0; k <= codomain->top(); ++k) {
        std::vector<const QVec*> cols;
        for (const auto& s : summands) {
            int dd = k - s.shift;
            if (dd < 0 || dd >= static_cast<int>(s.images.size())) continue;
            for (const auto& c : s.images[dd]) cols.push_back(&c);
        }
        DegreeReport dr;
        dr.degree = k;
        dr.dom_dim = static_cast<int>(cols.size());
        dr.cod_dim = codomain->dim(k);
        QMat mat(dr.cod_dim, QVec(cols.size(), mpq_class(0)));
        for (size_t c = 0; c < cols.size(); ++c)
            for (int r = 0; r < dr.cod_dim; ++r) mat[r][c] = (*cols[c])[r];
        dr.rank = rank_of(std::move(mat));
        rep.full_rank = rep.full_rank && dr.rank == dr.cod_dim;
        rep.hilbert_equal = rep.hilbert_equal && dr.dom_dim == dr.cod_dim;
        rep.degrees.push_back(dr);
    }
    return rep;
}

AssembleReport assemble_phi(const Matroid& M, const Matroid& N, PhiVariant variant,
                            ModelCache& cache, const std::string& instance) {
    return build_phi(M, N, variant, cache).report(instance);
}

GramCheck check_orthogonality(const PhiAssembly& phi) {
    GramCheck out;
    const GradedRingModel& S = *phi.codomain;
    int m = phi.M.ground;
    for (size_t a = 0; a < phi.summands.size(); ++a) {
        const auto& sa = phi.summands[a];
        if (sa.type != SummandImages::Type::general) continue;
        for (size_t b = a + 1; b < phi.summands.size(); ++b) {
            const auto& sb = phi.summands[b];
            if (sb.type != SummandImages::Type::general) continue;
            Flat Ea = sa.F | (sa.G << m), Eb = sb.F | (sb.G << m);
            if ((Ea & ~Eb) == 0 || (Eb & ~Ea) == 0) continue; // one contains the other
            ++out.pairs_checked;
            for (int da = 0; da < static_cast<int>(sa.images.size()); ++da) {
                int db = S.top() - 2 - da;
                if (db < 0 || db >= static_cast<int>(sb.images.size())) continue;
                for (const auto& ca : sa.images[da])
                    for (const auto& cb : sb.images[db])
                        if (S.degree_map(S.top(), S.multiply(da + 1, ca, db + 1, cb)) != 0)
                            out.pass = false;
            }
        }
    }
    return out;
}

GramCheck check_sign_preservation(const PhiAssembly& phi) {
    GramCheck out;
    const GradedRingModel& S = *phi.codomain;
    for (const auto& s : phi.summands) {
        if (s.type != SummandImages::Type::general) continue;
        ++out.pairs_checked;
        int topdom = s.basis.top();
        for (int da = 0; da <= topdom; ++da) {
            int db = topdom - da;
            const auto& ra = s.basis.refs(da);
            const auto& rb = s.basis.refs(db);
            for (size_t i = 0; i < ra.size(); ++i)
                for (size_t j = 0; j < rb.size(); ++j) {
                    mpq_class img = S.degree_map(
                        S.top(), S.multiply(da + 1, s.images[da][i], db + 1, s.images[db][j]));
                    if (img != -s.basis.pairing(ra[i], rb[j])) out.pass = false;
                }
        }
    }
    return out;
}

} // namespace chowlab
