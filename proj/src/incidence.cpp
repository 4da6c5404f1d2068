#include "chowlab/incidence.hpp"

#include <string>

namespace chowlab {

namespace {

void require_same_poset(const IncidenceFunction& a, const IncidenceFunction& b,
                        const char* what) {
    if (a.poset() != b.poset())
        throw ArgumentError(std::string(what) + ": operands live on different posets");
}

std::string pair_str(int s, int t) {
    return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

} // namespace

IncidenceFunction::IncidenceFunction(PosetPtr p) : p_(std::move(p)) {
    if (!p_) throw ArgumentError("incidence function: null poset");
    e_.resize(p_->pair_count());
}

IncidenceFunction IncidenceFunction::identity(PosetPtr p) {
    IncidenceFunction a(std::move(p));
    for (int s = 0; s < a.p_->size(); ++s) a.at(s, s) = IntPolynomial::one();
    return a;
}

IncidenceFunction IncidenceFunction::zeta(PosetPtr p) {
    IncidenceFunction a(std::move(p));
    for (auto& e : a.e_) e = IntPolynomial::one();
    return a;
}

IntPolynomial& IncidenceFunction::at(int s, int t) {
    int pid = p_->pair_id(s, t);
    if (pid < 0) throw ArgumentError("incidence entry on incomparable pair " + pair_str(s, t));
    return e_[pid];
}

const IntPolynomial& IncidenceFunction::at(int s, int t) const {
    int pid = p_->pair_id(s, t);
    if (pid < 0) throw ArgumentError("incidence entry on incomparable pair " + pair_str(s, t));
    return e_[pid];
}

bool IncidenceFunction::in_Jrk() const {
    for (int pid = 0; pid < p_->pair_count(); ++pid) {
        auto [s, t] = p_->pairs()[pid];
        if (e_[pid].degree() > p_->rank(s, t)) return false;
    }
    return true;
}

bool IncidenceFunction::operator==(const IncidenceFunction& o) const {
    return p_ == o.p_ && e_ == o.e_;
}

IncidenceFunction& IncidenceFunction::operator+=(const IncidenceFunction& o) {
    require_same_poset(*this, o, "incidence sum");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

IncidenceFunction& IncidenceFunction::operator-=(const IncidenceFunction& o) {
    require_same_poset(*this, o, "incidence difference");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

IncidenceFunction IncidenceFunction::scaled(const IntPolynomial& c) const {
    IncidenceFunction r(p_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

bool IncidenceFunction::all_nonneg() const {
    for (const auto& e : e_)
        if (!e.nonneg_coeffs()) return false;
    return true;
}

IncidenceFunction inc_mul(const IncidenceFunction& a, const IncidenceFunction& b) {
    require_same_poset(a, b, "inc_mul");
    const auto& P = *a.poset();
    IncidenceFunction c(a.poset());
    for (int pid = 0; pid < P.pair_count(); ++pid) {
        auto [s, t] = P.pairs()[pid];
        IntPolynomial acc;
        for (int u : P.interval(pid)) acc += a.at(s, u) * b.at(u, t);
        c.e_[pid] = std::move(acc);
    }
    return c;
}

IncidenceFunction inc_inverse(const IncidenceFunction& a) {
    const auto& P = *a.poset();
    for (int s = 0; s < P.size(); ++s) {
        const IntPolynomial& d = a.at(s, s);
        if (d != IntPolynomial::one() && d != IntPolynomial(-1))
            throw InversionError("inc_inverse: diagonal entry at " + std::to_string(s) +
                                 " is " + d.str() + ", not a unit");
    }
    IncidenceFunction b(a.poset());
    // Pairs come sorted by interval rank, so b_{u,t} for s < u is ready when
    // (s,t) is processed.
    for (int pid = 0; pid < P.pair_count(); ++pid) {
        auto [s, t] = P.pairs()[pid];
        if (s == t) {
            b.e_[pid] = a.at(s, s); // its own inverse, being +-1
            continue;
        }
        IntPolynomial acc;
        for (int u : P.interval(pid))
            if (u != s) acc += a.at(s, u) * b.at(u, t);
        b.e_[pid] = -(a.at(s, s) * acc);
    }
    return b;
}

IncidenceFunction rev(const IncidenceFunction& a) {
    const auto& P = *a.poset();
    IncidenceFunction r(a.poset());
    for (int pid = 0; pid < P.pair_count(); ++pid) {
        auto [s, t] = P.pairs()[pid];
        r.e_[pid] = a.e_[pid].reversed(P.rank(s, t));
    }
    return r;
}

IncidenceFunction mobius(PosetPtr p) {
    return inc_inverse(IncidenceFunction::zeta(std::move(p)));
}

IncidenceFunction characteristic(PosetPtr p) {
    IncidenceFunction z = IncidenceFunction::zeta(p);
    return inc_mul(inc_inverse(z), rev(z));
}

bool is_kernel(const IncidenceFunction& k) {
    if (!k.in_Jrk()) return false;
    const auto& P = *k.poset();
    for (int s = 0; s < P.size(); ++s)
        if (k.at(s, s) != IntPolynomial::one()) return false;
    return inc_inverse(k) == rev(k);
}

IncidenceFunction reduced_kernel(const IncidenceFunction& k) {
    const auto& P = *k.poset();
    IncidenceFunction r(k.poset());
    for (int pid = 0; pid < P.pair_count(); ++pid) {
        auto [s, t] = P.pairs()[pid];
        if (s == t) {
            if (k.at(s, s) != IntPolynomial::one())
                throw KernelError("reduced_kernel: diagonal entry at " + std::to_string(s) +
                                  " is not 1");
            r.at(s, s) = IntPolynomial(-1);
        } else {
            try {
                r.at(s, t) = k.at(s, t).div_x_minus_one();
            } catch (const DomainError&) {
                throw KernelError("reduced_kernel: entry at " + pair_str(s, t) +
                                  " is not divisible by x-1");
            }
        }
    }
    return r;
}

IncidenceFunction chow_function(const IncidenceFunction& kernel) {
    if (!is_kernel(kernel)) throw DomainError("chow_function: argument is not a kernel");
    IncidenceFunction H = inc_inverse(reduced_kernel(kernel));
    for (int pid = 0; pid < kernel.poset()->pair_count(); ++pid) {
        auto [s, t] = kernel.poset()->pairs()[pid];
        H.at(s, t) = -H.at(s, t);
    }
    return H;
}

namespace {

// Shared KLS solver.  For each strict interval of rank r the defining
// equation reduces to  x^r q(1/x) - q = R  with deg q < r/2, where R collects
// the already-known lower terms.  The upper half of R determines q; the full
// equation is then re-checked, catching both inconsistent lower halves and a
// nonzero coefficient at r/2.
IncidenceFunction kls_solve(const IncidenceFunction& kernel, bool right) {
    if (!is_kernel(kernel)) throw DomainError("kls: argument is not a kernel");
    const auto& P = *kernel.poset();
    IncidenceFunction f(kernel.poset());
    for (int s = 0; s < P.size(); ++s) f.at(s, s) = IntPolynomial::one();
    for (int pid = 0; pid < P.pair_count(); ++pid) {
        auto [s, t] = P.pairs()[pid];
        if (s == t) continue;
        int r = P.rank(s, t);
        IntPolynomial R;
        for (int u : P.interval(pid)) {
            if (right && u != s) R += kernel.at(s, u) * f.at(u, t);
            if (!right && u != t) R += f.at(s, u) * kernel.at(u, t);
        }
        std::vector<mpz_class> q;
        for (int k = 0; 2 * k < r; ++k) q.push_back(R.coeff(r - k));
        IntPolynomial cand{std::move(q)};
        if (cand.reversed(r) - cand != R)
            throw TheoryError("kls: no solution with deg < rk/2 on interval " + pair_str(s, t));
        f.at(s, t) = std::move(cand);
    }
    return f;
}

} // namespace

IncidenceFunction kls_right(const IncidenceFunction& kernel) { return kls_solve(kernel, true); }

IncidenceFunction kls_left(const IncidenceFunction& kernel) { return kls_solve(kernel, false); }

IncidenceFunction aug_chow_right(const IncidenceFunction& kernel) {
    return inc_mul(chow_function(kernel), rev(kls_right(kernel)));
}

IncidenceFunction aug_chow_left(const IncidenceFunction& kernel) {
    return inc_mul(rev(kls_left(kernel)), chow_function(kernel));
}

IncidenceFunction tensor(const PosetPtr& prod, const IncidenceFunction& a,
                         const IncidenceFunction& b) {
    const auto& P1 = *a.poset();
    const auto& P2 = *b.poset();
    if (prod->size() != P1.size() * P2.size())
        throw ArgumentError("tensor: poset is not the product of the operand posets");
    IncidenceFunction c(prod);
    for (int pid = 0; pid < P1.pair_count(); ++pid) {
        auto [s1, t1] = P1.pairs()[pid];
        for (int qid = 0; qid < P2.pair_count(); ++qid) {
            auto [s2, t2] = P2.pairs()[qid];
            c.at(product_index(b.poset(), s1, s2), product_index(b.poset(), t1, t2)) =
                a.at(s1, t1) * b.at(s2, t2);
        }
    }
    return c;
}

} // namespace chowlab
