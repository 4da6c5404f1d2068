#include "chowlab/ring_model.hpp"

#include <algorithm>
#include <bit>

namespace chowlab {

namespace {

constexpr size_t kMonomialCap = 200000;

Monomial merged_with(const Monomial& m, int v) {
    Monomial out = m;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return out;
}

} // namespace

int GradedRingModel::var_of_flat(Flat f) const {
    auto it = var_index_.find(f);
    return it == var_index_.end() ? -1 : it->second;
}

int GradedRingModel::mon_id(int k, const Monomial& m) const {
    auto it = deg_[k].mon_index.find(m);
    if (it == deg_[k].mon_index.end())
        throw ArgumentError("internal: monomial missing from chain enumeration");
    return it->second;
}

GradedRingModel GradedRingModel::build(const Matroid& M, RingKind kind) {
    if (M.rank() < 1)
        throw ArgumentError("build_model: Chow constructions need rank >= 1");
    GradedRingModel mod;
    mod.matroid_ = M;
    mod.kind_ = kind;
    mod.top_ = kind == RingKind::chow ? M.rank() - 1 : M.rank();

    // Generators: proper flats, without the empty one in the non-augmented case.
    for (size_t i = 0; i < M.flats.size(); ++i) {
        Flat f = M.flats[i];
        if (f == M.full()) continue;
        if (kind == RingKind::chow && f == 0) continue;
        mod.var_index_[f] = static_cast<int>(mod.vars_.size());
        mod.vars_.push_back(f);
    }
    int nv = mod.var_count();
    mod.comparable_.assign(static_cast<size_t>(nv) * nv, 0);
    for (int v = 0; v < nv; ++v)
        for (int w = 0; w < nv; ++w)
            if ((mod.vars_[v] & ~mod.vars_[w]) == 0 || (mod.vars_[w] & ~mod.vars_[v]) == 0)
                mod.comparable_[v * nv + w] = 1;

    // succ[v]: candidates that may follow v in a weakly increasing chain monomial.
    std::vector<std::vector<int>> succ(nv);
    for (int v = 0; v < nv; ++v)
        for (int w = v; w < nv; ++w)
            if ((mod.vars_[v] & ~mod.vars_[w]) == 0) succ[v].push_back(w);

    mod.deg_.resize(mod.top_ + 1);
    for (int k = 0; k <= mod.top_; ++k) {
        auto& D = mod.deg_[k];
        if (k == 0) {
            D.mons.push_back({});
        } else {
            for (const Monomial& m : mod.deg_[k - 1].mons) {
                if (m.empty()) {
                    for (int w = 0; w < nv; ++w) D.mons.push_back({w});
                } else {
                    for (int w : succ[m.back()]) D.mons.push_back(merged_with(m, w));
                }
            }
        }
        if (D.mons.size() > kMonomialCap)
            throw CapacityError("build_model: degree " + std::to_string(k) + " has " +
                                std::to_string(D.mons.size()) + " chain monomials");
        for (size_t i = 0; i < D.mons.size(); ++i) D.mon_index[D.mons[i]] = static_cast<int>(i);
        D.rel = IntEchelon(static_cast<int>(D.mons.size()));
    }

    auto compatible = [&](int v, const Monomial& m) {
        for (int w : m)
            if (!mod.comparable_[v * nv + w]) return false;
        return true;
    };

    if (kind == RingKind::chow) {
        for (int k = 1; k <= mod.top_; ++k) {
            auto& D = mod.deg_[k];
            for (const auto& g : mod.linear_generators())
                for (const Monomial& m : mod.deg_[k - 1].mons) {
                    SparseRowZ row;
                    for (auto [v, c] : g)
                        if (compatible(v, m))
                            row.emplace_back(mod.mon_id(k, merged_with(m, v)), c);
                    std::sort(row.begin(), row.end());
                    if (!row.empty()) D.rel.add_row(std::move(row));
                }
        }
    } else {
        for (int k = 2; k <= mod.top_; ++k) {
            auto& D = mod.deg_[k];
            for (const auto& [Lv, F] : mod.quadratic_generators())
                for (const Monomial& m : mod.deg_[k - 2].mons) {
                    if (!compatible(F, m)) continue;
                    Monomial mF = merged_with(m, F);
                    SparseRowZ row;
                    for (int v : Lv)
                        if (compatible(v, mF))
                            row.emplace_back(mod.mon_id(k, merged_with(mF, v)), 1);
                    std::sort(row.begin(), row.end());
                    if (!row.empty()) D.rel.add_row(std::move(row));
                }
        }
    }

    for (int k = 0; k <= mod.top_; ++k) {
        auto& D = mod.deg_[k];
        D.basis_pos.assign(D.mons.size(), -1);
        for (size_t i = 0; i < D.mons.size(); ++i)
            if (!D.rel.col_is_pivot(static_cast<int>(i))) {
                D.basis_pos[i] = static_cast<int>(D.basis_ids.size());
                D.basis_ids.push_back(static_cast<int>(i));
                D.basis_mons.push_back(D.mons[i]);
            }
    }
    if (mod.dim(mod.top_) != 1)
        throw ModelError("build_model: top degree is " + std::to_string(mod.dim(mod.top_)) +
                         "-dimensional, expected 1 (matroid-axiom bug)");

    // Normalize the degree map on the lex-first maximal flag monomial.
    Monomial flag = mod.lex_first_flag();
    const QVec& c = mod.reduce_monomial(flag);
    if (c[0] == 0) throw ModelError("build_model: lex-first maximal flag vanishes");
    mod.deg_scale_ = 1 / c[0];
    return mod;
}

int GradedRingModel::dim(int k) const {
    if (k < 0 || k > top_) return 0;
    return static_cast<int>(deg_[k].basis_ids.size());
}

IntPolynomial GradedRingModel::hilbert() const {
    std::vector<mpz_class> c;
    for (int k = 0; k <= top_; ++k) c.emplace_back(dim(k));
    return IntPolynomial(std::move(c));
}

QVec GradedRingModel::reduce_by_id(int k, int id) const {
    auto& cache = deg_[k].reduce_cache;
    auto it = cache.find(id);
    if (it != cache.end()) return it->second;
    QVec out(dim(k), mpq_class(0));
    if (deg_[k].basis_pos[id] >= 0) {
        out[deg_[k].basis_pos[id]] = 1;
    } else {
        SparseRowQ res = deg_[k].rel.reduce({{id, mpq_class(1)}});
        for (auto& [col, val] : res) out[deg_[k].basis_pos[col]] = val;
    }
    cache.emplace(id, out);
    return out;
}

const QVec& GradedRingModel::reduce_monomial(const Monomial& m) const {
    int k = static_cast<int>(m.size());
    if (k > top_) throw ArgumentError("reduce_monomial: degree overflow");
    int id = mon_id(k, m);
    reduce_by_id(k, id);
    return deg_[k].reduce_cache.at(id);
}

QVec GradedRingModel::multiply(int ka, const QVec& a, int kb, const QVec& b) const {
    if (ka + kb > top_) throw ArgumentError("multiply: degree overflow");
    int k = ka + kb;
    QVec out(dim(k), mpq_class(0));
    int nv = var_count();
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const Monomial& mu = deg_[ka].basis_mons[i];
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            const Monomial& nu = deg_[kb].basis_mons[j];
            bool ok = true;
            for (int v : mu) {
                for (int w : nu)
                    if (!comparable_[v * nv + w]) {
                        ok = false;
                        break;
                    }
                if (!ok) break;
            }
            if (!ok) continue;
            Monomial prod;
            prod.reserve(mu.size() + nu.size());
            std::merge(mu.begin(), mu.end(), nu.begin(), nu.end(), std::back_inserter(prod));
            const QVec& red = reduce_monomial(prod);
            mpq_class c = a[i] * b[j];
            for (size_t t = 0; t < out.size(); ++t)
                if (red[t] != 0) out[t] += c * red[t];
        }
    }
    return out;
}

mpq_class GradedRingModel::degree_map(int k, const QVec& a) const {
    if (k != top_) return 0;
    return a[0] * deg_scale_;
}

QMat GradedRingModel::poincare_matrix(int k) const {
    if (k < 0 || k > top_) throw ArgumentError("poincare_matrix: degree out of range");
    int l = top_ - k;
    QMat g(dim(k), QVec(dim(l), mpq_class(0)));
    for (int i = 0; i < dim(k); ++i) {
        QVec ei(dim(k), mpq_class(0));
        ei[i] = 1;
        for (int j = 0; j < dim(l); ++j) {
            QVec ej(dim(l), mpq_class(0));
            ej[j] = 1;
            g[i][j] = degree_map(top_, multiply(k, ei, l, ej));
        }
    }
    return g;
}

std::vector<std::vector<std::pair<int, int>>> GradedRingModel::linear_generators() const {
    std::vector<std::vector<std::pair<int, int>>> gens;
    if (kind_ != RingKind::chow) return gens;
    // L_0 - L_j with L_i = sum over generator flats avoiding i.
    for (int j = 1; j < matroid_.ground; ++j) {
        std::map<int, int> coef;
        for (int v = 0; v < var_count(); ++v) {
            if (!(vars_[v] >> 0 & 1)) coef[v] += 1;
            if (!(vars_[v] >> j & 1)) coef[v] -= 1;
        }
        std::vector<std::pair<int, int>> g;
        for (auto [v, c] : coef)
            if (c != 0) g.emplace_back(v, c);
        if (!g.empty()) gens.push_back(std::move(g));
    }
    return gens;
}

std::vector<std::pair<std::vector<int>, int>> GradedRingModel::quadratic_generators() const {
    std::vector<std::pair<std::vector<int>, int>> gens;
    if (kind_ != RingKind::augmented) return gens;
    std::vector<std::vector<int>> L(matroid_.ground);
    for (int i = 0; i < matroid_.ground; ++i)
        for (int v = 0; v < var_count(); ++v)
            if (!(vars_[v] >> i & 1)) L[i].push_back(v);
    for (int i = 0; i < matroid_.ground; ++i)
        for (int F = 0; F < var_count(); ++F)
            if (!(vars_[F] >> i & 1)) gens.emplace_back(L[i], F);
    return gens;
}

std::vector<std::pair<int, int>> GradedRingModel::incomparable_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < var_count(); ++v)
        for (int w = v + 1; w < var_count(); ++w)
            if (!vars_comparable(v, w)) out.emplace_back(v, w);
    return out;
}

void GradedRingModel::flag_dfs(int next_rank, int prev_var, Monomial& cur,
                               std::vector<Monomial>& out, bool only_first) const {
    if (next_rank > matroid_.rank() - 1) {
        out.push_back(cur);
        return;
    }
    Flat prev = prev_var < 0 ? Flat(0) : vars_[prev_var];
    for (int v = 0; v < var_count(); ++v) {
        if (only_first && !out.empty()) return;
        if (matroid_.rank_of(vars_[v]) != next_rank) continue;
        if ((prev & ~vars_[v]) != 0) continue;
        cur.push_back(v);
        flag_dfs(next_rank + 1, v, cur, out, only_first);
        cur.pop_back();
    }
}

Monomial GradedRingModel::lex_first_flag() const {
    std::vector<Monomial> out;
    Monomial cur;
    flag_dfs(kind_ == RingKind::chow ? 1 : 0, -1, cur, out, true);
    if (out.empty()) throw ModelError("no maximal flag found");
    return out.front();
}

std::vector<Monomial> GradedRingModel::maximal_flag_monomials() const {
    std::vector<Monomial> out;
    Monomial cur;
    flag_dfs(kind_ == RingKind::chow ? 1 : 0, -1, cur, out, false);
    return out;
}

bool GradedRingModel::check_degree_normalization() const {
    for (const Monomial& m : maximal_flag_monomials())
        if (degree_map(top_, reduce_monomial(m)) != 1) return false;
    if (kind_ == RingKind::chow) return true;

    // Augmented: monomials y_{i_1}...y_{i_k} x_{F_1}...x_{F_{d-k}} with the
    // flag saturated above rank k and I an independent k-subset of F_1, each
    // y_i expanded through y_i = L_i.
    int d = matroid_.rank();
    std::vector<RingElement> L;
    for (int i = 0; i < matroid_.ground; ++i) {
        RingElement e = RingElement::zero(*this, 1);
        for (int v = 0; v < var_count(); ++v)
            if (!(vars_[v] >> i & 1)) {
                QVec red = reduce_monomial({v});
                for (size_t t = 0; t < e.coords.size(); ++t) e.coords[t] += red[t];
            }
        L.push_back(std::move(e));
    }
    for (int k = 1; k <= d; ++k) {
        std::vector<Monomial> flags;
        if (k == d) {
            flags.push_back({});
        } else {
            // flags with ranks k..d-1
            Monomial cur;
            for (int v = 0; v < var_count(); ++v) {
                if (matroid_.rank_of(vars_[v]) != k) continue;
                cur.push_back(v);
                flag_dfs(k + 1, v, cur, flags, false);
                cur.pop_back();
            }
        }
        for (const Monomial& flag : flags) {
            Flat f1 = flag.empty() ? matroid_.full() : vars_[flag.front()];
            // all independent k-subsets of f1
            std::vector<int> elems;
            for (int i = 0; i < matroid_.ground; ++i)
                if (f1 >> i & 1) elems.push_back(i);
            std::vector<int> idx(k);
            for (int i = 0; i < k; ++i) idx[i] = i;
            if (static_cast<int>(elems.size()) < k) continue;
            while (true) {
                Flat I = 0;
                for (int i : idx) I |= Flat(1) << elems[i];
                if (matroid_.rank_of(matroid_.closure(I)) == k) {
                    RingElement prod = flag.empty()
                                           ? RingElement::one(*this)
                                           : RingElement{this, static_cast<int>(flag.size()),
                                                         reduce_monomial(flag)};
                    for (int i : idx) prod = prod * L[elems[i]];
                    if (prod.degree_map() != 1) return false;
                }
                int p = k - 1;
                while (p >= 0 && idx[p] == static_cast<int>(elems.size()) - k + p) --p;
                if (p < 0) break;
                ++idx[p];
                for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
            }
        }
    }
    return true;
}

RingElement RingElement::zero(const GradedRingModel& m, int k) {
    return {&m, k, QVec(m.dim(k), mpq_class(0))};
}

RingElement RingElement::one(const GradedRingModel& m) {
    RingElement e = zero(m, 0);
    e.coords[0] = 1;
    return e;
}

bool RingElement::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

RingElement& RingElement::operator+=(const RingElement& o) {
    if (model != o.model || degree != o.degree)
        throw ArgumentError("ring element sum: mismatched model or degree");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& o) {
    if (model != o.model || degree != o.degree)
        throw ArgumentError("ring element difference: mismatched model or degree");
    for (size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

RingElement RingElement::operator*(const RingElement& o) const {
    if (model != o.model) throw ArgumentError("ring element product: mismatched model");
    return {model, degree + o.degree, model->multiply(degree, coords, o.degree, o.coords)};
}

RingElement RingElement::scaled(const mpq_class& c) const {
    RingElement r = *this;
    for (auto& x : r.coords) x *= c;
    return r;
}

RingElement var_element(const GradedRingModel& m, Flat f) {
    int v = m.var_of_flat(f);
    if (v < 0) throw ArgumentError("var_element: " + flat_str(f) + " is not a generator flat");
    return {&m, 1, m.reduce_monomial({v})};
}

RingElement monomial_element(const GradedRingModel& m, const std::vector<Flat>& fs) {
    Monomial mon;
    for (Flat f : fs) {
        int v = m.var_of_flat(f);
        if (v < 0)
            throw ArgumentError("monomial_element: " + flat_str(f) + " is not a generator flat");
        mon.push_back(v);
    }
    std::sort(mon.begin(), mon.end());
    int nv = m.var_count();
    for (size_t i = 0; i < mon.size(); ++i)
        for (size_t j = i + 1; j < mon.size(); ++j)
            if (!m.vars_comparable(mon[i], mon[j]))
                return RingElement::zero(m, static_cast<int>(mon.size()));
    return {&m, static_cast<int>(mon.size()), m.reduce_monomial(mon)};
}

const GradedRingModel& ModelCache::get(const Matroid& M, RingKind kind) {
    std::pair<int, std::vector<Flat>> key{(kind == RingKind::chow ? 0 : 1) * 128 + M.ground,
                                          M.flats};
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(std::move(key),
                            std::make_unique<GradedRingModel>(GradedRingModel::build(M, kind)))
                 .first;
    return *it->second;
}

} // namespace chowlab
