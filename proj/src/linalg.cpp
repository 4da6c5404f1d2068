#include "chowlab/linalg.hpp"

namespace chowlab {

namespace {

void normalize_content(SparseRowZ& r) {
    if (r.empty()) return;
    mpz_class g = 0;
    for (auto& [c, v] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    if (r.front().second < 0) g = -g;
    if (g != 1)
        for (auto& [c, v] : r) v /= g;
}

// r := b*r - a*p, merged by column; drops zeros.
SparseRowZ combine(const SparseRowZ& r, const mpz_class& b, const SparseRowZ& p,
                   const mpz_class& a) {
    SparseRowZ out;
    out.reserve(r.size() + p.size());
    size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, b * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -a * p[j].second);
            ++j;
        } else {
            mpz_class v = b * r[i].second - a * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

bool IntEchelon::add_row(SparseRowZ r) {
    normalize_content(r);
    while (!r.empty()) {
        auto it = rows_.find(r.front().first);
        if (it == rows_.end()) {
            rows_.emplace(r.front().first, std::move(r));
            return true;
        }
        const SparseRowZ& p = it->second;
        mpz_class a = r.front().second, b = p.front().second, g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        r = combine(r, b / g, p, a / g);
        normalize_content(r);
    }
    return false;
}

SparseRowQ IntEchelon::reduce(SparseRowQ v) const {
    SparseRowQ out;
    // Eliminating the smallest column only introduces larger ones, so one
    // ascending sweep with re-merging suffices.
    while (!v.empty()) {
        int c = v.front().first;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            out.push_back(v.front());
            v.erase(v.begin());
            continue;
        }
        mpq_class factor = v.front().second / mpq_class(it->second.front().second);
        SparseRowQ merged;
        size_t i = 1, j = 1; // both leading entries cancel exactly
        const SparseRowZ& p = it->second;
        while (i < v.size() || j < p.size()) {
            if (j == p.size() || (i < v.size() && v[i].first < p[j].first)) {
                merged.push_back(v[i]);
                ++i;
            } else if (i == v.size() || p[j].first < v[i].first) {
                merged.emplace_back(p[j].first, -factor * mpq_class(p[j].second));
                ++j;
            } else {
                mpq_class val = v[i].second - factor * mpq_class(p[j].second);
                if (val != 0) merged.emplace_back(v[i].first, std::move(val));
                ++i;
                ++j;
            }
        }
        v = std::move(merged);
    }
    return out;
}

int rank_of(QMat m) {
    int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            mpq_class f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

bool columns_contained(const QMat& base, const QMat& extra) {
    if (base.size() != extra.size()) return false;
    QMat joint(base.size());
    for (size_t r = 0; r < base.size(); ++r) {
        joint[r] = base[r];
        joint[r].insert(joint[r].end(), extra[r].begin(), extra[r].end());
    }
    return rank_of(joint) == rank_of(base);
}

} // namespace chowlab
