#include "chowlab/poset.hpp"

#include <algorithm>
#include <string>

namespace chowlab {

WeaklyRankedPoset::WeaklyRankedPoset(int n, std::vector<char> leq, std::vector<int> rank)
    : n_(n), leq_(std::move(leq)), rank_(std::move(rank)) {
    if (n <= 0) throw ArgumentError("poset: need at least one element");
    if (leq_.size() != static_cast<size_t>(n) * n || rank_.size() != leq_.size())
        throw ArgumentError("poset: relation matrices have wrong size");

    auto le = [&](int s, int t) { return leq_[s * n_ + t] != 0; };
    for (int s = 0; s < n_; ++s) {
        if (!le(s, s)) throw ValidationError("poset: order not reflexive at " + std::to_string(s));
        if (rank_[s * n_ + s] != 0)
            throw ValidationError("poset: rk(s,s) != 0 at " + std::to_string(s));
    }
    for (int s = 0; s < n_; ++s)
        for (int t = 0; t < n_; ++t) {
            if (!le(s, t)) continue;
            if (s != t && le(t, s))
                throw ValidationError("poset: antisymmetry fails at (" + std::to_string(s) + "," +
                                      std::to_string(t) + ")");
            if (s != t && rank_[s * n_ + t] <= 0)
                throw ValidationError("poset: rk(s,t) <= 0 on strict pair (" + std::to_string(s) +
                                      "," + std::to_string(t) + ")");
        }
    for (int s = 0; s < n_; ++s)
        for (int u = 0; u < n_; ++u) {
            if (!le(s, u)) continue;
            for (int t = 0; t < n_; ++t) {
                if (!le(u, t)) continue;
                if (!le(s, t))
                    throw ValidationError("poset: transitivity fails at (" + std::to_string(s) +
                                          "," + std::to_string(u) + "," + std::to_string(t) + ")");
                if (rank_[s * n_ + t] != rank_[s * n_ + u] + rank_[u * n_ + t])
                    throw ValidationError("poset: rank not additive on (" + std::to_string(s) +
                                          "," + std::to_string(u) + "," + std::to_string(t) + ")");
            }
        }

    pair_id_.assign(static_cast<size_t>(n_) * n_, -1);
    for (int s = 0; s < n_; ++s)
        for (int t = 0; t < n_; ++t)
            if (le(s, t)) pairs_.emplace_back(s, t);
    std::sort(pairs_.begin(), pairs_.end(), [&](const auto& a, const auto& b) {
        int ra = rank_[a.first * n_ + a.second], rb = rank_[b.first * n_ + b.second];
        if (ra != rb) return ra < rb;
        return a < b;
    });
    intervals_.resize(pairs_.size());
    for (size_t pid = 0; pid < pairs_.size(); ++pid) {
        auto [s, t] = pairs_[pid];
        pair_id_[s * n_ + t] = static_cast<int>(pid);
        for (int u = 0; u < n_; ++u)
            if (le(s, u) && le(u, t)) intervals_[pid].push_back(u);
        max_rank_ = std::max(max_rank_, rank_[s * n_ + t]);
    }
}

int WeaklyRankedPoset::rank(int s, int t) const {
    if (!leq(s, t))
        throw ArgumentError("poset: rank requested on incomparable pair (" + std::to_string(s) +
                            "," + std::to_string(t) + ")");
    return rank_[s * n_ + t];
}

PosetPtr WeaklyRankedPoset::chain(int length) {
    int n = length + 1;
    std::vector<char> leq(n * n, 0);
    std::vector<int> rank(n * n, 0);
    for (int s = 0; s < n; ++s)
        for (int t = s; t < n; ++t) {
            leq[s * n + t] = 1;
            rank[s * n + t] = t - s;
        }
    return std::make_shared<WeaklyRankedPoset>(n, std::move(leq), std::move(rank));
}

PosetPtr product_poset(const PosetPtr& p1, const PosetPtr& p2) {
    int n1 = p1->size(), n2 = p2->size(), n = n1 * n2;
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    std::vector<int> rank(static_cast<size_t>(n) * n, 0);
    for (int s1 = 0; s1 < n1; ++s1)
        for (int s2 = 0; s2 < n2; ++s2)
            for (int t1 = 0; t1 < n1; ++t1)
                for (int t2 = 0; t2 < n2; ++t2) {
                    if (!p1->leq(s1, t1) || !p2->leq(s2, t2)) continue;
                    int s = s1 * n2 + s2, t = t1 * n2 + t2;
                    leq[s * n + t] = 1;
                    rank[s * n + t] = p1->rank(s1, t1) + p2->rank(s2, t2);
                }
    return std::make_shared<WeaklyRankedPoset>(n, std::move(leq), std::move(rank));
}

} // namespace chowlab
