#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "chowlab/errors.hpp"

namespace chowlab {

class WeaklyRankedPoset;
using PosetPtr = std::shared_ptr<const WeaklyRankedPoset>;

/// Finite poset with a weak rank function on intervals:
///   rk(s,s) = 0,  s < t  =>  rk(s,t) > 0,  rk(s,t) = rk(s,u) + rk(u,t).
///
/// Comparable pairs are indexed once at construction; all incidence-algebra
/// entries are stored per pair id.  The pair list is sorted by interval
/// rank (ties by (s,t)), which is the order triangular recursions run in.
class WeaklyRankedPoset {
  public:
    /// leq is a full n*n relation matrix (row-major), rank a parallel matrix
    /// of interval ranks (entries where !leq are ignored).  Validates the
    /// partial-order and weak-rank axioms.
    WeaklyRankedPoset(int n, std::vector<char> leq, std::vector<int> rank);

    int size() const { return n_; }
    bool leq(int s, int t) const { return leq_[s * n_ + t] != 0; }
    int rank(int s, int t) const;

    int pair_id(int s, int t) const { return pair_id_[s * n_ + t]; } // -1 if !leq
    int pair_count() const { return static_cast<int>(pairs_.size()); }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

    /// Elements u with s <= u <= t, ascending index; pid = pair_id(s,t).
    const std::vector<int>& interval(int pid) const { return intervals_[pid]; }

    int max_rank() const { return max_rank_; }

    /// Chain 0 < 1 < ... < length with unit cover ranks.
    static PosetPtr chain(int length);

  private:
    int n_;
    std::vector<char> leq_;
    std::vector<int> rank_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<int> pair_id_;
    std::vector<std::vector<int>> intervals_;
    int max_rank_ = 0;
};

/// Componentwise order and additive rank on the index set
/// {(i,j)} ~ i * p2->size() + j.
PosetPtr product_poset(const PosetPtr& p1, const PosetPtr& p2);

inline int product_index(const PosetPtr& p2, int i, int j) {
    return i * p2->size() + j;
}

} // namespace chowlab
