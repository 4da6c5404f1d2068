#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chowlab/linalg.hpp"
#include "chowlab/matroid.hpp"
#include "chowlab/poly.hpp"

namespace chowlab {

enum class RingKind { chow, augmented };

/// Monomial in the generators: weakly increasing list of variable ids.
/// Variables are flats, ordered by (rank, set-lex); a monomial with two
/// incomparable variables is zero by the incomparability relations, so only
/// chain-supported monomials are ever materialized.
using Monomial = std::vector<int>;

/// Explicit graded model of ch(M) (variables x_F for nonempty proper flats)
/// or ach(M) (variables x_F for all proper flats; the y_i are eliminated
/// through y_i = sum_{i not in F} x_F at build time).
///
/// Degree by degree the model stores the chain monomials, the echelon form of
/// the relation space, and the monomial quotient basis (non-pivot columns).
/// All coordinates are exact rationals.
class GradedRingModel {
  public:
    static GradedRingModel build(const Matroid& M, RingKind kind);

    const Matroid& matroid() const { return matroid_; }
    RingKind kind() const { return kind_; }
    int top() const { return top_; }

    int var_count() const { return static_cast<int>(vars_.size()); }
    Flat var_flat(int v) const { return vars_[v]; }
    int var_of_flat(Flat f) const; // -1 if f is not a generator flat
    bool vars_comparable(int v, int w) const { return comparable_[v * var_count() + w] != 0; }

    int dim(int k) const;
    IntPolynomial hilbert() const;

    /// Quotient basis of degree k, as monomials.
    const std::vector<Monomial>& basis(int k) const { return deg_[k].basis_mons; }

    /// Coordinates of a chain monomial in the degree-|m| quotient basis.
    const QVec& reduce_monomial(const Monomial& m) const;

    /// Bilinear multiplication on coordinate vectors; ArgumentError("degree
    /// overflow") when ka + kb exceeds the top degree.
    QVec multiply(int ka, const QVec& a, int kb, const QVec& b) const;

    /// Linear functional, zero off the top degree and 1 on every
    /// maximal-flag monomial (normalized on the lex-first maximal flag).
    mpq_class degree_map(int k, const QVec& a) const;

    /// Degree-by-degree test that the normalization is consistent: every
    /// monomial supporting the degree map evaluates to exactly 1.  For the
    /// augmented model this includes the monomials with y-factors.
    bool check_degree_normalization() const;

    /// Gram matrix of (a,b) -> deg(a*b) between degrees k and top-k.
    QMat poincare_matrix(int k) const;

    /// All maximal flags of the kind that support the degree map, as
    /// monomials (x-variables only).
    std::vector<Monomial> maximal_flag_monomials() const;

    /// Defining relations in the model's own variables.  Chow: the linear
    /// combinations L_0 - L_j as (var, coefficient) lists.  Augmented: the
    /// quadratic q_{i,F} = L_i x_F as (vars of L_i, F) pairs.
    std::vector<std::vector<std::pair<int, int>>> linear_generators() const;
    std::vector<std::pair<std::vector<int>, int>> quadratic_generators() const;
    std::vector<std::pair<int, int>> incomparable_pairs() const;

  private:
    Matroid matroid_;
    RingKind kind_ = RingKind::chow;
    int top_ = 0;

    std::vector<Flat> vars_;
    std::map<Flat, int> var_index_;
    std::vector<char> comparable_;

    struct DegreeData {
        std::vector<Monomial> mons;
        std::map<Monomial, int> mon_index;
        IntEchelon rel{0};
        std::vector<int> basis_ids;         // monomial ids forming the basis
        std::vector<Monomial> basis_mons;
        std::vector<int> basis_pos;         // monomial id -> basis position or -1
        mutable std::map<int, QVec> reduce_cache;
    };
    std::vector<DegreeData> deg_;

    mpq_class deg_scale_ = 0;

    int mon_id(int k, const Monomial& m) const;
    QVec reduce_by_id(int k, int id) const;
    Monomial lex_first_flag() const;
    void flag_dfs(int next_rank, int prev_var, Monomial& cur, std::vector<Monomial>& out,
                  bool only_first) const;
};

/// Homogeneous element: coordinates in the quotient basis of its degree.
struct RingElement {
    const GradedRingModel* model = nullptr;
    int degree = 0;
    QVec coords;

    static RingElement zero(const GradedRingModel& m, int k);
    static RingElement one(const GradedRingModel& m);

    bool is_zero() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    RingElement operator*(const RingElement& o) const;
    RingElement scaled(const mpq_class& c) const;
    mpq_class degree_map() const { return model->degree_map(degree, coords); }
};

/// Class of the generator x_f; ArgumentError if f is not a generator flat.
RingElement var_element(const GradedRingModel& m, Flat f);

/// Class of a product of generators (any chain-compatible multiset).
RingElement monomial_element(const GradedRingModel& m, const std::vector<Flat>& fs);

/// hilbert(model) as an operation name mirroring the module surface.
inline IntPolynomial hilbert(const GradedRingModel& m) { return m.hilbert(); }

/// Cache of built models keyed by (kind, matroid); models are immutable.
class ModelCache {
  public:
    const GradedRingModel& get(const Matroid& M, RingKind kind);

  private:
    std::map<std::pair<int, std::vector<Flat>>, std::unique_ptr<GradedRingModel>> cache_;
};

} // namespace chowlab
