#pragma once

#include <vector>

#include "chowlab/poly.hpp"
#include "chowlab/poset.hpp"

namespace chowlab {

/// Element of the incidence algebra J(P) over Z[x]: one polynomial per
/// comparable pair (s,t), product given by convolution
///   (a.b)_{s,t} = sum_{s <= u <= t} a_{s,u} b_{u,t}.
///
/// Membership in the subalgebra J_rk (deg of entry <= interval rank) is
/// required by rev() and by the named constructions below; it is checked
/// there, not on every store.
class IncidenceFunction {
  public:
    explicit IncidenceFunction(PosetPtr p);

    static IncidenceFunction identity(PosetPtr p);
    static IncidenceFunction zeta(PosetPtr p);

    const PosetPtr& poset() const { return p_; }

    IntPolynomial& at(int s, int t);
    const IntPolynomial& at(int s, int t) const;

    bool in_Jrk() const;

    bool operator==(const IncidenceFunction& o) const;
    bool operator!=(const IncidenceFunction& o) const { return !(*this == o); }

    IncidenceFunction& operator+=(const IncidenceFunction& o);
    IncidenceFunction& operator-=(const IncidenceFunction& o);
    friend IncidenceFunction operator+(IncidenceFunction a, const IncidenceFunction& b) {
        return a += b;
    }
    friend IncidenceFunction operator-(IncidenceFunction a, const IncidenceFunction& b) {
        return a -= b;
    }

    /// Entrywise product with a fixed polynomial (e.g. the shift by x).
    IncidenceFunction scaled(const IntPolynomial& c) const;

    bool all_nonneg() const;

  private:
    PosetPtr p_;
    std::vector<IntPolynomial> e_; // indexed by pair id
    friend IncidenceFunction inc_mul(const IncidenceFunction&, const IncidenceFunction&);
    friend IncidenceFunction inc_inverse(const IncidenceFunction&);
    friend IncidenceFunction rev(const IncidenceFunction&);
};

/// Convolution product; ArgumentError on poset mismatch.
IncidenceFunction inc_mul(const IncidenceFunction& a, const IncidenceFunction& b);
inline IncidenceFunction operator*(const IncidenceFunction& a, const IncidenceFunction& b) {
    return inc_mul(a, b);
}

/// Two-sided inverse by triangular back-substitution in interval-rank order.
/// Requires every diagonal entry to be the constant 1 or -1 (InversionError).
IncidenceFunction inc_inverse(const IncidenceFunction& a);

/// Entrywise palindromic reversal x^{rk(s,t)} a_{s,t}(1/x); DomainError if
/// the J_rk degree bound fails anywhere.
IncidenceFunction rev(const IncidenceFunction& a);

IncidenceFunction mobius(PosetPtr p);

/// chi = zeta^{-1} . rev(zeta); always a kernel of a weakly ranked poset.
IncidenceFunction characteristic(PosetPtr p);

/// Kernel test: k in J_rk, unit diagonal, k^{-1} == rev(k), all exact.
bool is_kernel(const IncidenceFunction& k);

/// Reduced kernel: entries k_{s,t}/(x-1) off the diagonal, -1 on it.
/// KernelError if a diagonal entry is not 1 or a quotient is inexact.
IncidenceFunction reduced_kernel(const IncidenceFunction& k);

/// Chow function H = -(reduced kernel)^{-1}.  Verifies is_kernel first.
IncidenceFunction chow_function(const IncidenceFunction& kernel);

/// Right KLS function f: f_{s,s} = 1, deg f_{s,t} < rk(s,t)/2 for s < t,
/// f^rev = kernel . f.  The strict degree bound is what makes f unique; the
/// solved entry is re-checked against the defining equation and a
/// TheoryError reports any interval where no such solution exists.
IncidenceFunction kls_right(const IncidenceFunction& kernel);

/// Left KLS function g: same bounds, g^rev = g . kernel.
IncidenceFunction kls_left(const IncidenceFunction& kernel);

/// Right augmented Chow function F = H . f^rev.
IncidenceFunction aug_chow_right(const IncidenceFunction& kernel);

/// Left augmented Chow function G = g^rev . H.
IncidenceFunction aug_chow_left(const IncidenceFunction& kernel);

/// Tensor product on a product poset built by product_poset(a.poset(), b.poset()):
/// entry at ((s1,s2),(t1,t2)) is a_{s1,t1} * b_{s2,t2}.
IncidenceFunction tensor(const PosetPtr& prod, const IncidenceFunction& a,
                         const IncidenceFunction& b);

} // namespace chowlab
