#pragma once

#include <string>
#include <vector>

#include "chowlab/incidence.hpp"
#include "chowlab/maps.hpp"
#include "chowlab/matroid.hpp"

namespace chowlab {

/// Outcome of one machine-checked identity.  pass holds exactly when the
/// compared values are equal (no tolerances anywhere).
struct VerificationReport {
    std::string name;
    std::string instance;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    double millis = 0.0;
};

/// Eulerian polynomial A_n(x) by descent counting over all permutations of
/// [n]; A_0 = 1.  Capacity error for n > 10.
IntPolynomial eulerian(int n);

/// H(M+N) = H(M) H(N) + x sum_{F,G nonempty} H(M_F + N_G) H(M^F) H(N^G).
VerificationReport check_thm1_hilbert(const Matroid& M, const Matroid& N,
                                      const std::string& instance = "");

/// H(M+N) = H(M) H(N) + x sum_{F,G proper} H(M^F + N^G) H(M_F) H(N_G).
VerificationReport check_thm2_hilbert(const Matroid& M, const Matroid& N,
                                      const std::string& instance = "");

/// G(M+N) = G(M) G(N) + x sum_{F,G proper} G(M^F + N^G) H(M_F) H(N_G).
VerificationReport check_aug_hilbert(const Matroid& M, const Matroid& N,
                                     const std::string& instance = "");

/// Flag-sum decomposition: H(M+N) = sum_k x^k (sum over length-k flag pairs
/// of the products of interval Chow polynomials).
VerificationReport check_corirred(const Matroid& M, const Matroid& N,
                                  const std::string& instance = "");

/// A_{n+m} = A_n A_m + x sum_{0<r<=n,0<s<=m} C(n,r) C(m,s) A_r A_s A_{n+m-r-s}.
VerificationReport check_euler_recursion(int n, int m);

/// eulerian(n) by descent counting equals the Chow polynomial of the boolean
/// lattice (two independent computations).
VerificationReport check_euler_hilbert(int n);

/// Both coloop decompositions (Chow and augmented) as Hilbert identities,
/// using minors of M \ i.  ArgumentError if i is not a coloop.
VerificationReport check_coloop_decomposition(const Matroid& M, int i,
                                              const std::string& instance = "");

/// Full-rank-per-degree plus Hilbert equality of the assembled map.
VerificationReport check_explicit(const Matroid& M, const Matroid& N, PhiVariant variant,
                                  ModelCache& cache, const std::string& instance = "");

/// The incidence-function identities on the product of the two lattices of
/// flats: the reduced-kernel recursion, both Chow-function relations, both
/// augmented relations, the tensor-kernel property and the tensor-KLS
/// property.  One report per identity.
std::vector<VerificationReport> check_product_identities(const Matroid& M, const Matroid& N,
                                                         const std::string& instance = "");

struct CorpusEntry {
    std::string name;
    Matroid matroid;
};

/// B_1..B_4, U_{1,2}, U_{2,3}, U_{2,4}, U_{3,4}.
std::vector<CorpusEntry> default_corpus();

struct SuiteOptions {
    int hilbert_rank_bound = 6;  // rank(M)+rank(N) bound for Hilbert identities
    int explicit_rank_bound = 4; // bound for explicit-map verification
    int euler_sum_bound = 8;     // n+m bound for the Eulerian recursion
};

/// Run one named suite (thm1, thm2, aug, corirred, euler, coloop, explicit,
/// all) over a corpus; reports come back in deterministic order.
std::vector<VerificationReport> run_suite(const std::string& suite,
                                          const std::vector<CorpusEntry>& corpus,
                                          const SuiteOptions& opts);

} // namespace chowlab
