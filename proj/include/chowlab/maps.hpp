#pragma once

#include <string>
#include <vector>

#include "chowlab/ring_model.hpp"

namespace chowlab {

/// Graded basis of a tensor product of 2 or 3 models.  Basis elements of the
/// degree-k piece enumerate factor-degree splits lexicographically and then
/// factor basis indices lexicographically.
class TensorBasis {
  public:
    explicit TensorBasis(std::vector<const GradedRingModel*> parts);

    struct Ref {
        std::vector<int> degs;
        std::vector<int> idx;
    };

    const std::vector<const GradedRingModel*>& parts() const { return parts_; }
    int top() const { return top_; }
    int dim(int k) const;
    const std::vector<Ref>& refs(int k) const { return refs_[k]; }

    /// Poincare pairing of the tensor ring: product of the factor pairings;
    /// nonzero only when the degrees are complementary factor by factor.
    mpq_class pairing(const Ref& a, const Ref& b) const;

  private:
    std::vector<const GradedRingModel*> parts_;
    int top_;
    std::vector<std::vector<Ref>> refs_;
};

/// Degree-preserving-up-to-shift linear map: block matrix per domain degree.
/// cols(k) lists the codomain coordinate vectors of the domain degree-k basis
/// images, living in codomain degree k + shift.
struct GradedLinearMap {
    int shift = 0;
    std::vector<std::vector<QVec>> cols; // [domain degree][column]
};

/// iota_{M,N}: ch(M) (x) ch(N) -> ch(M (+) N) sending x_F (x) 1 to
/// sum_{G'} x_{F u G'} and 1 (x) x_G to sum_{F'} x_{F' u G}; same formula for
/// the augmented variant.  The defining relations of both factors are checked
/// to map to zero (TheoryError otherwise), which makes the linear extension a
/// ring homomorphism.
GradedLinearMap iota(const GradedRingModel& A, const GradedRingModel& B,
                     const GradedRingModel& S);

/// Pushforward psi^E: ch(S_E) (x) ch(S^E) -> ch(S) (augmented: the last two
/// become ach) defined on monomials by prefixing x_E and lifting variables
/// along the minor relabelings.  C and R must be the models of the
/// contraction and restriction minors of S.matroid() at E.  Checks that the
/// map kills the domain relation space (TheoryError).
GradedLinearMap psi_pushforward(const GradedRingModel& S, Flat E, const GradedRingModel& C,
                                const GradedRingModel& R);

/// Element of ch(A) (x) ch(B), one coordinate block per degree split.
struct Tensor2 {
    const GradedRingModel* A = nullptr;
    const GradedRingModel* B = nullptr;
    int degree = 0;
    std::vector<QVec> blocks; // blocks[k1][i * dimB(degree-k1) + j]

    static Tensor2 zero(const GradedRingModel& A, const GradedRingModel& B, int degree);
    static Tensor2 one(const GradedRingModel& A, const GradedRingModel& B);
    bool is_zero() const;
    Tensor2& operator+=(const Tensor2& o);
    Tensor2& operator-=(const Tensor2& o);
    Tensor2 operator*(const Tensor2& o) const;
    Tensor2 scaled(const mpq_class& c) const;
    QVec flattened() const; // TensorBasis({A,B}) coordinate order
};

/// Pullback phi^E: ch(S) -> ch(S_E) (x) ch(S^E) on generators: comparables
/// restrict to the matching factor variable, incomparables to zero, and x_E
/// itself to the first-Chern-class expression quoted for the star inclusion.
/// Chow kind only.
GradedLinearMap phi_pullback(const GradedRingModel& S, Flat E, const GradedRingModel& C,
                             const GradedRingModel& R);

enum class PhiVariant { thm1, thm2, aug };

struct DegreeReport {
    int degree = 0;
    int dom_dim = 0;
    int cod_dim = 0;
    int rank = 0;
};

struct AssembleReport {
    std::string instance;
    std::vector<DegreeReport> degrees;
    bool full_rank = false;     // rank == codomain dimension in every degree
    bool hilbert_equal = false; // domain dimension == codomain dimension everywhere
    bool pass() const { return full_rank && hilbert_equal; }
};

/// One summand of the assembled decomposition map, with its images.
struct SummandImages {
    enum class Type { iota_block, corner, general };
    Type type = Type::general;
    Flat F = 0, G = 0; // flats of M and N (general/corner summands)
    int shift = 0;
    TensorBasis basis;
    std::vector<std::vector<QVec>> images; // [domain degree][column]
};

struct PhiAssembly {
    PhiVariant variant = PhiVariant::thm1;
    const GradedRingModel* codomain = nullptr;
    Matroid M, N;
    std::vector<SummandImages> summands;

    AssembleReport report(const std::string& instance) const;
};

/// Build every summand map of the Theorem-1/Theorem-2/augmented decomposition
/// of ch(M (+) N) resp. ach(M (+) N) and record the image columns.
PhiAssembly build_phi(const Matroid& M, const Matroid& N, PhiVariant variant, ModelCache& cache);

/// Per-degree domain dim / codomain dim / rank of the assembled map.
AssembleReport assemble_phi(const Matroid& M, const Matroid& N, PhiVariant variant,
                            ModelCache& cache, const std::string& instance = "");

struct GramCheck {
    int pairs_checked = 0;
    bool pass = true;
};

/// Poincare orthogonality of the images of distinct general summands whose
/// flats satisfy the lemma hypotheses (both unions proper, neither containing
/// the other).
GramCheck check_orthogonality(const PhiAssembly& phi);

/// Each general summand embeds with its Poincare pairing negated: the Gram
/// matrix of the images equals -1 times the domain Gram matrix.
GramCheck check_sign_preservation(const PhiAssembly& phi);

} // namespace chowlab
