#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdecomp/abelian.hpp"
#include "symdecomp/spin_models.hpp"
#include "symdecomp/tensor.hpp"
#include "symdecomp/young.hpp"

namespace symdecomp {

/// One projector in a complete family, with its isomorphism-class id
/// (partition index for S_n, character index for Abelian groups).
struct FamilyRecord {
    std::string label;
    GroupAlgebraElement<Complex> element;
    int class_id = 0;
};

/// An ordered complete set of Hermitian GYS candidates.
struct GysFamily {
    GroupSpec group;
    std::vector<FamilyRecord> records;
    std::vector<std::string> class_labels;  // indexed by class_id

    int class_count() const { return static_cast<int>(class_labels.size()); }
};

/// KS family over all SYT of all partitions of n; classes = partitions.
GysFamily family_symmetric(int n);

/// Character family; singleton classes.
GysFamily family_abelian(const GroupSpec& spec);

/// Normalized classical symmetrizers (orthogonality fails for n >= 5);
/// kept as a demonstration escape hatch, not production.
GysFamily family_classical(int n);

GysFamily family_for(const GroupSpec& spec);

/// Max deviations for the four defining properties, materialized at (n, d).
struct VerificationReport {
    double completeness = 0;   // P1: || sum P_j - 1 ||
    double orthogonality = 0;  // P2: cross products and P_j^2 - P_j
    double primitivity = 0;    // P3: residual of P_j g P_j off span{P_j}
    double hermiticity = 0;    // P4: || P_j - P_j^dagger ||
    bool sampled_primitivity = false;

    bool passes(double tol = 1e-8) const {
        return completeness < tol && orthogonality < tol && primitivity < tol &&
               hermiticity < tol;
    }
};

VerificationReport verify_gys_family(const GysFamily& family, int d);

/// First r in enumeration order with ||P_k rho(r) P_j|| > 1e-8, if any.
std::optional<Permutation> find_linking_element(const GysFamily& family, int j, int k, int d);

/// Column-range bookkeeping of the assembled unitary.
struct BasisColumnRange {
    int class_id = 0;
    int record_index = 0;  // which P_j supplied the columns (copy index)
    int first = 0;         // first column
    int dim = 0;           // block dimension d (0 for empty images)
};

struct ChangeOfBasis {
    Matrix unitary;
    std::vector<BasisColumnRange> ranges;  // construction order
};

/// Basis of the first nonzero copy per class, transported to sibling copies
/// by P_k rho(r) P_j and re-unitarized by a polar correction.
ChangeOfBasis assemble_change_of_basis(const GysFamily& family, int d);

struct OperatorBlockReport {
    std::string label;
    double off_block = 0;          // leakage outside the block pattern
    double copy_mismatch = 0;      // max deviation across same-class copies
    std::vector<Matrix> class_blocks;  // one representative block per class
};

struct BlockReport {
    std::vector<BasisColumnRange> ranges;
    std::vector<OperatorBlockReport> operators;

    double max_off_block() const;
    double max_copy_mismatch() const;
};

/// U^dagger op U for every operator; asserts the block pattern (tolerance
/// 1e-8) and returns representative blocks. Throws on leakage above tol.
BlockReport transform_and_block_check(const ChangeOfBasis& u,
                                      const std::vector<std::pair<std::string, Matrix>>& ops,
                                      double tol = 1e-8);

/// Duality audit: within each class, every d x d sub-block of the
/// transformed rho(g) is proportional to the identity (Lambda (x) 1).
double duality_max_deviation(const ChangeOfBasis& u, const GroupSpec& spec, int n, int d);

struct LieClosureResult {
    int dimension = 0;
    std::vector<int> block_dimensions;       // per class with d > 0
    std::vector<bool> block_full_unitary;    // closure spans u(d) or su(d)
    int rounds = 0;
};

/// Real Lie-algebra closure under commutators, Gram-Schmidt over the inner
/// product Re tr(X^dagger Y); new directions admitted above 1e-8 relative
/// residual. Caps at 1000 rounds.
LieClosureResult lie_closure(const std::vector<Matrix>& generators);

/// Nullspace dimension of {X : X rho(g) = rho(g) X for all generators g}.
/// Guarded to d^n <= 64.
std::uint64_t commutant_nullspace_oracle(const GroupSpec& spec, int n, int d);

struct ControllabilityReport {
    GysFamily family;
    VerificationReport verification;
    ChangeOfBasis basis;
    BlockReport blocks;
    LieClosureResult closure;           // per-block closures
    LieClosureResult global_closure;    // joint closure of the full operators
};

/// End-to-end pipeline for a model: family -> verify -> basis -> blocks ->
/// per-block Lie closures and flags.
ControllabilityReport subspace_controllability_report(const SpinNetworkModel& model,
                                                      bool with_global_closure = true,
                                                      double block_tol = 1e-8);

}  // namespace symdecomp
