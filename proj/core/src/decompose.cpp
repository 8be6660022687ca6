#include "symdecomp/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace symdecomp {

namespace {

constexpr double kAssemblyTol = 1e-9;
constexpr double kBlockTol = 1e-8;
constexpr int kPrimitivityExhaustive = 5040;
constexpr unsigned kPrimitivitySeed = 0x5EED;

std::string tableau_label(const YoungTableau& t) {
    std::ostringstream out;
    out << t.shape().to_string() << " [";
    auto w = t.row_word();
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out << ' ';
        out << w[i];
    }
    out << ']';
    return out.str();
}

std::string character_label(const Character& chi) {
    std::ostringstream out;
    out << "chi(";
    for (size_t i = 0; i < chi.label.size(); ++i) {
        if (i) out << ',';
        out << chi.label[i];
    }
    out << ')';
    return out.str();
}

}  // namespace

GysFamily family_symmetric(int n) {
    GysFamily fam{GroupSpec::symmetric(n), {}, {}};
    auto parts = partitions(n);
    for (int c = 0; c < static_cast<int>(parts.size()); ++c) {
        fam.class_labels.push_back(parts[c].to_string());
        for (const auto& t : standard_tableaux(parts[c])) {
            auto rec = ks_symmetrizer(t);
            fam.records.push_back({tableau_label(t), ga_to_complex(rec.element), c});
        }
    }
    return fam;
}

GysFamily family_classical(int n) {
    GysFamily fam{GroupSpec::symmetric(n), {}, {}};
    auto parts = partitions(n);
    for (int c = 0; c < static_cast<int>(parts.size()); ++c) {
        fam.class_labels.push_back(parts[c].to_string());
        for (const auto& t : standard_tableaux(parts[c])) {
            auto [p, lambda] = normalize_idempotent(classical_symmetrizer(t));
            fam.records.push_back({tableau_label(t) + " classical", ga_to_complex(p), c});
        }
    }
    return fam;
}

GysFamily family_abelian(const GroupSpec& spec) {
    GysFamily fam{spec, {}, {}};
    auto records = gys_family_abelian(spec);
    for (int c = 0; c < static_cast<int>(records.size()); ++c) {
        fam.class_labels.push_back(character_label(records[c].character));
        fam.records.push_back({character_label(records[c].character),
                               records[c].element, c});
    }
    return fam;
}

GysFamily family_for(const GroupSpec& spec) {
    if (spec.kind == GroupSpec::Kind::Symmetric) return family_symmetric(spec.degree);
    return family_abelian(spec);
}

VerificationReport verify_gys_family(const GysFamily& family, int d) {
    int n = family.group.degree;
    std::int64_t dim = tensor_dimension(n, d);
    std::vector<Matrix> ps;
    ps.reserve(family.records.size());
    for (const auto& rec : family.records) ps.push_back(materialize(rec.element, d));

    VerificationReport rep;
    Matrix sum = Matrix::Zero(dim, dim);
    for (const auto& p : ps) sum += p;
    rep.completeness = (sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();

    for (size_t j = 0; j < ps.size(); ++j) {
        rep.orthogonality = std::max(rep.orthogonality,
                                     (ps[j] * ps[j] - ps[j]).cwiseAbs().maxCoeff());
        rep.hermiticity = std::max(rep.hermiticity,
                                   (ps[j] - ps[j].adjoint()).cwiseAbs().maxCoeff());
        for (size_t k = 0; k < ps.size(); ++k)
            if (k != j)
                rep.orthogonality = std::max(rep.orthogonality,
                                             (ps[j] * ps[k]).cwiseAbs().maxCoeff());
    }

    auto elems = enumerate_group(family.group);
    std::vector<Permutation> sample;
    if (elems.size() <= kPrimitivityExhaustive) {
        sample = elems;
    } else {
        rep.sampled_primitivity = true;
        std::mt19937 rng(kPrimitivitySeed);
        std::uniform_int_distribution<size_t> pick(0, elems.size() - 1);
        for (int i = 0; i < 200; ++i) sample.push_back(elems[pick(rng)]);
    }
    for (size_t j = 0; j < ps.size(); ++j) {
        double pnorm2 = ps[j].squaredNorm();
        if (pnorm2 < 1e-16) continue;
        for (const auto& g : sample) {
            Matrix m = ps[j] * perm_action_operator(g, n, d) * ps[j];
            Complex lambda = (ps[j].adjoint() * m).trace() / pnorm2;
            rep.primitivity = std::max(rep.primitivity,
                                       (m - lambda * ps[j]).cwiseAbs().maxCoeff());
        }
    }
    return rep;
}

std::optional<Permutation> find_linking_element(const GysFamily& family, int j, int k, int d) {
    int n = family.group.degree;
    Matrix pj = materialize(family.records[j].element, d);
    Matrix pk = materialize(family.records[k].element, d);
    for (const auto& r : enumerate_group(family.group)) {
        Matrix link = pk * perm_action_operator(r, n, d) * pj;
        if (link.cwiseAbs().maxCoeff() > kBlockTol) return r;
    }
    return std::nullopt;
}

namespace {

/// Polar correction: nearest matrix with orthonormal columns (U V^dagger
/// from the thin SVD). Transported frames are orthogonal in exact
/// arithmetic; this removes the float drift without mixing the columns'
/// block structure.
Matrix polar_orthonormalize(const Matrix& frame) {
    Eigen::JacobiSVD<Matrix> svd(frame, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.singularValues().minCoeff() < 1e-8)
        throw std::runtime_error("assemble_change_of_basis: transported frame is rank-deficient");
    return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace

ChangeOfBasis assemble_change_of_basis(const GysFamily& family, int d) {
    int n = family.group.degree;
    std::int64_t dim = tensor_dimension(n, d);
    ChangeOfBasis result;
    result.unitary = Matrix::Zero(dim, dim);
    int col = 0;

    for (int c = 0; c < family.class_count(); ++c) {
        // First member of the class with a nonzero image anchors the basis.
        int anchor = -1;
        std::vector<Vector> anchor_basis;
        for (int j = 0; j < static_cast<int>(family.records.size()); ++j) {
            if (family.records[j].class_id != c) continue;
            if (anchor < 0) {
                anchor_basis = projector_image_basis(family.records[j].element, n, d);
                if (anchor_basis.empty()) {
                    result.ranges.push_back({c, j, col, 0});
                    continue;
                }
                anchor = j;
                int bd = static_cast<int>(anchor_basis.size());
                for (int i = 0; i < bd; ++i) result.unitary.col(col + i) = anchor_basis[i];
                result.ranges.push_back({c, j, col, bd});
                col += bd;
            } else {
                auto r = find_linking_element(family, anchor, j, d);
                if (!r)
                    throw std::runtime_error(
                        "assemble_change_of_basis: no linking element within a class");
                Matrix pj = materialize(family.records[j].element, d);
                Matrix transport = pj * perm_action_operator(*r, n, d);
                int bd = static_cast<int>(anchor_basis.size());
                Matrix frame(dim, bd);
                for (int i = 0; i < bd; ++i) frame.col(i) = transport * anchor_basis[i];
                frame = polar_orthonormalize(frame);
                for (int i = 0; i < bd; ++i) result.unitary.col(col + i) = frame.col(i);
                result.ranges.push_back({c, j, col, bd});
                col += bd;
            }
        }
    }
    if (col != dim)
        throw std::runtime_error("assemble_change_of_basis: images do not fill the space");
    double unitarity = (result.unitary.adjoint() * result.unitary -
                        Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (unitarity > kAssemblyTol)
        throw std::runtime_error("assemble_change_of_basis: result is not unitary");
    return result;
}

double BlockReport::max_off_block() const {
    double m = 0;
    for (const auto& op : operators) m = std::max(m, op.off_block);
    return m;
}

double BlockReport::max_copy_mismatch() const {
    double m = 0;
    for (const auto& op : operators) m = std::max(m, op.copy_mismatch);
    return m;
}

BlockReport transform_and_block_check(const ChangeOfBasis& u,
                                      const std::vector<std::pair<std::string, Matrix>>& ops,
                                      double tol) {
    BlockReport report;
    report.ranges = u.ranges;
    for (const auto& [label, op] : ops) {
        Matrix t = u.unitary.adjoint() * op * u.unitary;
        OperatorBlockReport entry;
        entry.label = label;

        // Leakage outside the diagonal block pattern.
        Matrix mask = t;
        for (const auto& r : u.ranges)
            mask.block(r.first, r.first, r.dim, r.dim).setZero();
        entry.off_block = mask.size() ? mask.cwiseAbs().maxCoeff() : 0.0;

        // Copies within a class must carry equal matrices.
        std::map<int, Matrix> representative;
        for (const auto& r : u.ranges) {
            if (r.dim == 0) continue;
            Matrix block = t.block(r.first, r.first, r.dim, r.dim);
            auto it = representative.find(r.class_id);
            if (it == representative.end()) {
                representative.emplace(r.class_id, block);
            } else {
                entry.copy_mismatch = std::max(
                    entry.copy_mismatch, (block - it->second).cwiseAbs().maxCoeff());
            }
        }
        for (auto& [cid, block] : representative) entry.class_blocks.push_back(block);

        if (entry.off_block > tol)
            throw std::runtime_error("transform_and_block_check: off-block leakage for " + label);
        if (entry.copy_mismatch > tol)
            throw std::runtime_error("transform_and_block_check: copy mismatch for " + label);
        report.operators.push_back(std::move(entry));
    }
    return report;
}

double duality_max_deviation(const ChangeOfBasis& u, const GroupSpec& spec, int n, int d) {
    double worst = 0;
    for (const auto& g : spec.generating_set()) {
        Matrix t = u.unitary.adjoint() * perm_action_operator(g, n, d) * u.unitary;
        // Collect the class column spans (all copies of a class together).
        std::map<int, std::vector<const BasisColumnRange*>> classes;
        for (const auto& r : u.ranges)
            if (r.dim > 0) classes[r.class_id].push_back(&r);
        for (const auto& [cid, members] : classes) {
            int bd = members.front()->dim;
            for (const auto* ra : members)
                for (const auto* rb : members) {
                    Matrix sub = t.block(ra->first, rb->first, bd, bd);
                    Complex lambda = sub.trace() / static_cast<double>(bd);
                    worst = std::max(worst,
                                     (sub - lambda * Matrix::Identity(bd, bd))
                                         .cwiseAbs()
                                         .maxCoeff());
                }
        }
    }
    return worst;
}

namespace {

/// Real inner product on the matrix space viewed as a real vector space.
double real_inner(const Matrix& a, const Matrix& b) {
    return (a.adjoint() * b).trace().real();
}

/// Grow an orthonormal real basis; returns true if the candidate added a
/// new direction.
bool admit(std::vector<Matrix>& basis, Matrix cand) {
    double norm0 = std::sqrt(real_inner(cand, cand));
    if (norm0 < 1e-14) return false;
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) cand -= real_inner(b, cand) * b;
    double norm1 = std::sqrt(real_inner(cand, cand));
    if (norm1 < 1e-8 * norm0) return false;
    basis.push_back(cand / norm1);
    return true;
}

int closure_dimension(const std::vector<Matrix>& generators, int* rounds_out) {
    std::vector<Matrix> basis;
    for (const auto& g : generators) admit(basis, g);
    size_t processed = 0;
    int rounds = 0;
    while (processed < basis.size()) {
        if (++rounds > 1000)
            throw std::runtime_error("lie_closure: iteration cap exceeded");
        size_t frontier_end = basis.size();
        for (size_t i = processed; i < frontier_end; ++i)
            for (size_t j = 0; j < frontier_end; ++j) {
                Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
                admit(basis, std::move(comm));
            }
        processed = frontier_end;
    }
    if (rounds_out) *rounds_out = rounds;
    return static_cast<int>(basis.size());
}

}  // namespace

LieClosureResult lie_closure(const std::vector<Matrix>& generators) {
    LieClosureResult result;
    result.dimension = closure_dimension(generators, &result.rounds);
    return result;
}

std::uint64_t commutant_nullspace_oracle(const GroupSpec& spec, int n, int d) {
    std::int64_t dim = tensor_dimension(n, d);
    if (dim > 64) throw guard_error("commutant_nullspace_oracle: d^n > 64");
    auto gens = spec.generating_set();
    std::vector<Matrix> nontrivial;
    for (const auto& g : gens)
        if (!g.is_identity()) nontrivial.push_back(perm_action_operator(g, n, d));
    if (nontrivial.empty()) return static_cast<std::uint64_t>(dim * dim);

    // Stacked Sylvester system on vec(X): (1 (x) rho - rho^T (x) 1) vec = 0.
    Matrix id = Matrix::Identity(dim, dim);
    Matrix stacked(nontrivial.size() * dim * dim, dim * dim);
    for (size_t gi = 0; gi < nontrivial.size(); ++gi) {
        const Matrix& rho = nontrivial[gi];
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                for (int c = 0; c < dim; ++c)
                    for (int e = 0; e < dim; ++e)
                        // row (a,b): sum_{c,e} [X rho - rho X]_{ab}
                        stacked(gi * dim * dim + a * dim + b, c * dim + e) =
                            (a == c ? rho(e, b) : Complex(0)) -
                            (e == b ? rho(a, c) : Complex(0));
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(stacked);
    qr.setThreshold(1e-10);
    return static_cast<std::uint64_t>(dim * dim - qr.rank());
}

ControllabilityReport subspace_controllability_report(const SpinNetworkModel& model,
                                                      bool with_global_closure,
                                                      double block_tol) {
    ControllabilityReport report{family_for(model.symmetry), {}, {}, {}, {}, {}};
    report.verification = verify_gys_family(report.family, 2);
    if (!report.verification.passes())
        throw std::runtime_error("subspace_controllability_report: family verification failed");
    report.basis = assemble_change_of_basis(report.family, 2);

    std::vector<std::pair<std::string, Matrix>> ops;
    ops.emplace_back("drift", model.drift);
    for (const auto& [label, op] : model.controls) ops.emplace_back(label, op);
    report.blocks = transform_and_block_check(report.basis, ops, block_tol);

    // One representative block per class (same order in every operator).
    int nblocks = static_cast<int>(report.blocks.operators.front().class_blocks.size());
    for (int b = 0; b < nblocks; ++b) {
        std::vector<Matrix> gens;
        for (const auto& op : report.blocks.operators) gens.push_back(op.class_blocks[b]);
        auto closure = lie_closure(gens);
        int bd = static_cast<int>(gens.front().rows());
        report.closure.block_dimensions.push_back(closure.dimension);
        report.closure.block_full_unitary.push_back(closure.dimension >= bd * bd - 1);
        report.closure.dimension += closure.dimension;
    }
    if (with_global_closure) {
        std::vector<Matrix> gens;
        for (const auto& [label, op] : ops) gens.push_back(op);
        report.global_closure = lie_closure(gens);
    }
    return report;
}

}  // namespace symdecomp
