#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "symdecomp/group_algebra.hpp"
#include "symdecomp/group_spec.hpp"

namespace symdecomp {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A length-n word over {0..d-1}; for d=2 rendered as a binary word
/// a1 a2 ... an with a1 leftmost. The basis index of |a1...an> treats a1 as
/// the most significant digit, so lexicographic word order = index order.
struct BasisWord {
    std::vector<int> letters;
    int d = 2;

    std::int64_t index() const;
    static BasisWord from_index(std::int64_t idx, int n, int d);

    /// Z^r-shifted word |a_{1+r} a_{2+r} ... a_{n+r}> (indices mod n).
    BasisWord shifted(int r) const;

    /// Smallest positive T with the word fixed by the T-fold shift; T | n.
    int period() const;

    /// Lexicographically smallest rotation.
    BasisWord canonical_rotation() const;

    std::string to_string() const;
    bool operator==(const BasisWord&) const = default;
};

/// Dimension guard for tensor-space operators: d^n <= 2^20 to act on
/// vectors, d^n <= 4096 to materialize dense matrices.
std::int64_t tensor_dimension(int n, int d);

/// The unitary place action of p on (C^d)^{(x) n}: the letter at position i
/// moves to position p(i). With this convention p -> operator is a group
/// homomorphism (the literal "relabel positions by p" reading is not).
Matrix perm_action_operator(const Permutation& p, int n, int d);

/// Apply sum_g c_g rho(g) to a state without materializing the matrix.
Vector apply_algebra_element(const GroupAlgebraElement<Complex>& a, const Vector& v, int d);

/// Dense matrix of a group-algebra element (guarded).
Matrix materialize(const GroupAlgebraElement<Complex>& a, int d);

/// Orthonormal basis of Im(P) for an idempotent Hermitian P (verified within
/// 1e-8): P applied to each standard basis word in lexicographic order,
/// modified Gram-Schmidt with one re-orthogonalization pass, phase fixed so
/// the first nonzero amplitude is real positive. May be empty.
std::vector<Vector> projector_image_basis(const GroupAlgebraElement<Complex>& p, int n, int d);

/// Eq.-level cyclic projector action on a word: zero when n/T does not
/// divide k, else (1/T) sum_{r<T} eps^{kr} |shifted word>.
Vector cyclic_projector_on_word(int k, const BasisWord& w);

/// One normalized vector per qualifying C_n-orbit (canonical representatives
/// in lexicographic order); the count equals multiplicity_m_k(n, k). d=2.
std::vector<Vector> cyclic_image_basis(int k, int n);

/// Number of length-n binary words whose period T satisfies m | (n/T) and
/// (n/T) | k, with the convention gcd(n,0) = n. Zero unless m | gcd(n,k).
std::uint64_t count_words_w(int n, int k, int m);

/// m_k = (1/n) sum_{m | gcd(n,k)} w(n,k,m) phi(m) = dim Im(P_k).
std::uint64_t multiplicity_m_k(int n, int k);

/// dim u^{C_n}(2^n) = (1/n) sum_{m|n} 4^{n/m} phi(m) = sum_k m_k^2.
std::uint64_t dim_u_cyclic(int n);

/// dim u^{S_n}(2^n) = binomial(n+3, n).
std::uint64_t dim_u_symmetric(int n);

std::uint64_t euler_phi(int m);

/// Burnside count of G-orbits of length-n words over the given alphabet:
/// (1/|G|) sum_g alphabet^{#cycles(g)}.
std::uint64_t burnside_orbit_count(const GroupSpec& spec, int alphabet_size);

/// dim End_G(V^{(x)n}) = (1/|G|) sum_g |tr rho(g)|^2 with
/// tr rho(g) = d^{#cycles(g)} computed combinatorially.
std::uint64_t commutant_dim_trace_oracle(const GroupSpec& spec, int d);

/// Ket-notation rendering, e.g. "|100> +|010> +|001>".
std::string to_ket(const Vector& v, int n, int d, double tol = 1e-10);

/// CSV rows "index,re,im".
std::string to_csv(const Vector& v);

}  // namespace symdecomp
