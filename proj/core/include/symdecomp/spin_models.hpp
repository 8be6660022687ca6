#pragma once

#include <string>
#include <vector>

#include "symdecomp/tensor.hpp"

namespace symdecomp {

enum class Topology { Complete, Ring, CentralChain };

/// A controlled spin network: drift and controls are emitted as -iH
/// (skew-Hermitian Lie-algebra elements); the bare Hamiltonian is i*(op).
struct SpinNetworkModel {
    Topology topology;
    int sites;                 // number of tensor factors
    Matrix drift;              // -i H_interaction
    std::vector<std::pair<std::string, Matrix>> controls;
    GroupSpec symmetry;
};

enum class PauliAxis { X, Y, Z };

/// The Pauli matrices, with sigma_y = [[0, i], [-i, 0]].
Eigen::Matrix2cd pauli(PauliAxis axis);

/// 1 (x) ... (x) op (x) ... (x) 1 with op at 0-based site j of n.
Matrix embed_site(const Eigen::Matrix2cd& op, int site, int n);

/// All-to-all Ising network: H_x, H_y single-site sums, H_zz over all
/// pairs; symmetry S_n. 2 <= n <= 10.
SpinNetworkModel hamiltonians_complete(int n);

/// Ring with nearest-neighbor zz coupling including the wrap term;
/// symmetry C_n. 3 <= n <= 10.
SpinNetworkModel hamiltonians_ring(int n);

/// Ising chain of 2n+1 sites (ordered -n..n left to right) with x/y/z
/// controls on the central site only; symmetry is the site reflection
/// j <-> -j. 1 <= n <= 4.
SpinNetworkModel hamiltonians_central_chain(int half_length);

}  // namespace symdecomp
