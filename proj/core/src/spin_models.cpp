#include "symdecomp/spin_models.hpp"

#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>

namespace symdecomp {

namespace {

const Complex kI(0.0, 1.0);

Matrix two_site_zz(int a, int b, int n) {
    return embed_site(pauli(PauliAxis::Z), a, n) * embed_site(pauli(PauliAxis::Z), b, n);
}

Matrix field_sum(PauliAxis axis, int n) {
    std::int64_t dim = tensor_dimension(n, 2);
    Matrix h = Matrix::Zero(dim, dim);
    for (int j = 0; j < n; ++j) h += embed_site(pauli(axis), j, n);
    return h;
}

}  // namespace

Eigen::Matrix2cd pauli(PauliAxis axis) {
    Eigen::Matrix2cd m;
    switch (axis) {
        case PauliAxis::X: m << 0, 1, 1, 0; break;
        case PauliAxis::Y: m << 0, kI, -kI, 0; break;
        case PauliAxis::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

Matrix embed_site(const Eigen::Matrix2cd& op, int site, int n) {
    if (site < 0 || site >= n) throw std::invalid_argument("embed_site: site out of range");
    std::int64_t dim = tensor_dimension(n, 2);
    std::int64_t left = 1;
    for (int i = 0; i < site; ++i) left *= 2;
    std::int64_t right = dim / (2 * left);
    Matrix m = Eigen::kroneckerProduct(
        Eigen::kroneckerProduct(Matrix::Identity(left, left), op).eval(),
        Matrix::Identity(right, right));
    return m;
}

SpinNetworkModel hamiltonians_complete(int n) {
    if (n < 2 || n > 10) throw std::invalid_argument("hamiltonians_complete: n out of [2,10]");
    std::int64_t dim = tensor_dimension(n, 2);
    Matrix hzz = Matrix::Zero(dim, dim);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) hzz += two_site_zz(a, b, n);
    SpinNetworkModel model{Topology::Complete, n, -kI * hzz, {}, GroupSpec::symmetric(n)};
    model.controls.emplace_back("Hx", -kI * field_sum(PauliAxis::X, n));
    model.controls.emplace_back("Hy", -kI * field_sum(PauliAxis::Y, n));
    return model;
}

SpinNetworkModel hamiltonians_ring(int n) {
    if (n < 3 || n > 10) throw std::invalid_argument("hamiltonians_ring: n out of [3,10]");
    std::int64_t dim = tensor_dimension(n, 2);
    Matrix hzz = Matrix::Zero(dim, dim);
    for (int a = 0; a < n; ++a) hzz += two_site_zz(a, (a + 1) % n, n);
    SpinNetworkModel model{Topology::Ring, n, -kI * hzz, {}, GroupSpec::cyclic(n)};
    model.controls.emplace_back("Hx", -kI * field_sum(PauliAxis::X, n));
    model.controls.emplace_back("Hy", -kI * field_sum(PauliAxis::Y, n));
    return model;
}

SpinNetworkModel hamiltonians_central_chain(int half_length) {
    if (half_length < 1 || half_length > 4)
        throw std::invalid_argument("hamiltonians_central_chain: half length out of [1,4]");
    int sites = 2 * half_length + 1;  // positions -n..n map to 0..2n
    int center = half_length;
    std::int64_t dim = tensor_dimension(sites, 2);
    Matrix a = Matrix::Zero(dim, dim);
    // i A = sum_{j=0}^{n-1} sz^j sz^{j+1} + sum_{j=0}^{-n+1} sz^j sz^{j-1}:
    // every adjacent pair on each arm, read outward from the center.
    for (int j = 0; j < half_length; ++j) {
        a += two_site_zz(center + j, center + j + 1, sites);
        a += two_site_zz(center - j, center - j - 1, sites);
    }
    SpinNetworkModel model{Topology::CentralChain, sites, -kI * a, {},
                           GroupSpec::reflection(sites)};
    model.controls.emplace_back("Bx", -kI * embed_site(pauli(PauliAxis::X), center, sites));
    model.controls.emplace_back("By", -kI * embed_site(pauli(PauliAxis::Y), center, sites));
    model.controls.emplace_back("Bz", -kI * embed_site(pauli(PauliAxis::Z), center, sites));
    return model;
}

}  // namespace symdecomp
