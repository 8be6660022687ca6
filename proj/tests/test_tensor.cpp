#include <doctest.h>

#include <algorithm>
#include <complex>
#include <numbers>
#include <random>

#include "symdecomp/tensor.hpp"

using namespace symdecomp;

namespace {

Permutation random_permutation(int n, std::mt19937& rng) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

}  // namespace

TEST_CASE("basis word indexing: first letter is most significant") {
    BasisWord w{{1, 0, 0}, 2};
    CHECK(w.index() == 4);
    CHECK(BasisWord::from_index(4, 3, 2) == w);
    for (std::int64_t idx = 0; idx < 27; ++idx)
        CHECK(BasisWord::from_index(idx, 3, 3).index() == idx);
    CHECK(BasisWord({{1, 0, 0}, 2}).to_string() == "100");
}

TEST_CASE("word shifts, periods, canonical rotations") {
    BasisWord w{{1, 0, 0, 1}, 2};
    CHECK(w.shifted(1) == BasisWord{{0, 0, 1, 1}, 2});
    CHECK(w.shifted(4) == w);
    CHECK(w.period() == 4);
    CHECK(BasisWord({{1, 0, 1, 0}, 2}).period() == 2);
    CHECK(BasisWord({{1, 1, 1}, 2}).period() == 1);
    CHECK(w.canonical_rotation() == BasisWord{{0, 0, 1, 1}, 2});
}

TEST_CASE("place action is a unitary homomorphism") {
    std::mt19937 rng(99);
    int n = 4, d = 2;
    for (int trial = 0; trial < 8; ++trial) {
        auto p = random_permutation(n, rng);
        auto q = random_permutation(n, rng);
        Matrix mp = perm_action_operator(p, n, d);
        Matrix mq = perm_action_operator(q, n, d);
        Matrix mpq = perm_action_operator(compose(p, q), n, d);
        CHECK((mp * mq - mpq).norm() < 1e-12);
        CHECK((mp * mp.adjoint() - Matrix::Identity(16, 16)).norm() < 1e-12);
    }
}

TEST_CASE("place action moves letters as specified") {
    // p = (1 2) swaps the first two tensor factors: |100> -> |010>.
    Matrix m = perm_action_operator(parse_cycles("(1 2)", 3), 3, 2);
    Vector in = Vector::Zero(8), expect = Vector::Zero(8);
    in(BasisWord{{1, 0, 0}, 2}.index()) = 1.0;
    expect(BasisWord{{0, 1, 0}, 2}.index()) = 1.0;
    CHECK((m * in - expect).norm() < 1e-14);

    // Full cycle sends |110> to |011>.
    Matrix z = perm_action_operator(Permutation::cycle_shift(3), 3, 2);
    Vector in2 = Vector::Zero(8), expect2 = Vector::Zero(8);
    in2(BasisWord{{1, 1, 0}, 2}.index()) = 1.0;
    expect2(BasisWord{{0, 1, 1}, 2}.index()) = 1.0;
    CHECK((z * in2 - expect2).norm() < 1e-14);
}

TEST_CASE("matrix-free application agrees with materialization") {
    std::mt19937 rng(2024);
    auto spec = GroupSpec::symmetric(4);
    GroupAlgebraElement<Complex> a(spec);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    for (int i = 0; i < 5; ++i)
        a.add_term(random_permutation(4, rng), Complex(coeff(rng), coeff(rng)));
    Matrix m = materialize(a, 2);
    for (int trial = 0; trial < 4; ++trial) {
        Vector v(16);
        for (int i = 0; i < 16; ++i) v(i) = Complex(coeff(rng), coeff(rng));
        CHECK((apply_algebra_element(a, v, 2) - m * v).norm() < 1e-12);
    }
}

TEST_CASE("projector image basis for the reflection projectors") {
    // On three qubits, (1 + R)/2 has a 6-dimensional image and (1 - R)/2 a
    // 2-dimensional one (R fixes the 4 palindromic words).
    auto spec = GroupSpec::reflection(3);
    GroupAlgebraElement<Complex> ps(spec), pa(spec);
    ps.add_term(Permutation::identity(3), 0.5);
    ps.add_term(Permutation::reversal(3), 0.5);
    pa.add_term(Permutation::identity(3), 0.5);
    pa.add_term(Permutation::reversal(3), -0.5);

    auto bs = projector_image_basis(ps, 3, 2);
    auto ba = projector_image_basis(pa, 3, 2);
    CHECK(bs.size() == 6);
    CHECK(ba.size() == 2);
    Matrix mp = materialize(ps, 2);
    for (size_t i = 0; i < bs.size(); ++i) {
        CHECK((mp * bs[i] - bs[i]).norm() < 1e-10);
        for (size_t j = 0; j < bs.size(); ++j) {
            double expect = i == j ? 1.0 : 0.0;
            CHECK(std::abs(bs[i].dot(bs[j]) - expect) < 1e-10);
        }
        for (const auto& va : ba) CHECK(std::abs(bs[i].dot(va)) < 1e-10);
    }
}

TEST_CASE("cyclic projector on words") {
    // Period-2 word on 4 sites: nonzero only when 2 | k.
    BasisWord w{{1, 0, 1, 0}, 2};
    CHECK(cyclic_projector_on_word(1, w).norm() < 1e-14);
    CHECK(cyclic_projector_on_word(3, w).norm() < 1e-14);
    Vector v0 = cyclic_projector_on_word(0, w);
    CHECK(std::abs(v0(BasisWord{{1, 0, 1, 0}, 2}.index()) - 0.5) < 1e-14);
    CHECK(std::abs(v0(BasisWord{{0, 1, 0, 1}, 2}.index()) - 0.5) < 1e-14);

    // Full-period word: all four shifts appear with fourth-root phases.
    Vector v1 = cyclic_projector_on_word(1, BasisWord{{1, 0, 0, 0}, 2});
    CHECK(std::abs(v1(BasisWord{{1, 0, 0, 0}, 2}.index()) - 0.25) < 1e-14);
    CHECK(std::abs(std::abs(v1(BasisWord{{0, 0, 0, 1}, 2}.index())) - 0.25) < 1e-14);
}

TEST_CASE("cyclic image bases have the counted multiplicities") {
    for (int n : {3, 4, 5, 6}) {
        Matrix z = perm_action_operator(Permutation::cycle_shift(n), n, 2);
        std::uint64_t total = 0;
        for (int k = 0; k < n; ++k) {
            auto basis = cyclic_image_basis(k, n);
            CHECK(basis.size() == multiplicity_m_k(n, k));
            total += basis.size();
            // Orthonormal eigenvectors of the shift with a common n-th root
            // of unity eigenvalue of exponent +-k.
            double theta = 2.0 * std::numbers::pi * k / n;
            for (size_t i = 0; i < basis.size(); ++i) {
                for (size_t j = 0; j < basis.size(); ++j) {
                    double expect = i == j ? 1.0 : 0.0;
                    CHECK(std::abs(basis[i].dot(basis[j]) - expect) < 1e-10);
                }
                Vector zv = z * basis[i];
                bool plus = (zv - std::polar(1.0, theta) * basis[i]).norm() < 1e-10;
                bool minus = (zv - std::polar(1.0, -theta) * basis[i]).norm() < 1e-10;
                CHECK((plus || minus));
            }
        }
        CHECK(total == (1u << n));
    }
}

TEST_CASE("fixed-word counts") {
    CHECK(count_words_w(6, 4, 2) == 6);
    CHECK(count_words_w(4, 2, 1) == 14);
    CHECK(count_words_w(4, 0, 1) == 16);
    CHECK(count_words_w(4, 1, 2) == 0);  // 2 does not divide gcd(4,1)
}

TEST_CASE("multiplicity tables") {
    CHECK(multiplicity_m_k(4, 0) == 6);
    CHECK(multiplicity_m_k(4, 1) == 3);
    CHECK(multiplicity_m_k(4, 2) == 4);
    CHECK(multiplicity_m_k(4, 3) == 3);
    CHECK(multiplicity_m_k(3, 0) == 4);
    CHECK(multiplicity_m_k(3, 1) == 2);
    CHECK(multiplicity_m_k(3, 2) == 2);
}

TEST_CASE("prime-length closed forms") {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        std::uint64_t pow2 = 1ull << p;
        CHECK(multiplicity_m_k(p, 0) == 2 + (pow2 - 2) / p);
        for (int k = 1; k < p; ++k) CHECK(multiplicity_m_k(p, k) == (pow2 - 2) / p);
        std::uint64_t pow4 = 1;
        for (int i = 0; i < p; ++i) pow4 *= 4;
        CHECK(dim_u_cyclic(p) == 4 + (pow4 - 4) / p);
    }
}

TEST_CASE("counting identities up to n = 12") {
    for (int n = 1; n <= 12; ++n) {
        std::uint64_t sum = 0, sumsq = 0;
        for (int k = 0; k < n; ++k) {
            auto m = multiplicity_m_k(n, k);
            sum += m;
            sumsq += m * m;
        }
        CHECK(sum == (1ull << n));
        CHECK(sumsq == dim_u_cyclic(n));
        CHECK(multiplicity_m_k(n, 0) == burnside_orbit_count(GroupSpec::cyclic(n), 2));
    }
    CHECK(dim_u_cyclic(4) == 70);
    CHECK(dim_u_symmetric(3) == 20);
    CHECK(dim_u_symmetric(4) == 35);
}

TEST_CASE("trace oracle matches independent counts") {
    for (int n : {2, 3, 4, 5}) {
        CHECK(commutant_dim_trace_oracle(GroupSpec::cyclic(n), 2) == dim_u_cyclic(n));
        CHECK(commutant_dim_trace_oracle(GroupSpec::symmetric(n), 2) == dim_u_symmetric(n));
    }
    // Reflection on 3 sites: (1/2)(2^6 + 2^4) = 40.
    CHECK(commutant_dim_trace_oracle(GroupSpec::reflection(3), 2) == 40);
}

TEST_CASE("burnside orbit counts") {
    CHECK(burnside_orbit_count(GroupSpec::cyclic(4), 2) == 6);
    CHECK(burnside_orbit_count(GroupSpec::symmetric(3), 2) == 4);
    CHECK(burnside_orbit_count(GroupSpec::symmetric(4), 3) == 15);  // multisets of size 4 from 3
}

TEST_CASE("dimension guards") {
    CHECK(tensor_dimension(10, 2) == 1024);
    CHECK_THROWS_AS(tensor_dimension(21, 2), guard_error);
    GroupAlgebraElement<Complex> big =
        GroupAlgebraElement<Complex>::unit(GroupSpec::symmetric(13));
    CHECK_THROWS_AS(materialize(big, 2), guard_error);
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(13) == 12);
}
