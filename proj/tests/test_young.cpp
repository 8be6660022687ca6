#include <doctest.h>

#include <set>

#include "symdecomp/young.hpp"

using namespace symdecomp;

namespace {

GroupAlgebraElement<Rational> family_sum(int n) {
    GroupAlgebraElement<Rational> sum(GroupSpec::symmetric(n));
    for (const auto& lambda : partitions(n))
        for (const auto& t : standard_tableaux(lambda)) sum += ks_symmetrizer(t).element;
    return sum;
}

}  // namespace

TEST_CASE("partitions enumeration") {
    auto p4 = partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts() == std::vector<int>{4});
    CHECK(p4[1].parts() == std::vector<int>{3, 1});
    CHECK(p4[2].parts() == std::vector<int>{2, 2});
    CHECK(p4[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(p4[4].parts() == std::vector<int>{1, 1, 1, 1});
    CHECK(partitions(8).size() == 22);
    CHECK_THROWS_AS(partitions(21), guard_error);
}

TEST_CASE("hook lengths") {
    CHECK(hook_length(Partition({2, 1})) == 3);
    CHECK(hook_length(Partition({3, 3, 2, 1})) == 2160);
    CHECK(hook_length(Partition({5})) == 120);
    CHECK(hook_length(Partition({1, 1, 1})) == 6);
}

TEST_CASE("image dimensions on qubits") {
    // N = 2: partitions with more than two rows annihilate the space.
    CHECK(image_dimension(Partition({3}), 2) == 4);
    CHECK(image_dimension(Partition({2, 1}), 2) == 2);
    CHECK(image_dimension(Partition({1, 1, 1}), 2) == 0);
    CHECK(image_dimension(Partition({2, 2}), 2) == 1);
    CHECK(image_dimension(Partition({2, 1}), 3) == 8);
}

TEST_CASE("standard tableaux enumeration and count") {
    auto ts = standard_tableaux(Partition({2, 1}));
    REQUIRE(ts.size() == 2);
    CHECK(ts[0].rows() == std::vector<std::vector<int>>{{1, 2}, {3}});
    CHECK(ts[1].rows() == std::vector<std::vector<int>>{{1, 3}, {2}});

    // #SYT(lambda) = n! / Hook(lambda); total over shapes of squares = n!.
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        std::uint64_t total = 0;
        for (const auto& lambda : partitions(n)) {
            auto count = standard_tableaux(lambda).size();
            CHECK(count == fact / hook_length(lambda));
            total += count * count;
        }
        CHECK(total == fact);
    }
}

TEST_CASE("tableau validation") {
    CHECK_THROWS_AS(YoungTableau({{1, 3}, {2, 4, 5}}), std::invalid_argument);  // not a shape
    CHECK_THROWS_AS(YoungTableau({{1, 2}, {2}}), std::invalid_argument);        // repeat
    CHECK_THROWS_AS(YoungTableau({{2, 3}, {1}}), std::invalid_argument);        // column order
}

TEST_CASE("classical symmetrizer worked example") {
    // T = [[1,2],[3]]: r_T = (1)+(12), c_T = (1)-(13),
    // P' = (1) + (12) - (13) - (132), and P'^2 = 3 P'.
    YoungTableau t({{1, 2}, {3}});
    auto p = classical_symmetrizer(t);
    CHECK(p.coefficient(Permutation::identity(3)) == 1);
    CHECK(p.coefficient(parse_cycles("(1 2)", 3)) == 1);
    CHECK(p.coefficient(parse_cycles("(1 3)", 3)) == -1);
    CHECK(p.coefficient(parse_cycles("(1 3 2)", 3)) == -1);
    CHECK(p.terms().size() == 4);
    CHECK(ga_multiply(p, p) == p * Rational(3));
}

TEST_CASE("classical symmetrizers are pairwise orthogonal up to n = 4") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<GroupAlgebraElement<Rational>> ps;
        for (const auto& lambda : partitions(n))
            for (const auto& t : standard_tableaux(lambda))
                ps.push_back(classical_symmetrizer(t));
        for (size_t j = 0; j < ps.size(); ++j)
            for (size_t k = 0; k < ps.size(); ++k)
                if (j != k) CHECK(ga_multiply(ps[j], ps[k]).is_zero());
    }
}

TEST_CASE("classical symmetrizers are not hermitian from n = 3") {
    auto p = ga_to_complex(classical_symmetrizer(YoungTableau({{1, 2}, {3}})));
    CHECK(!(ga_dagger(p) == p));
}

TEST_CASE("hermitian symmetrizers: worked n = 3 family") {
    // The trivial and sign shapes are the group averages.
    auto sym = ks_symmetrizer(YoungTableau({{1, 2, 3}}));
    CHECK(sym.element.coefficient(Permutation::identity(3)) == Rational(1, 6));
    CHECK(sym.element.coefficient(parse_cycles("(1 2)", 3)) == Rational(1, 6));
    auto alt = ks_symmetrizer(YoungTableau({{1}, {2}, {3}}));
    CHECK(alt.element.coefficient(parse_cycles("(1 2)", 3)) == Rational(-1, 6));
    CHECK(alt.element.coefficient(parse_cycles("(1 2 3)", 3)) == Rational(1, 6));
}

TEST_CASE("hermitian symmetrizers satisfy all four axioms exactly, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<GroupAlgebraElement<Rational>> ps;
        for (const auto& lambda : partitions(n))
            for (const auto& t : standard_tableaux(lambda))
                ps.push_back(ks_symmetrizer(t).element);

        // Completeness.
        CHECK(family_sum(n) == GroupAlgebraElement<Rational>::unit(GroupSpec::symmetric(n)));

        for (size_t j = 0; j < ps.size(); ++j) {
            // Hermiticity and idempotence.
            auto pc = ga_to_complex(ps[j]);
            CHECK(ga_dagger(pc) == pc);
            CHECK(ga_multiply(ps[j], ps[j]) == ps[j]);
            // Pairwise orthogonality.
            for (size_t k = j + 1; k < ps.size(); ++k) {
                CHECK(ga_multiply(ps[j], ps[k]).is_zero());
                CHECK(ga_multiply(ps[k], ps[j]).is_zero());
            }
        }
    }
}

TEST_CASE("primitivity holds exactly at n = 4") {
    // P g P must be a scalar multiple of P for every group element.
    auto group = enumerate_group(GroupSpec::symmetric(4));
    for (const auto& lambda : partitions(4)) {
        for (const auto& t : standard_tableaux(lambda)) {
            auto p = ks_symmetrizer(t).element;
            const auto& [gstar, cstar] = *p.terms().begin();
            for (const auto& g : group) {
                auto pgp = ga_multiply(ga_multiply(p, GroupAlgebraElement<Rational>::basis(
                                                          p.group(), g)),
                                       p);
                Rational lam = pgp.coefficient(gstar) / cstar;
                CHECK(pgp == p * lam);
            }
        }
    }
}

TEST_CASE("classical symmetrizers break orthogonality at n = 5") {
    // The two (3,2) tableaux below are the smallest counterexample: their
    // classical symmetrizers multiply to a nonzero element, so the family
    // cannot be projector-orthogonal. The Hermitian recursion repairs this.
    auto t1 = YoungTableau({{1, 2, 3}, {4, 5}});
    auto t2 = YoungTableau({{1, 3, 5}, {2, 4}});
    auto [p1, n1] = normalize_idempotent(classical_symmetrizer(t1));
    auto [p2, n2] = normalize_idempotent(classical_symmetrizer(t2));
    CHECK(!ga_multiply(p1, p2).is_zero());
    auto h1 = ks_symmetrizer(t1).element;
    auto h2 = ks_symmetrizer(t2).element;
    CHECK(ga_multiply(h1, h2).is_zero());
    CHECK(ga_multiply(h2, h1).is_zero());
}

TEST_CASE("recursion coincides with classical normalization for n <= 2") {
    for (auto rows : {std::vector<std::vector<int>>{{1, 2}}, {{1}, {2}}}) {
        YoungTableau t(rows);
        auto rec = ks_symmetrizer(t);
        auto [cls, lam] = normalize_idempotent(classical_symmetrizer(t));
        CHECK(rec.element == cls);
    }
}

TEST_CASE("pre_tableau removes the last letter") {
    YoungTableau t({{1, 2, 5}, {3, 4}});
    CHECK(pre_tableau(t).rows() == std::vector<std::vector<int>>{{1, 2}, {3, 4}});
    CHECK_THROWS_AS(pre_tableau(YoungTableau(std::vector<std::vector<int>>{{1}})),
                    std::invalid_argument);
}
