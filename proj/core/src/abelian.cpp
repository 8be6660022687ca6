#include "symdecomp/abelian.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace symdecomp {

namespace {

constexpr double kCharTol = 1e-10;

Complex root_of_unity(int k, int n) {
    double theta = 2.0 * std::numbers::pi * k / n;
    return {std::cos(theta), std::sin(theta)};
}

int element_order(const Permutation& g) {
    Permutation p = g;
    int ord = 1;
    while (!p.is_identity()) {
        p = compose(p, g);
        ++ord;
    }
    return ord;
}

}  // namespace

Complex Character::value_of(const Permutation& g) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == g) return values[i];
    throw std::invalid_argument("Character: element not in group");
}

std::vector<Character> characters_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("characters_cyclic: n must be >= 1");
    auto spec = GroupSpec::cyclic(n);
    auto elems = enumerate_group(spec);
    // Power of Z represented by each enumerated element.
    Permutation z = n >= 2 ? Permutation::cycle_shift(n) : Permutation::identity(n);
    std::map<Permutation, int> power;
    Permutation p = Permutation::identity(n);
    for (int j = 0; j < static_cast<int>(elems.size()); ++j) {
        power[p] = j;
        p = compose(z, p);
    }
    std::vector<Character> out;
    for (int k = 0; k < static_cast<int>(elems.size()); ++k) {
        Character chi{spec, elems, {}, {k}};
        for (const auto& g : elems) chi.values.push_back(root_of_unity(k * power.at(g), n));
        out.push_back(std::move(chi));
    }
    return out;
}

namespace {

std::vector<Character> characters_reflection(int sites) {
    auto spec = GroupSpec::reflection(sites);
    auto elems = enumerate_group(spec);
    std::vector<Character> out;
    int nchars = static_cast<int>(elems.size());  // 1 if the reversal is trivial
    for (int k = 0; k < nchars; ++k) {
        Character chi{spec, elems, {}, {k}};
        for (const auto& g : elems)
            chi.values.push_back(g.is_identity() || k == 0 ? Complex(1, 0) : Complex(-1, 0));
        out.push_back(std::move(chi));
    }
    return out;
}

// Characters of a general Abelian group from the regular representation:
// the permutation matrices of left multiplication commute, so a generic
// linear combination of the generator matrices has simple joint
// eigenvectors v with rho(g) v = chi(g) v for every g.
std::vector<Character> characters_generated(const GroupSpec& spec) {
    auto elems = enumerate_group(spec);
    int m = static_cast<int>(elems.size());
    std::map<Permutation, int> index;
    for (int i = 0; i < m; ++i) index[elems[i]] = i;

    auto regular = [&](const Permutation& g) {
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(m, m);
        for (int j = 0; j < m; ++j) rho(index.at(compose(g, elems[j])), j) = 1.0;
        return rho;
    };

    auto gens = spec.generating_set();
    Eigen::MatrixXcd mix = Eigen::MatrixXcd::Zero(m, m);
    for (size_t i = 0; i < gens.size(); ++i)
        mix += Complex(std::cos(1.0 + 0.7 * static_cast<double>(i)),
                       std::sin(0.3 + 1.1 * static_cast<double>(i))) *
               regular(gens[i]);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(mix);

    std::vector<Eigen::MatrixXcd> gen_rho;
    std::vector<int> gen_ord;
    for (const auto& g : gens) {
        gen_rho.push_back(regular(g));
        gen_ord.push_back(element_order(g));
    }

    std::vector<Character> out;
    for (int c = 0; c < m; ++c) {
        Eigen::VectorXcd v = es.eigenvectors().col(c);
        Character chi{spec, elems, std::vector<Complex>(m), {}};
        // Label: exponent of the realized root of unity per generator.
        for (size_t i = 0; i < gens.size(); ++i) {
            Complex val = v.dot(gen_rho[i] * v);  // unit-norm eigenvector
            int ord = gen_ord[i];
            double k = std::arg(val) * ord / (2.0 * std::numbers::pi);
            int ki = static_cast<int>(std::llround(k));
            ki = ((ki % ord) + ord) % ord;
            if (std::abs(val - root_of_unity(ki, ord)) > kCharTol)
                throw std::runtime_error("characters_abelian: eigenvalue is not a root of unity");
            chi.label.push_back(ki);
        }
        for (int j = 0; j < m; ++j) {
            Complex val = v.dot(regular(elems[j]) * v);
            if (std::abs(std::abs(val) - 1.0) > kCharTol)
                throw std::runtime_error("characters_abelian: non-unimodular character value");
            chi.values[j] = val / std::abs(val);
        }
        out.push_back(std::move(chi));
    }
    std::sort(out.begin(), out.end(),
              [](const Character& a, const Character& b) { return a.label < b.label; });
    // Verify the dual has exactly |G| distinct members.
    for (int i = 0; i + 1 < m; ++i)
        if (out[i].label == out[i + 1].label)
            throw std::runtime_error(
                "characters_abelian: failed to separate |G| distinct characters");
    return out;
}

}  // namespace

std::vector<Character> characters_abelian(const GroupSpec& spec) {
    if (!is_abelian(spec))
        throw std::invalid_argument("characters_abelian: group is not Abelian");
    switch (spec.kind) {
        case GroupSpec::Kind::Cyclic:
            return characters_cyclic(spec.degree);
        case GroupSpec::Kind::Reflection:
            return characters_reflection(spec.degree);
        default:
            return characters_generated(spec);
    }
}

AbelianGysRecord gys_from_character(const Character& chi) {
    if (!is_abelian(chi.group))
        throw std::invalid_argument("gys_from_character: group is not Abelian");
    GroupAlgebraElement<Complex> p(chi.group);
    double inv = 1.0 / static_cast<double>(chi.elements.size());
    for (size_t i = 0; i < chi.elements.size(); ++i)
        p.add_term(chi.elements[i], chi.values[i] * inv);
    return {chi, std::move(p)};
}

std::vector<AbelianGysRecord> gys_family_abelian(const GroupSpec& spec) {
    std::vector<AbelianGysRecord> out;
    for (const auto& chi : characters_abelian(spec)) out.push_back(gys_from_character(chi));
    return out;
}

}  // namespace symdecomp
