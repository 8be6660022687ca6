#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "symdecomp/permutation.hpp"

namespace symdecomp {

/// Resource-guard violation (group too large, dimension overflow, ...).
/// The CLI maps this to exit code 3.
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite subgroup of S_n given by a named family or explicit generators.
struct GroupSpec {
    enum class Kind { Symmetric, Cyclic, Reflection, Generated };

    Kind kind = Kind::Symmetric;
    int degree = 1;  // n: the letters {1..n} being permuted
    std::vector<Permutation> generators;  // Kind::Generated only

    static GroupSpec symmetric(int n) { return {Kind::Symmetric, n, {}}; }
    static GroupSpec cyclic(int n) { return {Kind::Cyclic, n, {}}; }
    static GroupSpec reflection(int sites) { return {Kind::Reflection, sites, {}}; }
    static GroupSpec generated(std::vector<Permutation> gens);

    /// Generating set (named kinds included).
    std::vector<Permutation> generating_set() const;

    bool operator==(const GroupSpec&) const = default;

    std::string name() const;
};

/// All elements in deterministic order: lexicographic on one-line notation.
/// Guarded by |G| <= 10!.
std::vector<Permutation> enumerate_group(const GroupSpec& spec);

bool is_abelian(const GroupSpec& spec);

}  // namespace symdecomp
