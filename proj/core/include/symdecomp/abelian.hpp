#pragma once

#include <vector>

#include "symdecomp/group_algebra.hpp"
#include "symdecomp/group_spec.hpp"

namespace symdecomp {

/// An irreducible character of a finite Abelian subgroup of S_n: a group
/// homomorphism into the unit circle, tabulated on the elements in
/// enumeration order.
struct Character {
    GroupSpec group;
    std::vector<Permutation> elements;  // enumeration order
    std::vector<Complex> values;        // values[i] = chi(elements[i])
    std::vector<int> label;             // k for C_n; one index per generator otherwise

    Complex value_of(const Permutation& g) const;
};

/// chi_k(Z^j) = exp(2 pi i k j / n), k = 0..n-1. Roots of unity are computed
/// by angle rather than repeated multiplication.
std::vector<Character> characters_cyclic(int n);

/// All |G| irreducible characters of an Abelian group, ordered by label.
/// Named kinds (cyclic, reflection) use closed forms; explicit generator
/// lists go through a joint eigendecomposition of the regular
/// representation. Throws std::invalid_argument for non-Abelian specs.
std::vector<Character> characters_abelian(const GroupSpec& spec);

/// A character projector P_chi = (1/|G|) sum_g chi(g) g with its character.
struct AbelianGysRecord {
    Character character;
    GroupAlgebraElement<Complex> element;
};

AbelianGysRecord gys_from_character(const Character& chi);

/// The complete family {P_chi}, one record per irreducible character.
std::vector<AbelianGysRecord> gys_family_abelian(const GroupSpec& spec);

}  // namespace symdecomp
