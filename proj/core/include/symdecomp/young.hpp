#pragma once

#include <string>
#include <vector>

#include "symdecomp/group_algebra.hpp"
#include "symdecomp/partition.hpp"

namespace symdecomp {

/// A standard Young tableau: rows and columns strictly increasing, filled
/// with 1..n (stored 1-based in row-major rows).
class YoungTableau {
  public:
    explicit YoungTableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int n() const;

    /// Concatenation of the rows, the sort key within a shape.
    std::vector<int> row_word() const;

    /// One row per line: "1 2 5\n3 6\n4"
    std::string to_string() const;

    bool operator==(const YoungTableau&) const = default;

  private:
    std::vector<std::vector<int>> rows_;
};

/// All standard Young tableaux of the given shape, ordered lexicographically
/// by row-reading word.
std::vector<YoungTableau> standard_tableaux(const Partition& lambda);

/// Remove the box containing the highest number.
YoungTableau pre_tableau(const YoungTableau& t);

/// r_T: sum over the row-preserving subgroup.
GroupAlgebraElement<Rational> row_symmetrizer(const YoungTableau& t);

/// c_T: signed sum over the column-preserving subgroup.
GroupAlgebraElement<Rational> column_antisymmetrizer(const YoungTableau& t);

/// P'_T = r_T * c_T, unnormalized.
GroupAlgebraElement<Rational> classical_symmetrizer(const YoungTableau& t);

/// A normalized Hermitian idempotent built from a tableau.
struct SymmetrizerRecord {
    YoungTableau tableau;
    GroupAlgebraElement<Rational> element;  // exactly idempotent and Hermitian
    Rational normalization;                 // the final eigenvalue divided out
};

/// Hermitian symmetrizer via the recursion
/// P_T = (P_Pre(T) (x) 1) P'_T (P_Pre(T) (x) 1), normalized at every level.
/// Coincides with the normalized classical symmetrizer for n <= 2.
/// Guarded to n <= 8.
SymmetrizerRecord ks_symmetrizer(const YoungTableau& t);

}  // namespace symdecomp
