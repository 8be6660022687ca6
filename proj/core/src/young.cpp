#include "symdecomp/young.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symdecomp {

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("YoungTableau: empty");
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    std::vector<char> seen(n + 1, 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty() || (i > 0 && rows_[i].size() > rows_[i - 1].size()))
            throw std::invalid_argument("YoungTableau: shape is not a partition");
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            int v = rows_[i][j];
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("YoungTableau: filling is not 1..n");
            seen[v] = 1;
            if (j > 0 && rows_[i][j - 1] >= v)
                throw std::invalid_argument("YoungTableau: row not increasing");
            if (i > 0 && rows_[i - 1][j] >= v)
                throw std::invalid_argument("YoungTableau: column not increasing");
        }
    }
}

Partition YoungTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
    return Partition(parts);
}

int YoungTableau::n() const {
    int n = 0;
    for (const auto& r : rows_) n += static_cast<int>(r.size());
    return n;
}

std::vector<int> YoungTableau::row_word() const {
    std::vector<int> w;
    for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
    return w;
}

std::string YoungTableau::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) out << '\n';
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            if (j) out << ' ';
            out << rows_[i][j];
        }
    }
    return out.str();
}

namespace {

// Place numbers 1..n one at a time; a number may go at the end of any row
// whose length stays within the shape and below the row above.
void fill_tableaux(const std::vector<int>& shape, std::vector<std::vector<int>>& rows,
                   int next, int n, std::vector<YoungTableau>& out) {
    if (next > n) {
        out.emplace_back(rows);
        return;
    }
    for (size_t i = 0; i < shape.size(); ++i) {
        int len = static_cast<int>(rows[i].size());
        if (len >= shape[i]) continue;
        if (i > 0 && static_cast<int>(rows[i - 1].size()) <= len) continue;
        rows[i].push_back(next);
        fill_tableaux(shape, rows, next + 1, n, out);
        rows[i].pop_back();
    }
}

}  // namespace

std::vector<YoungTableau> standard_tableaux(const Partition& lambda) {
    std::vector<std::vector<int>> rows(lambda.rows());
    std::vector<YoungTableau> out;
    fill_tableaux(lambda.parts(), rows, 1, lambda.sum(), out);
    std::sort(out.begin(), out.end(), [](const YoungTableau& a, const YoungTableau& b) {
        return a.row_word() < b.row_word();
    });
    return out;
}

YoungTableau pre_tableau(const YoungTableau& t) {
    int n = t.n();
    if (n < 2) throw std::invalid_argument("pre_tableau: n must be >= 2");
    auto rows = t.rows();
    for (auto& r : rows) {
        if (r.back() == n) {
            r.pop_back();
            if (r.empty()) rows.pop_back();
            return YoungTableau(rows);
        }
    }
    throw std::logic_error("pre_tableau: highest number not at a row end");
}

namespace {

// Sum over all permutations of the given letter sets (0-based positions),
// optionally signed. Letter sets are the rows (or columns) of a tableau.
GroupAlgebraElement<Rational> group_sum(int n, const std::vector<std::vector<int>>& sets,
                                        bool signed_sum) {
    GroupAlgebraElement<Rational> out = GroupAlgebraElement<Rational>::unit(GroupSpec::symmetric(n));
    for (const auto& set : sets) {
        if (set.size() < 2) continue;
        GroupAlgebraElement<Rational> factor(GroupSpec::symmetric(n));
        std::vector<int> perm(set.begin(), set.end());
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        perm = sorted;
        do {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            for (size_t i = 0; i < sorted.size(); ++i) img[sorted[i]] = perm[i];
            Permutation p(std::move(img));
            factor.add_term(p, signed_sum ? Rational(p.sign()) : Rational(1));
        } while (std::next_permutation(perm.begin(), perm.end()));
        out = ga_multiply(out, factor);
    }
    return out;
}

std::vector<std::vector<int>> row_sets(const YoungTableau& t) {
    std::vector<std::vector<int>> sets;
    for (const auto& r : t.rows()) {
        std::vector<int> s;
        for (int v : r) s.push_back(v - 1);
        sets.push_back(std::move(s));
    }
    return sets;
}

std::vector<std::vector<int>> column_sets(const YoungTableau& t) {
    std::vector<std::vector<int>> sets(t.rows().front().size());
    for (const auto& r : t.rows())
        for (size_t j = 0; j < r.size(); ++j) sets[j].push_back(r[j] - 1);
    return sets;
}

}  // namespace

GroupAlgebraElement<Rational> row_symmetrizer(const YoungTableau& t) {
    return group_sum(t.n(), row_sets(t), false);
}

GroupAlgebraElement<Rational> column_antisymmetrizer(const YoungTableau& t) {
    return group_sum(t.n(), column_sets(t), true);
}

GroupAlgebraElement<Rational> classical_symmetrizer(const YoungTableau& t) {
    return ga_multiply(row_symmetrizer(t), column_antisymmetrizer(t));
}

SymmetrizerRecord ks_symmetrizer(const YoungTableau& t) {
    int n = t.n();
    if (n > 8) throw guard_error("ks_symmetrizer: n > 8");
    if (n <= 2) {
        auto [p, lambda] = normalize_idempotent(classical_symmetrizer(t));
        return {t, std::move(p), std::move(lambda)};
    }
    auto pre = ks_symmetrizer(pre_tableau(t));
    auto pre_n = ga_extend_degree(pre.element, n);
    auto q = ga_multiply(ga_multiply(pre_n, classical_symmetrizer(t)), pre_n);
    auto [p, lambda] = normalize_idempotent(q);
    return {t, std::move(p), std::move(lambda)};
}

}  // namespace symdecomp
