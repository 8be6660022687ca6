#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "symdecomp/group_spec.hpp"
#include "symdecomp/scalar.hpp"

namespace symdecomp {

/// A finitely supported coefficient map over group elements: an element of
/// C[G] (or Q[G] when C = Rational). Zero coefficients are never stored;
/// the term map is ordered lexicographically on one-line notation, matching
/// the group enumeration order.
template <class C>
class GroupAlgebraElement {
  public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(GroupSpec group) : group_(std::move(group)) {}

    static GroupAlgebraElement unit(const GroupSpec& group) {
        GroupAlgebraElement e(group);
        e.add_term(Permutation::identity(group.degree), C(1));
        return e;
    }

    static GroupAlgebraElement basis(const GroupSpec& group, const Permutation& g) {
        GroupAlgebraElement e(group);
        e.add_term(g, C(1));
        return e;
    }

    const GroupSpec& group() const { return group_; }
    const std::map<Permutation, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return group_.degree; }

    C coefficient(const Permutation& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Permutation& g, const C& c) {
        if (g.degree() != group_.degree)
            throw std::invalid_argument("GroupAlgebraElement: permutation degree mismatch");
        auto it = terms_.find(g);
        if (it == terms_.end()) {
            if (!scalar::is_zero(c)) terms_.emplace(g, c);
        } else {
            it->second += c;
            if (scalar::is_zero(it->second)) terms_.erase(it);
        }
    }

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o) {
        require_same_group(o);
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }

    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o) {
        require_same_group(o);
        for (const auto& [g, c] : o.terms_) add_term(g, -c);
        return *this;
    }

    GroupAlgebraElement& operator*=(const C& s) {
        if (scalar::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [g, c] : terms_) c *= s;
        prune();
        return *this;
    }

    friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        a += b;
        return a;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
        a -= b;
        return a;
    }
    friend GroupAlgebraElement operator*(GroupAlgebraElement a, const C& s) {
        a *= s;
        return a;
    }

    bool operator==(const GroupAlgebraElement& o) const {
        return group_ == o.group_ && terms_ == o.terms_;
    }

    /// "+1*(1) -1*(1 3) ..." (terms in enumeration order).
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [g, c] : terms_) {
            if (!first) out << ' ';
            out << format_coeff(c) << "*" << g.to_cycles();
            first = false;
        }
        return out.str();
    }

    void require_same_group(const GroupAlgebraElement& o) const {
        if (group_ != o.group_)
            throw std::invalid_argument("GroupAlgebraElement: group tag mismatch");
    }

  private:
    static std::string format_coeff(const Rational& c) {
        std::ostringstream out;
        if (c >= 0) out << '+';
        out << c;
        return out.str();
    }
    static std::string format_coeff(const Complex& c) {
        std::ostringstream out;
        out << '(' << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)";
        return out.str();
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = scalar::is_zero(it->second) ? terms_.erase(it) : std::next(it);
    }

    GroupSpec group_;
    std::map<Permutation, C> terms_;
};

/// Convolution product: bilinear extension of the group operation.
template <class C>
GroupAlgebraElement<C> ga_multiply(const GroupAlgebraElement<C>& a,
                                   const GroupAlgebraElement<C>& b) {
    a.require_same_group(b);
    GroupAlgebraElement<C> out(a.group());
    for (const auto& [g, cg] : a.terms())
        for (const auto& [h, ch] : b.terms()) out.add_term(compose(g, h), cg * ch);
    return out;
}

/// Conjugate-linear anti-involution: coefficients conjugated, g -> g^{-1}.
template <class C>
GroupAlgebraElement<C> ga_dagger(const GroupAlgebraElement<C>& a) {
    GroupAlgebraElement<C> out(a.group());
    for (const auto& [g, c] : a.terms()) out.add_term(g.inverse(), scalar::conj(c));
    return out;
}

/// Re-embed Q[S_{n-1}] (or any smaller degree) into degree m, fixing the
/// new letters; retags the element as Symmetric(m).
template <class C>
GroupAlgebraElement<C> ga_extend_degree(const GroupAlgebraElement<C>& a, int m) {
    GroupAlgebraElement<C> out(GroupSpec::symmetric(m));
    for (const auto& [g, c] : a.terms()) out.add_term(g.extended(m), c);
    return out;
}

inline GroupAlgebraElement<Complex> ga_to_complex(const GroupAlgebraElement<Rational>& a) {
    GroupAlgebraElement<Complex> out(a.group());
    for (const auto& [g, c] : a.terms()) out.add_term(g, scalar::to_complex(c));
    return out;
}

/// Given Q with Q^2 = lambda * Q (lambda != 0), return (Q / lambda, lambda).
/// lambda is read off at the first supported permutation in enumeration
/// order and the identity Q^2 = lambda*Q is then verified exactly; a
/// violation signals a construction bug and throws.
inline std::pair<GroupAlgebraElement<Rational>, Rational> normalize_idempotent(
    const GroupAlgebraElement<Rational>& q) {
    if (q.is_zero())
        throw std::invalid_argument("normalize_idempotent: zero element");
    auto q2 = ga_multiply(q, q);
    const auto& [gstar, cstar] = *q.terms().begin();
    Rational lambda = q2.coefficient(gstar) / cstar;
    if (lambda == 0)
        throw std::runtime_error("normalize_idempotent: Q^2 vanishes on supp(Q)");
    if (!(q2 == q * lambda))
        throw std::runtime_error(
            "normalize_idempotent: element is not essentially idempotent");
    return {q * (Rational(1) / lambda), lambda};
}

}  // namespace symdecomp
