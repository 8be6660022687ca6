#include "symdecomp/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symdecomp {

namespace {

constexpr std::int64_t kVectorGuard = 1 << 20;
constexpr std::int64_t kDenseGuard = 4096;

Complex root_of_unity(int k, int n) {
    double theta = 2.0 * std::numbers::pi * k / n;
    return {std::cos(theta), std::sin(theta)};
}

}  // namespace

std::int64_t BasisWord::index() const {
    std::int64_t idx = 0;
    for (int a : letters) idx = idx * d + a;
    return idx;
}

BasisWord BasisWord::from_index(std::int64_t idx, int n, int d) {
    BasisWord w{std::vector<int>(n), d};
    for (int i = n - 1; i >= 0; --i) {
        w.letters[i] = static_cast<int>(idx % d);
        idx /= d;
    }
    return w;
}

BasisWord BasisWord::shifted(int r) const {
    int n = static_cast<int>(letters.size());
    BasisWord w{std::vector<int>(n), d};
    for (int i = 0; i < n; ++i) w.letters[i] = letters[(i + r) % n];
    return w;
}

int BasisWord::period() const {
    int n = static_cast<int>(letters.size());
    for (int t = 1; t <= n; ++t) {
        if (n % t != 0) continue;
        if (shifted(t) == *this) return t;
    }
    return n;
}

BasisWord BasisWord::canonical_rotation() const {
    BasisWord best = *this;
    int n = static_cast<int>(letters.size());
    for (int r = 1; r < n; ++r) {
        BasisWord s = shifted(r);
        if (s.letters < best.letters) best = s;
    }
    return best;
}

std::string BasisWord::to_string() const {
    std::string s;
    for (int a : letters) s += static_cast<char>('0' + a);
    return s;
}

std::int64_t tensor_dimension(int n, int d) {
    std::int64_t dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > kVectorGuard) throw guard_error("tensor_dimension: d^n exceeds 2^20");
    }
    return dim;
}

Matrix perm_action_operator(const Permutation& p, int n, int d) {
    std::int64_t dim = tensor_dimension(n, d);
    if (dim > kDenseGuard) throw guard_error("perm_action_operator: dense guard exceeded");
    Matrix m = Matrix::Zero(dim, dim);
    Permutation pinv = p.inverse();
    for (std::int64_t a = 0; a < dim; ++a) {
        BasisWord w = BasisWord::from_index(a, n, d);
        BasisWord out{std::vector<int>(n), d};
        for (int i = 0; i < n; ++i) out.letters[i] = w.letters[pinv(i)];
        m(out.index(), a) = 1.0;
    }
    return m;
}

Vector apply_algebra_element(const GroupAlgebraElement<Complex>& a, const Vector& v, int d) {
    int n = a.degree();
    std::int64_t dim = tensor_dimension(n, d);
    if (v.size() != dim)
        throw std::invalid_argument("apply_algebra_element: dimension mismatch");
    Vector out = Vector::Zero(dim);
    for (const auto& [g, c] : a.terms()) {
        Permutation ginv = g.inverse();
        for (std::int64_t src = 0; src < dim; ++src) {
            if (v[src] == Complex(0)) continue;
            BasisWord w = BasisWord::from_index(src, n, d);
            BasisWord dst{std::vector<int>(n), d};
            for (int i = 0; i < n; ++i) dst.letters[i] = w.letters[ginv(i)];
            out[dst.index()] += c * v[src];
        }
    }
    return out;
}

Matrix materialize(const GroupAlgebraElement<Complex>& a, int d) {
    int n = a.degree();
    std::int64_t dim = tensor_dimension(n, d);
    if (dim > kDenseGuard) throw guard_error("materialize: dense guard exceeded");
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& [g, c] : a.terms()) m += c * perm_action_operator(g, n, d);
    return m;
}

namespace {

/// Phase fix: first nonzero amplitude made real positive.
void fix_phase(Vector& v, double tol = 1e-10) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > tol) {
            v *= std::conj(v[i]) / std::abs(v[i]);
            return;
        }
    }
}

/// Modified Gram-Schmidt step with one re-orthogonalization pass.
void orthogonalize(Vector& c, const std::vector<Vector>& basis) {
    for (int pass = 0; pass < 2; ++pass)
        for (const auto& b : basis) c -= b.dot(c) * b;
}

}  // namespace

std::vector<Vector> projector_image_basis(const GroupAlgebraElement<Complex>& p, int n, int d) {
    std::int64_t dim = tensor_dimension(n, d);
    // Verify the projector contract before trusting the sweep.
    if (dim <= kDenseGuard) {
        Matrix m = materialize(p, d);
        if ((m * m - m).cwiseAbs().maxCoeff() > 1e-8 ||
            (m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
            throw std::invalid_argument(
                "projector_image_basis: element is not an Hermitian idempotent");
    }
    std::vector<Vector> basis;
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        Vector e = Vector::Zero(dim);
        e[idx] = 1.0;
        Vector c = apply_algebra_element(p, e, d);
        double pre = c.norm();
        if (pre < 1e-12) continue;
        orthogonalize(c, basis);
        if (c.norm() < 1e-8 * pre) continue;
        c.normalize();
        fix_phase(c);
        basis.push_back(std::move(c));
    }
    return basis;
}

Vector cyclic_projector_on_word(int k, const BasisWord& w) {
    int n = static_cast<int>(w.letters.size());
    if (k < 0 || k >= n) throw std::invalid_argument("cyclic_projector_on_word: bad k");
    std::int64_t dim = tensor_dimension(n, w.d);
    Vector v = Vector::Zero(dim);
    int t = w.period();
    if (k % (n / t) != 0) return v;  // eps^{kT} != 1
    for (int r = 0; r < t; ++r) v[w.shifted(r).index()] += root_of_unity(k * r, n) / double(t);
    return v;
}

std::vector<Vector> cyclic_image_basis(int k, int n) {
    std::int64_t dim = tensor_dimension(n, 2);
    std::vector<Vector> out;
    for (std::int64_t idx = 0; idx < dim; ++idx) {
        BasisWord w = BasisWord::from_index(idx, n, 2);
        if (w.canonical_rotation().index() != idx) continue;
        Vector v = cyclic_projector_on_word(k, w);
        double norm = v.norm();
        if (norm < 1e-12) continue;
        v /= norm;
        fix_phase(v);
        out.push_back(std::move(v));
    }
    return out;
}

std::uint64_t euler_phi(int m) {
    std::uint64_t count = 0;
    for (int a = 1; a <= m; ++a)
        if (std::gcd(a, m) == 1) ++count;
    return count;
}

namespace {

// Moebius function via trial factorization.
int moebius(int m) {
    int mu = 1;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        m /= p;
        if (m % p == 0) return 0;
        mu = -mu;
    }
    if (m > 1) mu = -mu;
    return mu;
}

// Number of binary words of exact period t: sum_{s|t} mu(t/s) 2^s.
std::int64_t exact_period_count(int t) {
    std::int64_t count = 0;
    for (int s = 1; s <= t; ++s)
        if (t % s == 0) count += moebius(t / s) * (std::int64_t(1) << s);
    return count;
}

}  // namespace

std::uint64_t count_words_w(int n, int k, int m) {
    int g = k == 0 ? n : std::gcd(n, k);
    if (g % m != 0) return 0;
    std::uint64_t total = 0;
    for (int t = 1; t <= n; ++t) {
        if (n % t != 0) continue;
        int q = n / t;
        bool m_divides = q % m == 0;
        bool q_divides_k = k == 0 || k % q == 0;
        if (m_divides && q_divides_k) total += static_cast<std::uint64_t>(exact_period_count(t));
    }
    return total;
}

std::uint64_t multiplicity_m_k(int n, int k) {
    if (k < 0 || k >= n) throw std::invalid_argument("multiplicity_m_k: bad k");
    int g = k == 0 ? n : std::gcd(n, k);
    std::uint64_t total = 0;
    for (int m = 1; m <= g; ++m)
        if (g % m == 0) total += count_words_w(n, k, m) * euler_phi(m);
    return total / n;
}

std::uint64_t dim_u_cyclic(int n) {
    if (n < 1) throw std::invalid_argument("dim_u_cyclic: n must be >= 1");
    std::uint64_t total = 0;
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        std::uint64_t pow4 = 1;
        for (int i = 0; i < n / m; ++i) pow4 *= 4;
        total += pow4 * euler_phi(m);
    }
    return total / n;
}

std::uint64_t dim_u_symmetric(int n) {
    if (n < 1) throw std::invalid_argument("dim_u_symmetric: n must be >= 1");
    // binomial(n+3, 3)
    return static_cast<std::uint64_t>(n + 1) * (n + 2) * (n + 3) / 6;
}

std::uint64_t burnside_orbit_count(const GroupSpec& spec, int alphabet_size) {
    auto elems = enumerate_group(spec);
    BigInt total = 0;
    for (const auto& g : elems) {
        BigInt fix = 1;
        for (int i = 0; i < g.cycle_count(); ++i) fix *= alphabet_size;
        total += fix;
    }
    return static_cast<std::uint64_t>(total / static_cast<int>(elems.size()));
}

std::uint64_t commutant_dim_trace_oracle(const GroupSpec& spec, int d) {
    auto elems = enumerate_group(spec);
    BigInt total = 0;
    for (const auto& g : elems) {
        BigInt tr = 1;
        for (int i = 0; i < g.cycle_count(); ++i) tr *= d;
        total += tr * tr;
    }
    return static_cast<std::uint64_t>(total / static_cast<int>(elems.size()));
}

std::string to_ket(const Vector& v, int n, int d, double tol) {
    std::ostringstream out;
    bool first = true;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) <= tol) continue;
        Complex c = v[i];
        if (!first) out << ' ';
        if (std::abs(c.imag()) <= tol) {
            double re = c.real();
            out << (re < 0 ? "-" : "+");
            if (std::abs(std::abs(re) - 1.0) > tol) out << std::abs(re) << "*";
        } else {
            out << "+(" << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i)*";
        }
        out << '|' << BasisWord::from_index(i, n, d).to_string() << '>';
        first = false;
    }
    if (first) return "0";
    return out.str();
}

std::string to_csv(const Vector& v) {
    std::ostringstream out;
    out.precision(17);
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out << i << ',' << v[i].real() << ',' << v[i].imag() << '\n';
    return out.str();
}

}  // namespace symdecomp
