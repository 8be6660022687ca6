#include "symdecomp/partition.hpp"

#include "symdecomp/group_spec.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symdecomp {

using boost::multiprecision::cpp_int;

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be non-increasing");
    }
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& cur,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        emit_partitions(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int n) {
    if (n < 1 || n > 20) throw guard_error("partitions: n out of range [1,20]");
    std::vector<Partition> out;
    std::vector<int> cur;
    emit_partitions(n, n, cur, out);
    return out;
}

std::uint64_t hook_length(const Partition& lambda) {
    const auto& p = lambda.parts();
    // Column heights (conjugate partition).
    std::vector<int> col(p.empty() ? 0 : p[0], 0);
    for (int len : p)
        for (int k = 0; k < len; ++k) ++col[k];
    cpp_int prod = 1;
    for (int l = 0; l < lambda.rows(); ++l)
        for (int k = 0; k < p[l]; ++k) {
            int arm = p[l] - k - 1;
            int leg = col[k] - l - 1;
            prod *= arm + leg + 1;
        }
    return static_cast<std::uint64_t>(prod);
}

std::uint64_t image_dimension(const Partition& lambda, int N) {
    if (N < 1) throw std::invalid_argument("image_dimension: N must be positive");
    if (lambda.rows() > N) return 0;
    cpp_int num = 1;
    const auto& p = lambda.parts();
    for (int l = 1; l <= lambda.rows(); ++l)
        for (int k = 1; k <= p[l - 1]; ++k) num *= N - l + k;
    return static_cast<std::uint64_t>(num / hook_length(lambda));
}

}  // namespace symdecomp
