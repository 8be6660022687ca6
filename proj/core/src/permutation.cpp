#include "symdecomp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace symdecomp {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection of {1..n}");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::cycle_shift(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    return Permutation(std::move(img));
}

Permutation Permutation::reversal(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - 1 - i;
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int i = 0; i < degree(); ++i) img[images_[i]] = i;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

int Permutation::sign() const {
    int s = 1;
    for (int len : cycle_lengths())
        if (len % 2 == 0) s = -s;
    return s;
}

std::vector<int> Permutation::cycle_lengths() const {
    std::vector<char> seen(images_.size(), 0);
    std::vector<int> lens;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

int Permutation::cycle_count() const { return static_cast<int>(cycle_lengths().size()); }

Permutation Permutation::extended(int m) const {
    if (m < degree()) throw std::invalid_argument("extended: target degree too small");
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    std::copy(images_.begin(), images_.end(), img.begin());
    return Permutation(std::move(img));
}

std::string Permutation::to_cycles() const {
    std::ostringstream out;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = 1;
            continue;
        }
        any = true;
        out << '(';
        bool first = true;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = 1;
            if (!first) out << ' ';
            out << j + 1;
            first = false;
        }
        out << ')';
    }
    if (!any) return "(1)";
    return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> img(p.degree());
    for (int i = 0; i < p.degree(); ++i) img[i] = p(q(i));
    return Permutation(std::move(img));
}

Permutation parse_cycles(const std::string& text, int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        if (text[pos] != '(') throw std::invalid_argument("parse_cycles: expected '('");
        ++pos;
        std::vector<int> cyc;
        while (true) {
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
            if (pos >= text.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
            if (text[pos] == ')') { ++pos; break; }
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("parse_cycles: expected digit");
            int v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v < 1 || v > n) throw std::invalid_argument("parse_cycles: letter out of range");
            cyc.push_back(v - 1);
        }
        for (size_t i = 0; i + 1 < cyc.size(); ++i) img[cyc[i]] = cyc[i + 1];
        if (cyc.size() > 1) img[cyc.back()] = cyc.front();
        skip_ws();
    }
    return Permutation(std::move(img));
}

}  // namespace symdecomp
