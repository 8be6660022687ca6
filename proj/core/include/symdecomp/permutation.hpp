#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace symdecomp {

/// A permutation of {1..n}, stored 0-indexed in one-line notation:
/// images_[i] is the (0-based) image of position i. All I/O and cycle
/// notation is 1-based.
class Permutation {
  public:
    Permutation() = default;

    /// One-line notation, 0-based images. Throws if not a bijection.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    /// Full cycle (1 2 ... n).
    static Permutation cycle_shift(int n);

    /// Site reversal i <-> n+1-i.
    static Permutation reversal(int n);

    int degree() const { return static_cast<int>(images_.size()); }

    /// 0-based image of 0-based position i.
    int operator()(int i) const { return images_[i]; }

    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    bool is_identity() const;

    /// Parity: +1 or -1.
    int sign() const;

    /// Cycle lengths as a non-increasing sequence (a partition of n).
    std::vector<int> cycle_lengths() const;
    int cycle_count() const;

    /// Re-embed into S_m (m >= n) fixing the new letters.
    Permutation extended(int m) const;

    /// 1-based cycle notation, e.g. "(1 2 3)(5 6)"; identity prints "(1)".
    std::string to_cycles() const;

    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<int> images_;
};

/// result applies q first, then p. Throws on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Parse 1-based cycle notation, e.g. "(1 2 3)(5 4 6)(7 8)". Unlisted
/// letters are fixed points; n must be at least the largest letter used.
Permutation parse_cycles(const std::string& text, int n);

}  // namespace symdecomp
