#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace symdecomp {

/// An integer partition: non-increasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int sum() const;

    /// "(3,3,2,1)"
    std::string to_string() const;

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
/// Guarded to n <= 20.
std::vector<Partition> partitions(int n);

/// Product over boxes of (arm + leg + 1).
std::uint64_t hook_length(const Partition& lambda);

/// dim Im(P_T) on (C^N)^{tensor n}: prod_{l,k} (N - l + k) / Hook(lambda).
/// Zero when the partition has more than N rows.
std::uint64_t image_dimension(const Partition& lambda, int N);

}  // namespace symdecomp
