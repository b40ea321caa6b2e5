#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chromsym {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& value);

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of zero.
///
/// Construction validates the ordering; use `Partition::sorted` to build one
/// from an arbitrary multiset of parts (zeros are dropped).
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    static Partition sorted(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int size() const noexcept { return size_; }

    // Zero beyond the last part.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    std::string to_string() const;
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    // Lexicographic on parts; used for ordered containers only.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept;
};

/// A fixed-length sequence of nonnegative integers.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<int> entries);

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t length() const noexcept { return entries_.size(); }
    int total() const noexcept { return total_; }
    int operator[](std::size_t i) const { return entries_[i]; }

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;

private:
    std::vector<int> entries_;
    int total_ = 0;
};

/// Part sizes with their multiplicities, part size ascending.
struct MultiplicityProfile {
    std::vector<std::pair<int, int>> counts;

    int size() const noexcept;
    int multiplicity(int part) const noexcept;
    Partition to_partition() const;

    friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;
};

// Prefix-sum comparison; the shorter partition is padded with zeros.
bool dominance_leq(const Partition& mu, const Partition& lambda);

MultiplicityProfile multiplicity_profile(const Partition& lambda);

// (λ_k, λ_{k+1}, ...); k is 1-based and k > length yields the empty partition.
Partition suffix(const Partition& lambda, int k);

// Calls `visit` for each length-`length` composition of `total`, in
// reverse-lexicographic order: (t,0,..,0) first, (0,..,0,t) last.
void for_each_weak_composition(int total, int length,
                               const std::function<void(const WeakComposition&)>& visit);
std::vector<WeakComposition> weak_compositions(int total, int length);

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt multinomial(int n, const WeakComposition& parts);
BigInt multinomial(int n, std::span<const int> parts);

}  // namespace chromsym
