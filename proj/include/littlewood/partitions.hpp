#ifndef LITTLEWOOD_PARTITIONS_HPP
#define LITTLEWOOD_PARTITIONS_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "littlewood/rational.hpp"

namespace littlewood {

/// A partition of {1..m}; blocks hold sorted elements and are ordered by
/// their smallest element.
struct SetPartition {
    std::vector<std::vector<unsigned>> blocks;
    bool operator==(const SetPartition&) const = default;
};

/// Largest ground-set size the brute enumerator accepts.
inline constexpr unsigned kMaxEnumeratedSet = 13;

/// Lazy enumeration of all partitions of {1..m} (restricted growth strings).
class SetPartitionEnumerator {
   public:
    /// Throws std::length_error for m > kMaxEnumeratedSet, std::invalid_argument for m == 0.
    explicit SetPartitionEnumerator(unsigned m);
    /// Writes the next partition; false once exhausted.
    bool next(SetPartition& out);

   private:
    unsigned m_;
    std::vector<unsigned> growth_;  // block label of each element
    std::vector<unsigned> prefix_max_;
    bool started_ = false;
    bool done_ = false;
};

void for_each_set_partition(unsigned m, const std::function<void(const SetPartition&)>& visit);

/// Multiset of block sizes (sorted ascending) with the number of set
/// partitions realising it.
struct SizeProfile {
    std::vector<unsigned> sizes;
    Integer count;
    bool operator==(const SizeProfile&) const = default;
};

/// One block of an even partition of {1..2q}: size 2N, P elements above q.
struct BlockType {
    unsigned N = 0;
    unsigned P = 0;
    auto operator<=>(const BlockType&) const = default;
};

struct EvenBlockProfile {
    unsigned q = 0;
    std::vector<BlockType> entries;  // sorted ascending
    Integer count;
    bool operator==(const EvenBlockProfile&) const = default;
};

/// Even block sizes {2N_i} summing to 2q; count = (2q)! / (prod (2N_i)! prod mult!).
std::vector<SizeProfile> even_size_profiles(unsigned q);

/// Block sizes {N_i} summing to q; count = q! / (prod N_i! prod mult!).
std::vector<SizeProfile> galois_size_profiles(unsigned q);

/// (N, P) multisets of even partitions of {1..2q}; count =
/// q! q! / (prod (2N_i - P_i)! prod P_i! prod mult!).
std::vector<EvenBlockProfile> even_block_profiles(unsigned q);

}  // namespace littlewood

#endif
