#include "littlewood/partitions.hpp"

#include <stdexcept>
#include <string>

#include "littlewood/number_core.hpp"

namespace littlewood {

SetPartitionEnumerator::SetPartitionEnumerator(unsigned m) : m_(m), growth_(m, 0), prefix_max_(m, 0) {
    if (m == 0) throw std::invalid_argument("set partitions need m >= 1");
    if (m > kMaxEnumeratedSet) {
        throw std::length_error("refusing to enumerate partitions of a " + std::to_string(m) +
                                "-set (limit " + std::to_string(kMaxEnumeratedSet) + ")");
    }
}

bool SetPartitionEnumerator::next(SetPartition& out) {
    if (done_) return false;
    if (started_) {
        // Rightmost position that may still grow: a[i] <= max(a[0..i-1]).
        std::size_t i = m_;
        while (i-- > 1) {
            if (growth_[i] <= prefix_max_[i - 1]) break;
        }
        if (i == 0 || i >= m_) {
            done_ = true;
            return false;
        }
        ++growth_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], growth_[i]);
        for (std::size_t j = i + 1; j < m_; ++j) {
            growth_[j] = 0;
            prefix_max_[j] = prefix_max_[i];
        }
    }
    started_ = true;

    out.blocks.assign(prefix_max_[m_ - 1] + 1, {});
    for (unsigned e = 0; e < m_; ++e) out.blocks[growth_[e]].push_back(e + 1);
    return true;
}

void for_each_set_partition(unsigned m, const std::function<void(const SetPartition&)>& visit) {
    SetPartitionEnumerator en(m);
    SetPartition p;
    while (en.next(p)) visit(p);
}

namespace {

// Nondecreasing integer partitions of `total` with parts >= min_part.
void integer_partitions(unsigned total, unsigned min_part, std::vector<unsigned>& parts,
                        const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (total == 0) {
        visit(parts);
        return;
    }
    for (unsigned part = min_part; part <= total; ++part) {
        parts.push_back(part);
        integer_partitions(total - part, part, parts, visit);
        parts.pop_back();
    }
}

template <class T>
Integer multiplicity_factorials(const std::vector<T>& sorted) {
    Integer prod = 1;
    std::size_t run = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        run = (i > 0 && sorted[i] == sorted[i - 1]) ? run + 1 : 1;
        if (i + 1 == sorted.size() || !(sorted[i + 1] == sorted[i])) prod *= factorial(static_cast<unsigned>(run));
    }
    return prod;
}

void check_q(unsigned q, const char* who) {
    if (q == 0) throw std::invalid_argument(std::string(who) + ": q must be >= 1");
}

}  // namespace

std::vector<SizeProfile> even_size_profiles(unsigned q) {
    check_q(q, "even_size_profiles");
    std::vector<SizeProfile> out;
    std::vector<unsigned> parts;
    const Integer total = factorial(2 * q);
    integer_partitions(q, 1, parts, [&](const std::vector<unsigned>& halves) {
        SizeProfile prof;
        Integer denom = multiplicity_factorials(halves);
        for (unsigned n : halves) {
            prof.sizes.push_back(2 * n);
            denom *= factorial(2 * n);
        }
        prof.count = total / denom;
        out.push_back(std::move(prof));
    });
    return out;
}

std::vector<SizeProfile> galois_size_profiles(unsigned q) {
    check_q(q, "galois_size_profiles");
    std::vector<SizeProfile> out;
    std::vector<unsigned> parts;
    const Integer total = factorial(q);
    integer_partitions(q, 1, parts, [&](const std::vector<unsigned>& sizes) {
        SizeProfile prof;
        prof.sizes = sizes;
        Integer denom = multiplicity_factorials(sizes);
        for (unsigned n : sizes) denom *= factorial(n);
        prof.count = total / denom;
        out.push_back(std::move(prof));
    });
    return out;
}

namespace {

void block_profiles(const std::vector<BlockType>& types, std::size_t first, unsigned rem_low, unsigned rem_high,
                    std::vector<BlockType>& chosen, const std::function<void(const std::vector<BlockType>&)>& visit) {
    if (rem_low == 0 && rem_high == 0) {
        visit(chosen);
        return;
    }
    for (std::size_t t = first; t < types.size(); ++t) {
        const unsigned low = 2 * types[t].N - types[t].P;
        const unsigned high = types[t].P;
        if (low > rem_low || high > rem_high) continue;
        chosen.push_back(types[t]);
        block_profiles(types, t, rem_low - low, rem_high - high, chosen, visit);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<EvenBlockProfile> even_block_profiles(unsigned q) {
    check_q(q, "even_block_profiles");
    // A block of size 2N takes 2N-P elements from {1..q} and P from {q+1..2q}.
    std::vector<BlockType> types;
    for (unsigned N = 1; N <= q; ++N) {
        for (unsigned P = 0; P <= 2 * N; ++P) {
            if (2 * N - P <= q && P <= q) types.push_back({N, P});
        }
    }
    std::vector<EvenBlockProfile> out;
    std::vector<BlockType> chosen;
    const Integer total = factorial(q) * factorial(q);
    block_profiles(types, 0, q, q, chosen, [&](const std::vector<BlockType>& entries) {
        EvenBlockProfile prof;
        prof.q = q;
        prof.entries = entries;
        Integer denom = multiplicity_factorials(entries);
        for (const auto& b : entries) denom *= factorial(2 * b.N - b.P) * factorial(b.P);
        prof.count = total / denom;
        out.push_back(std::move(prof));
    });
    return out;
}

}  // namespace littlewood
