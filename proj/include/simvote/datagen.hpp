#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "simvote/defuzzifier.hpp"
#include "simvote/partition_tree.hpp"

namespace simvote {

/// SplitMix64 (Steele, Lea & Flood, 2014), the generator behind every
/// synthetic tree and dataset. Its output sequence is part of the file-format
/// contract: changing it changes generated bytes.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    /// Uniform in [0, bound) by rejection; bound must be positive.
    std::uint64_t bounded(std::uint64_t bound) noexcept;

    /// Output number `index` (0-based) of SplitMix64(seed), without stepping.
    static std::uint64_t at(std::uint64_t seed, std::uint64_t index) noexcept { return mix(seed + kGamma * (index + 1)); }

    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

private:
    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

struct TreeSpec {
    std::size_t domain_size = 0;
    std::vector<double> level_alphas;
    std::vector<std::size_t> branching;  // class count per level, root first
};

/// Evenly spaced alphas from 0.0 to 1.0 and power-of-two branching
/// 1, 2, 4, ... with the full domain at the deepest level. levels=2 gives the
/// flat root-plus-leaves shape.
TreeSpec default_tree_spec(std::size_t levels, std::size_t domain_size = 32);

struct DatasetSpec {
    std::size_t record_count = 0;
    std::size_t values_per_record = 0;
    std::uint64_t seed = 0;
};

/// "v00", "v01", ... zero-padded to at least two digits.
std::vector<std::string> generated_labels(std::size_t domain_size);

/// Builds a tree level by level. Extra classes come from splitting the class
/// with the largest resulting part first (earliest class on ties); a split
/// deals shuffled members into parts whose sizes differ by at most one. The
/// deepest level is all singletons. Throws InfeasibleSpec.
PartitionTree generate_tree(const TreeSpec& spec, std::uint64_t seed);

/// Record i draws a uniform k-subset by partial Fisher-Yates from the stream
/// SplitMix64(SplitMix64::at(seed, i)); values are listed in domain order and
/// ids are "r000001", "r000002", ... Throws InfeasibleSpec.
std::vector<FuzzyRecord> generate_records(const PartitionTree& tree, const DatasetSpec& spec);

}  // namespace simvote
