#pragma once

#include <set>
#include <string>
#include <vector>

#include "fmk/errors.hpp"

namespace fmk {

// A partition of a finite integer set. Blocks are kept sorted internally
// (each block ascending, blocks ordered by their minimum), so structural
// equality is plain equality. Ground sets are arbitrary integer sets, not
// just {1..n}: restrictions of partitions to sub-multi-indices need that.
struct NcPartition {
    std::vector<int> ground;                 // ascending
    std::vector<std::vector<int>> blocks;    // each ascending, ordered by min

    static NcPartition make(std::vector<std::vector<int>> blocks);

    std::size_t size() const { return ground.size(); }
    std::size_t block_count() const { return blocks.size(); }

    // Index of the block containing x, or -1.
    int block_of(int x) const;
    bool same_block(int x, int y) const;

    bool operator==(const NcPartition& o) const {
        return ground == o.ground && blocks == o.blocks;
    }
    bool operator<(const NcPartition& o) const;  // block-min sequence, then blocks

    std::string to_string() const;
};

enum class PartitionClass { NC, NC0, NCprime, NC0prime, Interval };

// Cap on |V| for enumeration; Catalan growth makes larger ground sets
// explode. Overridable per call.
inline constexpr int kDefaultPartitionCap = 14;

// The quantified crossing test:
//   i ~ i', j ~ j', i !~ j, i < j < i'  =>  i < j' < i'.
bool is_noncrossing(const NcPartition& p);

// Independent characterization: some block is an interval of the ground set
// and the partition restricted to its complement is non-crossing. The two
// implementations are cross-checked in the tests.
bool is_noncrossing_peeling(const NcPartition& p);

// Blocks B such that no i, i' outside B with i ~ i' straddle an element of B.
// For p in NC'(V) there is exactly one, and it contains min V and max V.
std::vector<std::vector<int>> outer_blocks(const NcPartition& p);

bool has_singleton(const NcPartition& p);

// Every partition of V in the class, each exactly once, sorted by the
// block-minimum sequence (ties broken by block contents). Throws SizeCapError
// when |V| exceeds the cap.
std::vector<NcPartition> enumerate_partitions(const std::vector<int>& ground,
                                              PartitionClass cls,
                                              int cap = kDefaultPartitionCap);

// The interval partition of {1..n} whose blocks end exactly at the cut points
// in S (subset of {1..n-1}).
NcPartition interval_partition_from_subset(const std::set<int>& cuts, int n);

// Cached enumerations of NC({1..n}) and NC_0({1..n}); these sit inside the
// moment-cumulant recursions, so they are memoized behind a mutex.
const std::vector<NcPartition>& nc_partitions(int n);
const std::vector<NcPartition>& nc0_partitions(int n);

}  // namespace fmk
