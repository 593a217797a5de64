#pragma once

#include <string>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

struct SweepOptions {
    Theory theory = Theory::B;
    int max_rank = 1;
    GapConvention gap = GapConvention::Strict;
    bool parallel = true;  // false selects the serial reference path
};

struct SweepFailure {
    std::string check;      // which property failed
    std::string partition;  // exponent form
    std::string detail;
};

struct PartitionRecord {
    std::string partition;  // exponent form
    int rank = 0;
    bool all_pass = true;
};

struct SweepResult {
    long long rigid_checked = 0;
    long long valid_checked = 0;  // parity check runs on all valid partitions
    std::vector<PartitionRecord> records;  // rigid partitions, canonical order
    std::vector<SweepFailure> failures;    // canonical order
};

/// Runs every cross-check on each rigid partition up to the rank bound
/// (three-way method equality, shape, block fold, contribution
/// completeness, structure theorem, monotonicity, render round trip) and
/// the pairwise parity check on each valid partition. Output is
/// deterministic and identical for the serial and parallel paths.
SweepResult run_verification(const SweepOptions& opts);

}  // namespace springer
