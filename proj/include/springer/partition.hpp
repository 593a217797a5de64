#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace springer {

/// Classical theory selecting the parity rules and the symbol row offset.
enum class Theory { B, C, D };

/// Row-length offset t between the two symbol rows: #bottom = #top + t.
constexpr int offset(Theory th) {
    switch (th) {
        case Theory::B: return -1;
        case Theory::C: return 0;
        case Theory::D: return 1;
    }
    return 0;
}

constexpr char letter(Theory th) {
    switch (th) {
        case Theory::B: return 'B';
        case Theory::C: return 'C';
        case Theory::D: return 'D';
    }
    return '?';
}

Theory theory_from_string(std::string_view s);

/// Whether the smallest-part-to-zero step counts as a gap when deciding
/// rigidity. Strict treats the part after the last as 0, so a rigid
/// partition must end in 1-parts.
enum class GapConvention { Strict, Loose };

/// Weakly decreasing sequence of positive integers. Keeps the part list
/// as the primary view; multiplicities and tail counts are derived.
class Partition {
  public:
    explicit Partition(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int total() const { return total_; }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const { return parts_.empty() ? 0 : parts_.back(); }
    int part(int k) const { return parts_[static_cast<size_t>(k)]; }  // 0-based

    /// n_j: number of parts equal to j.
    int multiplicity(int j) const;
    /// L(j) = sum_{i>=j} n_i: number of parts >= j, i.e. the length of the
    /// j-th row of the conjugate diagram. L(j) = 0 for j > largest().
    int tail_count(int j) const;

    Partition conjugate() const;

    std::string render_exponent() const;  // "9^4 8^2 1"
    std::string render_list() const;      // "9,9,9,9,8,8,1"

    /// Accepts either exponent tokens ("9^4 8^2 7") with strictly
    /// decreasing values, or a comma-separated nonincreasing list.
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;

  private:
    std::vector<int> parts_;
    int total_ = 0;
};

struct ValidityReport {
    bool valid = false;
    int rank = 0;            // n with total = 2n+1 (B) or 2n (C, D)
    std::string violation;   // empty when valid
};

ValidityReport validate(const Partition& p, Theory th);

/// Rigidity: no gaps and no forbidden part value appearing exactly twice
/// (odd values for B/D, even values for C). Throws std::invalid_argument
/// if (p, th) is not a valid pair.
bool is_rigid(const Partition& p, Theory th,
              GapConvention gap = GapConvention::Strict);

/// Partition after the theory-specific zero padding of the definition.
struct PaddedSequence {
    std::vector<int> values;  // weakly decreasing, >= 0
    int source_length = 0;    // length before padding
    Theory theory = Theory::B;

    int padded_length() const { return static_cast<int>(values.size()); }
};

/// B: identity; C: one trailing 0 iff the length is odd; D: always one
/// trailing 0. Throws if (p, th) is invalid.
PaddedSequence pad(const Partition& p, Theory th);

/// Calls fn for every partition of n, part lists in lexicographically
/// decreasing order.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

/// All valid rigid partitions of 2n+1 (B) or 2n (C, D), canonical order.
std::vector<Partition> enumerate_rigid(int rank, Theory th,
                                       GapConvention gap = GapConvention::Strict);

/// All valid partitions for the given rank, canonical order.
std::vector<Partition> enumerate_valid(int rank, Theory th);

}  // namespace springer
