#include "springer/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace springer {

Theory theory_from_string(std::string_view s) {
    if (s == "B" || s == "b") return Theory::B;
    if (s == "C" || s == "c") return Theory::C;
    if (s == "D" || s == "d") return Theory::D;
    throw std::invalid_argument("unknown theory: " + std::string(s));
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be nonincreasing");
    }
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int j) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

int Partition::tail_count(int j) const {
    // parts_ is nonincreasing, so parts >= j form a prefix
    auto it = std::lower_bound(parts_.begin(), parts_.end(), j,
                               [](int part, int v) { return part >= v; });
    return static_cast<int>(it - parts_.begin());
}

Partition Partition::conjugate() const {
    std::vector<int> rows;
    rows.reserve(static_cast<size_t>(largest()));
    for (int j = 1; j <= largest(); ++j) rows.push_back(tail_count(j));
    return Partition(std::move(rows));
}

std::string Partition::render_exponent() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!first) out << ' ';
        first = false;
        out << parts_[i];
        if (j - i > 1) out << '^' << (j - i);
        i = j;
    }
    return out.str();
}

std::string Partition::render_list() const {
    std::ostringstream out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    return out.str();
}

namespace {

int parse_int(std::string_view tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw std::invalid_argument("malformed integer: '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(sep, start);
        if (end == std::string_view::npos) end = text.size();
        out.push_back(text.substr(start, end - start));
        start = end + 1;
        if (end == text.size()) break;
    }
    return out;
}

}  // namespace

Partition Partition::parse(std::string_view text) {
    // trim
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty partition text");

    std::vector<int> parts;
    if (text.find(',') != std::string_view::npos) {
        for (auto tok : split(text, ',')) {
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            int v = parse_int(tok);
            if (v < 1) throw std::invalid_argument("part must be positive");
            if (!parts.empty() && parts.back() < v)
                throw std::invalid_argument("list form must be nonincreasing");
            parts.push_back(v);
        }
    } else {
        int prev_value = 0;
        std::istringstream in{std::string(text)};
        std::string tok;
        while (in >> tok) {
            std::string_view t = tok;
            size_t caret = t.find('^');
            int value, mult;
            if (caret == std::string_view::npos) {
                value = parse_int(t);
                mult = 1;
            } else {
                value = parse_int(t.substr(0, caret));
                mult = parse_int(t.substr(caret + 1));
            }
            if (value < 1) throw std::invalid_argument("part must be positive");
            if (mult < 1) throw std::invalid_argument("multiplicity must be >= 1");
            if (prev_value != 0 && value >= prev_value)
                throw std::invalid_argument(
                    "exponent form requires strictly decreasing values");
            prev_value = value;
            parts.insert(parts.end(), static_cast<size_t>(mult), value);
        }
        if (parts.empty()) throw std::invalid_argument("empty partition text");
    }
    return Partition(std::move(parts));
}

ValidityReport validate(const Partition& p, Theory th) {
    ValidityReport rep;
    const int total = p.total();
    const bool total_odd = total % 2 != 0;
    if (th == Theory::B ? !total_odd : total_odd) {
        rep.violation = th == Theory::B ? "total must be odd" : "total must be even";
        return rep;
    }
    // parity class whose multiplicities must all be even
    const int bad_parity = th == Theory::C ? 1 : 0;
    auto parts = p.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i] % 2 == bad_parity && (j - i) % 2 != 0) {
            std::ostringstream msg;
            msg << (bad_parity ? "odd" : "even") << " part " << parts[i]
                << " has odd multiplicity " << (j - i);
            rep.violation = msg.str();
            return rep;
        }
        i = j;
    }
    rep.valid = true;
    rep.rank = th == Theory::B ? (total - 1) / 2 : total / 2;
    return rep;
}

bool is_rigid(const Partition& p, Theory th, GapConvention gap) {
    auto rep = validate(p, th);
    if (!rep.valid)
        throw std::invalid_argument("is_rigid: invalid partition for theory: " +
                                    rep.violation);
    auto parts = p.parts();
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] - parts[i + 1] > 1) return false;
    if (gap == GapConvention::Strict && !parts.empty() && parts.back() != 1)
        return false;
    // forbidden parity appearing exactly twice: odd for B/D, even for C
    const int forbidden_parity = th == Theory::C ? 0 : 1;
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i] % 2 == forbidden_parity && j - i == 2) return false;
        i = j;
    }
    return true;
}

PaddedSequence pad(const Partition& p, Theory th) {
    auto rep = validate(p, th);
    if (!rep.valid)
        throw std::invalid_argument("pad: invalid partition for theory: " +
                                    rep.violation);
    PaddedSequence seq;
    seq.values.assign(p.parts().begin(), p.parts().end());
    seq.source_length = p.length();
    seq.theory = th;
    if (th == Theory::C && p.length() % 2 != 0) seq.values.push_back(0);
    if (th == Theory::D) seq.values.push_back(0);
    return seq;
}

namespace {

void descend(std::vector<int>& acc, int remaining, int max_part,
             const std::function<void(const Partition&)>& fn) {
    if (remaining == 0) {
        fn(Partition(acc));
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        acc.push_back(first);
        descend(acc, remaining - first, first, fn);
        acc.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
    std::vector<int> acc;
    descend(acc, n, n, fn);
}

std::vector<Partition> enumerate_rigid(int rank, Theory th, GapConvention gap) {
    if (rank < 1) throw std::invalid_argument("enumerate_rigid: rank must be >= 1");
    const int total = th == Theory::B ? 2 * rank + 1 : 2 * rank;
    std::vector<Partition> out;
    for_each_partition(total, [&](const Partition& p) {
        if (validate(p, th).valid && is_rigid(p, th, gap)) out.push_back(p);
    });
    return out;
}

std::vector<Partition> enumerate_valid(int rank, Theory th) {
    if (rank < 1) throw std::invalid_argument("enumerate_valid: rank must be >= 1");
    const int total = th == Theory::B ? 2 * rank + 1 : 2 * rank;
    std::vector<Partition> out;
    for_each_partition(total, [&](const Partition& p) {
        if (validate(p, th).valid) out.push_back(p);
    });
    return out;
}

}  // namespace springer
