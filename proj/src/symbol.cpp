#include "springer/symbol.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace springer {

std::pair<int, int> symbol_shape(int unpadded_length, Theory th) {
    const int l = unpadded_length;
    const int p = (l + l % 2) / 2;  // (l + (1-(-1)^l)/2) / 2
    return {p, p + offset(th)};
}

Symbol symbol_by_definition(const PaddedSequence& seq) {
    const int l = seq.padded_length();
    std::vector<int> odd, even;
    for (int k = 0; k < l; ++k) {
        if (k > 0 && seq.values[k - 1] < seq.values[k])
            throw std::invalid_argument("padded sequence must be weakly decreasing");
        if (seq.values[k] < 0)
            throw std::invalid_argument("padded sequence entries must be >= 0");
        const int v = l - (k + 1) + seq.values[k];  // strictly decreasing in k
        (v % 2 != 0 ? odd : even).push_back(v);
    }
    std::sort(odd.begin(), odd.end());
    std::sort(even.begin(), even.end());
    Symbol s;
    s.theory = seq.theory;
    s.source_length = seq.source_length;
    for (size_t i = 0; i < odd.size(); ++i)
        s.top.push_back((odd[i] - 1) / 2 - static_cast<int>(i));
    for (size_t i = 0; i < even.size(); ++i)
        s.bottom.push_back(even[i] / 2 - static_cast<int>(i));
    return s;
}

Symbol compute_symbol(const Partition& p, Theory th) {
    return symbol_by_definition(pad(p, th));
}

ContributionMap contribution_map(const PaddedSequence& seq) {
    const int l = seq.padded_length();
    std::vector<std::pair<int, int>> odd, even;  // (v, position)
    for (int k = 0; k < l; ++k) {
        const int v = l - (k + 1) + seq.values[k];
        (v % 2 != 0 ? odd : even).emplace_back(v, k);
    }
    std::sort(odd.begin(), odd.end());
    std::sort(even.begin(), even.end());
    ContributionMap cm;
    cm.entries.resize(static_cast<size_t>(l));
    for (size_t i = 0; i < odd.size(); ++i) {
        auto [v, k] = odd[i];
        cm.entries[static_cast<size_t>(k)] = {
            {Row::Top, static_cast<int>(i)}, (v - 1) / 2 - static_cast<int>(i)};
    }
    for (size_t i = 0; i < even.size(); ++i) {
        auto [v, k] = even[i];
        cm.entries[static_cast<size_t>(k)] = {
            {Row::Bottom, static_cast<int>(i)}, v / 2 - static_cast<int>(i)};
    }
    return cm;
}

ContributionMap contribution_map(const Partition& p, Theory th) {
    return contribution_map(pad(p, th));
}

Symbol normalize(Symbol s) {
    size_t drop = 0;
    while (drop < s.top.size() && drop < s.bottom.size() &&
           s.top[drop] == 0 && s.bottom[drop] == 0)
        ++drop;
    s.top.erase(s.top.begin(), s.top.begin() + static_cast<long>(drop));
    s.bottom.erase(s.bottom.begin(), s.bottom.begin() + static_cast<long>(drop));
    return s;
}

std::string render(const Symbol& s) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < s.top.size(); ++i) {
        if (i) out << ' ';
        out << s.top[i];
    }
    out << " / ";
    for (size_t i = 0; i < s.bottom.size(); ++i) {
        if (i) out << ' ';
        out << s.bottom[i];
    }
    out << ')';
    return out.str();
}

std::string to_machine(const Symbol& s, const Partition& p) {
    nlohmann::json j;
    j["theory"] = std::string(1, letter(s.theory));
    j["partition"] = std::vector<int>(p.parts().begin(), p.parts().end());
    j["top"] = s.top;
    j["bottom"] = s.bottom;
    return j.dump();
}

std::pair<Symbol, Partition> from_machine(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Symbol s;
    s.theory = theory_from_string(j.at("theory").get<std::string>());
    s.top = j.at("top").get<std::vector<int>>();
    s.bottom = j.at("bottom").get<std::vector<int>>();
    Partition p(j.at("partition").get<std::vector<int>>());
    s.source_length = p.length();
    return {std::move(s), std::move(p)};
}

}  // namespace springer
