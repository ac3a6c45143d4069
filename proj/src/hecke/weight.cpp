#include "heis/weight.hpp"

#include "heis/errors.hpp"

#include <algorithm>
#include <sstream>

namespace heis {

Weight Weight::make(std::vector<std::pair<int, int>> entries)
{
    std::sort(entries.begin(), entries.end());
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].second <= 0)
            throw input_error("weight multiplicities must be positive");
        if (i && entries[i].first == entries[i - 1].first)
            throw input_error("weight residues must be distinct");
    }
    Weight w;
    w.entries = std::move(entries);
    // expand prod (x - r)^m, coefficients low to high
    std::vector<Q> poly{Q(1)};
    for (auto [r, m] : w.entries) {
        for (int k = 0; k < m; ++k) {
            std::vector<Q> next(poly.size() + 1);
            for (size_t j = 0; j < poly.size(); ++j) {
                next[j + 1] += poly[j];
                next[j] -= r * poly[j];
            }
            poly = std::move(next);
        }
        w.d += m;
    }
    if (w.d < 1)
        throw input_error("weight must have level at least 1");
    w.f.assign(poly.begin(), poly.end() - 1);
    return w;
}

Weight Weight::parse(const std::string& text)
{
    std::vector<std::pair<int, int>> entries;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto strip = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t"));
            s.erase(s.find_last_not_of(" \t") + 1);
            return s;
        };
        item = strip(item);
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw input_error("weight entry '" + item + "' is not residue:multiplicity");
        try {
            size_t used = 0;
            std::string a = strip(item.substr(0, colon)), b = strip(item.substr(colon + 1));
            int r = std::stoi(a, &used);
            if (used != a.size())
                throw input_error("bad residue");
            int m = std::stoi(b, &used);
            if (used != b.size())
                throw input_error("bad multiplicity");
            entries.emplace_back(r, m);
        } catch (const std::logic_error&) {
            throw input_error("weight entry '" + item + "' is not residue:multiplicity");
        }
    }
    if (entries.empty())
        throw input_error("empty weight");
    return make(std::move(entries));
}

Q Weight::residue_sum() const
{
    Q s = 0;
    for (auto [r, m] : entries)
        s += Q(r) * m;
    return s;
}

Weight Weight::shifted(int j) const
{
    auto e = entries;
    for (auto& [r, m] : e)
        r += j;
    return make(std::move(e));
}

std::string Weight::str() const
{
    std::string s;
    for (auto [r, m] : entries) {
        if (!s.empty())
            s += ",";
        s += std::to_string(r) + ":" + std::to_string(m);
    }
    return s;
}

} // namespace heis
