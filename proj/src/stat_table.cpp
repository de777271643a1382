#include "ballotlab/stat_table.hpp"

#include <sstream>
#include <stdexcept>

#include "ballotlab/enumerate.hpp"

namespace ballotlab {

Stat parse_stat(std::string_view name) {
    if (name == "des") return Stat::Des;
    if (name == "asc") return Stat::Asc;
    if (name == "pk") return Stat::Pk;
    if (name == "depth") return Stat::Depth;
    if (name == "height") return Stat::Height;
    throw std::invalid_argument("unknown statistic: " + std::string(name));
}

std::string_view stat_name(Stat s) {
    switch (s) {
        case Stat::Des: return "des";
        case Stat::Asc: return "asc";
        case Stat::Pk: return "pk";
        case Stat::Depth: return "depth";
        case Stat::Height: return "height";
    }
    throw std::invalid_argument("bad Stat value");
}

int eval_stat(Stat s, std::span<const int> w) {
    switch (s) {
        case Stat::Des: return des(w);
        case Stat::Asc: return asc(w);
        case Stat::Pk: return pk(w);
        case Stat::Depth: return depth(w);
        case Stat::Height: return height(w);
    }
    throw std::invalid_argument("bad Stat value");
}

void StatTable::add(int n, std::vector<int> values, const mpz_class& count) {
    if (values.size() != stat_names_.size())
        throw std::invalid_argument("StatTable::add: tuple arity mismatch");
    entries_[Key(n, std::move(values))] += count;
}

mpz_class StatTable::at(int n, const std::vector<int>& values) const {
    auto it = entries_.find(Key(n, values));
    return it == entries_.end() ? mpz_class(0) : it->second;
}

std::map<std::vector<int>, mpz_class> StatTable::row(int n) const {
    std::map<std::vector<int>, mpz_class> out;
    for (auto it = entries_.lower_bound(Key(n, {})); it != entries_.end() && it->first.first == n; ++it)
        out.emplace(it->first.second, it->second);
    return out;
}

mpz_class StatTable::row_sum(int n) const {
    mpz_class s = 0;
    for (auto it = entries_.lower_bound(Key(n, {})); it != entries_.end() && it->first.first == n; ++it)
        s += it->second;
    return s;
}

void StatTable::merge(const StatTable& other) {
    if (other.stat_names_ != stat_names_)
        throw std::invalid_argument("StatTable::merge: incompatible statistics");
    for (const auto& [k, v] : other.entries_) entries_[k] += v;
    n_max_ = std::max(n_max_, other.n_max_);
}

std::string StatTable::to_csv() const {
    std::ostringstream os;
    os << "n";
    for (const auto& s : stat_names_) os << ',' << s;
    os << ",count\n";
    for (const auto& [k, v] : entries_) {
        os << k.first;
        for (int x : k.second) os << ',' << x;
        os << ',' << v.get_str() << '\n';
    }
    return os.str();
}

std::string StatTable::to_json() const {
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (const auto& [k, v] : entries_) {
        if (!first) os << ",";
        first = false;
        os << "{\"n\":" << k.first;
        for (size_t i = 0; i < stat_names_.size(); ++i)
            os << ",\"" << stat_names_[i] << "\":" << k.second[i];
        os << ",\"count\":\"" << v.get_str() << "\"}";
    }
    os << "]";
    return os.str();
}

StatTable make_stat_table(int n_max, GroundSet ground, const std::vector<Stat>& stats) {
    check_enumerable(n_max);
    std::vector<std::string> names;
    names.reserve(stats.size());
    for (Stat s : stats) names.emplace_back(stat_name(s));
    StatTable table(std::move(names), n_max);
    for (int n = 0; n <= n_max; ++n) {
        for_each_word(n, [&](const std::vector<int>& w) {
            std::span<const int> span(w);
            if (ground == GroundSet::Ballot && !is_ballot(span)) return;
            std::vector<int> vals;
            vals.reserve(stats.size());
            for (Stat s : stats) vals.push_back(eval_stat(s, span));
            table.add(n, std::move(vals));
        });
    }
    return table;
}

StatTable make_stat_table(int n_max, GroundSet ground, const std::vector<std::string>& stats) {
    std::vector<Stat> parsed;
    parsed.reserve(stats.size());
    for (const auto& s : stats) parsed.push_back(parse_stat(s));
    return make_stat_table(n_max, ground, parsed);
}

}  // namespace ballotlab
