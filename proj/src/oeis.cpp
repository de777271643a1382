#include "ballotlab/oeis.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ballotlab/enumerate.hpp"
#include "ballotlab/eulerian.hpp"
#include "ballotlab/stat_table.hpp"

namespace ballotlab {

OeisBFile parse_b_file(std::istream& in, std::string sequence_id) {
    OeisBFile file;
    file.sequence_id = std::move(sequence_id);
    std::string line;
    long lineno = 0;
    bool have_first = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long index;
        std::string value;
        if (!(ls >> index)) {
            std::string rest;
            if (ls.clear(), ls >> rest)
                throw std::runtime_error("b-file line " + std::to_string(lineno) + ": bad index");
            continue;  // blank or comment-only line
        }
        if (!(ls >> value))
            throw std::runtime_error("b-file line " + std::to_string(lineno) + ": missing value");
        mpz_class v;
        if (v.set_str(value, 10) != 0)
            throw std::runtime_error("b-file line " + std::to_string(lineno) + ": bad value");
        if (!have_first) {
            file.first_index = index;
            have_first = true;
        } else if (index != file.first_index + static_cast<long>(file.values.size())) {
            throw std::runtime_error("b-file line " + std::to_string(lineno) + ": index gap");
        }
        file.values.push_back(std::move(v));
    }
    if (file.values.empty()) throw std::runtime_error("b-file has no entries");
    return file;
}

OeisBFile load_b_file(const std::string& path, std::string sequence_id) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open b-file: " + path);
    return parse_b_file(in, std::move(sequence_id));
}

std::vector<std::string> known_oeis_sequences() { return {"A000246", "A008292", "A321280"}; }

namespace {

struct TriEntry {
    int n, d;
    mpz_class value;
};

// Flattened triangle entries in row order starting at row 1.
std::vector<TriEntry> computed_prefix(const std::string& id, size_t want) {
    std::vector<TriEntry> out;
    if (id == "A000246") {
        for (int n = 0; out.size() < want; ++n) out.push_back({n, 0, ballot_count(n)});
        return out;
    }
    if (id == "A008292") {
        for (int n = 1; out.size() < want; ++n)
            for (int d = 0; d <= n - 1 && out.size() < want; ++d)
                out.push_back({n, d, eulerian(n, d)});
        return out;
    }
    if (id == "A321280") {
        const int n_cap = enumeration_limit();
        StatTable tab = make_stat_table(n_cap, GroundSet::Ballot, {Stat::Des});
        for (int n = 1; n <= n_cap && out.size() < want; ++n)
            for (int d = 0; 2 * d <= n - 1 && out.size() < want; ++d)
                out.push_back({n, d, tab.at(n, {d})});
        return out;  // may be shorter than want; caller handles the cap
    }
    throw std::runtime_error("unknown OEIS sequence: " + id);
}

long expected_offset(const std::string& id) { return id == "A000246" ? 0 : 1; }

}  // namespace

VerificationReport oeis_check(const OeisBFile& file) {
    const long offset = expected_offset(file.sequence_id);  // throws on unknown id
    if (file.first_index != offset)
        throw std::runtime_error("b-file for " + file.sequence_id + " starts at index " +
                                 std::to_string(file.first_index) + ", expected " +
                                 std::to_string(offset));
    return timed_report("oeis", [&](VerificationReport& rep) {
        rep.parameters["sequence"] = file.sequence_id;
        auto computed = computed_prefix(file.sequence_id, file.values.size());
        const size_t checked = std::min(computed.size(), file.values.size());
        rep.parameters["terms_checked"] = checked;
        for (size_t i = 0; i < checked; ++i) {
            if (computed[i].value != file.values[i]) {
                nlohmann::json ce;
                ce["index"] = file.first_index + static_cast<long>(i);
                ce["row_n"] = computed[i].n;
                ce["row_d"] = computed[i].d;
                ce["computed"] = computed[i].value.get_str();
                ce["b_file"] = file.values[i].get_str();
                rep.fail(ce);
                return;
            }
        }
    });
}

}  // namespace ballotlab
