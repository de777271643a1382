#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ballotlab/cycles.hpp"
#include "ballotlab/enumerate.hpp"
#include "ballotlab/eulerian.hpp"
#include "ballotlab/gf_builders.hpp"
#include "ballotlab/identities.hpp"
#include "ballotlab/rcmap.hpp"
#include "ballotlab/series.hpp"
#include "ballotlab/stat_table.hpp"

namespace py = pybind11;
using namespace ballotlab;

namespace {

py::int_ to_py_int(const mpz_class& z) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py_fraction(const mpq_class& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.get_str());
}

Permutation as_perm(const std::vector<int>& word) { return Permutation(word); }

GroundSet parse_ground(const std::string& g) {
    if (g == "all") return GroundSet::All;
    if (g == "ballot") return GroundSet::Ballot;
    throw std::invalid_argument("ground must be 'all' or 'ballot'");
}

py::list table_rows(const StatTable& t) {
    py::list rows;
    for (const auto& [key, count] : t.entries()) {
        py::dict row;
        row["n"] = key.first;
        py::tuple vals(key.second.size());
        for (size_t i = 0; i < key.second.size(); ++i) vals[i] = key.second[i];
        row["values"] = vals;
        row["count"] = to_py_int(count);
        rows.append(row);
    }
    return rows;
}

py::dict series_coeffs(const Series& s) {
    py::dict d;
    for (const auto& [m, c] : s.terms())
        d[py::make_tuple(m[Var::X], m[Var::Y], m[Var::T], m[Var::Z])] = to_py_fraction(c);
    return d;
}

TruncationBox box_from_args(int nx, int ny, int nt, int nz, int guard) {
    return TruncationBox(nx, ny, nt, nz, guard);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact statistics, bijections, and generating functions for ballot permutations";

    // linear statistics on words of distinct integers
    m.def("des", [](const std::vector<int>& w) { return des(std::span<const int>(w)); });
    m.def("asc", [](const std::vector<int>& w) { return asc(std::span<const int>(w)); });
    m.def("height", [](const std::vector<int>& w) { return height(std::span<const int>(w)); });
    m.def("pk", [](const std::vector<int>& w) { return pk(std::span<const int>(w)); });
    m.def("depth", [](const std::vector<int>& w) { return depth(std::span<const int>(w)); });
    m.def("prefix_heights",
          [](const std::vector<int>& w) { return prefix_heights(std::span<const int>(w)); });
    m.def("lowest_positions",
          [](const std::vector<int>& w) { return lowest_positions(std::span<const int>(w)); });
    m.def("is_ballot", [](const std::vector<int>& w) { return is_ballot(std::span<const int>(w)); });
    m.def("is_dyck", [](const std::vector<int>& w) { return is_dyck(std::span<const int>(w)); });
    m.def("reverse", [](const std::vector<int>& w) { return reverse_word(std::span<const int>(w)); });
    m.def("standardize",
          [](const std::vector<int>& w) { return standardize(std::span<const int>(w)).word(); });

    // enumeration
    m.def("enumeration_limit", &enumeration_limit);
    m.def("permutations", [](int n) {
        py::list out;
        for (const auto& p : permutations(n)) out.append(p.word());
        return out;
    });
    m.def("ballot_permutations", [](int n) {
        py::list out;
        for (const auto& p : ballot_permutations(n)) out.append(p.word());
        return out;
    });

    // cycles and the odd order world
    m.def("cycle_decomposition",
          [](const std::vector<int>& w) { return cycle_decomposition(as_perm(w)).cycles; });
    m.def("is_odd_order", [](const std::vector<int>& w) { return is_odd_order(as_perm(w)); });
    m.def("m_stat", [](const std::vector<int>& w) { return m_stat(as_perm(w)); });
    m.def("cdes", [](const std::vector<int>& c) { return cdes(std::span<const int>(c)); });
    m.def("casc", [](const std::vector<int>& c) { return casc(std::span<const int>(c)); });

    // counting
    m.def("eulerian", [](int n, int d) { return to_py_int(eulerian(n, d)); });
    m.def("ballot_count", [](int n) { return to_py_int(ballot_count(n)); });
    m.def("binomial", [](int n, int k) { return to_py_int(binomial(n, k)); });
    m.def("bnd_multinomial", [](int n, int d) { return to_py_int(bnd_multinomial(n, d)); });
    m.def("factor_count_ballot", [](int n, int d, int i, int j) {
        return to_py_int(factor_count_ballot(n, d, i, j));
    });
    m.def("cyclic_factor_count_odd", [](int n, int d, int i, int j) {
        return to_py_int(cyclic_factor_count_odd(n, d, i, j));
    });

    // tables
    m.def(
        "stat_table",
        [](int n_max, const std::string& ground, const std::vector<std::string>& stats) {
            return table_rows(make_stat_table(n_max, parse_ground(ground), stats));
        },
        py::arg("n_max"), py::arg("ground") = "all",
        py::arg("stats") = std::vector<std::string>{"des"});
    m.def("odd_order_table", [](int n_max) { return table_rows(odd_order_table(n_max)); });
    m.def("spiro_recurrence_table",
          [](int n_max) { return table_rows(spiro_recurrence_table(n_max)); });

    // the reversal-concatenation map
    m.def("phi", [](const std::vector<int>& rho, const std::vector<int>& tau) {
        return phi({rho, tau}).word();
    });
    m.def("split_at_first_lowest", [](const std::vector<int>& w) {
        SplitPair p = split_at_first_lowest(as_perm(w));
        return py::make_tuple(p.rho, p.tau);
    });
    m.def("split_at_last_lowest", [](const std::vector<int>& w) {
        SplitPair p = split_at_last_lowest(as_perm(w));
        return py::make_tuple(p.rho, p.tau);
    });

    // series builders, as {(e_x,e_y,e_t,e_z): Fraction}
    m.def(
        "series",
        [](const std::string& name, int nx, int ny, int nt, int nz, int guard) {
            TruncationBox box = box_from_args(nx, ny, nt, nz, guard);
            if (name == "E") return series_coeffs(gf_eulerian(box));
            if (name == "B_des") return series_coeffs(gf_b_des(box));
            if (name == "B_pk") return series_coeffs(gf_b_pk(box));
            if (name == "B_pk_des") return series_coeffs(gf_b_pk_des(box));
            if (name == "P_pk_des") return series_coeffs(gf_p_pk_des(box));
            if (name == "P_pk") return series_coeffs(gf_p_pk(box));
            if (name == "P_depth") return series_coeffs(gf_p_depth(box));
            if (name == "O") return series_coeffs(gf_o(box));
            if (name == "ballot_count") return series_coeffs(gf_ballot_count(box));
            if (name == "u") return series_coeffs(gf_uvw(box).u);
            if (name == "v") return series_coeffs(gf_uvw(box).v);
            if (name == "w") return series_coeffs(gf_uvw(box).w);
            throw std::invalid_argument("unknown series builder: " + name);
        },
        py::arg("name"), py::arg("nx") = 10, py::arg("ny") = 10, py::arg("nt") = 10,
        py::arg("nz") = 10, py::arg("guard") = 4);

    // identity checks
    m.def("identities", [] {
        py::list out;
        for (const auto& check : identity_registry()) {
            py::dict d;
            d["name"] = check.name;
            d["summary"] = check.summary;
            d["default_n_max"] = check.default_n_max;
            out.append(d);
        }
        return out;
    });
    m.def(
        "verify",
        [](const std::string& name, std::optional<int> n_max) {
            py::list out;
            for (const auto& rep : run_identity(name, n_max)) {
                py::module_ json = py::module_::import("json");
                out.append(json.attr("loads")(rep.to_json().dump()));
            }
            return out;
        },
        py::arg("name"), py::arg("n_max") = py::none());

    m.def("conjecture", [](int n_max) {
        py::list out;
        for (const auto& rec : conjecture_records(n_max)) {
            py::dict d;
            d["n"] = rec.n;
            d["d"] = rec.d;
            d["i"] = rec.i;
            d["j"] = rec.j;
            d["lhs"] = to_py_int(rec.lhs);
            d["rhs"] = to_py_int(rec.rhs);
            d["equal"] = rec.equal;
            out.append(d);
        }
        return out;
    });
}
