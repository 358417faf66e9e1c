#include "ciflie/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ciflie::json_io {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError("expected a rational string, got " + j.dump());
}

json vector_to_json(const SuperVector& v) {
    json out = json::array();
    for (FieldElem c : v.coords) out.push_back(c);
    return out;
}

SuperVector vector_from_json(const json& j, const LieSuperalgebra& alg) {
    if (!j.is_array())
        throw ParseError("expected a coordinate array, got " + j.dump());
    SuperVector v;
    for (const json& c : j) {
        if (!c.is_number_integer())
            throw ParseError("vector coordinate is not an integer");
        const std::int64_t raw = c.get<std::int64_t>();
        if (raw < 0 || raw >= alg.field().p)
            throw ParseError("vector coordinate " + std::to_string(raw) +
                             " outside [0," + std::to_string(alg.field().p) +
                             ")");
        v.coords.push_back(raw);
    }
    alg.check_element(v);
    return v;
}

json algebra_to_json(const LieSuperalgebra& alg) {
    json sc = json::array();
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const SuperVector& br = alg.basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (br.coords[k] != 0)
                    sc.push_back(json::array({i, j, k, br.coords[k]}));
        }
    return json{{"p", alg.field().p},
                {"d0", alg.d0()},
                {"d1", alg.d1()},
                {"sc", sc}};
}

AlgebraPtr algebra_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("algebra document is not an object");
    for (const char* key : {"p", "d0", "d1"})
        if (!j.contains(key) || !j[key].is_number_integer())
            throw ParseError(std::string("algebra document missing integer '") +
                             key + "'");
    std::vector<ScEntry> sc;
    if (j.contains("sc")) {
        if (!j["sc"].is_array()) throw ParseError("'sc' is not an array");
        for (const json& e : j["sc"]) {
            if (!e.is_array() || e.size() != 4)
                throw ParseError("structure constant entry is not [i,j,k,v]");
            sc.push_back(ScEntry{e[0].get<std::size_t>(),
                                 e[1].get<std::size_t>(),
                                 e[2].get<std::size_t>(),
                                 e[3].get<std::int64_t>()});
        }
    }
    return make_superalgebra(j["p"].get<std::int64_t>(),
                             j["d0"].get<std::size_t>(),
                             j["d1"].get<std::size_t>(), sc);
}

namespace {

std::string join_path(const std::string& dir, const std::string& file) {
    if (dir.empty() || file.empty() || file.front() == '/') return file;
    return dir + "/" + file;
}

AlgebraPtr algebra_from_field(const json& j, const std::string& base_dir) {
    if (j.is_string())
        return algebra_from_json(load_json(join_path(base_dir, j.get<std::string>())));
    return algebra_from_json(j);
}

CIFValue value_from_entry(const json& e) {
    for (const char* key : {"lr", "lw", "rr", "rw"})
        if (!e.contains(key))
            throw ParseError(std::string("entry missing '") + key + "'");
    return CIFValue(UnitValue(rational_from_json(e["lr"]),
                              rational_from_json(e["lw"])),
                    UnitValue(rational_from_json(e["rr"]),
                              rational_from_json(e["rw"])));
}

json value_to_entry_fields(const CIFValue& v) {
    return json{{"lr", rational_to_json(v.lambda.r)},
                {"lw", rational_to_json(v.lambda.w)},
                {"rr", rational_to_json(v.rho.r)},
                {"rw", rational_to_json(v.rho.w)}};
}

} // namespace

json cifset_to_json(const CIFSet& a) {
    json entries = json::array();
    const auto& alg = *a.ambient();
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        json e = value_to_entry_fields(a.at_index(i));
        e["x"] = vector_to_json(alg.element_at(i));
        entries.push_back(std::move(e));
    }
    return json{{"algebra", algebra_to_json(alg)}, {"entries", entries}};
}

CIFSet cifset_from_json(const json& j, const std::string& base_dir) {
    if (!j.is_object() || !j.contains("algebra"))
        throw ParseError("set document missing 'algebra'");
    const AlgebraPtr alg = algebra_from_field(j["algebra"], base_dir);
    const std::uint64_t n = alg->checked_universe_size();

    std::optional<CIFValue> fallback;
    if (j.contains("default")) fallback = value_from_entry(j["default"]);

    std::vector<std::optional<CIFValue>> table(n);
    if (j.contains("entries")) {
        if (!j["entries"].is_array())
            throw ParseError("'entries' is not an array");
        for (const json& e : j["entries"]) {
            if (!e.contains("x")) throw ParseError("entry missing 'x'");
            const std::uint64_t idx =
                alg->index_of(vector_from_json(e["x"], *alg));
            if (table[idx].has_value())
                throw ParseError("duplicate entry for element " +
                                 e["x"].dump());
            table[idx] = value_from_entry(e);
        }
    }
    std::vector<CIFValue> dense;
    dense.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (table[i].has_value())
            dense.push_back(*table[i]);
        else if (fallback.has_value())
            dense.push_back(*fallback);
        else
            throw ParseError("no entry and no default for element index " +
                             std::to_string(i));
    }
    return CIFSet(alg, std::move(dense));
}

json linear_map_to_json(const LinearMap& m) {
    json rows = json::array();
    for (const auto& row : m.matrix) {
        json r = json::array();
        for (FieldElem v : row) r.push_back(v);
        rows.push_back(std::move(r));
    }
    return json{{"source", algebra_to_json(*m.source)},
                {"target", algebra_to_json(*m.target)},
                {"matrix", rows}};
}

LinearMap linear_map_from_json(const json& j, const std::string& base_dir) {
    if (!j.is_object() || !j.contains("source") || !j.contains("target") ||
        !j.contains("matrix"))
        throw ParseError("map document needs 'source', 'target', 'matrix'");
    const AlgebraPtr src = algebra_from_field(j["source"], base_dir);
    const AlgebraPtr tgt = algebra_from_field(j["target"], base_dir);
    std::vector<std::vector<FieldElem>> m;
    for (const json& row : j["matrix"]) {
        std::vector<FieldElem> r;
        for (const json& v : row) r.push_back(v.get<std::int64_t>());
        m.push_back(std::move(r));
    }
    return LinearMap(src, tgt, std::move(m));
}

json crisp_subset_to_json(const CrispSubset& s) {
    json members = json::array();
    for (std::uint64_t i : s.members)
        members.push_back(vector_to_json(s.ambient->element_at(i)));
    return json{{"algebra", algebra_to_json(*s.ambient)},
                {"members", members},
                {"count", s.members.size()}};
}

json witness_to_json(const Witness& w) {
    json elems = json::array();
    for (const SuperVector& v : w.elements) elems.push_back(vector_to_json(v));
    json out{{"kind", w.kind}, {"elements", elems}};
    if (w.alpha.has_value()) out["alpha"] = *w.alpha;
    if (!w.note.empty()) out["note"] = w.note;
    return out;
}

json verdict_to_json(const Verdict& v) {
    return json{{"holds", v.holds},
                {"witness", v.witness ? witness_to_json(*v.witness)
                                      : json(nullptr)},
                {"checked_pairs", v.checked}};
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json load_json(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << text;
}

std::string dir_of(const std::string& path) {
    const std::size_t pos = path.find_last_of('/');
    return pos == std::string::npos ? std::string() : path.substr(0, pos);
}

} // namespace ciflie::json_io
