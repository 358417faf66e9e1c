#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ciflie/config.hpp"
#include "ciflie/fixtures.hpp"
#include "ciflie/json_io.hpp"
#include "ciflie/oracle.hpp"

namespace {

using namespace ciflie;
using json_io::json;

constexpr int kExitHolds = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

int cmd_validate(const std::string& path) {
    const json doc = json_io::load_json(path);
    if (!doc.is_object() || !doc.contains("p") || !doc.contains("d0") ||
        !doc.contains("d1"))
        throw ParseError("algebra document missing p/d0/d1");
    std::vector<ScEntry> sc;
    if (doc.contains("sc"))
        for (const json& e : doc["sc"]) {
            if (!e.is_array() || e.size() != 4)
                throw ParseError("structure constant entry is not [i,j,k,v]");
            sc.push_back(ScEntry{e[0].get<std::size_t>(),
                                 e[1].get<std::size_t>(),
                                 e[2].get<std::size_t>(),
                                 e[3].get<std::int64_t>()});
        }
    const std::int64_t p = doc["p"].get<std::int64_t>();
    AxiomReport rep;
    try {
        rep = LieSuperalgebra::check_axioms(p, doc["d0"].get<std::size_t>(),
                                            doc["d1"].get<std::size_t>(), sc);
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    }
    json out{{"prime", rep.prime_ok ? "ok" : "violated"},
             {"grading", rep.grading_ok ? "ok" : "violated"},
             {"super_skew_symmetry", rep.skew_ok ? "ok" : "violated"},
             {"super_jacobi", rep.jacobi_ok ? "ok" : "violated"},
             {"valid", rep.all_ok()}};
    json witnesses = json::object();
    if (!rep.grading_witness.empty()) witnesses["grading"] = rep.grading_witness;
    if (!rep.skew_witness.empty())
        witnesses["super_skew_symmetry"] = rep.skew_witness;
    if (!rep.jacobi_witness.empty()) witnesses["super_jacobi"] = rep.jacobi_witness;
    if (!witnesses.empty()) out["witnesses"] = witnesses;
    json warnings = json::array();
    if (rep.prime_ok && p <= 3)
        warnings.push_back("characteristic " + std::to_string(p) +
                           ": super sign conventions degenerate");
    out["warnings"] = warnings;
    std::cout << json_io::dump_canonical(out);
    return rep.all_ok() ? kExitHolds : kExitRefuted;
}

int cmd_check(const std::string& path, const std::string& predicate) {
    const CIFSet a =
        json_io::cifset_from_json(json_io::load_json(path), json_io::dir_of(path));
    Verdict v;
    if (predicate == "subspace")
        v = is_cif_subspace(a);
    else if (predicate == "subsuper")
        v = is_cif_subsuperalgebra(a);
    else if (predicate == "ideal")
        v = is_cif_ideal(a);
    else if (predicate == "anti-subsuper")
        v = is_anti_cif_subsuperalgebra(a);
    else if (predicate == "anti-ideal")
        v = is_anti_cif_ideal(a);
    else if (predicate == "graded") {
        try {
            const GradedComponents gc = graded_components(a);
            v.holds = gc.is_graded;
            if (!gc.is_graded) {
                // point at the first element where the extension sum differs
                const CIFSet ext0 = extend_from_part(a.ambient(), gc.even);
                const CIFSet ext1 = extend_from_part(a.ambient(), gc.odd);
                const CIFSet s = sum(ext0, ext1);
                Witness w{"graded", {}, std::nullopt, ""};
                for (std::uint64_t i = 0; i < a.size(); ++i)
                    if (s.at_index(i) != a.at_index(i)) {
                        w.elements.push_back(a.ambient()->element_at(i));
                        w.note = "extension sum disagrees at this element";
                        break;
                    }
                if (w.note.empty())
                    w.note = "part extensions do not intersect trivially";
                v.witness = w;
            }
        } catch (const NotHomogeneousPair& e) {
            v.holds = false;
            v.witness = Witness{"graded", {}, std::nullopt, e.what()};
        }
    } else if (predicate == "homogeneous") {
        const HomogeneityResult h = homogeneity(a);
        v.holds = h.holds;
        v.checked = h.checked_pairs;
        if (h.witness) {
            v.witness = Witness{
                "homogeneity",
                {a.ambient()->element_at(h.witness->x),
                 a.ambient()->element_at(h.witness->y)},
                std::nullopt,
                std::string("magnitude and phase orders disagree on the ") +
                    (h.witness->rho_side ? "non-membership" : "membership") +
                    " side"};
        }
    } else {
        throw ParseError("unknown predicate '" + predicate + "'");
    }
    std::cout << json_io::dump_canonical(json_io::verdict_to_json(v));
    return v.holds ? kExitHolds : kExitRefuted;
}

struct OpArgs {
    std::string name;
    std::vector<std::string> inputs;
    std::string out = "-";
    std::string alpha;
    std::string map_path;
    std::string t, s;
};

int cmd_op(const OpArgs& args) {
    auto load_set = [](const std::string& path) {
        return json_io::cifset_from_json(json_io::load_json(path),
                                         json_io::dir_of(path));
    };
    auto need_inputs = [&](std::size_t n) {
        if (args.inputs.size() != n)
            throw ParseError("op " + args.name + " expects " +
                             std::to_string(n) + " input document(s)");
    };
    json out;
    if (args.name == "sum" || args.name == "intersect" || args.name == "union") {
        need_inputs(2);
        const CIFSet a = load_set(args.inputs[0]);
        const CIFSet b = load_set(args.inputs[1]);
        const CIFSet r = args.name == "sum"
                             ? sum(a, b)
                             : (args.name == "intersect" ? intersect(a, b)
                                                         : cif_union(a, b));
        out = json_io::cifset_to_json(r);
    } else if (args.name == "scalar") {
        need_inputs(1);
        if (args.alpha.empty()) throw ParseError("op scalar requires --alpha");
        const CIFSet a = load_set(args.inputs[0]);
        const std::int64_t alpha = std::stoll(args.alpha);
        out = json_io::cifset_to_json(scalar_transform(alpha, a));
    } else if (args.name == "image" || args.name == "preimage") {
        need_inputs(1);
        if (args.map_path.empty())
            throw ParseError("op " + args.name + " requires --map");
        const LinearMap phi = json_io::linear_map_from_json(
            json_io::load_json(args.map_path), json_io::dir_of(args.map_path));
        const CIFSet a = load_set(args.inputs[0]);
        out = json_io::cifset_to_json(args.name == "image" ? image(phi, a)
                                                           : preimage(phi, a));
    } else if (args.name == "comp-c" || args.name == "comp-l") {
        need_inputs(1);
        const CIFSet a = load_set(args.inputs[0]);
        out = json_io::cifset_to_json(args.name == "comp-c" ? complement_c(a)
                                                            : complement_l(a));
    } else if (args.name == "cut-upper" || args.name == "cut-lower") {
        need_inputs(1);
        if (args.t.empty() || args.s.empty())
            throw ParseError("cuts require --t and --s");
        const CIFSet a = load_set(args.inputs[0]);
        const CutThreshold th(Rational::parse(args.t), Rational::parse(args.s));
        const CrispSubset cut =
            args.name == "cut-upper" ? upper_cut(a, th) : lower_cut(a, th);
        out = json_io::crisp_subset_to_json(cut);
    } else {
        throw ParseError("unknown op '" + args.name + "'");
    }
    json_io::write_text(args.out, json_io::dump_canonical(out));
    return kExitHolds;
}

struct TheoremArgs {
    std::string algebra_path;
    std::string ids; // comma separated; empty = all
    std::size_t seeds = 50;
    std::uint64_t base_seed = 1;
    std::string grid;
    std::string map_path;
    std::string out = "-";
    bool timings = false;
};

int cmd_theorems(const TheoremArgs& args) {
    const AlgebraPtr alg =
        json_io::algebra_from_json(json_io::load_json(args.algebra_path));
    const oracle::ValueGrid grid = args.grid.empty()
                                       ? oracle::ValueGrid::standard()
                                       : oracle::ValueGrid::parse(args.grid);
    std::vector<std::string> ids;
    if (args.ids.empty()) {
        ids = oracle::theorem_ids();
    } else {
        std::istringstream in(args.ids);
        std::string tok;
        while (std::getline(in, tok, ','))
            if (!tok.empty()) ids.push_back(tok);
        for (const std::string& id : ids)
            if (!oracle::is_theorem_id(id))
                throw ParseError("unknown theorem id '" + id + "'");
    }
    std::shared_ptr<const LinearMap> phi;
    if (!args.map_path.empty())
        phi = std::make_shared<LinearMap>(json_io::linear_map_from_json(
            json_io::load_json(args.map_path), json_io::dir_of(args.map_path)));

    json reports = json::array();
    bool all_ok = true;
    for (const std::string& id : ids) {
        const auto instances = oracle::make_theorem_instances(
            id, alg, grid, args.seeds, args.base_seed, phi);
        const oracle::TheoremReport rep = oracle::run_theorem(id, instances);
        all_ok = all_ok && !rep.refuted;
        reports.push_back(oracle::report_to_json(rep, args.timings));
    }
    json grid_json = json::array();
    for (const Rational& r : grid.levels)
        grid_json.push_back(json_io::rational_to_json(r));
    const json out{{"algebra", json_io::algebra_to_json(*alg)},
                   {"base_seed", args.base_seed},
                   {"seeds", args.seeds},
                   {"grid", grid_json},
                   {"reports", reports},
                   {"all_verified", all_ok}};
    json_io::write_text(args.out, json_io::dump_canonical(out));
    return all_ok ? kExitHolds : kExitRefuted;
}

AlgebraPtr algebra_fixture_by_name(const std::string& name) {
    // heisenberg_<p>_<n> or abelian_<p>_<d0>_<d1>
    std::vector<std::string> parts;
    std::istringstream in(name);
    std::string tok;
    while (std::getline(in, tok, '_')) parts.push_back(tok);
    try {
        if (parts.size() == 3 && parts[0] == "heisenberg")
            return fixtures::heisenberg(std::stoll(parts[1]),
                                        std::stoul(parts[2]));
        if (parts.size() == 4 && parts[0] == "abelian")
            return fixtures::abelian(std::stoll(parts[1]),
                                     std::stoul(parts[2]),
                                     std::stoul(parts[3]));
    } catch (const std::exception&) {
    }
    return nullptr;
}

int cmd_fixture(const std::string& name, const std::string& out_dir,
                const std::string& algebra_ref) {
    json doc;
    if (name == "paper_example") {
        doc = json_io::cifset_to_json(fixtures::paper_example());
    } else if (name == "trivial") {
        if (algebra_ref.empty())
            throw ParseError("fixture trivial requires --algebra");
        AlgebraPtr alg = algebra_fixture_by_name(algebra_ref);
        if (!alg)
            alg = json_io::algebra_from_json(json_io::load_json(algebra_ref));
        doc = json_io::cifset_to_json(trivial_set(alg));
    } else if (const AlgebraPtr alg = algebra_fixture_by_name(name)) {
        doc = json_io::algebra_to_json(*alg);
    } else {
        throw ParseError("unknown fixture '" + name + "'");
    }
    const std::string path =
        out_dir.empty() || out_dir == "-" ? "-" : out_dir + "/" + name + ".json";
    json_io::write_text(path, json_io::dump_canonical(doc));
    if (path != "-") std::cout << path << "\n";
    return kExitHolds;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complex intuitionistic fuzzy sets over finite Lie "
                 "superalgebras: validation, operations, level cuts, and "
                 "property batches"};
    app.require_subcommand(1);
    std::uint64_t cap = 0;
    app.add_option("--universe-cap", cap,
                   "override the exhaustive-enumeration element cap");

    std::string validate_path;
    CLI::App* validate = app.add_subcommand(
        "validate", "check the superalgebra axioms of an algebra document");
    validate->add_option("algebra", validate_path, "algebra JSON (or -)")
        ->required();

    std::string check_path, predicate;
    CLI::App* check =
        app.add_subcommand("check", "run a structure predicate on a set document");
    check->add_option("set", check_path, "CIF set JSON (or -)")->required();
    check
        ->add_option("--predicate", predicate,
                     "subspace|subsuper|ideal|anti-subsuper|anti-ideal|graded|"
                     "homogeneous")
        ->required();

    OpArgs op_args;
    CLI::App* op = app.add_subcommand("op", "apply an operation to documents");
    op->add_option("name", op_args.name,
                   "sum|intersect|union|scalar|image|preimage|comp-c|comp-l|"
                   "cut-upper|cut-lower")
        ->required();
    op->add_option("inputs", op_args.inputs, "input documents");
    op->add_option("--out", op_args.out, "output path (default -)");
    op->add_option("--alpha", op_args.alpha, "field scalar for 'scalar'");
    op->add_option("--map", op_args.map_path, "linear map document");
    op->add_option("--t", op_args.t, "cut magnitude threshold (rational)");
    op->add_option("--s", op_args.s, "cut phase threshold (rational)");

    TheoremArgs th_args;
    CLI::App* theorems =
        app.add_subcommand("theorems", "run seeded property batches");
    theorems->add_option("--algebra", th_args.algebra_path, "algebra JSON")
        ->required();
    theorems->add_option("--ids", th_args.ids, "comma-separated theorem ids");
    theorems->add_option("--seeds", th_args.seeds, "instances per theorem");
    theorems->add_option("--base-seed", th_args.base_seed, "seed offset");
    theorems->add_option("--grid", th_args.grid, "value grid, e.g. 0,1/2,1");
    theorems->add_option("--map", th_args.map_path,
                         "linear map for the map-based theorems");
    theorems->add_option("--out", th_args.out, "output path (default -)");
    theorems->add_flag("--timings", th_args.timings,
                       "include volatile elapsed times in the report");

    std::string fixture_name, fixture_out = ".", fixture_algebra;
    CLI::App* fixture =
        app.add_subcommand("fixture", "emit a canonical built-in document");
    fixture
        ->add_option("name", fixture_name,
                     "paper_example|trivial|heisenberg_<p>_<n>|"
                     "abelian_<p>_<d0>_<d1>")
        ->required();
    fixture->add_option("--out", fixture_out, "output directory (default .)");
    fixture->add_option("--algebra", fixture_algebra,
                        "ambient algebra (fixture name or file) for 'trivial'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (cap > 0) ciflie::config::set_universe_cap(cap);

    try {
        if (validate->parsed()) return cmd_validate(validate_path);
        if (check->parsed()) return cmd_check(check_path, predicate);
        if (op->parsed()) return cmd_op(op_args);
        if (theorems->parsed()) return cmd_theorems(th_args);
        if (fixture->parsed())
            return cmd_fixture(fixture_name, fixture_out, fixture_algebra);
    } catch (const ciflie::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ciflie::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefuted;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
