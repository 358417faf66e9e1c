// Acceptance suite: runs every top-level requirement end to end and prints
// one PASS/FAIL line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "ciflie/fixtures.hpp"
#include "ciflie/json_io.hpp"
#include "ciflie/oracle.hpp"
#include "cli_runner.hpp"

using namespace ciflie;
using namespace ciflie::oracle;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string name;
    std::function<void(std::vector<std::string>&)> body;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void expect(std::vector<std::string>& problems, bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------

void criterion_fixture_fidelity(std::vector<std::string>& problems) {
    const auto t0 = std::chrono::steady_clock::now();
    const CIFSet paper = fixtures::paper_example();

    expect(problems, is_cif_subspace(paper).holds, "paper fixture: subspace");
    expect(problems, graded_components(paper).is_graded, "paper fixture: graded");
    expect(problems, is_cif_ideal(paper).holds, "paper fixture: ideal");
    expect(problems, is_anti_cif_ideal(paper).holds, "paper fixture: anti-ideal");

    const ImageSet im = image_set(paper);
    const std::vector<std::pair<Rational, Rational>> expected{
        {Rational(1, 2), Rational(1, 2)},
        {Rational(7, 10), Rational(7, 10)},
        {Rational(1), Rational(1)}};
    expect(problems, im.lambda_image == expected,
           "paper fixture: membership image is {(1,1),(7/10,7/10),(1/2,1/2)}");

    const double elapsed = seconds_since(t0);
    expect(problems, elapsed < 1.0,
           "fixture checks took " + std::to_string(elapsed) + "s (>= 1s)");
}

void criterion_subspace_lemmas(std::vector<std::string>& problems) {
    const ValueGrid grid = ValueGrid::standard();
    const std::vector<AlgebraPtr> algebras{fixtures::heisenberg(5, 1),
                                           fixtures::abelian(5, 1, 1)};
    for (const std::string id :
         {"P-SUM", "P-CAP", "P-SCALAR", "P-PRE", "P-IMG"}) {
        const auto t0 = std::chrono::steady_clock::now();
        for (const AlgebraPtr& alg : algebras) {
            const auto instances = make_theorem_instances(id, alg, grid, 200, 1);
            const TheoremReport rep = run_theorem(id, instances);
            const std::string where =
                id + " on p=" + std::to_string(alg->field().p) + " (d0=" +
                std::to_string(alg->d0()) + ",d1=" + std::to_string(alg->d1()) +
                ")";
            expect(problems, !rep.refuted, where + ": refuted");
            expect(problems, rep.passed == 200,
                   where + ": " + std::to_string(rep.passed) + "/200 passed");
        }
        const double elapsed = seconds_since(t0);
        expect(problems, elapsed < 30.0,
               id + " suite took " + std::to_string(elapsed) + "s (>= 30s)");
    }
}

void criterion_cut_theorems(std::vector<std::string>& problems) {
    const auto h = fixtures::heisenberg(5, 1);
    const ValueGrid grid = ValueGrid::standard();

    // 200 alternating instances = 100 ideals + 100 sub-superalgebras
    const auto fwd_instances = make_theorem_instances("P-CUT-FWD", h, grid, 200, 1);
    const TheoremReport fwd = run_theorem("P-CUT-FWD", fwd_instances);
    expect(problems, !fwd.refuted && fwd.passed == 200, "P-CUT-FWD instances");
    expect(problems, fwd.variant_passes.at("literal") == 200,
           "P-CUT-FWD literal threshold variant");
    expect(problems, fwd.variant_passes.at("per-function") == 200,
           "P-CUT-FWD per-function threshold variant");

    const auto back_instances =
        make_theorem_instances("P-CUT-BACK", h, grid, 200, 1);
    const TheoremReport back = run_theorem("P-CUT-BACK", back_instances);
    expect(problems, !back.refuted && back.passed == 200,
           "P-CUT-BACK instances");

    // 25 mutated negatives; each must refute the hypothesis (skip) or the
    // conclusion (refute) -- never pass
    std::size_t detected = 0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const CIFSet ideal =
            random_cif_structure(h, grid, StructureKind::Ideal, seed);
        TheoremInstance inst;
        inst.label = "mutant seed=" + std::to_string(seed);
        inst.a = std::make_shared<CIFSet>(mutate_cif_set(ideal, grid, seed));
        if (evaluate_theorem("P-CUT-BACK", inst).status != OutcomeStatus::Passed)
            ++detected;
    }
    expect(problems, detected == 25,
           "P-CUT-BACK mutants: " + std::to_string(detected) + "/25 detected");
}

void criterion_complement_theorems(std::vector<std::string>& problems) {
    const auto h = fixtures::heisenberg(5, 1);
    const ValueGrid grid = ValueGrid::standard();
    for (const std::string id : {"P-IFF", "P-COMP"}) {
        const auto instances = make_theorem_instances(id, h, grid, 100, 1);
        const TheoremReport rep = run_theorem(id, instances);
        expect(problems, !rep.refuted && rep.passed == 100, id + " instances");
    }
    std::size_t caught = 0;
    for (std::uint64_t seed = 100; seed < 125; ++seed) {
        const CIFSet ideal =
            random_cif_structure(h, grid, StructureKind::Ideal, seed);
        TheoremInstance inst;
        inst.label = "mutant seed=" + std::to_string(seed);
        inst.a = std::make_shared<CIFSet>(mutate_cif_set(ideal, grid, seed));
        const bool iff_caught =
            evaluate_theorem("P-IFF", inst).status != OutcomeStatus::Passed;
        const bool comp_caught =
            evaluate_theorem("P-COMP", inst).status != OutcomeStatus::Passed;
        // direct evidence: some verifier among {A, A^c, A^L} must reject
        const bool verifier_caught =
            !is_cif_subsuperalgebra(*inst.a).holds ||
            !is_cif_subsuperalgebra(complement_c(*inst.a)).holds ||
            !is_cif_subsuperalgebra(complement_l(*inst.a)).holds;
        if (iff_caught && comp_caught && verifier_caught) ++caught;
    }
    expect(problems, caught == 25,
           "complement mutants: " + std::to_string(caught) + "/25 caught");
}

void criterion_structure_closure(std::vector<std::string>& problems) {
    const auto h = fixtures::heisenberg(5, 1);
    const ValueGrid grid = ValueGrid::standard();
    for (const std::string id : {"P-SUMSUPER", "P-CAPSUPER"}) {
        const auto instances = make_theorem_instances(id, h, grid, 100, 1);
        const TheoremReport rep = run_theorem(id, instances);
        expect(problems, !rep.refuted, id + ": refuted");
        expect(problems, rep.passed == 100,
               id + ": " + std::to_string(rep.passed) + "/100 passed");
    }
}

void criterion_antihom_suite(std::vector<std::string>& problems) {
    const ValueGrid grid = ValueGrid::standard();
    const auto h = fixtures::heisenberg(5, 1);
    const auto ab = fixtures::abelian(5, 2, 1);

    const auto neg = std::make_shared<LinearMap>(LinearMap::neg_identity(h));
    const auto perm = std::make_shared<LinearMap>(
        LinearMap::basis_permutation(ab, {1, 0, 2})); // swap the even basis
    expect(problems, validate_antihom(*neg).valid, "negation anti-hom valid");
    expect(problems, validate_antihom(*perm).valid,
           "permutation anti-hom valid");
    expect(problems, perm->is_surjective(), "permutation surjective");

    const std::vector<std::pair<AlgebraPtr, std::shared_ptr<LinearMap>>> maps{
        {h, neg}, {ab, perm}};
    for (const std::string id : {"P-ANTIPRE", "P-ANTIIMG", "P-ANTISUM"}) {
        for (const auto& [alg, phi] : maps) {
            const auto instances =
                make_theorem_instances(id, alg, grid, 50, 1, phi);
            const TheoremReport rep = run_theorem(id, instances);
            const std::string where =
                id + (alg == h ? " under negation" : " under the permutation");
            expect(problems, !rep.refuted, where + ": refuted");
            expect(problems, rep.passed == 50,
                   where + ": " + std::to_string(rep.passed) + "/50 passed");
        }
    }
}

void criterion_oracle_equivalence(std::vector<std::string>& problems) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto line = fixtures::abelian(3, 1, 0);
    const ValueGrid grid = ValueGrid::parse("0,1/2,1");

    // independent combinatorial count of admissible tables
    std::uint64_t admissible_pairs = 0;
    for (const Rational& a : grid.levels)
        for (const Rational& b : grid.levels)
            if (!(Rational(1) < a + b)) ++admissible_pairs;
    const std::uint64_t per_element =
        admissible_pairs * grid.size() * grid.size();
    const std::uint64_t expected_total = per_element * per_element;

    CifSetEnumerator en(line, grid);
    std::uint64_t count = 0;
    std::uint64_t agreements = 0;
    while (const auto s = en.next()) {
        ++count;
        if (is_cif_subspace(*s).holds == subspace_oracle(*s)) ++agreements;
    }
    expect(problems, count == expected_total,
           "enumerated " + std::to_string(count) + " tables, expected " +
               std::to_string(expected_total));
    expect(problems, agreements == count,
           "verifier/oracle disagreement on " +
               std::to_string(count - agreements) + " tables");

    const double elapsed = seconds_since(t0);
    expect(problems, elapsed < 60.0,
           "oracle equivalence took " + std::to_string(elapsed) + "s (>= 60s)");
}

void criterion_determinism(std::vector<std::string>& problems) {
    const auto h = fixtures::heisenberg(5, 1);
    const ValueGrid grid = ValueGrid::standard();

    // library level: identical seeds give identical bytes
    const CIFSet a1 = random_cif_structure(h, grid, StructureKind::Ideal, 7);
    const CIFSet a2 = random_cif_structure(h, grid, StructureKind::Ideal, 7);
    expect(problems,
           json_io::dump_canonical(json_io::cifset_to_json(a1)) ==
               json_io::dump_canonical(json_io::cifset_to_json(a2)),
           "library: generated set bytes differ across runs");

    const auto instances = make_theorem_instances("P-SUM", h, grid, 20, 1);
    const std::string r1 =
        json_io::dump_canonical(report_to_json(run_theorem("P-SUM", instances)));
    const std::string r2 =
        json_io::dump_canonical(report_to_json(run_theorem("P-SUM", instances)));
    expect(problems, r1 == r2, "library: report bytes differ across runs");

    // CLI level: two separate processes, byte-identical files
    const fs::path tmp =
        fs::temp_directory_path() / ("ciflie_acc_" + std::to_string(::getpid()));
    fs::create_directories(tmp);
    int code = 0;
    run_cli("fixture heisenberg_5_1 --out " + tmp.string(), &code);
    expect(problems, code == 0, "cli: fixture emission failed");
    const std::string algebra = (tmp / "heisenberg_5_1.json").string();
    const std::string args = "theorems --algebra " + algebra +
                             " --ids P-SUM,P-CUT-FWD,P-ANTISUM --seeds 10";
    run_cli(args + " --out " + (tmp / "run1.json").string(), &code);
    expect(problems, code == 0, "cli: first theorem run failed");
    run_cli(args + " --out " + (tmp / "run2.json").string(), &code);
    expect(problems, code == 0, "cli: second theorem run failed");
    const std::string run1 = slurp((tmp / "run1.json").string());
    expect(problems, !run1.empty() && run1 == slurp((tmp / "run2.json").string()),
           "cli: theorem report bytes differ across runs");

    run_cli("fixture paper_example --out " + tmp.string(), &code);
    const std::string fx1 = slurp((tmp / "paper_example.json").string());
    run_cli("fixture paper_example --out " + tmp.string(), &code);
    expect(problems,
           !fx1.empty() && fx1 == slurp((tmp / "paper_example.json").string()),
           "cli: fixture bytes differ across runs");
    std::error_code ec;
    fs::remove_all(tmp, ec);
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"fixture fidelity", criterion_fixture_fidelity},
        {"subspace closure lemmas (P-SUM/P-CAP/P-SCALAR/P-PRE/P-IMG)",
         criterion_subspace_lemmas},
        {"level-cut theorems and mutation detection (P-CUT-FWD/P-CUT-BACK)",
         criterion_cut_theorems},
        {"complement theorems and mutation detection (P-IFF/P-COMP)",
         criterion_complement_theorems},
        {"structure closure under sum and intersection (P-SUMSUPER/P-CAPSUPER)",
         criterion_structure_closure},
        {"anti-homomorphism suite (P-ANTIPRE/P-ANTIIMG/P-ANTISUM)",
         criterion_antihom_suite},
        {"oracle equivalence at micro scale", criterion_oracle_equivalence},
        {"determinism of reports and fixtures", criterion_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::vector<std::string> problems;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].body(problems);
        } catch (const std::exception& e) {
            problems.push_back(std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(t0);
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", elapsed);
        if (problems.empty()) {
            std::cout << "[PASS] criterion " << i + 1 << ": "
                      << criteria[i].name << " (" << timing << ")\n";
        } else {
            ++failures;
            std::cout << "[FAIL] criterion " << i + 1 << ": "
                      << criteria[i].name << " (" << timing << ")\n";
            for (const std::string& p : problems)
                std::cout << "       - " << p << "\n";
        }
    }
    if (failures == 0)
        std::cout << "all " << criteria.size() << " acceptance criteria hold\n";
    else
        std::cout << failures << " acceptance criteria failed\n";
    return failures;
}
