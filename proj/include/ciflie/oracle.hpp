#pragma once

#include <map>
#include <memory>
#include <optional>

#include "ciflie/cif_verify.hpp"
#include "ciflie/json_io.hpp"

namespace ciflie::oracle {

/// Deterministic splitmix64 stream; identical across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t bounded(std::uint64_t n) { return n ? next() % n : 0; }
};

/// Finite ascending list of exact levels in [0,1] used to quantize
/// membership values.
struct ValueGrid {
    std::vector<Rational> levels; // ascending, unique, in [0,1]

    explicit ValueGrid(std::vector<Rational> lv);
    bool has_endpoints() const;
    std::size_t size() const { return levels.size(); }

    /// Comma-separated rationals, e.g. "0,1/2,7/10,1".
    static ValueGrid parse(const std::string& spec);
    /// {0, 1/5, 2/5, 1/2, 7/10, 1}
    static ValueGrid standard();
};

enum class StructureKind { Set, Subspace, Subsuperalgebra, Ideal };

StructureKind structure_kind_from_string(const std::string& s);

/// Closure of the generators under span (all kinds except Set), graded
/// parts and member brackets (Subsuperalgebra), or brackets with the whole
/// ambient space (Ideal).
CrispSubset crisp_closure(const AlgebraPtr& alg,
                          const std::vector<SuperVector>& generators,
                          StructureKind kind);

/// Strictly ascending chain {0} = S_0 < S_1 < ... < S_k = V of crisp
/// structures of the given kind, sampled deterministically from rng.
std::vector<CrispSubset> random_crisp_chain(const AlgebraPtr& alg,
                                            StructureKind kind, Rng& rng);

/// Table constant on consecutive chain differences: element x in layer i
/// (the first S_i containing it) receives lambda (g_i, g_i) and rho
/// (h_i, h_i). Requires g_0 = 1, h_0 = 0, g descending, h ascending,
/// g_i + h_i <= 1.
CIFSet cif_from_chain(const AlgebraPtr& alg,
                      const std::vector<CrispSubset>& chain,
                      const std::vector<Rational>& lambda_levels,
                      const std::vector<Rational>& rho_levels);

/// Deterministic in (alg, grid, kind, seed). Structured kinds are built
/// through a random crisp chain, which passes the corresponding verifier by
/// construction. min_proper_layers > 1 demands proper intermediate
/// structures; EmptyChain when none exist.
CIFSet random_cif_structure(const AlgebraPtr& alg, const ValueGrid& grid,
                            StructureKind kind, std::uint64_t seed,
                            std::size_t min_proper_layers = 0);

/// Deterministic single-value mutation at a nonzero element; the result
/// differs from the input and keeps the magnitude constraint.
CIFSet mutate_cif_set(const CIFSet& a, const ValueGrid& grid,
                      std::uint64_t seed);

/// Stream of every total table over the grid with the value at 0 fixed to
/// full membership and the magnitude constraint enforced, in a fixed
/// lexicographic order.
class CifSetEnumerator {
public:
    CifSetEnumerator(AlgebraPtr alg, const ValueGrid& grid);
    std::optional<CIFSet> next();
    std::uint64_t total() const { return total_; }
    /// Admissible (lambda, rho) combinations per free element.
    std::uint64_t combos_per_element() const { return combos_.size(); }

private:
    AlgebraPtr alg_;
    std::vector<CIFValue> combos_;
    std::vector<std::size_t> digits_;
    std::uint64_t total_;
    std::uint64_t produced_ = 0;
};

// -- independent brute-force evaluations (test oracles) --------------------

/// Value of the complex intuitionistic sum at one element by plain
/// decomposition enumeration (no homogeneity gate).
CIFValue direct_sum_value(const CIFSet& a, const CIFSet& b,
                          const SuperVector& x);
CIFValue direct_image_value(const LinearMap& phi, const CIFSet& a,
                            const SuperVector& y);
CIFValue direct_preimage_value(const LinearMap& phi, const CIFSet& b,
                               const SuperVector& x);
/// Straight-line transcription of the subspace conditions.
bool subspace_oracle(const CIFSet& a);

// -- theorem runner ---------------------------------------------------------

struct TheoremInstance {
    std::string label;
    std::shared_ptr<const CIFSet> a;
    std::shared_ptr<const CIFSet> b;      // only for the binary theorems
    std::shared_ptr<const LinearMap> phi; // only for map theorems
};

enum class OutcomeStatus { Passed, Skipped, Refuted };

struct TheoremOutcome {
    OutcomeStatus status = OutcomeStatus::Passed;
    std::string detail;                   // filled for Skipped/Refuted
    std::map<std::string, bool> variants; // sub-verdicts, e.g. cut variants
};

struct TheoremReport {
    std::string id;
    std::uint64_t instances = 0;
    std::uint64_t passed = 0;
    std::uint64_t skipped = 0;
    bool refuted = false;
    json_io::json counterexample; // null unless refuted
    std::map<std::string, std::uint64_t> variant_passes;
    double elapsed_seconds = 0.0;

    TheoremReport() : counterexample(nullptr) {}
};

const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);
std::string theorem_description(const std::string& id);

TheoremOutcome evaluate_theorem(const std::string& id,
                                const TheoremInstance& inst);

TheoremReport run_theorem(const std::string& id,
                          const std::vector<TheoremInstance>& instances);

/// Seeded instance batch appropriate for the theorem's signature. phi
/// defaults to negated identity for the anti-homomorphism theorems and to
/// seeded random linear maps for the image/preimage lemmas.
std::vector<TheoremInstance>
make_theorem_instances(const std::string& id, const AlgebraPtr& alg,
                       const ValueGrid& grid, std::size_t count,
                       std::uint64_t base_seed,
                       std::shared_ptr<const LinearMap> phi = nullptr);

/// Serialized refuting instance; re-evaluating it must still refute.
json_io::json counterexample_to_json(const std::string& id,
                                     const TheoremInstance& inst,
                                     const TheoremOutcome& outcome);
bool replay_refutes(const json_io::json& counterexample);

/// Report serialization; timing is volatile and off by default.
json_io::json report_to_json(const TheoremReport& r,
                             bool include_timing = false);

} // namespace ciflie::oracle
