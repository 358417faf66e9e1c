#include "ciflie/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "ciflie/config.hpp"

namespace ciflie::oracle {

// -- ValueGrid --------------------------------------------------------------

ValueGrid::ValueGrid(std::vector<Rational> lv) : levels(std::move(lv)) {
    if (levels.empty()) throw ParseError("empty value grid");
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    if (levels.front() < Rational(0) || Rational(1) < levels.back())
        throw ParseError("grid level outside [0,1]");
}

bool ValueGrid::has_endpoints() const {
    return levels.front() == Rational(0) && levels.back() == Rational(1);
}

ValueGrid ValueGrid::parse(const std::string& spec) {
    std::vector<Rational> lv;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ','))
        if (!token.empty()) lv.push_back(Rational::parse(token));
    return ValueGrid(std::move(lv));
}

ValueGrid ValueGrid::standard() {
    return ValueGrid({Rational(0), Rational(1, 5), Rational(2, 5),
                      Rational(1, 2), Rational(7, 10), Rational(1)});
}

StructureKind structure_kind_from_string(const std::string& s) {
    if (s == "set") return StructureKind::Set;
    if (s == "subspace") return StructureKind::Subspace;
    if (s == "subsuperalgebra") return StructureKind::Subsuperalgebra;
    if (s == "ideal") return StructureKind::Ideal;
    throw ParseError("unknown structure kind '" + s + "'");
}

// -- crisp spans and closures ------------------------------------------------

namespace {

// Echelon basis over GF(p): rows sorted by strictly increasing pivot,
// each new row reduced against all existing rows before insertion.
class SpanBasis {
public:
    explicit SpanBasis(const AlgebraPtr& alg) : alg_(alg) {}

    SuperVector reduce(SuperVector v) const {
        const Field& f = alg_->field();
        for (const SuperVector& row : rows_) {
            const std::size_t p = pivot_of(row);
            if (v.coords[p] == 0) continue;
            const FieldElem c = v.coords[p]; // rows are monic
            for (std::size_t i = 0; i < v.size(); ++i)
                v.coords[i] = f.sub(v.coords[i], f.mul(c, row.coords[i]));
        }
        return v;
    }

    bool contains(const SuperVector& v) const { return reduce(v).is_zero(); }

    /// Returns true when the span grew.
    bool insert(const SuperVector& v) {
        SuperVector r = reduce(v);
        if (r.is_zero()) return false;
        const std::size_t p = pivot_of(r);
        const FieldElem inv = alg_->field().inv(r.coords[p]);
        r = alg_->scale(inv, r);
        const auto pos = std::lower_bound(
            rows_.begin(), rows_.end(), p,
            [](const SuperVector& row, std::size_t piv) {
                return pivot_of(row) < piv;
            });
        rows_.insert(pos, std::move(r));
        return true;
    }

    std::size_t dim() const { return rows_.size(); }
    const std::vector<SuperVector>& rows() const { return rows_; }

    std::uint64_t span_size() const {
        std::uint64_t n = 1;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            n *= static_cast<std::uint64_t>(alg_->field().p);
        return n;
    }

    /// All span members as sorted element indices.
    std::vector<std::uint64_t> span_indices() const {
        const std::uint64_t total = span_size();
        std::vector<std::uint64_t> out;
        out.reserve(total);
        std::vector<FieldElem> coeff(rows_.size(), 0);
        for (std::uint64_t c = 0; c < total; ++c) {
            std::uint64_t rem = c;
            SuperVector v = alg_->zero_vector();
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const FieldElem ci = static_cast<FieldElem>(
                    rem % static_cast<std::uint64_t>(alg_->field().p));
                rem /= static_cast<std::uint64_t>(alg_->field().p);
                if (ci != 0) v = alg_->add(v, alg_->scale(ci, rows_[i]));
            }
            out.push_back(alg_->index_of(v));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    static std::size_t pivot_of(const SuperVector& row) {
        for (std::size_t i = 0; i < row.size(); ++i)
            if (row.coords[i] != 0) return i;
        return row.size();
    }

    AlgebraPtr alg_;
    std::vector<SuperVector> rows_;
};

bool kind_is_graded(StructureKind kind) {
    return kind == StructureKind::Subsuperalgebra ||
           kind == StructureKind::Ideal;
}

void insert_generator(SpanBasis& basis, const AlgebraPtr& alg,
                      const SuperVector& v, StructureKind kind) {
    if (kind_is_graded(kind)) {
        const auto [even, odd] = alg->graded_parts(v);
        basis.insert(even);
        basis.insert(odd);
    } else {
        basis.insert(v);
    }
}

void close_under_brackets(SpanBasis& basis, const AlgebraPtr& alg,
                          StructureKind kind) {
    if (!kind_is_graded(kind)) return;
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<SuperVector> rows = basis.rows();
        if (kind == StructureKind::Subsuperalgebra) {
            for (const SuperVector& x : rows)
                for (const SuperVector& y : rows)
                    if (basis.insert(alg->bracket(x, y))) changed = true;
        } else { // Ideal: bracket with the whole ambient space
            for (const SuperVector& x : rows)
                for (std::size_t j = 0; j < alg->dim(); ++j) {
                    const SuperVector e = alg->basis_vector(j);
                    if (basis.insert(alg->bracket(x, e))) changed = true;
                    if (basis.insert(alg->bracket(e, x))) changed = true;
                }
        }
    }
}

SpanBasis closure_basis(const AlgebraPtr& alg,
                        const std::vector<SuperVector>& generators,
                        StructureKind kind) {
    SpanBasis basis(alg);
    for (const SuperVector& g : generators)
        insert_generator(basis, alg, g, kind);
    close_under_brackets(basis, alg, kind);
    return basis;
}

bool proper_substructure_exists(const AlgebraPtr& alg, StructureKind kind) {
    const std::uint64_t n = alg->checked_universe_size();
    for (std::uint64_t i = 1; i < n; ++i) {
        const SpanBasis b =
            closure_basis(alg, {alg->element_at(i)}, kind);
        if (b.span_size() < n) return true;
    }
    return false;
}

} // namespace

CrispSubset crisp_closure(const AlgebraPtr& alg,
                          const std::vector<SuperVector>& generators,
                          StructureKind kind) {
    if (kind == StructureKind::Set)
        throw ParseError("closure is undefined for kind 'set'");
    const SpanBasis basis = closure_basis(alg, generators, kind);
    return CrispSubset{alg, basis.span_indices()};
}

std::vector<CrispSubset> random_crisp_chain(const AlgebraPtr& alg,
                                            StructureKind kind, Rng& rng) {
    const std::uint64_t n = alg->checked_universe_size();
    std::vector<CrispSubset> chain;
    chain.push_back(CrispSubset{alg, {0}});

    const std::size_t target = 1 + static_cast<std::size_t>(rng.bounded(3));
    SpanBasis basis(alg);
    while (basis.span_size() < n) {
        if (chain.size() - 1 >= target) {
            for (std::size_t j = 0; j < alg->dim(); ++j)
                basis.insert(alg->basis_vector(j));
            chain.push_back(CrispSubset{alg, basis.span_indices()});
            break;
        }
        std::optional<SuperVector> pick;
        for (int tries = 0; tries < 128; ++tries) {
            const std::uint64_t idx = 1 + rng.bounded(n - 1);
            SuperVector v = alg->element_at(idx);
            if (!basis.contains(v)) {
                pick = std::move(v);
                break;
            }
        }
        if (!pick.has_value()) {
            for (std::size_t j = 0; j < alg->dim(); ++j)
                basis.insert(alg->basis_vector(j));
            chain.push_back(CrispSubset{alg, basis.span_indices()});
            break;
        }
        insert_generator(basis, alg, *pick, kind);
        close_under_brackets(basis, alg, kind);
        chain.push_back(CrispSubset{alg, basis.span_indices()});
    }
    return chain;
}

CIFSet cif_from_chain(const AlgebraPtr& alg,
                      const std::vector<CrispSubset>& chain,
                      const std::vector<Rational>& lambda_levels,
                      const std::vector<Rational>& rho_levels) {
    if (chain.empty() || chain.front().members != std::vector<std::uint64_t>{0})
        throw ParseError("chain must start at {0}");
    if (chain.back().size() != alg->checked_universe_size())
        throw ParseError("chain must end at the whole space");
    if (lambda_levels.size() != chain.size() ||
        rho_levels.size() != chain.size())
        throw ParseError("one level per chain layer required");
    if (lambda_levels.front() != Rational(1) ||
        rho_levels.front() != Rational(0))
        throw ParseError("layer 0 must carry lambda 1 and rho 0");
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (lambda_levels[i] > lambda_levels[i - 1] ||
            rho_levels[i] < rho_levels[i - 1])
            throw ParseError("lambda levels must descend and rho levels ascend");
        if (Rational(1) < lambda_levels[i] + rho_levels[i])
            throw ParseError("lambda + rho magnitude exceeds 1 at layer " +
                             std::to_string(i));
    }
    return CIFSet::build(alg, [&](std::uint64_t idx) {
        std::size_t layer = chain.size() - 1;
        for (std::size_t i = 0; i < chain.size(); ++i)
            if (chain[i].contains_index(idx)) {
                layer = i;
                break;
            }
        return CIFValue(
            UnitValue(lambda_levels[layer], lambda_levels[layer]),
            UnitValue(rho_levels[layer], rho_levels[layer]));
    });
}

namespace {

std::vector<Rational> sample_descending(const ValueGrid& grid, std::size_t k,
                                        Rng& rng) {
    std::vector<Rational> pool = grid.levels;
    std::vector<Rational> chosen;
    if (pool.size() >= k) {
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j =
                static_cast<std::size_t>(rng.bounded(pool.size()));
            chosen.push_back(pool[j]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
        }
    } else {
        for (std::size_t i = 0; i < k; ++i)
            chosen.push_back(
                pool[static_cast<std::size_t>(rng.bounded(pool.size()))]);
    }
    std::sort(chosen.begin(), chosen.end(),
              [](const Rational& a, const Rational& b) { return b < a; });
    return chosen;
}

} // namespace

CIFSet random_cif_structure(const AlgebraPtr& alg, const ValueGrid& grid,
                            StructureKind kind, std::uint64_t seed,
                            std::size_t min_proper_layers) {
    Rng rng(seed);
    const std::uint64_t n = alg->checked_universe_size();

    if (kind == StructureKind::Set) {
        std::vector<CIFValue> table;
        table.reserve(n);
        table.push_back(CIFValue::member_top());
        for (std::uint64_t i = 1; i < n; ++i) {
            const Rational g =
                grid.levels[static_cast<std::size_t>(rng.bounded(grid.size()))];
            std::vector<Rational> rho_pool;
            for (const Rational& h : grid.levels)
                if (!(Rational(1) < g + h)) rho_pool.push_back(h);
            const Rational h =
                rho_pool.empty()
                    ? Rational(0)
                    : rho_pool[static_cast<std::size_t>(
                          rng.bounded(rho_pool.size()))];
            table.emplace_back(UnitValue(g, g), UnitValue(h, h));
        }
        return CIFSet(alg, std::move(table));
    }

    std::vector<CrispSubset> chain = random_crisp_chain(alg, kind, rng);
    if (min_proper_layers > 1 && chain.size() - 1 < min_proper_layers) {
        if (!proper_substructure_exists(alg, kind))
            throw EmptyChain("kind has no proper crisp instance in this "
                             "algebra, chain of length " +
                             std::to_string(min_proper_layers) + " requested");
        for (int attempt = 0; attempt < 64; ++attempt) {
            chain = random_crisp_chain(alg, kind, rng);
            if (chain.size() - 1 >= min_proper_layers) break;
        }
    }

    const std::size_t k = chain.size() - 1;
    std::vector<Rational> lambda_levels{Rational(1)};
    for (const Rational& g : sample_descending(grid, k, rng))
        lambda_levels.push_back(g);
    std::vector<Rational> rho_levels{Rational(0)};
    for (std::size_t i = 1; i <= k; ++i) {
        const Rational cap = Rational(1) - lambda_levels[i];
        const Rational& prev = rho_levels.back();
        std::vector<Rational> pool;
        for (const Rational& h : grid.levels)
            if (prev <= h && h <= cap) pool.push_back(h);
        rho_levels.push_back(
            pool.empty()
                ? prev
                : pool[static_cast<std::size_t>(rng.bounded(pool.size()))]);
    }
    return cif_from_chain(alg, chain, lambda_levels, rho_levels);
}

CIFSet mutate_cif_set(const CIFSet& a, const ValueGrid& grid,
                      std::uint64_t seed) {
    Rng rng(seed);
    const std::uint64_t n = a.size();
    if (n < 2) throw ParseError("cannot mutate a one-element table");
    const std::uint64_t idx = 1 + rng.bounded(n - 1);
    const CIFValue old = a.at_index(idx);
    const int first_mode = static_cast<int>(rng.bounded(3));
    for (int step = 0; step < 3; ++step) {
        const int mode = (first_mode + step) % 3;
        if (mode == 0) {
            std::vector<Rational> pool;
            for (const Rational& g : grid.levels)
                if (!(Rational(1) < g + old.rho.r) &&
                    UnitValue(g, g) != old.lambda)
                    pool.push_back(g);
            if (pool.empty()) continue;
            const Rational g =
                pool[static_cast<std::size_t>(rng.bounded(pool.size()))];
            return a.with_value(idx, CIFValue(UnitValue(g, g), old.rho));
        }
        if (mode == 1) {
            std::vector<Rational> pool;
            for (const Rational& h : grid.levels)
                if (!(Rational(1) < old.lambda.r + h) &&
                    UnitValue(h, h) != old.rho)
                    pool.push_back(h);
            if (pool.empty()) continue;
            const Rational h =
                pool[static_cast<std::size_t>(rng.bounded(pool.size()))];
            return a.with_value(idx, CIFValue(old.lambda, UnitValue(h, h)));
        }
        std::vector<Rational> pool;
        for (const Rational& g : grid.levels)
            if (g != old.lambda.w) pool.push_back(g);
        if (pool.empty()) continue;
        const Rational g =
            pool[static_cast<std::size_t>(rng.bounded(pool.size()))];
        return a.with_value(idx,
                            CIFValue(UnitValue(old.lambda.r, g), old.rho));
    }
    throw ParseError("grid too small to mutate the table");
}

// -- exhaustive table enumeration -------------------------------------------

CifSetEnumerator::CifSetEnumerator(AlgebraPtr alg, const ValueGrid& grid)
    : alg_(std::move(alg)) {
    const std::uint64_t n = alg_->checked_universe_size();
    const std::uint64_t free = n - 1;

    __int128 raw = 1;
    bool overflow = false;
    for (std::uint64_t i = 0; i < 4 * free && !overflow; ++i) {
        raw *= static_cast<__int128>(grid.size());
        if (raw > static_cast<__int128>(UINT64_MAX)) overflow = true;
    }
    const std::uint64_t raw64 =
        overflow ? UINT64_MAX : static_cast<std::uint64_t>(raw);
    if (raw64 > config::exhaustive_cap())
        throw SearchSpaceTooLarge(raw64, config::exhaustive_cap());

    for (const Rational& lr : grid.levels)
        for (const Rational& lw : grid.levels)
            for (const Rational& rr : grid.levels) {
                if (Rational(1) < lr + rr) continue;
                for (const Rational& rw : grid.levels)
                    combos_.emplace_back(UnitValue(lr, lw), UnitValue(rr, rw));
            }

    digits_.assign(free, 0);
    __int128 tot = 1;
    for (std::uint64_t i = 0; i < free; ++i)
        tot *= static_cast<__int128>(combos_.size());
    total_ = tot > static_cast<__int128>(UINT64_MAX)
                 ? UINT64_MAX
                 : static_cast<std::uint64_t>(tot);
}

std::optional<CIFSet> CifSetEnumerator::next() {
    if (produced_ >= total_) return std::nullopt;
    std::vector<CIFValue> table;
    table.reserve(digits_.size() + 1);
    table.push_back(CIFValue::member_top());
    for (std::size_t d : digits_) table.push_back(combos_[d]);
    ++produced_;
    // odometer increment, last element fastest
    for (std::size_t i = digits_.size(); i-- > 0;) {
        if (++digits_[i] < combos_.size()) break;
        digits_[i] = 0;
    }
    return CIFSet(alg_, std::move(table));
}

// -- independent brute-force evaluations -------------------------------------

CIFValue direct_sum_value(const CIFSet& a, const CIFSet& b,
                          const SuperVector& x) {
    const auto& alg = *a.ambient();
    Rational lr(0), lw(0), rr(1), rw(1);
    const std::uint64_t n = alg.checked_universe_size();
    for (std::uint64_t ui = 0; ui < n; ++ui) {
        const SuperVector u = alg.element_at(ui);
        const SuperVector v = alg.sub(x, u);
        const CIFValue& va = a.at(u);
        const CIFValue& vb = b.at(v);
        const Rational cand_lr =
            va.lambda.r < vb.lambda.r ? va.lambda.r : vb.lambda.r;
        const Rational cand_lw =
            va.lambda.w < vb.lambda.w ? va.lambda.w : vb.lambda.w;
        const Rational cand_rr = va.rho.r < vb.rho.r ? vb.rho.r : va.rho.r;
        const Rational cand_rw = va.rho.w < vb.rho.w ? vb.rho.w : va.rho.w;
        if (lr < cand_lr) lr = cand_lr;
        if (lw < cand_lw) lw = cand_lw;
        if (cand_rr < rr) rr = cand_rr;
        if (cand_rw < rw) rw = cand_rw;
    }
    return CIFValue(UnitValue(lr, lw), UnitValue(rr, rw));
}

CIFValue direct_image_value(const LinearMap& phi, const CIFSet& a,
                            const SuperVector& y) {
    const auto& src = *phi.source;
    bool hit = false;
    Rational lr(0), lw(0), rr(1), rw(1);
    const std::uint64_t n = src.checked_universe_size();
    for (std::uint64_t i = 0; i < n; ++i) {
        const SuperVector x = src.element_at(i);
        if (phi.apply(x) != y) continue;
        hit = true;
        const CIFValue& v = a.at_index(i);
        if (lr < v.lambda.r) lr = v.lambda.r;
        if (lw < v.lambda.w) lw = v.lambda.w;
        if (v.rho.r < rr) rr = v.rho.r;
        if (v.rho.w < rw) rw = v.rho.w;
    }
    if (!hit) return CIFValue::member_bottom();
    return CIFValue(UnitValue(lr, lw), UnitValue(rr, rw));
}

CIFValue direct_preimage_value(const LinearMap& phi, const CIFSet& b,
                               const SuperVector& x) {
    return b.at(phi.apply(x));
}

bool subspace_oracle(const CIFSet& a) {
    const auto& alg = *a.ambient();
    const std::uint64_t n = alg.checked_universe_size();
    const CIFValue& z = a.at_index(0);
    if (!(z.lambda.r == Rational(1) && z.lambda.w == Rational(1) &&
          z.rho.r == Rational(0) && z.rho.w == Rational(0)))
        return false;
    for (std::uint64_t xi = 0; xi < n; ++xi)
        for (std::uint64_t yi = 0; yi < n; ++yi) {
            const CIFValue& vx = a.at_index(xi);
            const CIFValue& vy = a.at_index(yi);
            const CIFValue& vs = a.at_index(
                alg.index_of(alg.add(alg.element_at(xi), alg.element_at(yi))));
            if (vs.lambda.r < (vx.lambda.r < vy.lambda.r ? vx.lambda.r
                                                         : vy.lambda.r))
                return false;
            if (vs.lambda.w < (vx.lambda.w < vy.lambda.w ? vx.lambda.w
                                                         : vy.lambda.w))
                return false;
            if ((vx.rho.r < vy.rho.r ? vy.rho.r : vx.rho.r) < vs.rho.r)
                return false;
            if ((vx.rho.w < vy.rho.w ? vy.rho.w : vx.rho.w) < vs.rho.w)
                return false;
        }
    for (FieldElem alpha = 0; alpha < alg.field().p; ++alpha)
        for (std::uint64_t xi = 0; xi < n; ++xi) {
            const CIFValue& vx = a.at_index(xi);
            const CIFValue& vax = a.at_index(
                alg.index_of(alg.scale(alpha, alg.element_at(xi))));
            if (vax.lambda.r < vx.lambda.r || vax.lambda.w < vx.lambda.w)
                return false;
            if (vx.rho.r < vax.rho.r || vx.rho.w < vax.rho.w) return false;
        }
    return true;
}

// -- theorem runner -----------------------------------------------------------

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {
        "P-SUM",      "P-CAP",      "P-SCALAR",  "P-PRE",     "P-IMG",
        "I-GRADED",   "P-CUT-FWD",  "P-CUT-BACK", "P-COMP",   "P-IFF",
        "P-SUMSUPER", "P-CAPSUPER", "P-ANTIPRE", "P-ANTIIMG", "P-ANTISUM"};
    return ids;
}

bool is_theorem_id(const std::string& id) {
    const auto& ids = theorem_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::string theorem_description(const std::string& id) {
    if (id == "P-SUM") return "sum of pairwise homogeneous CIF subspaces is a CIF subspace";
    if (id == "P-CAP") return "intersection of pairwise homogeneous CIF subspaces is a CIF subspace";
    if (id == "P-SCALAR") return "scalar transform of a CIF subspace is a CIF subspace";
    if (id == "P-PRE") return "preimage of a CIF subspace under a linear map is a CIF subspace";
    if (id == "P-IMG") return "image of a CIF subspace under a linear map is a CIF subspace";
    if (id == "I-GRADED") return "a graded table equals the meet/join of its part values";
    if (id == "P-CUT-FWD") return "level cuts of a CIF sub-superalgebra/ideal are crisp sub-superalgebras/ideals";
    if (id == "P-CUT-BACK") return "crisp level cuts force the CIF sub-superalgebra/ideal conditions";
    if (id == "P-COMP") return "both complements of a CIF sub-superalgebra/ideal inherit the structure";
    if (id == "P-IFF") return "the structure holds iff both complements carry it";
    if (id == "P-SUMSUPER") return "sum of CIF sub-superalgebras/ideals inherits the structure";
    if (id == "P-CAPSUPER") return "intersection of CIF sub-superalgebras/ideals inherits the structure";
    if (id == "P-ANTIPRE") return "preimage under an anti-homomorphism preserves anti-CIF structure";
    if (id == "P-ANTIIMG") return "surjective image under an anti-homomorphism preserves anti-CIF structure";
    if (id == "P-ANTISUM") return "image of a sum of anti-CIF ideals equals the sum of the images";
    throw ParseError("unknown theorem id '" + id + "'");
}

namespace {

enum class StructClass { None, Subsuper, Ideal };

StructClass detect_class(const CIFSet& a, bool anti) {
    if ((anti ? is_anti_cif_ideal(a) : is_cif_ideal(a)).holds)
        return StructClass::Ideal;
    if ((anti ? is_anti_cif_subsuperalgebra(a) : is_cif_subsuperalgebra(a))
            .holds)
        return StructClass::Subsuper;
    return StructClass::None;
}

Verdict class_verdict(const CIFSet& a, StructClass c, bool anti) {
    if (c == StructClass::Ideal)
        return anti ? is_anti_cif_ideal(a) : is_cif_ideal(a);
    return anti ? is_anti_cif_subsuperalgebra(a) : is_cif_subsuperalgebra(a);
}

bool crisp_class_check(const CrispSubset& s, StructClass c) {
    return c == StructClass::Ideal ? crisp_is_ideal(s)
                                   : crisp_is_subsuperalgebra(s);
}

TheoremOutcome skipped(std::string why) {
    return TheoremOutcome{OutcomeStatus::Skipped, std::move(why), {}};
}

TheoremOutcome refuted(std::string why) {
    return TheoremOutcome{OutcomeStatus::Refuted, std::move(why), {}};
}

TheoremOutcome passed() { return TheoremOutcome{}; }

const CIFSet& need_a(const TheoremInstance& inst) {
    if (!inst.a) throw ParseError("instance is missing its primary set");
    return *inst.a;
}
const CIFSet& need_b(const TheoremInstance& inst) {
    if (!inst.b) throw ParseError("instance is missing its second set");
    return *inst.b;
}
const LinearMap& need_phi(const TheoremInstance& inst) {
    if (!inst.phi) throw ParseError("instance is missing its linear map");
    return *inst.phi;
}

TheoremOutcome eval_binary_subspace(const TheoremInstance& inst, bool use_sum) {
    const CIFSet& a = need_a(inst);
    const CIFSet& b = need_b(inst);
    if (!is_cif_subspace(a).holds) return skipped("A is not a CIF subspace");
    if (!is_cif_subspace(b).holds) return skipped("B is not a CIF subspace");
    if (!is_homogeneous_with(a, b))
        return skipped("A is not homogeneous with B");
    const CIFSet result = use_sum ? sum(a, b) : intersect(a, b);
    if (!is_cif_subspace(result).holds)
        return refuted(std::string(use_sum ? "sum" : "intersection") +
                       " is not a CIF subspace");
    return passed();
}

TheoremOutcome eval_scalar(const TheoremInstance& inst) {
    const CIFSet& a = need_a(inst);
    if (!is_cif_subspace(a).holds) return skipped("A is not a CIF subspace");
    const auto& alg = *a.ambient();
    for (FieldElem alpha = 0; alpha < alg.field().p; ++alpha)
        if (!is_cif_subspace(scalar_transform(alpha, a)).holds)
            return refuted("alpha = " + std::to_string(alpha) +
                           " transform is not a CIF subspace");
    return passed();
}

TheoremOutcome eval_pre_img(const TheoremInstance& inst, bool preimage_side) {
    const CIFSet& a = need_a(inst);
    const LinearMap& phi = need_phi(inst);
    if (!is_cif_subspace(a).holds) return skipped("A is not a CIF subspace");
    const CIFSet result = preimage_side ? preimage(phi, a) : image(phi, a);
    if (!is_cif_subspace(result).holds)
        return refuted(std::string(preimage_side ? "preimage" : "image") +
                       " is not a CIF subspace");
    return passed();
}

TheoremOutcome eval_graded_meet(const TheoremInstance& inst) {
    const CIFSet& a = need_a(inst);
    bool graded = false;
    try {
        graded = graded_components(a).is_graded;
    } catch (const NotHomogeneousPair&) {
        return skipped("part extensions are not pairwise homogeneous");
    }
    if (!graded) return skipped("A is not graded");
    const auto& alg = *a.ambient();
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        const SuperVector x = alg.element_at(i);
        const auto [even, odd] = alg.graded_parts(x);
        const CIFValue& vx = a.at_index(i);
        const CIFValue& v0 = a.at(even);
        const CIFValue& v1 = a.at(odd);
        if (vx.lambda != uv_meet(v0.lambda, v1.lambda) ||
            vx.rho != uv_join(v0.rho, v1.rho))
            return refuted("value at " + x.str() +
                           " is not the meet/join of its part values");
    }
    return passed();
}

TheoremOutcome eval_cut_fwd(const TheoremInstance& inst) {
    const CIFSet& a = need_a(inst);
    const StructClass cls = detect_class(a, false);
    if (cls == StructClass::None)
        return skipped("A is neither a CIF sub-superalgebra nor a CIF ideal");
    const ImageSet im = image_set(a);

    bool literal_ok = true;
    for (const auto& [t, s] : im.common) {
        const CutThreshold th(t, s);
        if (!crisp_class_check(upper_cut(a, th), cls) ||
            !crisp_class_check(lower_cut(a, th), cls)) {
            literal_ok = false;
            break;
        }
    }
    bool perfn_ok = true;
    for (const auto& [t, s] : im.lambda_image)
        if (!crisp_class_check(upper_cut(a, CutThreshold(t, s)), cls)) {
            perfn_ok = false;
            break;
        }
    if (perfn_ok)
        for (const auto& [t, s] : im.rho_image)
            if (!crisp_class_check(lower_cut(a, CutThreshold(t, s)), cls)) {
                perfn_ok = false;
                break;
            }

    TheoremOutcome out = passed();
    out.variants["literal"] = literal_ok;
    out.variants["per-function"] = perfn_ok;
    if (!literal_ok || !perfn_ok) {
        out.status = OutcomeStatus::Refuted;
        out.detail = literal_ok ? "per-function threshold variant failed"
                                : "literal threshold variant failed";
    }
    return out;
}

// Hypothesis of the converse cut theorem for one structure class: the
// normalization at 0, and every nonempty cut over the product of attained
// magnitude and phase thresholds is a crisp structure of that class.
bool cut_back_hypothesis(const CIFSet& a, StructClass cls) {
    if (a.at_index(0) != CIFValue::member_top()) return false;
    std::vector<Rational> lam_r, lam_w, rho_r, rho_w;
    for (std::uint64_t i = 0; i < a.size(); ++i) {
        lam_r.push_back(a.at_index(i).lambda.r);
        lam_w.push_back(a.at_index(i).lambda.w);
        rho_r.push_back(a.at_index(i).rho.r);
        rho_w.push_back(a.at_index(i).rho.w);
    }
    auto dedup = [](std::vector<Rational>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(lam_r), dedup(lam_w), dedup(rho_r), dedup(rho_w);
    for (const Rational& t : lam_r)
        for (const Rational& s : lam_w) {
            const CrispSubset u = upper_cut(a, CutThreshold(t, s));
            if (!u.members.empty() && !crisp_class_check(u, cls)) return false;
        }
    for (const Rational& t : rho_r)
        for (const Rational& s : rho_w) {
            const CrispSubset l = lower_cut(a, CutThreshold(t, s));
            if (!l.members.empty() && !crisp_class_check(l, cls)) return false;
        }
    return true;
}

TheoremOutcome eval_cut_back(const TheoremInstance& inst) {
    const CIFSet& a = need_a(inst);
    const bool hyp_ss = cut_back_hypothesis(a, StructClass::Subsuper);
    const bool hyp_id = cut_back_hypothesis(a, StructClass::Ideal);
    TheoremOutcome out = passed();
    out.variants["subsuper-hypothesis"] = hyp_ss;
    out.variants["ideal-hypothesis"] = hyp_id;
    if (!hyp_ss && !hyp_id)
        return skipped("no nonempty-cut hypothesis holds");
    if (hyp_ss && !is_cif_subsuperalgebra(a).holds)
        return refuted("cuts are crisp sub-superalgebras but A fails the "
                       "CIF sub-superalgebra conditions");
    if (hyp_id && !is_cif_ideal(a).holds)
        return refuted("cuts are crisp ideals but A fails the CIF ideal "
                       "conditions");
    out.status = OutcomeStatus::Passed;
    return out;
}

TheoremOutcome eval_complements(const TheoremInstance& inst) {
    const CIFSet& a = need_a(inst);
    const StructClass cls = detect_class(a, false);
    if (cls == StructClass::None)
        return skipped("A is neither a CIF sub-superalgebra nor a CIF ideal");
    if (!class_verdict(complement_c(a), cls, false).holds)
        return refuted("the (lambda, lambda^c) complement loses the structure");
    if (!class_verdict(complement_l(a), cls, false).holds)
        return refuted("the (rho^c, rho) complement loses the structure");
    return passed();
}

TheoremOutcome eval_iff(const TheoremInstance& inst) {
    const CIFSet& a = need_a(inst);
    const CIFSet comp_c = complement_c(a);
    const CIFSet comp_l = complement_l(a);
    bool any_direction = false;
    for (const StructClass cls : {StructClass::Subsuper, StructClass::Ideal}) {
        const bool va = class_verdict(a, cls, false).holds;
        const bool vboth = class_verdict(comp_c, cls, false).holds &&
                           class_verdict(comp_l, cls, false).holds;
        if (va && !vboth)
            return refuted("forward direction fails: A has the structure but "
                           "a complement loses it");
        if (vboth && !va)
            return refuted("backward direction fails: both complements have "
                           "the structure but A does not");
        any_direction = any_direction || va || vboth;
    }
    if (!any_direction)
        return skipped("neither direction's hypothesis holds in any class");
    return passed();
}

TheoremOutcome eval_binary_structure(const TheoremInstance& inst,
                                     bool use_sum) {
    const CIFSet& a = need_a(inst);
    const CIFSet& b = need_b(inst);
    const StructClass ca = detect_class(a, false);
    const StructClass cb = detect_class(b, false);
    StructClass cls = StructClass::None;
    if (ca == StructClass::Ideal && cb == StructClass::Ideal)
        cls = StructClass::Ideal;
    else if (ca != StructClass::None && cb != StructClass::None)
        cls = StructClass::Subsuper;
    else
        return skipped("operands lack a common structure class");
    if (!is_homogeneous_with(a, b))
        return skipped("A is not homogeneous with B");
    const CIFSet result = use_sum ? sum(a, b) : intersect(a, b);
    if (!class_verdict(result, cls, false).holds)
        return refuted(std::string(use_sum ? "sum" : "intersection") +
                       " loses the structure");
    return passed();
}

TheoremOutcome eval_anti_pre(const TheoremInstance& inst) {
    const CIFSet& a = need_a(inst);
    const LinearMap& phi = need_phi(inst);
    if (!validate_antihom(phi).valid)
        return skipped("phi is not an anti-homomorphism");
    const StructClass cls = detect_class(a, true);
    if (cls == StructClass::None)
        return skipped("A lacks the anti-CIF structure");
    if (!class_verdict(preimage(phi, a), cls, true).holds)
        return refuted("preimage loses the anti-CIF structure");
    return passed();
}

TheoremOutcome eval_anti_img(const TheoremInstance& inst) {
    const CIFSet& a = need_a(inst);
    const LinearMap& phi = need_phi(inst);
    if (!validate_antihom(phi).valid)
        return skipped("phi is not an anti-homomorphism");
    if (!phi.is_surjective()) return skipped("phi is not surjective");
    const StructClass cls = detect_class(a, true);
    if (cls == StructClass::None)
        return skipped("A lacks the anti-CIF structure");
    if (!class_verdict(image(phi, a), cls, true).holds)
        return refuted("image loses the anti-CIF structure");
    return passed();
}

TheoremOutcome eval_anti_sum(const TheoremInstance& inst) {
    const CIFSet& a = need_a(inst);
    const CIFSet& b = need_b(inst);
    const LinearMap& phi = need_phi(inst);
    if (!validate_antihom(phi).valid)
        return skipped("phi is not an anti-homomorphism");
    if (!phi.is_surjective()) return skipped("phi is not surjective");
    if (!is_anti_cif_ideal(a).holds || !is_anti_cif_ideal(b).holds)
        return skipped("operands are not anti-CIF ideals");
    if (!is_homogeneous_with(a, b))
        return skipped("A is not homogeneous with B");
    const CIFSet lhs = image(phi, sum(a, b));
    const CIFSet im_a = image(phi, a);
    const CIFSet im_b = image(phi, b);
    if (!is_homogeneous_with(im_a, im_b))
        return refuted("images are not pairwise homogeneous, their sum is "
                       "undefined");
    const CIFSet rhs = sum(im_a, im_b);
    if (!cifset_equal(lhs, rhs))
        return refuted("phi(A+B) differs from phi(A)+phi(B)");
    if (!is_anti_cif_ideal(lhs).holds)
        return refuted("phi(A+B) is not an anti-CIF ideal");
    return passed();
}

} // namespace

TheoremOutcome evaluate_theorem(const std::string& id,
                                const TheoremInstance& inst) {
    if (id == "P-SUM") return eval_binary_subspace(inst, true);
    if (id == "P-CAP") return eval_binary_subspace(inst, false);
    if (id == "P-SCALAR") return eval_scalar(inst);
    if (id == "P-PRE") return eval_pre_img(inst, true);
    if (id == "P-IMG") return eval_pre_img(inst, false);
    if (id == "I-GRADED") return eval_graded_meet(inst);
    if (id == "P-CUT-FWD") return eval_cut_fwd(inst);
    if (id == "P-CUT-BACK") return eval_cut_back(inst);
    if (id == "P-COMP") return eval_complements(inst);
    if (id == "P-IFF") return eval_iff(inst);
    if (id == "P-SUMSUPER") return eval_binary_structure(inst, true);
    if (id == "P-CAPSUPER") return eval_binary_structure(inst, false);
    if (id == "P-ANTIPRE") return eval_anti_pre(inst);
    if (id == "P-ANTIIMG") return eval_anti_img(inst);
    if (id == "P-ANTISUM") return eval_anti_sum(inst);
    throw ParseError("unknown theorem id '" + id + "'");
}

TheoremReport run_theorem(const std::string& id,
                          const std::vector<TheoremInstance>& instances) {
    if (!is_theorem_id(id)) throw ParseError("unknown theorem id '" + id + "'");
    const auto start = std::chrono::steady_clock::now();
    TheoremReport rep;
    rep.id = id;
    rep.instances = instances.size();
    for (const TheoremInstance& inst : instances) {
        const TheoremOutcome out = evaluate_theorem(id, inst);
        for (const auto& [name, ok] : out.variants)
            if (ok) ++rep.variant_passes[name];
        switch (out.status) {
        case OutcomeStatus::Passed:
            ++rep.passed;
            break;
        case OutcomeStatus::Skipped:
            ++rep.skipped;
            break;
        case OutcomeStatus::Refuted:
            if (!rep.refuted) {
                rep.refuted = true;
                rep.counterexample = counterexample_to_json(id, inst, out);
            }
            break;
        }
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return rep;
}

std::vector<TheoremInstance>
make_theorem_instances(const std::string& id, const AlgebraPtr& alg,
                       const ValueGrid& grid, std::size_t count,
                       std::uint64_t base_seed,
                       std::shared_ptr<const LinearMap> phi) {
    if (!is_theorem_id(id)) throw ParseError("unknown theorem id '" + id + "'");
    const bool needs_b =
        id == "P-SUM" || id == "P-CAP" || id == "P-SUMSUPER" ||
        id == "P-CAPSUPER" || id == "P-ANTISUM";
    const bool needs_map = id == "P-PRE" || id == "P-IMG" ||
                           id == "P-ANTIPRE" || id == "P-ANTIIMG" ||
                           id == "P-ANTISUM";
    const bool anti = id.rfind("P-ANTI", 0) == 0;
    const bool structured = id == "I-GRADED" || id == "P-CUT-FWD" ||
                            id == "P-CUT-BACK" || id == "P-COMP" ||
                            id == "P-IFF" || id == "P-SUMSUPER" ||
                            id == "P-CAPSUPER";

    std::vector<TheoremInstance> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t s = base_seed + 1000003ULL * i;
        TheoremInstance inst;
        inst.label = "i=" + std::to_string(i) + ",seed=" + std::to_string(s);

        std::shared_ptr<const LinearMap> map = phi;
        if (needs_map && !map) {
            if (anti) {
                map = std::make_shared<LinearMap>(LinearMap::neg_identity(alg));
            } else {
                Rng rng(s + 104729);
                std::vector<std::vector<FieldElem>> m(
                    alg->dim(), std::vector<FieldElem>(alg->dim(), 0));
                for (auto& row : m)
                    for (FieldElem& v : row)
                        v = static_cast<FieldElem>(rng.bounded(
                            static_cast<std::uint64_t>(alg->field().p)));
                map = std::make_shared<LinearMap>(alg, alg, std::move(m));
            }
        }
        inst.phi = map;

        StructureKind kind = StructureKind::Subspace;
        if (anti)
            kind = StructureKind::Ideal;
        else if (structured)
            kind = (i % 2 == 0) ? StructureKind::Ideal
                                : StructureKind::Subsuperalgebra;

        const AlgebraPtr set_space =
            (id == "P-PRE" || id == "P-ANTIPRE") && map ? map->target : alg;
        inst.a = std::make_shared<CIFSet>(
            random_cif_structure(set_space, grid, kind, s));
        if (needs_b)
            inst.b = std::make_shared<CIFSet>(
                random_cif_structure(alg, grid, kind, s + 7919));
        out.push_back(std::move(inst));
    }
    return out;
}

json_io::json counterexample_to_json(const std::string& id,
                                     const TheoremInstance& inst,
                                     const TheoremOutcome& outcome) {
    json_io::json j{{"theorem", id},
                    {"label", inst.label},
                    {"detail", outcome.detail}};
    if (inst.a) j["a"] = json_io::cifset_to_json(*inst.a);
    if (inst.b) j["b"] = json_io::cifset_to_json(*inst.b);
    if (inst.phi) j["map"] = json_io::linear_map_to_json(*inst.phi);
    return j;
}

bool replay_refutes(const json_io::json& counterexample) {
    const std::string id = counterexample.at("theorem").get<std::string>();
    TheoremInstance inst;
    inst.label = "replay";
    if (counterexample.contains("a"))
        inst.a = std::make_shared<CIFSet>(
            json_io::cifset_from_json(counterexample["a"]));
    if (counterexample.contains("b"))
        inst.b = std::make_shared<CIFSet>(
            json_io::cifset_from_json(counterexample["b"]));
    if (counterexample.contains("map"))
        inst.phi = std::make_shared<LinearMap>(
            json_io::linear_map_from_json(counterexample["map"]));
    return evaluate_theorem(id, inst).status == OutcomeStatus::Refuted;
}

json_io::json report_to_json(const TheoremReport& r, bool include_timing) {
    json_io::json variants = json_io::json::object();
    for (const auto& [name, n] : r.variant_passes) variants[name] = n;
    json_io::json j{{"id", r.id},
                    {"description", theorem_description(r.id)},
                    {"instances", r.instances},
                    {"passed", r.passed},
                    {"skipped", r.skipped},
                    {"verdict", r.refuted ? "refuted" : "verified"},
                    {"counterexample", r.counterexample},
                    {"variants", variants}};
    if (include_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

} // namespace ciflie::oracle
