#include "ciflie/superalgebra.hpp"

#include <algorithm>
#include <sstream>

#include "ciflie/config.hpp"

namespace ciflie {

bool Field::is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldElem Field::inv(FieldElem a) const {
    if (a == 0) throw Error("inverse of zero field element");
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        const std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    return reduce(t);
}

std::string SuperVector::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ',';
        os << coords[i];
    }
    os << ']';
    return os.str();
}

namespace {

std::uint64_t pow_saturating(std::int64_t base, std::size_t exp) {
    __int128 v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        v *= base;
        if (v > static_cast<__int128>(UINT64_MAX)) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(v);
}

} // namespace

LieSuperalgebra::LieSuperalgebra(Field f, std::size_t d0, std::size_t d1,
                                 std::vector<SuperVector> sc)
    : field_(f), d0_(d0), d1_(d1), sc_(std::move(sc)),
      universe_size_(pow_saturating(f.p, d0 + d1)) {}

std::vector<SuperVector>
LieSuperalgebra::assemble_table(const Field& f, std::size_t n,
                                const std::vector<ScEntry>& sc) {
    if (n == 0) throw DimensionMismatch("zero-dimensional space");
    std::vector<SuperVector> table(n * n, SuperVector::zero(n));
    for (const ScEntry& e : sc) {
        if (e.i >= n || e.j >= n || e.k >= n)
            throw DimensionMismatch("structure constant index out of range");
        table[e.i * n + e.j].coords[e.k] =
            f.add(table[e.i * n + e.j].coords[e.k], f.reduce(e.value));
    }
    return table;
}

std::shared_ptr<const LieSuperalgebra>
LieSuperalgebra::make(std::int64_t p, std::size_t d0, std::size_t d1,
                      const std::vector<ScEntry>& sc) {
    const Field f(p);
    const std::size_t n = d0 + d1;
    auto alg = std::shared_ptr<LieSuperalgebra>(
        new LieSuperalgebra(f, d0, d1, assemble_table(f, n, sc)));
    if (const auto w = alg->grading_failure())
        throw AxiomViolation("grading", *w);
    if (const auto w = alg->skew_failure())
        throw AxiomViolation("super-skew-symmetry", *w);
    if (const auto w = alg->jacobi_failure())
        throw AxiomViolation("super-jacobi", *w);
    return alg;
}

AxiomReport LieSuperalgebra::check_axioms(std::int64_t p, std::size_t d0,
                                          std::size_t d1,
                                          const std::vector<ScEntry>& sc) {
    AxiomReport rep;
    if (!Field::is_prime(p)) {
        rep.prime_ok = false;
        return rep;
    }
    const Field f(p);
    const LieSuperalgebra alg(f, d0, d1, assemble_table(f, d0 + d1, sc));
    if (const auto w = alg.grading_failure()) {
        rep.grading_ok = false;
        rep.grading_witness = *w;
    }
    if (const auto w = alg.skew_failure()) {
        rep.skew_ok = false;
        rep.skew_witness = *w;
    }
    if (const auto w = alg.jacobi_failure()) {
        rep.jacobi_ok = false;
        rep.jacobi_witness = *w;
    }
    return rep;
}

AlgebraPtr make_superalgebra(std::int64_t p, std::size_t d0, std::size_t d1,
                             const std::vector<ScEntry>& sc) {
    return LieSuperalgebra::make(p, d0, d1, sc);
}

std::optional<std::string> LieSuperalgebra::grading_failure() const {
    // [V_i, V_j] must lie in V_{i+j mod 2}, checked on basis pairs
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const int target = (coord_parity(i) + coord_parity(j)) % 2;
            const SuperVector& br = basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                if (br.coords[k] != 0 && coord_parity(k) != target)
                    return "[e" + std::to_string(i) + ",e" +
                           std::to_string(j) + "] = " + br.str() +
                           " leaves the parity-" + std::to_string(target) +
                           " subspace";
        }
    return std::nullopt;
}

std::optional<std::string> LieSuperalgebra::skew_failure() const {
    // [e_i,e_j] = -(-1)^{|i||j|} [e_j,e_i]
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const bool odd_pair = coord_parity(i) * coord_parity(j) == 1;
            const SuperVector& lhs = basis_bracket(i, j);
            SuperVector rhs = basis_bracket(j, i);
            if (!odd_pair) rhs = negate(rhs);
            if (lhs != rhs)
                return "(e" + std::to_string(i) + ",e" + std::to_string(j) +
                       ")";
        }
    return std::nullopt;
}

std::optional<std::string> LieSuperalgebra::jacobi_failure() const {
    // [x,[y,z]] - (-1)^{|x||y|} [y,[x,z]] = [[x,y],z] on basis triples
    const std::size_t n = dim();
    const Field& f = field_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const SuperVector lhs1 =
                    bracket(basis_vector(i), basis_bracket(j, k));
                const SuperVector lhs2 =
                    bracket(basis_vector(j), basis_bracket(i, k));
                SuperVector lhs = lhs1;
                const bool odd_pair = (coord_parity(i) * coord_parity(j)) == 1;
                for (std::size_t c = 0; c < n; ++c) {
                    const FieldElem term =
                        odd_pair ? lhs2.coords[c] : f.neg(lhs2.coords[c]);
                    lhs.coords[c] = f.add(lhs.coords[c], term);
                }
                const SuperVector rhs =
                    bracket(basis_bracket(i, j), basis_vector(k));
                if (lhs != rhs)
                    return "(e" + std::to_string(i) + ",e" +
                           std::to_string(j) + ",e" + std::to_string(k) + ")";
            }
    return std::nullopt;
}

std::uint64_t LieSuperalgebra::checked_universe_size() const {
    return checked_universe_size(config::universe_cap());
}

std::uint64_t LieSuperalgebra::checked_universe_size(std::uint64_t cap) const {
    if (universe_size_ > cap) throw UniverseTooLarge(universe_size_, cap);
    return universe_size_;
}

SuperVector LieSuperalgebra::add(const SuperVector& x, const SuperVector& y) const {
    check_element(x);
    check_element(y);
    SuperVector out = x;
    for (std::size_t i = 0; i < y.size(); ++i)
        out.coords[i] = field_.add(out.coords[i], y.coords[i]);
    return out;
}

SuperVector LieSuperalgebra::sub(const SuperVector& x, const SuperVector& y) const {
    check_element(x);
    check_element(y);
    SuperVector out = x;
    for (std::size_t i = 0; i < y.size(); ++i)
        out.coords[i] = field_.sub(out.coords[i], y.coords[i]);
    return out;
}

SuperVector LieSuperalgebra::negate(const SuperVector& x) const {
    check_element(x);
    SuperVector out = x;
    for (FieldElem& c : out.coords) c = field_.neg(c);
    return out;
}

SuperVector LieSuperalgebra::scale(FieldElem alpha, const SuperVector& x) const {
    check_element(x);
    SuperVector out = x;
    for (FieldElem& c : out.coords) c = field_.mul(alpha, c);
    return out;
}

std::pair<SuperVector, SuperVector>
LieSuperalgebra::graded_parts(const SuperVector& x) const {
    check_element(x);
    SuperVector even = zero_vector();
    SuperVector odd = zero_vector();
    for (std::size_t i = 0; i < d0_; ++i) even.coords[i] = x.coords[i];
    for (std::size_t i = d0_; i < dim(); ++i) odd.coords[i] = x.coords[i];
    return {even, odd};
}

std::optional<int> LieSuperalgebra::parity_of(const SuperVector& x) const {
    auto [even, odd] = graded_parts(x);
    const bool e = even.is_zero();
    const bool o = odd.is_zero();
    if (o) return 0; // includes the zero vector
    if (e) return 1;
    return std::nullopt;
}

SuperVector LieSuperalgebra::bracket(const SuperVector& x, const SuperVector& y) const {
    check_element(x);
    check_element(y);
    const std::size_t n = dim();
    SuperVector out = zero_vector();
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coords[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y.coords[j] == 0) continue;
            const FieldElem c = field_.mul(x.coords[i], y.coords[j]);
            const SuperVector& br = basis_bracket(i, j);
            for (std::size_t k = 0; k < n; ++k)
                out.coords[k] =
                    field_.add(out.coords[k], field_.mul(c, br.coords[k]));
        }
    }
    return out;
}

std::uint64_t LieSuperalgebra::index_of(const SuperVector& x) const {
    check_element(x);
    std::uint64_t idx = 0;
    for (FieldElem c : x.coords)
        idx = idx * static_cast<std::uint64_t>(field_.p) +
              static_cast<std::uint64_t>(c);
    return idx;
}

SuperVector LieSuperalgebra::element_at(std::uint64_t index) const {
    SuperVector v = zero_vector();
    for (std::size_t i = dim(); i-- > 0;) {
        v.coords[i] = static_cast<FieldElem>(
            index % static_cast<std::uint64_t>(field_.p));
        index /= static_cast<std::uint64_t>(field_.p);
    }
    return v;
}

std::vector<SuperVector> LieSuperalgebra::enumerate_elements() const {
    return enumerate_elements(config::universe_cap());
}

std::vector<SuperVector> LieSuperalgebra::enumerate_elements(std::uint64_t cap) const {
    const std::uint64_t total = checked_universe_size(cap);
    std::vector<SuperVector> out;
    out.reserve(total);
    for (std::uint64_t i = 0; i < total; ++i) out.push_back(element_at(i));
    return out;
}

std::uint64_t LieSuperalgebra::part_size(int parity) const {
    return pow_saturating(field_.p, parity == 0 ? d0_ : d1_);
}

std::vector<SuperVector> LieSuperalgebra::enumerate_part(int parity) const {
    const std::size_t lo = parity == 0 ? 0 : d0_;
    const std::size_t hi = parity == 0 ? d0_ : dim();
    const std::uint64_t total = part_size(parity);
    if (total > config::universe_cap())
        throw UniverseTooLarge(total, config::universe_cap());
    std::vector<SuperVector> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        SuperVector v = zero_vector();
        std::uint64_t rem = idx;
        for (std::size_t i = hi; i-- > lo;) {
            v.coords[i] = static_cast<FieldElem>(
                rem % static_cast<std::uint64_t>(field_.p));
            rem /= static_cast<std::uint64_t>(field_.p);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::uint64_t LieSuperalgebra::part_index_of(const SuperVector& x, int parity) const {
    check_element(x);
    const std::size_t lo = parity == 0 ? 0 : d0_;
    const std::size_t hi = parity == 0 ? d0_ : dim();
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i >= lo && i < hi)
            idx = idx * static_cast<std::uint64_t>(field_.p) +
                  static_cast<std::uint64_t>(x.coords[i]);
        else if (x.coords[i] != 0)
            throw DimensionMismatch("vector not supported on parity " +
                                    std::to_string(parity));
    }
    return idx;
}

bool LieSuperalgebra::structurally_equal(const LieSuperalgebra& o) const {
    if (field_.p != o.field_.p || d0_ != o.d0_ || d1_ != o.d1_) return false;
    return sc_ == o.sc_;
}

// -- LinearMap ------------------------------------------------------------

LinearMap::LinearMap(AlgebraPtr src, AlgebraPtr tgt,
                     std::vector<std::vector<FieldElem>> m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (source->field().p != target->field().p)
        throw DimensionMismatch("source and target over different primes");
    if (matrix.size() != target->dim())
        throw DimensionMismatch("matrix row count != target dimension");
    for (auto& row : matrix) {
        if (row.size() != source->dim())
            throw DimensionMismatch("matrix column count != source dimension");
        for (FieldElem& v : row) v = source->field().reduce(v);
    }
}

SuperVector LinearMap::apply(const SuperVector& x) const {
    source->check_element(x);
    const Field& f = source->field();
    SuperVector out = target->zero_vector();
    for (std::size_t r = 0; r < matrix.size(); ++r) {
        FieldElem acc = 0;
        for (std::size_t c = 0; c < x.size(); ++c)
            acc = f.add(acc, f.mul(matrix[r][c], x.coords[c]));
        out.coords[r] = acc;
    }
    return out;
}

bool LinearMap::is_grading_preserving() const {
    for (std::size_t r = 0; r < matrix.size(); ++r)
        for (std::size_t c = 0; c < matrix[r].size(); ++c)
            if (matrix[r][c] != 0 &&
                target->coord_parity(r) != source->coord_parity(c))
                return false;
    return true;
}

bool LinearMap::is_surjective() const {
    // rank via Gaussian elimination over GF(p)
    const Field& f = source->field();
    std::vector<std::vector<FieldElem>> m = matrix;
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        const FieldElem inv = f.inv(m[rank][col]);
        for (std::size_t c = col; c < cols; ++c)
            m[rank][c] = f.mul(m[rank][c], inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            const FieldElem factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] = f.sub(m[r][c], f.mul(factor, m[rank][c]));
        }
        ++rank;
    }
    return rank == target->dim();
}

LinearMap LinearMap::identity(const AlgebraPtr& a) {
    std::vector<std::vector<FieldElem>> m(a->dim(),
                                          std::vector<FieldElem>(a->dim(), 0));
    for (std::size_t i = 0; i < a->dim(); ++i) m[i][i] = 1;
    return LinearMap(a, a, std::move(m));
}

LinearMap LinearMap::neg_identity(const AlgebraPtr& a) {
    std::vector<std::vector<FieldElem>> m(a->dim(),
                                          std::vector<FieldElem>(a->dim(), 0));
    for (std::size_t i = 0; i < a->dim(); ++i) m[i][i] = a->field().neg(1);
    return LinearMap(a, a, std::move(m));
}

LinearMap LinearMap::zero(const AlgebraPtr& a) {
    std::vector<std::vector<FieldElem>> m(a->dim(),
                                          std::vector<FieldElem>(a->dim(), 0));
    return LinearMap(a, a, std::move(m));
}

LinearMap LinearMap::basis_permutation(const AlgebraPtr& a,
                                       const std::vector<std::size_t>& perm) {
    if (perm.size() != a->dim())
        throw DimensionMismatch("permutation length != dimension");
    std::vector<std::vector<FieldElem>> m(a->dim(),
                                          std::vector<FieldElem>(a->dim(), 0));
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (perm[i] >= a->dim())
            throw DimensionMismatch("permutation image out of range");
        m[perm[i]][i] = 1;
    }
    return LinearMap(a, a, std::move(m));
}

// -- anti-homomorphisms -----------------------------------------------------

AntihomReport validate_antihom(const LinearMap& phi, bool exhaustive) {
    AntihomReport rep;
    if (!phi.is_grading_preserving()) {
        rep.valid = false;
        rep.reason = "map does not preserve the grading";
        return rep;
    }
    const auto& src = *phi.source;
    const auto& tgt = *phi.target;
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = 0; j < src.dim(); ++j) {
            const SuperVector lhs = phi.apply(src.basis_bracket(i, j));
            const SuperVector rhs = tgt.negate(
                tgt.bracket(phi.apply(src.basis_vector(i)),
                            phi.apply(src.basis_vector(j))));
            if (lhs != rhs) {
                rep.valid = false;
                rep.reason = "phi([e" + std::to_string(i) + ",e" +
                             std::to_string(j) + "]) != -[phi(e" +
                             std::to_string(i) + "),phi(e" +
                             std::to_string(j) + ")]";
                rep.witness_pair = {i, j};
                return rep;
            }
        }
    if (exhaustive) {
        const auto universe = src.enumerate_elements();
        for (const SuperVector& x : universe)
            for (const SuperVector& y : universe) {
                const SuperVector lhs = phi.apply(src.bracket(x, y));
                const SuperVector rhs =
                    tgt.negate(tgt.bracket(phi.apply(x), phi.apply(y)));
                if (lhs != rhs) {
                    rep.valid = false;
                    rep.reason = "exhaustive check failed at x=" + x.str() +
                                 ", y=" + y.str();
                    return rep;
                }
            }
    }
    return rep;
}

std::vector<SuperVector> preimage_fiber(const LinearMap& phi,
                                        const SuperVector& y) {
    phi.target->check_element(y);
    std::vector<SuperVector> out;
    for (const SuperVector& x : phi.source->enumerate_elements())
        if (phi.apply(x) == y) out.push_back(x);
    return out;
}

} // namespace ciflie
