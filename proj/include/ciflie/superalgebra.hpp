#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ciflie/errors.hpp"

namespace ciflie {

using FieldElem = std::int64_t; // always reduced into [0, p)

/// Prime field GF(p). Arithmetic is exact modular arithmetic.
struct Field {
    std::int64_t p;

    explicit Field(std::int64_t modulus) : p(modulus) {
        if (!is_prime(p)) throw NotPrime(p);
    }

    static bool is_prime(std::int64_t n);

    FieldElem reduce(std::int64_t v) const {
        v %= p;
        return v < 0 ? v + p : v;
    }
    FieldElem add(FieldElem a, FieldElem b) const { return (a + b) % p; }
    FieldElem sub(FieldElem a, FieldElem b) const { return reduce(a - b); }
    FieldElem mul(FieldElem a, FieldElem b) const {
        return static_cast<FieldElem>(
            static_cast<__int128>(a) * b % p);
    }
    FieldElem neg(FieldElem a) const { return a == 0 ? 0 : p - a; }
    FieldElem inv(FieldElem a) const; // a != 0

    bool operator==(const Field& o) const { return p == o.p; }
};

/// Coordinate vector in a graded space V = V0 + V1: the first d0 coordinates
/// span the even part, the remaining d1 the odd part.
struct SuperVector {
    std::vector<FieldElem> coords;

    SuperVector() = default;
    explicit SuperVector(std::vector<FieldElem> c) : coords(std::move(c)) {}
    static SuperVector zero(std::size_t dim) {
        return SuperVector(std::vector<FieldElem>(dim, 0));
    }
    static SuperVector basis(std::size_t dim, std::size_t i) {
        SuperVector v = zero(dim);
        v.coords[i] = 1;
        return v;
    }

    std::size_t size() const { return coords.size(); }
    bool is_zero() const {
        for (FieldElem c : coords)
            if (c != 0) return false;
        return true;
    }
    bool operator==(const SuperVector& o) const { return coords == o.coords; }
    bool operator!=(const SuperVector& o) const { return coords != o.coords; }
    std::string str() const;
};

/// One nonzero structure constant: [e_i, e_j] has coefficient value on e_k.
struct ScEntry {
    std::size_t i, j, k;
    std::int64_t value;
};

/// Per-axiom validation outcome, with the first witness of each failure.
struct AxiomReport {
    bool prime_ok = true;
    bool grading_ok = true;
    bool skew_ok = true;
    bool jacobi_ok = true;
    std::string grading_witness;
    std::string skew_witness;
    std::string jacobi_witness;

    bool all_ok() const {
        return prime_ok && grading_ok && skew_ok && jacobi_ok;
    }
};

/// Finite-dimensional Lie superalgebra over GF(p), presented by structure
/// constants on a homogeneous basis (even basis vectors first, odd after).
/// The three superalgebra axioms are verified exhaustively over basis tuples
/// at construction; bilinearity extends them to the whole space.
class LieSuperalgebra {
public:
    static std::shared_ptr<const LieSuperalgebra>
    make(std::int64_t p, std::size_t d0, std::size_t d1,
         const std::vector<ScEntry>& sc);

    /// Runs all three axiom checks without throwing on violations.
    static AxiomReport check_axioms(std::int64_t p, std::size_t d0,
                                    std::size_t d1,
                                    const std::vector<ScEntry>& sc);

    const Field& field() const { return field_; }
    std::size_t d0() const { return d0_; }
    std::size_t d1() const { return d1_; }
    std::size_t dim() const { return d0_ + d1_; }

    /// True when p is 2 or 3, where the super sign conventions degenerate;
    /// attached as a warning, never fatal.
    bool low_characteristic_warning() const { return field_.p <= 3; }

    int coord_parity(std::size_t i) const { return i < d0_ ? 0 : 1; }

    /// Number of elements of V; saturates at UINT64_MAX on overflow.
    std::uint64_t universe_size() const { return universe_size_; }

    /// Throws UniverseTooLarge when universe_size() exceeds the given cap
    /// (the configured cap by default); otherwise returns the size.
    std::uint64_t checked_universe_size() const;
    std::uint64_t checked_universe_size(std::uint64_t cap) const;

    // -- vectors --------------------------------------------------------
    SuperVector zero_vector() const { return SuperVector::zero(dim()); }
    SuperVector basis_vector(std::size_t i) const {
        return SuperVector::basis(dim(), i);
    }
    SuperVector add(const SuperVector& x, const SuperVector& y) const;
    SuperVector sub(const SuperVector& x, const SuperVector& y) const;
    SuperVector negate(const SuperVector& x) const;
    SuperVector scale(FieldElem alpha, const SuperVector& x) const;

    /// Splits x into (x0, x1) with x = x0 + x1, x0 supported on even
    /// coordinates and x1 on odd coordinates.
    std::pair<SuperVector, SuperVector> graded_parts(const SuperVector& x) const;

    /// Parity of a homogeneous vector; nullopt for mixed vectors.
    /// The zero vector reports parity 0.
    std::optional<int> parity_of(const SuperVector& x) const;

    // -- bracket --------------------------------------------------------
    const SuperVector& basis_bracket(std::size_t i, std::size_t j) const {
        return sc_[i * dim() + j];
    }
    /// Bilinear extension of the structure constants.
    SuperVector bracket(const SuperVector& x, const SuperVector& y) const;

    // -- enumeration ----------------------------------------------------
    /// Rank of x in lexicographic coordinate order.
    std::uint64_t index_of(const SuperVector& x) const;
    SuperVector element_at(std::uint64_t index) const;

    /// All p^(d0+d1) vectors exactly once in lexicographic coordinate
    /// order. Throws UniverseTooLarge beyond the cap.
    std::vector<SuperVector> enumerate_elements() const;
    std::vector<SuperVector> enumerate_elements(std::uint64_t cap) const;

    /// Vectors supported on one parity's coordinates, in lexicographic
    /// order of those coordinates (p^d_parity elements).
    std::vector<SuperVector> enumerate_part(int parity) const;
    std::uint64_t part_size(int parity) const;
    /// Rank of a vector supported on V_parity within enumerate_part order.
    std::uint64_t part_index_of(const SuperVector& x, int parity) const;

    bool structurally_equal(const LieSuperalgebra& o) const;

    void check_element(const SuperVector& x) const {
        if (x.size() != dim())
            throw DimensionMismatch("vector of length " +
                                    std::to_string(x.size()) +
                                    " in a space of dimension " +
                                    std::to_string(dim()));
    }

private:
    LieSuperalgebra(Field f, std::size_t d0, std::size_t d1,
                    std::vector<SuperVector> sc);
    static std::vector<SuperVector> assemble_table(const Field& f,
                                                   std::size_t n,
                                                   const std::vector<ScEntry>& sc);
    std::optional<std::string> grading_failure() const;
    std::optional<std::string> skew_failure() const;
    std::optional<std::string> jacobi_failure() const;

    Field field_;
    std::size_t d0_, d1_;
    std::vector<SuperVector> sc_; // dim*dim dense table of basis brackets
    std::uint64_t universe_size_;
};

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

/// Convenience wrapper matching the construction contract.
AlgebraPtr make_superalgebra(std::int64_t p, std::size_t d0, std::size_t d1,
                             const std::vector<ScEntry>& sc);

/// Linear map between superalgebras over the same prime field, stored as a
/// (target dim) x (source dim) matrix acting on coordinates.
struct LinearMap {
    AlgebraPtr source;
    AlgebraPtr target;
    std::vector<std::vector<FieldElem>> matrix;

    LinearMap(AlgebraPtr src, AlgebraPtr tgt,
              std::vector<std::vector<FieldElem>> m);

    SuperVector apply(const SuperVector& x) const;

    /// Block-diagonal with respect to the even/odd split: even coordinates
    /// map into even coordinates and odd into odd.
    bool is_grading_preserving() const;

    /// Rank over GF(p) equals the target dimension.
    bool is_surjective() const;

    static LinearMap identity(const AlgebraPtr& a);
    static LinearMap neg_identity(const AlgebraPtr& a);
    static LinearMap zero(const AlgebraPtr& a);
    /// perm[i] = image basis index of source basis i; must preserve parity.
    static LinearMap basis_permutation(const AlgebraPtr& a,
                                       const std::vector<std::size_t>& perm);
};

/// Outcome of the anti-homomorphism check.
struct AntihomReport {
    bool valid = true;
    std::string reason; // empty when valid
    std::optional<std::pair<std::size_t, std::size_t>> witness_pair;
};

/// Positive iff phi is grading-preserving and phi([e_i,e_j]) equals
/// -[phi(e_i), phi(e_j)] on every basis pair; bilinearity extends the
/// identity to all vectors. With exhaustive set, the identity is re-checked
/// over every pair of source elements (universe cap applies).
AntihomReport validate_antihom(const LinearMap& phi, bool exhaustive = false);

/// Exact fiber {x : phi(x) = y}; empty when y is off the range.
std::vector<SuperVector> preimage_fiber(const LinearMap& phi,
                                        const SuperVector& y);

} // namespace ciflie
