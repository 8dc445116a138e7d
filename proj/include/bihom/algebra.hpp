#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/matrix.hpp"
#include "bihom/subspace.hpp"

namespace bihom {

/**
 * Structure-constant tensor of a bilinear product on K^n:
 * entry(i,j,k) is the e_k coefficient of the product of e_i and e_j.
 */
class StructureTensor {
public:
    StructureTensor() = default;
    explicit StructureTensor(std::size_t dim)
        : dim_(dim), c_(dim * dim * dim, Rational(0)) {}

    std::size_t dim() const { return dim_; }

    Rational& entry(std::size_t i, std::size_t j, std::size_t k) {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    const Rational& entry(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }

    /// Product of two basis elements as a coordinate vector.
    Vec of_basis(std::size_t i, std::size_t j) const {
        Vec v(dim_);
        for (std::size_t k = 0; k < dim_; ++k) v[k] = entry(i, j, k);
        return v;
    }

    void set_basis(std::size_t i, std::size_t j, const Vec& v) {
        for (std::size_t k = 0; k < dim_; ++k) entry(i, j, k) = v[k];
    }

    /// Bilinear extension to arbitrary coordinate vectors.
    Vec apply(const Vec& x, const Vec& y) const {
        Vec out(dim_, Rational(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j] == 0) continue;
                const Rational f = x[i] * y[j];
                for (std::size_t k = 0; k < dim_; ++k) {
                    const Rational& ck = entry(i, j, k);
                    if (ck != 0) out[k] += f * ck;
                }
            }
        }
        return out;
    }

    bool operator==(const StructureTensor& o) const {
        return dim_ == o.dim_ && c_ == o.c_;
    }
    bool operator!=(const StructureTensor& o) const { return !(*this == o); }

private:
    std::size_t dim_ = 0;
    std::vector<Rational> c_;
};

/// Bihom-Lie algebra: bracket tensor plus the two twist maps.
struct BihomLieAlgebra {
    std::size_t dim = 0;
    StructureTensor bracket;
    Matrix alpha;
    Matrix beta;

    Vec bracket_vec(const Vec& x, const Vec& y) const { return bracket.apply(x, y); }

    bool operator==(const BihomLieAlgebra& o) const {
        return dim == o.dim && bracket == o.bracket && alpha == o.alpha && beta == o.beta;
    }
};

/// Bihom-associative algebra: product tensor plus the two twist maps.
struct BihomAssociativeAlgebra {
    std::size_t dim = 0;
    StructureTensor product;
    Matrix alpha;
    Matrix beta;

    Vec product_vec(const Vec& x, const Vec& y) const { return product.apply(x, y); }
};

/// First failing basis pair together with the exact defect vector.
struct PairWitness {
    std::size_t i = 0, j = 0;
    Vec defect;
};

/// First failing basis triple together with the exact defect vector.
struct TripleWitness {
    std::size_t i = 0, j = 0, k = 0;
    Vec defect;
};

struct MultiplicativityCheck {
    bool alpha_ok = false;
    bool beta_ok = false;
    std::optional<PairWitness> alpha_witness;
    std::optional<PairWitness> beta_witness;
    bool ok() const { return alpha_ok && beta_ok; }
};

struct RegularityCheck {
    bool alpha_ok = false;
    bool beta_ok = false;
    bool ok() const { return alpha_ok && beta_ok; }
};

/**
 * Outcome of the axiom scan for a Bihom-Lie algebra. The twisted
 * skew-symmetry and the Bihom-Jacobi condition carry the first violating
 * basis tuple and its defect; multiplicativity and regularity are reported
 * per twist map.
 */
struct AxiomReport {
    bool commuting_twists = false;
    bool skew_symmetry = false;
    std::optional<PairWitness> skew_witness;
    bool bihom_jacobi = false;
    std::optional<TripleWitness> jacobi_witness;
    MultiplicativityCheck multiplicative;
    RegularityCheck regular;

    /// The defining axioms of a Bihom-Lie algebra (commuting twists,
    /// twisted skew-symmetry, Bihom-Jacobi).
    bool lie_axioms_pass() const {
        return commuting_twists && skew_symmetry && bihom_jacobi;
    }
    /// Defining axioms plus multiplicativity of both twists.
    bool all_pass() const { return lie_axioms_pass() && multiplicative.ok(); }
};

/// Same shape for the associative case; Bihom-associativity replaces the two
/// bracket axioms.
struct AssocAxiomReport {
    bool commuting_twists = false;
    bool associativity = false;
    std::optional<TripleWitness> assoc_witness;
    MultiplicativityCheck multiplicative;
    RegularityCheck regular;

    bool axioms_pass() const { return commuting_twists && associativity; }
    bool all_pass() const { return axioms_pass() && multiplicative.ok(); }
};

namespace detail {

/// Multiplicativity of one map against an arbitrary structure tensor.
inline std::pair<bool, std::optional<PairWitness>>
map_is_multiplicative(const StructureTensor& t, const Matrix& m) {
    const std::size_t n = t.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vec lhs = m.apply(t.of_basis(i, j));
            const Vec rhs = t.apply(m.col(i), m.col(j));
            if (lhs != rhs) return {false, PairWitness{i, j, lhs - rhs}};
        }
    return {true, std::nullopt};
}

} // namespace detail

inline MultiplicativityCheck check_multiplicative(const StructureTensor& t,
                                                  const Matrix& alpha,
                                                  const Matrix& beta) {
    MultiplicativityCheck c;
    auto [aok, aw] = detail::map_is_multiplicative(t, alpha);
    auto [bok, bw] = detail::map_is_multiplicative(t, beta);
    c.alpha_ok = aok;
    c.beta_ok = bok;
    c.alpha_witness = std::move(aw);
    c.beta_witness = std::move(bw);
    return c;
}

/// Eq-(4) check: both twists are bracket homomorphisms.
inline MultiplicativityCheck check_multiplicative(const BihomLieAlgebra& L) {
    return check_multiplicative(L.bracket, L.alpha, L.beta);
}

inline RegularityCheck check_regular(const BihomLieAlgebra& L) {
    return {is_invertible(L.alpha), is_invertible(L.beta)};
}

inline RegularityCheck check_regular(const BihomAssociativeAlgebra& A) {
    return {is_invertible(A.alpha), is_invertible(A.beta)};
}

/**
 * Scans all basis tuples for the Bihom-Lie axioms: commuting twists,
 * [β(a),α(b)] = −[β(b),α(a)], and the Bihom-Jacobi condition
 * [β²(a),[β(b),α(c)]] + cyclic = 0. Bilinearity makes the basis scan
 * equivalent to the universally quantified axioms. Failures are reported,
 * never thrown.
 */
inline AxiomReport check_bihom_lie(const BihomLieAlgebra& L) {
    const std::size_t n = L.dim;
    AxiomReport rep;
    rep.commuting_twists = (L.alpha * L.beta == L.beta * L.alpha);

    rep.skew_symmetry = true;
    for (std::size_t i = 0; i < n && rep.skew_symmetry; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Vec d = L.bracket_vec(L.beta.col(i), L.alpha.col(j)) +
                    L.bracket_vec(L.beta.col(j), L.alpha.col(i));
            if (!is_zero(d)) {
                rep.skew_symmetry = false;
                rep.skew_witness = PairWitness{i, j, std::move(d)};
                break;
            }
        }

    const Matrix beta2 = L.beta * L.beta;
    rep.bihom_jacobi = true;
    for (std::size_t i = 0; i < n && rep.bihom_jacobi; ++i)
        for (std::size_t j = 0; j < n && rep.bihom_jacobi; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec d = L.bracket_vec(beta2.col(i),
                                      L.bracket_vec(L.beta.col(j), L.alpha.col(k))) +
                        L.bracket_vec(beta2.col(j),
                                      L.bracket_vec(L.beta.col(k), L.alpha.col(i))) +
                        L.bracket_vec(beta2.col(k),
                                      L.bracket_vec(L.beta.col(i), L.alpha.col(j)));
                if (!is_zero(d)) {
                    rep.bihom_jacobi = false;
                    rep.jacobi_witness = TripleWitness{i, j, k, std::move(d)};
                    break;
                }
            }

    rep.multiplicative = check_multiplicative(L);
    rep.regular = check_regular(L);
    return rep;
}

/// Bihom-associativity scan: α(a)(bc) = (ab)β(c) on all basis triples, plus
/// commuting twists; multiplicativity and regularity reported alongside.
inline AssocAxiomReport check_bihom_associative(const BihomAssociativeAlgebra& A) {
    const std::size_t n = A.dim;
    AssocAxiomReport rep;
    rep.commuting_twists = (A.alpha * A.beta == A.beta * A.alpha);

    rep.associativity = true;
    for (std::size_t i = 0; i < n && rep.associativity; ++i)
        for (std::size_t j = 0; j < n && rep.associativity; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec d = A.product_vec(A.alpha.col(i), A.product.of_basis(j, k)) -
                        A.product_vec(A.product.of_basis(i, j), A.beta.col(k));
                if (!is_zero(d)) {
                    rep.associativity = false;
                    rep.assoc_witness = TripleWitness{i, j, k, std::move(d)};
                    break;
                }
            }

    rep.multiplicative = check_multiplicative(A.product, A.alpha, A.beta);
    rep.regular = check_regular(A);
    return rep;
}

/**
 * Hom-Jacobi defect [α(x),[y,z]] + [α(y),[z,x]] + [α(z),[x,y]] evaluated with
 * the supplied bracket. This is the single-twist cyclic sum, not the
 * Bihom-Jacobi expression; a Bihom-Lie algebra may have a nonzero defect here.
 */
inline Vec hom_jacobi_defect(const StructureTensor& bracket, const Matrix& alpha,
                             const Vec& x, const Vec& y, const Vec& z) {
    return bracket.apply(alpha.apply(x), bracket.apply(y, z)) +
           bracket.apply(alpha.apply(y), bracket.apply(z, x)) +
           bracket.apply(alpha.apply(z), bracket.apply(x, y));
}

/// Subalgebra test: α(H) ⊆ H, β(H) ⊆ H and [H,H] ⊆ H, decided on basis
/// vectors of H.
inline bool check_subalgebra(const BihomLieAlgebra& L, const Subspace& H) {
    if (H.ambient_dim() != L.dim)
        throw DimensionMismatchError("check_subalgebra: ambient dim != algebra dim");
    for (const Vec& u : H.basis()) {
        if (!H.contains(L.alpha.apply(u))) return false;
        if (!H.contains(L.beta.apply(u))) return false;
    }
    for (const Vec& u : H.basis())
        for (const Vec& v : H.basis())
            if (!H.contains(L.bracket_vec(u, v))) return false;
    return true;
}

/// Linear map between two Bihom-Lie algebras; matrix is target.dim × source.dim.
struct AlgebraMorphism {
    BihomLieAlgebra source;
    BihomLieAlgebra target;
    Matrix map;
};

struct MorphismCheck {
    bool intertwines_alpha = false;
    bool intertwines_beta = false;
    bool preserves_bracket = false;
    std::optional<PairWitness> bracket_witness;
    bool ok() const { return intertwines_alpha && intertwines_beta && preserves_bracket; }
};

/// Morphism test: α'∘f = f∘α, β'∘f = f∘β and f[u,v] = [f(u),f(v)]' on basis pairs.
inline MorphismCheck check_morphism(const AlgebraMorphism& f) {
    if (f.map.rows() != f.target.dim || f.map.cols() != f.source.dim)
        throw DimensionMismatchError("check_morphism: map shape mismatch");
    MorphismCheck c;
    c.intertwines_alpha = (f.target.alpha * f.map == f.map * f.source.alpha);
    c.intertwines_beta = (f.target.beta * f.map == f.map * f.source.beta);
    c.preserves_bracket = true;
    const std::size_t n = f.source.dim;
    for (std::size_t i = 0; i < n && c.preserves_bracket; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec d = f.map.apply(f.source.bracket.of_basis(i, j)) -
                    f.target.bracket_vec(f.map.col(i), f.map.col(j));
            if (!is_zero(d)) {
                c.preserves_bracket = false;
                c.bracket_witness = PairWitness{i, j, std::move(d)};
                break;
            }
        }
    return c;
}

/// Graph of a linear map L → L' as a subspace of K^(dim L + dim L').
inline Subspace graph_subspace(const AlgebraMorphism& f) {
    const std::size_t n = f.source.dim, m = f.target.dim;
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(n + m, Rational(0));
        v[i] = 1;
        const Vec fi = f.map.col(i);
        for (std::size_t k = 0; k < m; ++k) v[n + k] = fi[k];
        gens.push_back(std::move(v));
    }
    return Subspace::span(n + m, gens);
}

} // namespace bihom
