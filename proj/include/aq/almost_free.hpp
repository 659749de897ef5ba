#pragma once

#include "aq/poly.hpp"
#include "aq/simplicial.hpp"
#include "aq/surjection.hpp"

#include <map>
#include <string>
#include <vector>

namespace aq {

/* An attached cell of an almost-free simplicial algebra: a non-degenerate
 * generator in one simplicial degree. d0 is a polynomial of the previous
 * level (empty for degree 0 and for sphere cells); all higher faces of a
 * cell vanish. Every structure map of the algebra is determined by this
 * data through the operator calculus on monotone surjections. */
struct Cell {
    std::string name;
    int degree = 0;
    int weight = 1;
    Poly d0; /* element of level degree-1, all of whose faces vanish */
};

/* Weight-truncated almost-free simplicial commutative algebra. Level m is
 * the free commutative algebra (truncated at weight W) on the generators
 * (cell c, surjection [m] ->> [deg c]); faces and degeneracies extend the
 * cell data multiplicatively. Levels are materialized lazily. */
class AlmostFreeAlgebra {
public:
    struct Gen {
        uint32_t cell;
        Surj alpha;
        int weight;
        uint32_t doubles; /* positions where alpha repeats: degeneracy membership */
    };

    struct FaceVal {
        enum Kind { Zero, GenVal, PolyVal } kind = Zero;
        uint32_t gen = 0; /* when GenVal: generator index at level-1 */
        Poly poly;        /* when PolyVal: element of level-1 */
    };

    AlmostFreeAlgebra() : p_(2), N_(0), W_(0), fp_(2) {}
    AlmostFreeAlgebra(uint32_t p, int N, int W) : p_(p), N_(N), W_(W), fp_(p) {}

    uint32_t p() const { return p_; }
    int N() const { return N_; }
    int W() const { return W_; }
    const Fp& fp() const { return fp_; }
    const std::vector<Cell>& cells() const { return cells_; }

    /* attaching a cell invalidates all cached level data */
    void add_cell(Cell c);

    const std::vector<Gen>& gens(int level) const;
    int gen_count(int level) const { return static_cast<int>(gens(level).size()); }
    uint32_t gen_index(int level, uint32_t cell, const Surj& alpha) const;

    const FaceVal& face_on_gen(int level, int i, uint32_t g) const;
    uint32_t degen_on_gen(int level, int j, uint32_t g) const;

    /* d_i extended as an algebra map (weight preserved exactly) */
    Poly apply_face(int level, int i, const Poly& x) const;
    /* s_j extended as an algebra map */
    Poly apply_degen(int level, int j, const Poly& x) const;
    /* beta^* for beta: [m] ->> [k], from level k to level m */
    Poly apply_surj(const Poly& x_at_k, const Surj& beta) const;

    Poly mul(const Poly& a, const Poly& b) const { return poly_mul(a, b, fp_, W_); }

    /* intersection of the factors' degeneracy masks; nonzero (or unit at
     * level >= 1) means the monomial is degenerate */
    uint32_t monomial_mask(int level, const Monomial& m) const;
    bool is_degenerate(int level, const Monomial& m) const;

    /* Basis of the normalized quotient N_m in weight w: the non-degenerate
     * monomials, sorted. */
    const std::vector<Monomial>& block_basis(int level, int w) const;
    int block_index(int level, int w, const Monomial& m) const;

    /* projection of a polynomial to block coordinates (degenerate
     * monomials die; other-weight terms are rejected) */
    std::vector<uint32_t> block_coords(int level, int w, const Poly& x) const;
    Poly block_lift(int level, int w, const std::vector<uint32_t>& coords) const;

    /* alternating face sum of one basis monomial, in block coordinates of
     * (level-1, w); entries (index, coeff) */
    std::vector<std::pair<uint32_t, uint32_t>> boundary_column(int level, int w,
                                                               const Monomial& m) const;

    /* largest level at which weight-w chains can be non-degenerate */
    int level_cap(int w) const;

    /* Kill all faces d_j, j >= 1, of a chain without changing its class in
     * the quotient complex (x - s_{j-1} d_j x sweep, top down). */
    Poly moore_normalize(int level, const Poly& x) const;

    /* multiplicative extension check of all simplicial identities on the
     * generators of levels 1..L */
    void verify_identities(int L) const;

    std::string monomial_str(int level, const Monomial& m) const;
    std::string poly_str(int level, const Poly& x) const;

private:
    void build_level(int level) const;

    uint32_t p_;
    int N_, W_;
    Fp fp_;
    std::vector<Cell> cells_;

    mutable std::vector<std::vector<Gen>> gens_;
    mutable std::vector<std::map<std::pair<uint32_t, std::vector<uint8_t>>, uint32_t>> gen_idx_;
    mutable std::vector<std::vector<std::vector<FaceVal>>> face_;   /* [level][i][gen] */
    mutable std::vector<std::vector<std::vector<uint32_t>>> degen_; /* [level][j][gen] */
    mutable std::map<std::pair<int, int>, std::vector<Monomial>> blocks_;
};

/* S(V,n): symmetric algebra on the Eilenberg-MacLane object, as the
 * almost-free algebra on dimV cells of degree n with vanishing faces. */
AlmostFreeAlgebra sphere(uint32_t p, int dimV, const std::vector<int>& weights, int n, int N,
                         int W);

/* Coproduct: disjoint union of the cell sets. */
AlmostFreeAlgebra tensor(const AlmostFreeAlgebra& X, const AlmostFreeAlgebra& Y);

/* Cofiber-style quotient: keep the cells for which `keep` is true, reduce
 * the d0 polynomials modulo the deleted cells. */
AlmostFreeAlgebra delete_cells(const AlmostFreeAlgebra& X, const std::vector<bool>& keep);

/* Indecomposables QX as a simplicial vector space on the generators, with
 * the linear parts of the faces. */
SimplicialVectorSpace indecomposables(const AlmostFreeAlgebra& X, int L);

} // namespace aq
