#pragma once

#include "aq/almost_free.hpp"
#include "aq/linalg.hpp"

#include <optional>
#include <vector>

namespace aq {

/* Dense boundary matrix of the (level, w) block of the normalized quotient
 * complex. */
FpMatrix block_boundary(const AlmostFreeAlgebra& X, int level, int w);

/* Rank of the block boundary; switches to the sparse backend when the
 * block outgrows dense elimination. */
size_t block_boundary_rank(const AlmostFreeAlgebra& X, int level, int w);

/* Cycles, boundaries and chosen homology representatives of one block.
 * Representative choice: kernel-basis vectors not reducible to the
 * boundary span, scanned in deterministic order. */
class BlockHomology {
public:
    BlockHomology(const AlmostFreeAlgebra& X, int s, int w);

    int dim() const { return static_cast<int>(reps_.size()); }
    const std::vector<std::vector<uint32_t>>& cycles() const { return cycles_; }
    const std::vector<std::vector<uint32_t>>& reps() const { return reps_; }

    /* coordinates of a cycle's class in the chosen representatives;
     * nullopt if the vector is not a cycle of this block */
    std::optional<std::vector<uint32_t>> class_coords(const std::vector<uint32_t>& v) const;

private:
    uint32_t p_;
    size_t n_;
    std::vector<std::vector<uint32_t>> cycles_;
    std::vector<std::vector<uint32_t>> boundary_basis_;
    std::vector<std::vector<uint32_t>> reps_;
    FpMatrix solve_mat_; /* columns: boundary basis then reps */
};

/* Homotopy of the quotient complex for levels 0..L and weights 0..W.
 * Degree L is reported from kernels only (no incoming boundary at the
 * truncation edge): certified_degree = L-1. */
GradedDims afa_homotopy(const AlmostFreeAlgebra& X, int L, int W);

/* pi_0 = F and nothing else in weights <= W */
bool is_connected(const GradedDims& pi, int W);

/* Moore-normalized representatives of pi_s in weight w: elements of level
 * s all of whose faces vanish. */
std::vector<Poly> moore_cycle_reps(const AlmostFreeAlgebra& X, int s, int w);

/* Total homotopy dimensions per degree 0..T for theta, computed weight by
 * weight over the exact per-weight range. `weights` lists the weights to
 * cover; every block the claim depends on is materialized. */
std::vector<long long> homotopy_series_dims(const AlmostFreeAlgebra& X, int T,
                                            const std::vector<int>& weights);

/* Bivariate homotopy dims (degree <= S, weight <= W), exact per weight up
 * to the per-weight level cap; used by the Serre inequality check. */
std::vector<std::vector<long long>> homotopy_bidims(const AlmostFreeAlgebra& X, int S, int W);

/* Push a level-`level` element of Z through the algebra map determined by
 * per-cell images in Y (image of cell c lives at level = degree of c). */
Poly map_poly(const AlmostFreeAlgebra& Z, const AlmostFreeAlgebra& Y,
              const std::vector<Poly>& cell_images, int level, const Poly& x);

} // namespace aq
