#pragma once

#include "aq/fp.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace aq {

/* Rank of a sparse matrix over F_p, given column by column. Pivots are
 * chosen by Markowitz cost, so singleton rows/columns peel off first with
 * zero fill; boundary matrices of monomial complexes collapse almost
 * entirely in that phase. Rank is pivot-order independent, so the result
 * is deterministic regardless of the heuristic.
 *
 * field-linalg stays dense per its contract; this backend exists because
 * the chain-level certification of Eilenberg-MacLane series meets blocks
 * (tens of thousands of monomials) far beyond dense reach. */
class SparseRank {
public:
    SparseRank(uint32_t p, size_t n_rows) : fp_(p), n_rows_(n_rows) {}

    /* entries: (row, coeff) with distinct rows, coeff nonzero mod p */
    void add_column(std::vector<std::pair<uint32_t, uint32_t>> entries);

    size_t rank();

private:
    Fp fp_;
    size_t n_rows_;
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> cols_;
};

} // namespace aq
