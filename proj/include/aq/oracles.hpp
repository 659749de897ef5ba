#pragma once

#include "aq/presentation.hpp"
#include "aq/resolution.hpp"

#include <map>
#include <string>
#include <vector>

namespace aq {

/* Presentation with no relation carrying a linear term: the variable count
 * then equals dim H^Q_0. */
struct MinimalPresentation {
    Presentation P;
    std::vector<std::string> eliminated;
};

MinimalPresentation minimalize(const Presentation& P);

struct WeightedDims {
    std::map<int, int> by_weight;
    int total() const
    {
        int t = 0;
        for (auto& [w, d] : by_weight)
            t += d;
        return t;
    }
    int dim(int w) const
    {
        auto it = by_weight.find(w);
        return it == by_weight.end() ? 0 : it->second;
    }
};

/* H^Q_0 (variables) and H^Q_1 (minimal generators of the relation ideal),
 * by weight-truncated linear algebra. */
std::pair<WeightedDims, WeightedDims> hq01(const MinimalPresentation& MP, int W);

/* Degree-2 cotangent dimensions: syzygies of the relation tuple modulo the
 * Koszul submodule and modulo m * (syzygies). `saw_syzygy_range` is false
 * when W is too small for any syzygy to be visible. */
struct Hq2Result {
    WeightedDims dims;
    bool saw_syzygy_range = true;
};
Hq2Result hq2_ls(const MinimalPresentation& MP, int W);

/* Tor over the polynomial base via the finite Koszul complex tensored with
 * the quotient: dims per (homological degree s <= s_max, weight w <= W). */
GradedDims tor_poly(const Presentation& target, int s_max, int W);

/* Complete-intersection verdict: engine resolution and the
 * Lichtenbaum-Schlessinger-style oracle must agree; disagreement marks the
 * verdict inconclusive (an engine defect, surfaced loudly by callers). */
struct CiVerdict {
    bool ci = false;
    bool inconclusive = false;
    std::string disagreement;
    WeightedDims hq0_oracle, hq1_oracle, hq2_oracle;
    GradedDims engine_hq;
    int witness_weight = -1;
    int witness_dim = 0;
    int simplicial_dim_in_range = 0; /* max s <= N-1 with H^Q_s != 0 */
    int N = 0, W = 0;
    MinimalPresentation mp;
    Resolution R;
};

CiVerdict ci_check(const Presentation& P, int N, int W);

} // namespace aq
