#pragma once

#include "aq/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace aq {

struct BasisElement {
    std::string name;
    int weight = 0;
};

/* Simplicial F_p-vector space truncated at level N, with weight-graded
 * bases. Faces and degeneracies are required to be block-diagonal in the
 * weight. */
struct SimplicialVectorSpace {
    uint32_t p = 2;
    int N = 0;
    std::vector<std::vector<BasisElement>> levels; /* [0..N] */
    std::vector<std::vector<FpMatrix>> face;       /* face[n][i] : n -> n-1, 1<=n<=N, 0<=i<=n */
    std::vector<std::vector<FpMatrix>> degen;      /* degen[n][j] : n -> n+1, 0<=n<N, 0<=j<=n */

    int dim(int n) const { return static_cast<int>(levels[n].size()); }
    void validate() const; /* shapes, weight preservation, simplicial identities */
};

struct ChainComplex {
    uint32_t p = 2;
    int N = 0;
    std::vector<std::vector<BasisElement>> degrees; /* [0..N] */
    std::vector<FpMatrix> boundary;                 /* boundary[n] : n -> n-1, 1<=n<=N */

    int dim(int n) const { return static_cast<int>(degrees[n].size()); }
    void validate() const; /* boundary o boundary = 0, weight preservation */
};

/* Dimensions of a graded object by (homotopy degree s, weight w), plus
 * chosen cycle representatives. Degrees above `certified_degree` were cut
 * off by the level truncation: the stored numbers there are kernel
 * dimensions only (no incoming boundary available), never claimed values. */
struct GradedDims {
    std::map<std::pair<int, int>, int> dims;
    int certified_degree = -1;
    int max_weight = 0;
    /* columns = representative cycles, in the degree-s basis of the complex */
    std::map<std::pair<int, int>, FpMatrix> reps;

    int dim(int s, int w) const
    {
        auto it = dims.find({s, w});
        return it == dims.end() ? 0 : it->second;
    }
    int total_dim(int s) const
    {
        int t = 0;
        for (auto& [k, d] : dims)
            if (k.first == s)
                t += d;
        return t;
    }
    void set(int s, int w, int d)
    {
        if (d != 0)
            dims[{s, w}] = d;
    }
};

/* Moore normalization N_nV = V_n / (im s_0 + ... + im s_{n-1}) with the
 * boundary induced by the alternating face sum. Rejects inputs that fail
 * the simplicial identities. */
ChainComplex normalized_complex(const SimplicialVectorSpace& V);

/* Homology of the normalized complex per (degree, weight). The top degree
 * N is reported as uncertified (see GradedDims). */
GradedDims homotopy_groups(const ChainComplex& C);

/* Eilenberg-MacLane object K(V,n) truncated at level N: one basis element
 * per (basis vector of V, order-preserving surjection [m] ->> [n]). */
SimplicialVectorSpace eilenberg_maclane(uint32_t p, int dimV, const std::vector<int>& weights,
                                        int n, int N);

/* Distinct weights appearing in a level list */
std::vector<int> weights_of(const std::vector<BasisElement>& basis);

} // namespace aq
