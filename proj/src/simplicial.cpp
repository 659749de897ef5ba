#include "aq/simplicial.hpp"

#include "aq/surjection.hpp"

#include <algorithm>
#include <set>

namespace aq {

std::vector<Surj> all_surjections(int m, int k)
{
    std::vector<Surj> out;
    if (k < 0 || m < k)
        return out;
    /* choose the k jump positions among 0..m-1, lexicographically */
    std::vector<int> jumps(k);
    for (int i = 0; i < k; ++i)
        jumps[i] = i;
    while (true) {
        Surj s;
        s.v.resize(m + 1);
        int val = 0, jp = 0;
        s.v[0] = 0;
        for (int t = 0; t < m; ++t) {
            if (jp < k && jumps[jp] == t) {
                ++val;
                ++jp;
            }
            s.v[t + 1] = static_cast<uint8_t>(val);
        }
        out.push_back(std::move(s));
        /* next k-subset of {0..m-1} */
        int i = k - 1;
        while (i >= 0 && jumps[i] == m - k + i)
            --i;
        if (i < 0)
            break;
        ++jumps[i];
        for (int j = i + 1; j < k; ++j)
            jumps[j] = jumps[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

static void check_weight_preserving(const FpMatrix& M, const std::vector<BasisElement>& from,
                                    const std::vector<BasisElement>& to, const char* what)
{
    if (M.rows() != to.size() || M.cols() != from.size())
        invariant_error(std::string(what) + ": shape mismatch");
    for (size_t r = 0; r < M.rows(); ++r)
        for (size_t c = 0; c < M.cols(); ++c)
            if (M.at(r, c) != 0 && to[r].weight != from[c].weight)
                invariant_error(std::string(what) + ": weight grading not preserved");
}

void SimplicialVectorSpace::validate() const
{
    if (static_cast<int>(levels.size()) != N + 1)
        invariant_error("SimplicialVectorSpace: level count != N+1");
    for (int n = 1; n <= N; ++n) {
        if (static_cast<int>(face[n].size()) != n + 1)
            invariant_error("face count mismatch at level " + std::to_string(n));
        for (int i = 0; i <= n; ++i)
            check_weight_preserving(face[n][i], levels[n], levels[n - 1], "face");
    }
    for (int n = 0; n < N; ++n) {
        if (static_cast<int>(degen[n].size()) != n + 1)
            invariant_error("degeneracy count mismatch at level " + std::to_string(n));
        for (int j = 0; j <= n; ++j)
            check_weight_preserving(degen[n][j], levels[n], levels[n + 1], "degeneracy");
    }

    /* d_i d_j = d_{j-1} d_i (i < j) */
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                if (!(face[n - 1][i] * face[n][j] == face[n - 1][j - 1] * face[n][i]))
                    invariant_error("simplicial identity d_i d_j failed at level " +
                                    std::to_string(n));
    /* s_i s_j = s_{j+1} s_i (i <= j) */
    for (int n = 0; n + 1 < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                if (!(degen[n + 1][i] * degen[n][j] == degen[n + 1][j + 1] * degen[n][i]))
                    invariant_error("simplicial identity s_i s_j failed at level " +
                                    std::to_string(n));
    /* d_i s_j case split */
    for (int n = 0; n < N; ++n)
        for (int j = 0; j <= n; ++j)
            for (int i = 0; i <= n + 1; ++i) {
                FpMatrix lhs = face[n + 1][i] * degen[n][j];
                FpMatrix rhs;
                if (i == j || i == j + 1)
                    rhs = FpMatrix::identity(p, levels[n].size());
                else if (i < j)
                    rhs = degen[n - 1][j - 1] * face[n][i];
                else
                    rhs = degen[n - 1][j] * face[n][i - 1];
                if (!(lhs == rhs))
                    invariant_error("simplicial identity d_i s_j failed at level " +
                                    std::to_string(n));
            }
}

void ChainComplex::validate() const
{
    for (int n = 1; n <= N; ++n)
        check_weight_preserving(boundary[n], degrees[n], degrees[n - 1], "boundary");
    for (int n = 2; n <= N; ++n)
        if (!(boundary[n - 1] * boundary[n]).is_zero())
            invariant_error("boundary^2 != 0 at degree " + std::to_string(n));
}

ChainComplex normalized_complex(const SimplicialVectorSpace& V)
{
    V.validate();
    ChainComplex C;
    C.p = V.p;
    C.N = V.N;
    C.degrees.resize(V.N + 1);
    C.boundary.resize(V.N + 1);

    /* quotient by degeneracy images, with the surviving coordinates as basis */
    std::vector<QuotientBasis> quo(V.N + 1);
    for (int n = 0; n <= V.N; ++n) {
        std::vector<std::vector<uint32_t>> degenerate;
        if (n >= 1)
            for (int j = 0; j <= n - 1; ++j)
                for (int c = 0; c < V.dim(n - 1); ++c) {
                    std::vector<uint32_t> col(V.dim(n));
                    for (int r = 0; r < V.dim(n); ++r)
                        col[r] = V.degen[n - 1][j].at(r, c);
                    degenerate.push_back(std::move(col));
                }
        quo[n] = quotient_basis(degenerate, V.dim(n), V.p);
        for (size_t idx : quo[n].basis_index)
            C.degrees[n].push_back(V.levels[n][idx]);
    }

    Fp fp(V.p);
    for (int n = 1; n <= V.N; ++n) {
        FpMatrix total(V.p, V.dim(n - 1), V.dim(n));
        for (int i = 0; i <= n; ++i)
            total = (i % 2 == 0) ? total + V.face[n][i] : total - V.face[n][i];
        /* restrict to chosen representatives, project to the quotient */
        FpMatrix section(V.p, V.dim(n), quo[n].basis_index.size());
        for (size_t c = 0; c < quo[n].basis_index.size(); ++c)
            section.at(quo[n].basis_index[c], c) = 1;
        C.boundary[n] = quo[n - 1].projection * (total * section);
    }
    C.validate();
    return C;
}

GradedDims homotopy_groups(const ChainComplex& C)
{
    GradedDims out;
    out.certified_degree = C.N - 1;
    std::set<int> ws;
    for (int n = 0; n <= C.N; ++n)
        for (auto& b : C.degrees[n])
            ws.insert(b.weight);
    for (int w : ws)
        out.max_weight = std::max(out.max_weight, w);

    for (int w : ws) {
        /* per-weight index lists */
        std::vector<std::vector<size_t>> idx(C.N + 1);
        for (int n = 0; n <= C.N; ++n)
            for (size_t i = 0; i < C.degrees[n].size(); ++i)
                if (C.degrees[n][i].weight == w)
                    idx[n].push_back(i);
        for (int n = 0; n <= C.N; ++n) {
            if (idx[n].empty())
                continue;
            std::vector<std::vector<uint32_t>> cycles;
            if (n == 0) {
                for (size_t i = 0; i < idx[n].size(); ++i) {
                    std::vector<uint32_t> e(idx[n].size(), 0);
                    e[i] = 1;
                    cycles.push_back(std::move(e));
                }
            } else {
                FpMatrix d = C.boundary[n].select(idx[n - 1], idx[n]);
                cycles = kernel_basis(d);
            }
            std::vector<std::vector<uint32_t>> bdry;
            if (n < C.N && !idx[n + 1].empty()) {
                FpMatrix d1 = C.boundary[n + 1].select(idx[n], idx[n + 1]);
                for (size_t c = 0; c < d1.cols(); ++c) {
                    std::vector<uint32_t> col(d1.rows());
                    bool nz = false;
                    for (size_t r = 0; r < d1.rows(); ++r) {
                        col[r] = d1.at(r, c);
                        nz |= col[r] != 0;
                    }
                    if (nz)
                        bdry.push_back(std::move(col));
                }
            }
            RowSpan span(C.p, idx[n].size());
            for (auto& b : bdry)
                span.add(b);
            size_t brank = span.rank();
            std::vector<std::vector<uint32_t>> reps;
            for (auto& z : cycles)
                if (span.add(z))
                    reps.push_back(z);
            int h = static_cast<int>(cycles.size() - brank);
            if (h != 0) {
                out.set(n, w, h);
                FpMatrix R(C.p, C.degrees[n].size(), reps.size());
                for (size_t c = 0; c < reps.size(); ++c)
                    for (size_t r = 0; r < idx[n].size(); ++r)
                        R.at(idx[n][r], c) = reps[c][r];
                out.reps[{n, w}] = std::move(R);
            }
        }
    }
    return out;
}

SimplicialVectorSpace eilenberg_maclane(uint32_t p, int dimV, const std::vector<int>& weights,
                                        int n, int N)
{
    if (n < 0 || N < n)
        domain_error("eilenberg_maclane: need 0 <= n <= N");
    if (static_cast<int>(weights.size()) != dimV)
        domain_error("eilenberg_maclane: weights size != dimV");
    SimplicialVectorSpace V;
    V.p = p;
    V.N = N;
    V.levels.resize(N + 1);
    V.face.resize(N + 1);
    V.degen.resize(N + 1);

    /* level m basis: (v_t, alpha) over surjections [m] ->> [n] in lex order */
    std::vector<std::vector<Surj>> surjs(N + 1);
    for (int m = 0; m <= N; ++m) {
        surjs[m] = all_surjections(m, n);
        for (int t = 0; t < dimV; ++t)
            for (auto& a : surjs[m]) {
                std::string nm = "v" + std::to_string(t);
                for (size_t q = 0; q < a.v.size(); ++q)
                    nm += (q ? "," : "[") + std::to_string(a.v[q]);
                nm += "]";
                V.levels[m].push_back({nm, weights[t]});
            }
    }
    auto index_of = [&](int m, int t, const Surj& a) -> int {
        auto it = std::lower_bound(surjs[m].begin(), surjs[m].end(), a);
        return t * static_cast<int>(surjs[m].size()) +
               static_cast<int>(it - surjs[m].begin());
    };

    for (int m = 1; m <= N; ++m) {
        V.face[m].assign(m + 1, FpMatrix(p, V.levels[m - 1].size(), V.levels[m].size()));
        for (int i = 0; i <= m; ++i)
            for (int t = 0; t < dimV; ++t)
                for (size_t s = 0; s < surjs[m].size(); ++s) {
                    DeltaFactor f = factor_delta(surjs[m][s], i);
                    if (!f.surjective)
                        continue; /* all faces of the fundamental class vanish */
                    int col = t * static_cast<int>(surjs[m].size()) + static_cast<int>(s);
                    V.face[m][i].at(index_of(m - 1, t, f.beta), col) = 1;
                }
    }
    for (int m = 0; m < N; ++m) {
        V.degen[m].assign(m + 1, FpMatrix(p, V.levels[m + 1].size(), V.levels[m].size()));
        for (int j = 0; j <= m; ++j)
            for (int t = 0; t < dimV; ++t)
                for (size_t s = 0; s < surjs[m].size(); ++s) {
                    int col = t * static_cast<int>(surjs[m].size()) + static_cast<int>(s);
                    V.degen[m][j].at(index_of(m + 1, t, surjs[m][s].compose_sigma(j)), col) = 1;
                }
    }
    return V;
}

std::vector<int> weights_of(const std::vector<BasisElement>& basis)
{
    std::set<int> ws;
    for (auto& b : basis)
        ws.insert(b.weight);
    return {ws.begin(), ws.end()};
}

} // namespace aq
