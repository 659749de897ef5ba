#include "aq/homotopy.hpp"

#include "aq/sparse_rank.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace aq {

/* AQ_THREADS caps the worker count for independent (level, weight) block
 * computations; results are assembled in a fixed order either way. */
int thread_cap()
{
    const char* s = std::getenv("AQ_THREADS");
    if (!s)
        return 1;
    int v = std::atoi(s);
    if (v < 1)
        v = 1;
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw > 0 && v > hw)
        v = hw;
    return std::min(v, 64);
}

FpMatrix block_boundary(const AlmostFreeAlgebra& X, int level, int w)
{
    const auto& from = X.block_basis(level, w);
    const auto& to = X.block_basis(level - 1, w);
    if (from.size() > 0 && to.size() > 400000000 / from.size())
        domain_error("dense boundary block at level " + std::to_string(level) + ", weight " +
                     std::to_string(w) + " is too large; reduce W or N");
    FpMatrix M(X.p(), to.size(), from.size());
    for (size_t c = 0; c < from.size(); ++c)
        for (auto& [r, v] : X.boundary_column(level, w, from[c]))
            M.at(r, c) = v;
    return M;
}

static constexpr size_t kDenseLimit = 700;

size_t block_boundary_rank(const AlmostFreeAlgebra& X, int level, int w)
{
    const auto& from = X.block_basis(level, w);
    const auto& to = X.block_basis(level - 1, w);
    if (from.empty() || to.empty())
        return 0;
    if (from.size() <= kDenseLimit && to.size() <= kDenseLimit)
        return rank(block_boundary(X, level, w));
    SparseRank sr(X.p(), to.size());
    for (auto& m : from)
        sr.add_column(X.boundary_column(level, w, m));
    return sr.rank();
}

BlockHomology::BlockHomology(const AlmostFreeAlgebra& X, int s, int w) : p_(X.p())
{
    const auto& basis = X.block_basis(s, w);
    n_ = basis.size();
    if (n_ > 20000)
        domain_error("homology block at degree " + std::to_string(s) + ", weight " +
                     std::to_string(w) +
                     " is too large for dense representatives; reduce W or N");
    if (s == 0) {
        for (size_t i = 0; i < n_; ++i) {
            std::vector<uint32_t> e(n_, 0);
            e[i] = 1;
            cycles_.push_back(std::move(e));
        }
    } else if (n_ > 0) {
        cycles_ = kernel_basis(block_boundary(X, s, w));
    }

    RowSpan bspan(p_, n_);
    if (n_ > 0 && !X.block_basis(s + 1, w).empty()) {
        FpMatrix d1 = block_boundary(X, s + 1, w);
        for (size_t c = 0; c < d1.cols(); ++c) {
            std::vector<uint32_t> col(n_);
            bool nz = false;
            for (size_t r = 0; r < n_; ++r) {
                col[r] = d1.at(r, c);
                nz |= col[r] != 0;
            }
            if (nz && bspan.add(col))
                boundary_basis_.push_back(std::move(col));
        }
    }
    RowSpan acc(p_, n_);
    for (auto& b : boundary_basis_)
        acc.add(b);
    for (auto& z : cycles_)
        if (acc.add(z))
            reps_.push_back(z);

    solve_mat_ = FpMatrix(p_, n_, boundary_basis_.size() + reps_.size());
    for (size_t c = 0; c < boundary_basis_.size(); ++c)
        for (size_t r = 0; r < n_; ++r)
            solve_mat_.at(r, c) = boundary_basis_[c][r];
    for (size_t c = 0; c < reps_.size(); ++c)
        for (size_t r = 0; r < n_; ++r)
            solve_mat_.at(r, boundary_basis_.size() + c) = reps_[c][r];
}

std::optional<std::vector<uint32_t>> BlockHomology::class_coords(
    const std::vector<uint32_t>& v) const
{
    auto x = solve(solve_mat_, v);
    if (!x)
        return std::nullopt;
    std::vector<uint32_t> out(reps_.size());
    for (size_t i = 0; i < reps_.size(); ++i)
        out[i] = (*x)[boundary_basis_.size() + i];
    return out;
}

GradedDims afa_homotopy(const AlmostFreeAlgebra& X, int L, int W)
{
    GradedDims out;
    out.certified_degree = L - 1;
    out.max_weight = W;
    for (int w = 0; w <= W; ++w) {
        int top = std::min(L, X.level_cap(w));
        std::vector<size_t> dim(top + 2, 0), rk(top + 2, 0);
        for (int m = 0; m <= top; ++m)
            dim[m] = X.block_basis(m, w).size();
        for (int m = 1; m <= top; ++m)
            rk[m] = block_boundary_rank(X, m, w);
        /* ranks above the per-weight cap vanish with the blocks */
        for (int s = 0; s <= std::min(top, L); ++s) {
            int h = static_cast<int>(dim[s] - rk[s] - (s < top ? rk[s + 1] : 0));
            out.set(s, w, h);
        }
    }
    return out;
}

bool is_connected(const GradedDims& pi, int W)
{
    if (pi.dim(0, 0) != 1)
        return false;
    for (int w = 1; w <= W; ++w)
        if (pi.dim(0, w) != 0)
            return false;
    return true;
}

std::vector<Poly> moore_cycle_reps(const AlmostFreeAlgebra& X, int s, int w)
{
    BlockHomology H(X, s, w);
    std::vector<Poly> out;
    for (auto& r : H.reps()) {
        Poly x = X.block_lift(s, w, r);
        if (s >= 1)
            x = X.moore_normalize(s, x);
        for (int i = s >= 1 ? 0 : 1; i <= s; ++i)
            if (!X.apply_face(s, i, x).is_zero())
                invariant_error("moore_cycle_reps: face of normalized cycle did not vanish");
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<long long> homotopy_series_dims(const AlmostFreeAlgebra& X, int T,
                                            const std::vector<int>& weights)
{
    std::vector<long long> c(T + 1, 0);
    c[0] = 1; /* the unit in weight 0 */

    /* collect the independent rank tasks per weight */
    struct Task {
        int w, m;
        long long rank = 0;
    };
    std::vector<Task> tasks;
    std::vector<std::pair<int, int>> tops; /* (w, top) */
    for (int w : weights) {
        if (w <= 0)
            continue;
        int top = std::min(X.level_cap(w), T + 1);
        tops.emplace_back(w, top);
        for (int m = 1; m <= top; ++m)
            tasks.push_back({w, m, 0});
    }

    int nthreads = thread_cap();
    if (nthreads <= 1 || tasks.size() <= 1) {
        for (auto& t : tasks)
            t.rank = static_cast<long long>(block_boundary_rank(X, t.m, t.w));
    } else {
        /* warm the lazy caches sequentially, then rank in parallel */
        for (auto& t : tasks) {
            X.block_basis(t.m, t.w);
            X.block_basis(t.m - 1, t.w);
            for (int g = 0; g < std::min(1, X.gen_count(t.m)); ++g)
                for (int i = 0; i <= t.m; ++i)
                    X.face_on_gen(t.m, i, g);
        }
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size())
                    break;
                tasks[i].rank =
                    static_cast<long long>(block_boundary_rank(X, tasks[i].m, tasks[i].w));
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    for (auto& [w, top] : tops) {
        std::vector<long long> dim(top + 1, 0), rk(top + 2, 0);
        for (int m = 0; m <= top; ++m)
            dim[m] = static_cast<long long>(X.block_basis(m, w).size());
        for (auto& t : tasks)
            if (t.w == w)
                rk[t.m] = t.rank;
        for (int s = 0; s <= std::min(top, T); ++s) {
            if (s == top && top == T + 1)
                continue; /* claims stop at T */
            c[s] += dim[s] - rk[s] - (s < top ? rk[s + 1] : 0);
        }
    }
    return c;
}

std::vector<std::vector<long long>> homotopy_bidims(const AlmostFreeAlgebra& X, int S, int W)
{
    std::vector<std::vector<long long>> out(S + 1, std::vector<long long>(W + 1, 0));
    out[0][0] = 1;
    for (int w = 1; w <= W; ++w) {
        int top = std::min(X.level_cap(w), S + 1);
        std::vector<long long> dim(top + 1, 0), rk(top + 2, 0);
        for (int m = 0; m <= top; ++m)
            dim[m] = static_cast<long long>(X.block_basis(m, w).size());
        for (int m = 1; m <= top; ++m)
            rk[m] = static_cast<long long>(block_boundary_rank(X, m, w));
        for (int s = 0; s <= std::min(top, S); ++s) {
            if (s == top && top == S + 1)
                continue;
            out[s][w] = dim[s] - rk[s] - (s < top ? rk[s + 1] : 0);
        }
    }
    return out;
}

Poly map_poly(const AlmostFreeAlgebra& Z, const AlmostFreeAlgebra& Y,
              const std::vector<Poly>& cell_images, int level, const Poly& x)
{
    Poly out;
    for (auto& t : x.terms) {
        Poly term = Poly::from_monomial(Monomial::unit(), t.second);
        for (auto& f : t.first.factors) {
            const auto& g = Z.gens(level)[f.first];
            Poly img = Y.apply_surj(cell_images[g.cell], g.alpha);
            term = poly_mul(term, poly_pow(img, f.second, Y.fp(), Y.W()), Y.fp(), Y.W());
            if (term.is_zero())
                break;
        }
        out = poly_add(out, term, Y.fp());
    }
    poly_normalize(out, Y.fp());
    return out;
}

} // namespace aq
