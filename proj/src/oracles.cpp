#include "aq/oracles.hpp"

#include "aq/linalg.hpp"

#include <algorithm>

namespace aq {

namespace {

/* substitute q (homogeneous, of the variable's weight) for variable v in
 * the homogeneous polynomial x; weights are preserved exactly */
Poly subst_var(const Poly& x, uint32_t v, int wv, const Poly& q, const Fp& fp, int W)
{
    Poly out;
    for (auto& t : x.terms) {
        int e_v = 0;
        Monomial rest;
        for (auto& f : t.first.factors) {
            if (f.first == v)
                e_v = f.second;
            else
                rest.factors.push_back(f);
        }
        if (e_v == 0) {
            out = poly_add(out, Poly::from_monomial(t.first, t.second), fp);
            continue;
        }
        rest.weight = t.first.weight - e_v * wv;
        Poly term = poly_mul(Poly::from_monomial(rest, t.second), poly_pow(q, e_v, fp, W),
                             fp, W);
        out = poly_add(out, term, fp);
    }
    poly_normalize(out, fp);
    return out;
}

} // namespace

MinimalPresentation minimalize(const Presentation& P0)
{
    MinimalPresentation out;
    Presentation P = P0;
    P.validate();
    Fp fp(P.p);

    while (true) {
        /* find a relation with a linear term */
        int rel_idx = -1;
        uint32_t var = 0;
        uint32_t coeff = 0;
        for (size_t r = 0; r < P.rels.size() && rel_idx < 0; ++r)
            for (auto& t : P.rels[r].terms)
                if (t.first.degree() == 1) {
                    rel_idx = static_cast<int>(r);
                    var = t.first.factors[0].first;
                    coeff = t.second;
                    break;
                }
        if (rel_idx < 0)
            break;

        /* v = -c^{-1} * (rel - c v) */
        Poly rest;
        for (auto& t : P.rels[rel_idx].terms)
            if (!(t.first.degree() == 1 && t.first.factors[0].first == var))
                rest.terms.push_back(t);
        poly_normalize(rest, fp);
        Poly value = poly_scale(rest, fp.neg(fp.inv(coeff)), fp);

        out.eliminated.push_back(P.vars[var].first);

        /* substitute into the other relations; weights are homogeneous so
         * nothing truncates */
        int W = 0;
        for (auto& r : P.rels)
            W = std::max(W, r.max_weight());
        std::vector<Poly> new_rels;
        for (size_t r = 0; r < P.rels.size(); ++r) {
            if (static_cast<int>(r) == rel_idx)
                continue;
            Poly q = subst_var(P.rels[r], var, P.vars[var].second, value, fp, W);
            if (!q.is_zero())
                new_rels.push_back(std::move(q));
        }
        /* drop the variable, reindex */
        Presentation P2;
        P2.p = P.p;
        for (uint32_t i = 0; i < P.vars.size(); ++i)
            if (i != var)
                P2.vars.push_back(P.vars[i]);
        auto remap = [&](const Poly& q) {
            Poly o;
            for (auto& t : q.terms) {
                Monomial m;
                m.weight = t.first.weight;
                for (auto& f : t.first.factors)
                    m.factors.emplace_back(f.first > var ? f.first - 1 : f.first, f.second);
                std::sort(m.factors.begin(), m.factors.end());
                o.terms.emplace_back(std::move(m), t.second);
            }
            poly_normalize(o, fp);
            return o;
        };
        for (auto& r : new_rels)
            P2.rels.push_back(remap(r));
        P = std::move(P2);
    }
    /* Prune relations that do not minimally generate the ideal: a
     * dependent relation (one lying in m*I plus the earlier kept ones)
     * would feed spurious unit-coefficient syzygies to the degree-2
     * oracle. The span of m*I is taken over the full relation list, which
     * generates the same ideal. */
    if (!P.rels.empty()) {
        int W = 0;
        for (auto& r : P.rels)
            W = std::max(W, r.max_weight());
        std::vector<Poly> kept;
        for (int w = 1; w <= W; ++w) {
            auto monos = var_monomials(P, w);
            if (monos.empty())
                continue;
            auto index_of = [&](const Monomial& m) {
                auto it = std::lower_bound(monos.begin(), monos.end(), m);
                return static_cast<size_t>(it - monos.begin());
            };
            auto coords = [&](const Poly& q) {
                std::vector<uint32_t> v(monos.size(), 0);
                for (auto& t : q.terms)
                    v[index_of(t.first)] = t.second;
                return v;
            };
            RowSpan span(P.p, monos.size());
            for (auto& r : P.rels) {
                int rw = r.terms[0].first.weight;
                if (rw >= w)
                    continue;
                for (auto& m : var_monomials(P, w - rw))
                    span.add(coords(poly_mul(Poly::from_monomial(m), r, fp, W)));
            }
            for (auto& r : P.rels)
                if (r.terms[0].first.weight == w && span.add(coords(r)))
                    kept.push_back(r);
        }
        P.rels = std::move(kept);
    }
    P.validate();
    out.P = std::move(P);
    return out;
}

std::pair<WeightedDims, WeightedDims> hq01(const MinimalPresentation& MP, int W)
{
    WeightedDims h0, h1;
    for (auto& [name, w] : MP.P.vars)
        ++h0.by_weight[w];

    const Presentation& P = MP.P;
    Fp fp(P.p);
    for (int w = 1; w <= W; ++w) {
        auto monos = var_monomials(P, w);
        auto index_of = [&](const Monomial& m) {
            auto it = std::lower_bound(monos.begin(), monos.end(), m);
            return static_cast<size_t>(it - monos.begin());
        };
        RowSpan all(P.p, monos.size()), proper(P.p, monos.size());
        for (auto& r : P.rels) {
            int rw = r.terms[0].first.weight;
            if (rw > w)
                continue;
            for (auto& m : var_monomials(P, w - rw)) {
                Poly prod = poly_mul(Poly::from_monomial(m), r, fp, W);
                std::vector<uint32_t> v(monos.size(), 0);
                for (auto& t : prod.terms)
                    v[index_of(t.first)] = t.second;
                all.add(v);
                if (!m.is_unit())
                    proper.add(std::move(v));
            }
        }
        int d = static_cast<int>(all.rank() - proper.rank());
        if (d)
            h1.by_weight[w] = d;
    }
    return {h0, h1};
}

Hq2Result hq2_ls(const MinimalPresentation& MP, int W)
{
    const Presentation& P = MP.P;
    Fp fp(P.p);
    Hq2Result out;
    size_t r = P.rels.size();
    if (r == 0)
        return out;
    std::vector<int> rw(r);
    for (size_t i = 0; i < r; ++i)
        rw[i] = P.rels[i].terms[0].first.weight;
    int min_syz_weight = *std::min_element(rw.begin(), rw.end()) + 1;
    if (min_syz_weight > W)
        out.saw_syzygy_range = false;

    /* syzygy coordinates at weight w: one block per relation, the monomials
     * of weight w - rw[i] */
    struct Layout {
        std::vector<std::vector<Monomial>> monos;
        std::vector<size_t> offset;
        size_t total = 0;
    };
    auto layout_at = [&](int w) {
        Layout L;
        L.monos.resize(r);
        L.offset.resize(r);
        for (size_t i = 0; i < r; ++i) {
            L.offset[i] = L.total;
            if (w - rw[i] >= 0) {
                L.monos[i] = var_monomials(P, w - rw[i]);
                L.total += L.monos[i].size();
            }
        }
        return L;
    };

    std::vector<std::vector<std::vector<uint32_t>>> syz_bases(W + 1);
    std::vector<Layout> layouts(W + 1);

    for (int w = 1; w <= W; ++w) {
        Layout L = layout_at(w);
        layouts[w] = L;
        if (L.total == 0)
            continue;
        auto target = var_monomials(P, w);
        auto tindex = [&](const Monomial& m) {
            auto it = std::lower_bound(target.begin(), target.end(), m);
            return static_cast<size_t>(it - target.begin());
        };
        FpMatrix M(P.p, target.size(), L.total);
        for (size_t i = 0; i < r; ++i)
            for (size_t c = 0; c < L.monos[i].size(); ++c) {
                Poly prod = poly_mul(Poly::from_monomial(L.monos[i][c]), P.rels[i], fp, W);
                for (auto& t : prod.terms)
                    M.at(tindex(t.first), L.offset[i] + c) = t.second;
            }
        syz_bases[w] = kernel_basis(M);
        if (syz_bases[w].empty())
            continue;

        /* Koszul submodule: m' * (rels[j] e_i - rels[i] e_j) */
        RowSpan reducible(P.p, L.total);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = i + 1; j < r; ++j) {
                int kw = rw[i] + rw[j];
                if (kw > w)
                    continue;
                for (auto& m : var_monomials(P, w - kw)) {
                    std::vector<uint32_t> v(L.total, 0);
                    Poly a = poly_mul(Poly::from_monomial(m), P.rels[j], fp, W);
                    Poly b = poly_mul(Poly::from_monomial(m), P.rels[i], fp, W);
                    auto place = [&](size_t block, const Poly& q, bool negate) {
                        for (auto& t : q.terms) {
                            auto it = std::lower_bound(L.monos[block].begin(),
                                                       L.monos[block].end(), t.first);
                            size_t idx = L.offset[block] + (it - L.monos[block].begin());
                            uint32_t c = negate ? fp.neg(t.second) : t.second;
                            v[idx] = fp.add(v[idx], c);
                        }
                    };
                    place(i, a, false);
                    place(j, b, true);
                    reducible.add(std::move(v));
                }
            }
        /* m * Syz: x_k * (syzygy of weight w - wt(x_k)), coordinate blocks
         * shift by multiplication */
        for (uint32_t k = 0; k < P.vars.size(); ++k) {
            int vw = P.vars[k].second;
            if (w - vw < 1)
                continue;
            const Layout& Lprev = layouts[w - vw];
            for (auto& s : syz_bases[w - vw]) {
                std::vector<uint32_t> v(L.total, 0);
                for (size_t i = 0; i < r; ++i)
                    for (size_t c = 0; c < Lprev.monos[i].size(); ++c) {
                        if (!s[Lprev.offset[i] + c])
                            continue;
                        Monomial m =
                            Lprev.monos[i][c].times(Monomial::gen(k, vw));
                        auto it =
                            std::lower_bound(L.monos[i].begin(), L.monos[i].end(), m);
                        v[L.offset[i] + (it - L.monos[i].begin())] =
                            fp.add(v[L.offset[i] + (it - L.monos[i].begin())],
                                   s[Lprev.offset[i] + c]);
                    }
                reducible.add(std::move(v));
            }
        }
        int d = 0;
        for (auto& s : syz_bases[w])
            if (reducible.add(s))
                ++d;
        if (d)
            out.dims.by_weight[w] = d;
    }
    return out;
}

GradedDims tor_poly(const Presentation& target, int s_max, int W)
{
    target.validate();
    GradedQuotient A(target, W);
    Fp fp(target.p);
    size_t nv = target.vars.size();
    const int s_requested = s_max;
    if (s_max > static_cast<int>(nv))
        s_max = static_cast<int>(nv); /* the Koszul complex ends here */

    /* Koszul basis at (s, w): (subset S of size s, A-basis monomial of
     * weight w - wt(S)) */
    std::vector<std::vector<uint32_t>> subs_by_size(nv + 1);
    for (uint32_t mask = 0; mask < (1u << nv); ++mask)
        subs_by_size[__builtin_popcount(mask)].push_back(mask);
    auto wt_of_mask = [&](uint32_t mask) {
        int w = 0;
        for (uint32_t i = 0; i < nv; ++i)
            if (mask & (1u << i))
                w += target.vars[i].second;
        return w;
    };

    struct Block {
        std::vector<std::pair<uint32_t, size_t>> basis; /* (mask, A-basis position) */
    };
    auto block_at = [&](int s, int w) {
        Block B;
        if (s < 0 || s > static_cast<int>(nv))
            return B;
        for (uint32_t mask : subs_by_size[s]) {
            int mw = wt_of_mask(mask);
            if (mw > w)
                continue;
            for (size_t i = 0; i < A.basis_monomials(w - mw).size(); ++i)
                B.basis.emplace_back(mask, i);
        }
        return B;
    };

    GradedDims out;
    out.certified_degree = s_requested;
    out.max_weight = W;
    for (int w = 0; w <= W; ++w) {
        std::vector<Block> blocks(s_max + 2);
        for (int s = 0; s <= s_max + 1 && s <= static_cast<int>(nv); ++s)
            blocks[s] = block_at(s, w);
        auto matrix = [&](int s) {
            /* d: K_s -> K_{s-1} */
            const Block& from = blocks[s];
            const Block& to = blocks[s - 1];
            std::map<std::pair<uint32_t, size_t>, size_t> tpos;
            for (size_t i = 0; i < to.basis.size(); ++i)
                tpos[to.basis[i]] = i;
            FpMatrix M(target.p, to.basis.size(), from.basis.size());
            for (size_t c = 0; c < from.basis.size(); ++c) {
                auto [mask, apos] = from.basis[c];
                int mw = wt_of_mask(mask);
                const Monomial& amon =
                    A.monomials(w - mw)[A.basis_monomials(w - mw)[apos]];
                int sign_pos = 0;
                for (uint32_t i = 0; i < nv; ++i) {
                    if (!(mask & (1u << i)))
                        continue;
                    uint32_t nmask = mask & ~(1u << i);
                    int nw = w - wt_of_mask(nmask);
                    Poly prod = poly_mul(Poly::from_monomial(amon),
                                         Poly::from_monomial(Monomial::gen(
                                             i, target.vars[i].second)),
                                         fp, W);
                    auto red = A.reduce_coords(prod, nw);
                    uint32_t sgn = (sign_pos % 2 == 0) ? 1u : fp.neg(1u);
                    for (size_t t = 0; t < red.size(); ++t) {
                        if (!red[t])
                            continue;
                        auto it = tpos.find({nmask, t});
                        if (it == tpos.end())
                            invariant_error("tor_poly: lost a Koszul basis element");
                        M.at(it->second, c) =
                            fp.add(M.at(it->second, c), fp.mul(sgn, red[t]));
                    }
                    ++sign_pos;
                }
            }
            return M;
        };
        std::vector<size_t> rk(s_max + 2, 0);
        for (int s = 1; s <= s_max + 1 && s <= static_cast<int>(nv); ++s)
            if (!blocks[s].basis.empty() && !blocks[s - 1].basis.empty())
                rk[s] = rank(matrix(s));
        for (int s = 0; s <= s_max; ++s) {
            long long h = static_cast<long long>(blocks[s].basis.size()) - rk[s] -
                          (s + 1 <= static_cast<int>(nv) ? rk[s + 1] : 0);
            if (h)
                out.set(s, w, static_cast<int>(h));
        }
    }
    return out;
}

CiVerdict ci_check(const Presentation& P, int N, int W)
{
    if (N < 2)
        domain_error("ci_check: need N >= 2");
    CiVerdict v;
    v.N = N;
    v.W = W;
    v.mp = minimalize(P);
    auto [h0, h1] = hq01(v.mp, W);
    v.hq0_oracle = h0;
    v.hq1_oracle = h1;
    auto h2 = hq2_ls(v.mp, W);
    v.hq2_oracle = h2.dims;

    v.R = resolve(v.mp.P, N, W);
    v.engine_hq = v.R.hq;

    auto mismatch = [&](int s, const WeightedDims& oracle) -> std::string {
        for (int w = 0; w <= W; ++w)
            if (v.engine_hq.dim(s, w) != oracle.dim(w))
                return "H^Q_" + std::to_string(s) + " at weight " + std::to_string(w) +
                       ": engine " + std::to_string(v.engine_hq.dim(s, w)) + ", oracle " +
                       std::to_string(oracle.dim(w));
        return "";
    };
    v.disagreement = mismatch(0, v.hq0_oracle);
    if (v.disagreement.empty())
        v.disagreement = mismatch(1, v.hq1_oracle);
    if (v.disagreement.empty() && N >= 3)
        v.disagreement = mismatch(2, v.hq2_oracle);
    v.inconclusive = !v.disagreement.empty();

    for (int s = 0; s + 1 <= N; ++s)
        for (int w = 0; w <= W; ++w)
            if (v.engine_hq.dim(s, w) != 0)
                v.simplicial_dim_in_range = s;

    if (!v.inconclusive) {
        v.ci = v.hq2_oracle.total() == 0;
        if (!v.ci)
            for (auto& [w, d] : v.hq2_oracle.by_weight)
                if (d) {
                    v.witness_weight = w;
                    v.witness_dim = d;
                    break;
                }
    }
    return v;
}

} // namespace aq
