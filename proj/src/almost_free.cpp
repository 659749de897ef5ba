#include "aq/almost_free.hpp"

#include <algorithm>

namespace aq {

void AlmostFreeAlgebra::add_cell(Cell c)
{
    if (c.degree < 0 || c.weight < 1)
        domain_error("cell must have degree >= 0 and weight >= 1");
    if (c.degree == 0 && !c.d0.is_zero())
        domain_error("degree-0 cell cannot carry a d0 value");
    cells_.push_back(std::move(c));
    gens_.clear();
    gen_idx_.clear();
    face_.clear();
    degen_.clear();
    blocks_.clear();
}

void AlmostFreeAlgebra::build_level(int level) const
{
    if (level < 0 || level > 28)
        invariant_error("level out of supported range");
    if (static_cast<int>(gens_.size()) > level)
        return;
    for (int m = static_cast<int>(gens_.size()); m <= level; ++m) {
        std::vector<Gen> gl;
        std::map<std::pair<uint32_t, std::vector<uint8_t>>, uint32_t> gi;
        for (uint32_t c = 0; c < cells_.size(); ++c) {
            if (cells_[c].degree > m)
                continue;
            for (auto& a : all_surjections(m, cells_[c].degree)) {
                gi[{c, a.v}] = static_cast<uint32_t>(gl.size());
                gl.push_back({c, a, cells_[c].weight, a.doubles_mask()});
            }
        }
        gens_.push_back(std::move(gl));
        gen_idx_.push_back(std::move(gi));
        face_.emplace_back();
        degen_.emplace_back();
    }
}

const std::vector<AlmostFreeAlgebra::Gen>& AlmostFreeAlgebra::gens(int level) const
{
    build_level(level);
    return gens_[level];
}

uint32_t AlmostFreeAlgebra::gen_index(int level, uint32_t cell, const Surj& alpha) const
{
    build_level(level);
    auto it = gen_idx_[level].find({cell, alpha.v});
    if (it == gen_idx_[level].end())
        invariant_error("generator lookup failed");
    return it->second;
}

const AlmostFreeAlgebra::FaceVal& AlmostFreeAlgebra::face_on_gen(int level, int i,
                                                                 uint32_t g) const
{
    build_level(level);
    auto& tab = face_[level];
    if (tab.empty()) {
        build_level(level); /* ensure previous level exists for lookups */
        build_level(level - 1);
        tab.assign(level + 1, {});
        for (int fi = 0; fi <= level; ++fi) {
            tab[fi].resize(gens_[level].size());
            for (uint32_t gg = 0; gg < gens_[level].size(); ++gg) {
                const Gen& gen = gens_[level][gg];
                DeltaFactor f = factor_delta(gen.alpha, fi);
                FaceVal& fv = tab[fi][gg];
                if (f.surjective) {
                    fv.kind = FaceVal::GenVal;
                    fv.gen = gen_index(level - 1, gen.cell, f.beta);
                } else if (f.missed >= 1 || cells_[gen.cell].d0.is_zero()) {
                    fv.kind = FaceVal::Zero;
                } else {
                    fv.kind = FaceVal::PolyVal;
                    fv.poly = apply_surj(cells_[gen.cell].d0, f.beta);
                }
            }
        }
    }
    return face_[level][i][g];
}

uint32_t AlmostFreeAlgebra::degen_on_gen(int level, int j, uint32_t g) const
{
    build_level(level + 1);
    auto& tab = degen_[level];
    if (tab.empty()) {
        tab.assign(level + 1, {});
        for (int dj = 0; dj <= level; ++dj) {
            tab[dj].resize(gens_[level].size());
            for (uint32_t gg = 0; gg < gens_[level].size(); ++gg) {
                const Gen& gen = gens_[level][gg];
                tab[dj][gg] = gen_index(level + 1, gen.cell, gen.alpha.compose_sigma(dj));
            }
        }
    }
    return degen_[level][j][g];
}

Poly AlmostFreeAlgebra::apply_surj(const Poly& x_at_k, const Surj& beta) const
{
    int k = beta.target();
    int m = beta.level();
    build_level(m);
    Poly out;
    for (auto& t : x_at_k.terms) {
        Monomial nm;
        nm.weight = t.first.weight;
        for (auto& f : t.first.factors) {
            const Gen& g = gens(k)[f.first];
            Surj comp;
            comp.v.resize(beta.v.size());
            for (size_t q = 0; q < beta.v.size(); ++q)
                comp.v[q] = g.alpha.v[beta.v[q]];
            nm.factors.emplace_back(gen_index(m, g.cell, comp), f.second);
        }
        std::sort(nm.factors.begin(), nm.factors.end());
        out.terms.emplace_back(std::move(nm), t.second);
    }
    poly_normalize(out, fp_);
    return out;
}

Poly AlmostFreeAlgebra::apply_face(int level, int i, const Poly& x) const
{
    if (level < 1 || i < 0 || i > level)
        invariant_error("apply_face: bad face index");
    if (x.max_weight() > W_)
        domain_error("apply_face: element exceeds the weight truncation");
    Poly out;
    for (auto& t : x.terms) {
        /* fast path: all factors map to generators */
        bool all_gen = true;
        for (auto& f : t.first.factors)
            if (face_on_gen(level, i, f.first).kind != FaceVal::GenVal) {
                all_gen = false;
                break;
            }
        if (all_gen) {
            Monomial nm;
            nm.weight = t.first.weight;
            for (auto& f : t.first.factors)
                nm.factors.emplace_back(face_on_gen(level, i, f.first).gen, f.second);
            std::sort(nm.factors.begin(), nm.factors.end());
            /* repeated images merge */
            Monomial merged;
            merged.weight = nm.weight;
            for (auto& f : nm.factors) {
                if (!merged.factors.empty() && merged.factors.back().first == f.first)
                    merged.factors.back().second =
                        static_cast<uint16_t>(merged.factors.back().second + f.second);
                else
                    merged.factors.push_back(f);
            }
            out.terms.emplace_back(std::move(merged), t.second);
            continue;
        }
        Poly term = Poly::from_monomial(Monomial::unit(), t.second);
        for (auto& f : t.first.factors) {
            const FaceVal& fv = face_on_gen(level, i, f.first);
            if (fv.kind == FaceVal::Zero) {
                term = Poly::zero();
                break;
            }
            Poly factor = fv.kind == FaceVal::GenVal
                              ? Poly::from_monomial(
                                    Monomial::gen(fv.gen, gens(level)[f.first].weight))
                              : fv.poly;
            term = poly_mul(term, poly_pow(factor, f.second, fp_, W_), fp_, W_);
            if (term.is_zero())
                break;
        }
        out = poly_add(out, term, fp_);
    }
    poly_normalize(out, fp_);
    return out;
}

Poly AlmostFreeAlgebra::apply_degen(int level, int j, const Poly& x) const
{
    Poly out;
    for (auto& t : x.terms) {
        Monomial nm;
        nm.weight = t.first.weight;
        for (auto& f : t.first.factors)
            nm.factors.emplace_back(degen_on_gen(level, j, f.first), f.second);
        std::sort(nm.factors.begin(), nm.factors.end());
        out.terms.emplace_back(std::move(nm), t.second);
    }
    poly_normalize(out, fp_);
    return out;
}

uint32_t AlmostFreeAlgebra::monomial_mask(int level, const Monomial& m) const
{
    uint32_t mask = level >= 1 ? (1u << level) - 1 : 0;
    for (auto& f : m.factors)
        mask &= gens(level)[f.first].doubles;
    return mask;
}

bool AlmostFreeAlgebra::is_degenerate(int level, const Monomial& m) const
{
    return monomial_mask(level, m) != 0;
}

const std::vector<Monomial>& AlmostFreeAlgebra::block_basis(int level, int w) const
{
    auto key = std::make_pair(level, w);
    auto it = blocks_.find(key);
    if (it != blocks_.end())
        return it->second;

    std::vector<Monomial> out;
    const auto& gl = gens(level);
    const uint32_t full = level >= 1 ? (1u << level) - 1 : 0;
    size_t ng = gl.size();
    std::vector<uint32_t> suffix_and(ng + 1, full == 0 ? 0u : ~0u);
    std::vector<int> suffix_min_w(ng + 1, W_ + 1);
    for (size_t i = ng; i-- > 0;) {
        suffix_and[i] = suffix_and[i + 1] & gl[i].doubles;
        suffix_min_w[i] = std::min(suffix_min_w[i + 1], gl[i].weight);
    }

    std::vector<std::pair<uint32_t, uint16_t>> cur;
    auto rec = [&](auto&& self, size_t i, int rem, uint32_t mask) -> void {
        if (rem == 0) {
            if (mask == 0) {
                if (out.size() >= 3000000)
                    domain_error("chain block at level " + std::to_string(level) +
                                 ", weight " + std::to_string(w) +
                                 " exceeds the supported size; reduce W or N");
                Monomial m;
                m.factors = cur;
                m.weight = w;
                out.push_back(std::move(m));
            }
            return;
        }
        if (i == ng || rem < suffix_min_w[i])
            return;
        if (mask != 0 && (mask & suffix_and[i]) != 0)
            return; /* some position can never be cleared by later factors */
        self(self, i + 1, rem, mask);
        uint32_t nmask = mask & gl[i].doubles;
        for (int e = 1; e * gl[i].weight <= rem; ++e) {
            cur.emplace_back(static_cast<uint32_t>(i), static_cast<uint16_t>(e));
            self(self, i + 1, rem - e * gl[i].weight, nmask);
            cur.pop_back();
        }
    };
    if (w == 0) {
        if (full == 0)
            out.push_back(Monomial::unit());
    } else
        rec(rec, 0, w, full);
    std::sort(out.begin(), out.end());
    return blocks_.emplace(key, std::move(out)).first->second;
}

int AlmostFreeAlgebra::block_index(int level, int w, const Monomial& m) const
{
    const auto& b = block_basis(level, w);
    auto it = std::lower_bound(b.begin(), b.end(), m);
    if (it != b.end() && *it == m)
        return static_cast<int>(it - b.begin());
    return -1;
}

std::vector<uint32_t> AlmostFreeAlgebra::block_coords(int level, int w, const Poly& x) const
{
    std::vector<uint32_t> v(block_basis(level, w).size(), 0);
    for (auto& t : x.terms) {
        if (t.first.weight != w)
            invariant_error("block_coords: non-homogeneous element");
        if (is_degenerate(level, t.first))
            continue;
        int idx = block_index(level, w, t.first);
        if (idx < 0)
            invariant_error("block_coords: non-degenerate monomial missing from basis");
        v[idx] = fp_.add(v[idx], t.second);
    }
    return v;
}

Poly AlmostFreeAlgebra::block_lift(int level, int w, const std::vector<uint32_t>& coords) const
{
    const auto& b = block_basis(level, w);
    Poly x;
    for (size_t i = 0; i < coords.size(); ++i)
        if (coords[i] % p_)
            x.terms.emplace_back(b[i], coords[i] % p_);
    poly_normalize(x, fp_);
    return x;
}

std::vector<std::pair<uint32_t, uint32_t>>
AlmostFreeAlgebra::boundary_column(int level, int w, const Monomial& m) const
{
    std::map<uint32_t, uint32_t> acc;
    for (int i = 0; i <= level; ++i) {
        uint32_t sign = (i % 2 == 0) ? 1 : p_ - 1;
        /* fast path: all factors land on generators */
        bool all_gen = true;
        for (auto& f : m.factors)
            if (face_on_gen(level, i, f.first).kind != FaceVal::GenVal) {
                all_gen = false;
                break;
            }
        if (all_gen) {
            Monomial nm;
            nm.weight = w;
            for (auto& f : m.factors)
                nm.factors.emplace_back(face_on_gen(level, i, f.first).gen, f.second);
            std::sort(nm.factors.begin(), nm.factors.end());
            Monomial merged;
            merged.weight = w;
            for (auto& f : nm.factors) {
                if (!merged.factors.empty() && merged.factors.back().first == f.first)
                    merged.factors.back().second =
                        static_cast<uint16_t>(merged.factors.back().second + f.second);
                else
                    merged.factors.push_back(f);
            }
            if (!is_degenerate(level - 1, merged)) {
                int idx = block_index(level - 1, w, merged);
                if (idx < 0)
                    invariant_error("boundary_column: image monomial missing from basis");
                auto& slot = acc[static_cast<uint32_t>(idx)];
                slot = fp_.add(slot, sign);
            }
            continue;
        }
        Poly img = apply_face(level, i, Poly::from_monomial(m));
        for (auto& t : img.terms) {
            if (is_degenerate(level - 1, t.first))
                continue;
            int idx = block_index(level - 1, w, t.first);
            if (idx < 0)
                invariant_error("boundary_column: image monomial missing from basis");
            auto& slot = acc[static_cast<uint32_t>(idx)];
            slot = fp_.add(slot, fp_.mul(sign, t.second));
        }
    }
    std::vector<std::pair<uint32_t, uint32_t>> col;
    for (auto& [idx, c] : acc)
        if (c)
            col.emplace_back(idx, c);
    return col;
}

int AlmostFreeAlgebra::level_cap(int w) const
{
    /* unbounded knapsack: the largest total simplicial degree achievable
     * within total weight w; non-degenerate weight-w monomials need the
     * factor degrees to cover all positions of the level */
    std::vector<int> dp(w + 1, 0);
    for (int v = 1; v <= w; ++v)
        for (auto& c : cells_)
            if (c.weight <= v)
                dp[v] = std::max(dp[v], c.degree + dp[v - c.weight]);
    return dp[w];
}

Poly AlmostFreeAlgebra::moore_normalize(int level, const Poly& x) const
{
    Poly y = x;
    for (int j = level; j >= 1; --j) {
        Poly dj = apply_face(level, j, y);
        if (!dj.is_zero())
            y = poly_sub(y, apply_degen(level - 1, j - 1, dj), fp_);
    }
    return y;
}

void AlmostFreeAlgebra::verify_identities(int L) const
{
    auto face_of = [&](int level, int i, const Poly& x) { return apply_face(level, i, x); };
    for (int m = 1; m <= L; ++m) {
        int ng = gen_count(m);
        for (int g = 0; g < ng; ++g) {
            Poly gp = Poly::from_monomial(Monomial::gen(g, gens(m)[g].weight));
            if (m >= 2)
                for (int j = 1; j <= m; ++j)
                    for (int i = 0; i < j; ++i) {
                        Poly lhs = face_of(m - 1, i, face_of(m, j, gp));
                        Poly rhs = face_of(m - 1, j - 1, face_of(m, i, gp));
                        if (!(poly_sub(lhs, rhs, fp_).is_zero()))
                            invariant_error("identity d_i d_j = d_{j-1} d_i failed at level " +
                                            std::to_string(m));
                    }
        }
    }
    for (int m = 0; m + 2 <= L; ++m) {
        int ng = gen_count(m);
        for (int g = 0; g < ng; ++g)
            for (int j = 0; j <= m; ++j)
                for (int i = 0; i <= j; ++i)
                    if (degen_on_gen(m + 1, i, degen_on_gen(m, j, g)) !=
                        degen_on_gen(m + 1, j + 1, degen_on_gen(m, i, g)))
                        invariant_error("identity s_i s_j = s_{j+1} s_i failed at level " +
                                        std::to_string(m));
    }
    for (int m = 0; m + 1 <= L; ++m) {
        int ng = gen_count(m);
        for (int g = 0; g < ng; ++g) {
            Poly gp = Poly::from_monomial(Monomial::gen(g, gens(m)[g].weight));
            for (int j = 0; j <= m; ++j) {
                Poly sj = Poly::from_monomial(
                    Monomial::gen(degen_on_gen(m, j, g), gens(m)[g].weight));
                for (int i = 0; i <= m + 1; ++i) {
                    Poly lhs = face_of(m + 1, i, sj);
                    Poly rhs;
                    if (i == j || i == j + 1)
                        rhs = gp;
                    else if (i < j)
                        rhs = apply_degen(m - 1, j - 1, face_of(m, i, gp));
                    else
                        rhs = apply_degen(m - 1, j, face_of(m, i - 1, gp));
                    if (!(poly_sub(lhs, rhs, fp_).is_zero()))
                        invariant_error("identity d_i s_j failed at level " + std::to_string(m));
                }
            }
        }
    }
}

std::string AlmostFreeAlgebra::monomial_str(int level, const Monomial& m) const
{
    if (m.is_unit())
        return "1";
    std::string s;
    for (auto& f : m.factors) {
        if (!s.empty())
            s += "*";
        const Gen& g = gens(level)[f.first];
        s += cells_[g.cell].name;
        if (g.alpha.level() != cells_[g.cell].degree) {
            s += "[";
            for (size_t q = 0; q < g.alpha.v.size(); ++q)
                s += (q ? "," : "") + std::to_string(g.alpha.v[q]);
            s += "]";
        }
        if (f.second > 1)
            s += "^" + std::to_string(f.second);
    }
    return s;
}

std::string AlmostFreeAlgebra::poly_str(int level, const Poly& x) const
{
    if (x.is_zero())
        return "0";
    std::string s;
    for (auto& t : x.terms) {
        if (!s.empty())
            s += "+";
        if (t.second != 1)
            s += std::to_string(t.second) + "*";
        s += monomial_str(level, t.first);
    }
    return s;
}

AlmostFreeAlgebra sphere(uint32_t p, int dimV, const std::vector<int>& weights, int n, int N,
                         int W)
{
    if (n < 0)
        domain_error("sphere: need n >= 0");
    if (static_cast<int>(weights.size()) != dimV)
        domain_error("sphere: weights size != dimV");
    AlmostFreeAlgebra X(p, N, W);
    for (int t = 0; t < dimV; ++t)
        X.add_cell({"v" + std::to_string(t), n, weights[t], Poly::zero()});
    return X;
}

AlmostFreeAlgebra tensor(const AlmostFreeAlgebra& X, const AlmostFreeAlgebra& Y)
{
    if (X.p() != Y.p() || X.W() != Y.W())
        domain_error("tensor: mismatched modulus or weight truncation");
    AlmostFreeAlgebra Z(X.p(), std::max(X.N(), Y.N()), X.W());
    for (auto& c : X.cells()) {
        Cell nc = c;
        nc.name = c.name + "'";
        if (!c.d0.is_zero()) {
            Poly nd;
            for (auto& t : c.d0.terms) {
                Monomial nm;
                nm.weight = t.first.weight;
                for (auto& f : t.first.factors) {
                    auto& g = X.gens(c.degree - 1)[f.first];
                    nm.factors.emplace_back(Z.gen_index(c.degree - 1, g.cell, g.alpha), f.second);
                }
                std::sort(nm.factors.begin(), nm.factors.end());
                nd.terms.emplace_back(std::move(nm), t.second);
            }
            poly_normalize(nd, Z.fp());
            nc.d0 = std::move(nd);
        }
        Z.add_cell(std::move(nc));
    }
    uint32_t off = static_cast<uint32_t>(X.cells().size());
    for (auto& c : Y.cells()) {
        Cell nc = c;
        nc.name = c.name + "''";
        if (!c.d0.is_zero()) {
            Poly nd;
            for (auto& t : c.d0.terms) {
                Monomial nm;
                nm.weight = t.first.weight;
                for (auto& f : t.first.factors) {
                    auto& g = Y.gens(c.degree - 1)[f.first];
                    nm.factors.emplace_back(Z.gen_index(c.degree - 1, g.cell + off, g.alpha),
                                            f.second);
                }
                std::sort(nm.factors.begin(), nm.factors.end());
                nd.terms.emplace_back(std::move(nm), t.second);
            }
            poly_normalize(nd, Z.fp());
            nc.d0 = std::move(nd);
        }
        Z.add_cell(std::move(nc));
    }
    return Z;
}

AlmostFreeAlgebra delete_cells(const AlmostFreeAlgebra& X, const std::vector<bool>& keep)
{
    AlmostFreeAlgebra M(X.p(), X.N(), X.W());
    std::vector<int> newidx(X.cells().size(), -1);
    for (uint32_t c = 0; c < X.cells().size(); ++c) {
        if (!keep[c])
            continue;
        const Cell& cell = X.cells()[c];
        Cell nc;
        nc.name = cell.name;
        nc.degree = cell.degree;
        nc.weight = cell.weight;
        Poly nd;
        for (auto& t : cell.d0.terms) {
            Monomial nm;
            nm.weight = t.first.weight;
            bool dead = false;
            for (auto& f : t.first.factors) {
                auto& g = X.gens(cell.degree - 1)[f.first];
                if (newidx[g.cell] < 0) {
                    dead = true; /* monomial meets a deleted cell */
                    break;
                }
                nm.factors.emplace_back(
                    M.gen_index(cell.degree - 1, static_cast<uint32_t>(newidx[g.cell]), g.alpha),
                    f.second);
            }
            if (dead)
                continue;
            std::sort(nm.factors.begin(), nm.factors.end());
            nd.terms.emplace_back(std::move(nm), t.second);
        }
        poly_normalize(nd, M.fp());
        nc.d0 = std::move(nd);
        newidx[c] = static_cast<int>(M.cells().size());
        M.add_cell(std::move(nc));
    }
    return M;
}

SimplicialVectorSpace indecomposables(const AlmostFreeAlgebra& X, int L)
{
    SimplicialVectorSpace V;
    V.p = X.p();
    V.N = L;
    V.levels.resize(L + 1);
    V.face.resize(L + 1);
    V.degen.resize(L + 1);
    for (int m = 0; m <= L; ++m)
        for (int g = 0; g < X.gen_count(m); ++g)
            V.levels[m].push_back({X.monomial_str(m, Monomial::gen(g, 0)), X.gens(m)[g].weight});

    for (int m = 1; m <= L; ++m) {
        V.face[m].assign(m + 1, FpMatrix(X.p(), V.levels[m - 1].size(), V.levels[m].size()));
        for (int i = 0; i <= m; ++i)
            for (int g = 0; g < X.gen_count(m); ++g) {
                const auto& fv = X.face_on_gen(m, i, g);
                if (fv.kind == AlmostFreeAlgebra::FaceVal::GenVal)
                    V.face[m][i].at(fv.gen, g) = 1;
                else if (fv.kind == AlmostFreeAlgebra::FaceVal::PolyVal) {
                    /* only the linear part survives in Q */
                    for (auto& t : fv.poly.terms)
                        if (t.first.factors.size() == 1 && t.first.factors[0].second == 1)
                            V.face[m][i].at(t.first.factors[0].first, g) = t.second;
                }
            }
    }
    for (int m = 0; m < L; ++m) {
        V.degen[m].assign(m + 1, FpMatrix(X.p(), V.levels[m + 1].size(), V.levels[m].size()));
        for (int j = 0; j <= m; ++j)
            for (int g = 0; g < X.gen_count(m); ++g)
                V.degen[m][j].at(X.degen_on_gen(m, j, g), g) = 1;
    }
    return V;
}

} // namespace aq
