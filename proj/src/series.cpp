#include "aq/series.hpp"

#include <algorithm>
#include <cmath>

namespace aq {

std::string TruncatedIntegerSeries::str() const
{
    std::string s;
    for (int i = 0; i <= T; ++i)
        s += (i ? "," : "") + c[i].str();
    return s;
}

TruncatedIntegerSeries mul(const TruncatedIntegerSeries& f, const TruncatedIntegerSeries& g)
{
    int T = std::min(f.T, g.T);
    auto r = TruncatedIntegerSeries::zero(T);
    for (int i = 0; i <= T; ++i)
        for (int j = 0; i + j <= T; ++j)
            r.c[i + j] += f.c[i] * g.c[j];
    return r;
}

TruncatedIntegerSeries pow(const TruncatedIntegerSeries& f, int e)
{
    auto r = TruncatedIntegerSeries::one(f.T);
    for (int i = 0; i < e; ++i)
        r = mul(r, f);
    return r;
}

bool leq(const TruncatedIntegerSeries& f, const TruncatedIntegerSeries& g)
{
    int T = std::min(f.T, g.T);
    for (int i = 0; i <= T; ++i)
        if (f.c[i] > g.c[i])
            return false;
    return true;
}

bool eq(const TruncatedIntegerSeries& f, const TruncatedIntegerSeries& g)
{
    int T = std::min(f.T, g.T);
    for (int i = 0; i <= T; ++i)
        if (f.c[i] != g.c[i])
            return false;
    return true;
}

TruncatedIntegerSeries theta(const GradedDims& dims, int T)
{
    if (dims.certified_degree < T)
        domain_error("theta: homotopy only certified to degree " +
                     std::to_string(dims.certified_degree) + ", requested " + std::to_string(T));
    auto s = TruncatedIntegerSeries::zero(T);
    for (int n = 0; n <= T; ++n)
        s.c[n] = dims.total_dim(n);
    return s;
}

std::vector<AdmissibleWord> admissible_words_p2(int n, int maxdeg)
{
    /* Words with e(I) < n are exactly those built right-to-left under
     * i_prev doubling and the stepwise bound i < n + (sum so far): the top
     * bound is the excess condition and admissibility pushes it down the
     * word. This keeps the enumeration proportional to the output. */
    std::vector<AdmissibleWord> out;
    out.push_back({});
    int budget = maxdeg - n;
    std::vector<std::pair<std::vector<int>, int>> layer; /* word (left..right), sum */
    for (int i = 2; i < n && i <= budget; ++i)
        layer.push_back({{i}, i});
    while (!layer.empty()) {
        std::vector<std::pair<std::vector<int>, int>> next;
        for (auto& [w, sum] : layer) {
            out.push_back({w});
            for (int i = 2 * w[0]; i < n + sum && i + sum <= budget; ++i) {
                std::vector<int> nw;
                nw.reserve(w.size() + 1);
                nw.push_back(i);
                nw.insert(nw.end(), w.begin(), w.end());
                next.push_back({std::move(nw), sum + i});
            }
        }
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const AdmissibleWord& a, const AdmissibleWord& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a.entries < b.entries;
    });
    return out;
}

std::vector<EmGenerator> em_generators(uint32_t p, int n, int maxdeg)
{
    std::vector<EmGenerator> out;
    if (n < 1)
        domain_error("em_generators: need n >= 1");
    if (p == 2) {
        for (auto& w : admissible_words_p2(n, maxdeg)) {
            int d = n + w.degree();
            if (d <= maxdeg)
                out.push_back({d, 1LL << w.entries.size(), true});
        }
    } else {
        if (n <= maxdeg)
            out.push_back({n, 1, n % 2 == 0});
        /* words P^{s_1} b^{e_1} P^{s_2} ... P^{s_k} applied to the
         * fundamental class, admissible (s_j >= p s_{j+1} + e_j) and with
         * the top operation strictly below the squaring edge; each yields
         * the generator itself and its Bockstein */
        struct State {
            int deg;       /* degree of the class built so far */
            int s_top;     /* exponent of the most recent power operation */
            long long wt;
        };
        std::vector<State> layer = {{n, 0, 1}};
        bool first = true;
        while (!layer.empty()) {
            std::vector<State> next;
            for (auto& st : layer) {
                for (int eps = 0; eps <= (first ? 0 : 1); ++eps) {
                    int base_deg = st.deg + eps; /* class acted on by the new P^s */
                    int s_min = first ? 1 : static_cast<int>(p) * st.s_top + eps;
                    if (s_min < 1)
                        s_min = 1;
                    for (int s = s_min; 2 * s < base_deg; ++s) {
                        int d = base_deg + 2 * s * (static_cast<int>(p) - 1);
                        if (d > maxdeg)
                            break;
                        long long wt = st.wt * p;
                        out.push_back({d, wt, d % 2 == 0});
                        if (d + 1 <= maxdeg)
                            out.push_back({d + 1, wt, (d + 1) % 2 == 0});
                        next.push_back({d, s, wt});
                    }
                }
            }
            layer = std::move(next);
            first = false;
        }
        std::sort(out.begin(), out.end(), [](const EmGenerator& a, const EmGenerator& b) {
            return a.degree < b.degree;
        });
    }
    return out;
}

TruncatedIntegerSeries cartan_theta(uint32_t p, int q, int n, int T)
{
    if (n < 1)
        domain_error("cartan_theta: rejects n = 0 (the series is not of finite type)");
    if (q < 1)
        domain_error("cartan_theta: need q >= 1");
    if (n == 1)
        return pow(TruncatedIntegerSeries::one_plus(1, T), q);
    auto r = TruncatedIntegerSeries::one(T);
    for (auto& g : em_generators(p, n, T))
        r = mul(r, g.polynomial ? TruncatedIntegerSeries::geometric(g.degree, T)
                                : TruncatedIntegerSeries::one_plus(g.degree, T));
    return pow(r, q);
}

TruncatedIntegerSeries theta_from_chains(const AlmostFreeAlgebra& X, int T)
{
    if (X.cells().empty()) {
        auto s = TruncatedIntegerSeries::zero(T);
        s.c[0] = 1;
        return s;
    }
    int u_max = 1, n0 = X.cells()[0].degree;
    bool em_like = true;
    for (auto& c : X.cells()) {
        u_max = std::max(u_max, c.weight);
        if (c.degree == 0)
            domain_error("theta_from_chains: object is not connected (degree-0 cells)");
        if (c.degree != n0 || !c.d0.is_zero())
            em_like = false;
    }
    /* weight-sufficiency: weight-w classes of a connected object live in
     * degree >= ceil(w/u_max); for an Eilenberg-MacLane symmetric algebra
     * on degree-n cells (n >= 2) the power operations double the weight
     * along the Cartan-Serre basis, giving degree >= ceil(2w/u_max)+n-2 */
    auto bound = [&](int w) {
        if (em_like && n0 >= 2)
            return (2 * w + u_max - 1) / u_max + n0 - 2;
        return (w + u_max - 1) / u_max;
    };
    int W_needed = 0;
    while (bound(W_needed + 1) <= T)
        ++W_needed;
    if (W_needed > X.W())
        domain_error("theta_from_chains: weight truncation W=" + std::to_string(X.W()) +
                     " cannot certify theta to order " + std::to_string(T) + " (needs " +
                     std::to_string(W_needed) + ")");
    std::vector<int> weights;
    for (int w = 1; w <= W_needed; ++w)
        weights.push_back(w);
    auto dims = homotopy_series_dims(X, T, weights);
    auto s = TruncatedIntegerSeries::zero(T);
    for (int i = 0; i <= T; ++i) {
        if (dims[i] < 0)
            invariant_error("theta_from_chains: negative homotopy dimension");
        s.c[i] = dims[i];
    }
    return s;
}

double phi(uint32_t p, int q, int n, double tau)
{
    if (tau <= 0)
        domain_error("phi: need tau > 0");
    if (n < 1)
        domain_error("phi: need n >= 1");
    const double lp = std::log(static_cast<double>(p));
    const double pt = std::pow(static_cast<double>(p), -tau);
    if (n == 1)
        return q * std::log(2.0 - pt) / lp;

    const double t = 1.0 - pt;
    const double lt = std::log(t); /* < 0 */
    /* choose the generator cutoff so the discarded log-product is < 1e-6:
     * #generators of degree d is at most (2d)^{log_p d + 1} (admissible
     * entries halve/p-fold, so words have length <= log_p d + 1 and
     * entries <= d, with the Bockstein doubling at odd p), and
     * -log(1 - t^d) <= 2 t^d once t^d <= 1/2 */
    auto logN = [&](double d) { return (std::log(d) / lp + 1.0) * std::log(2.0 * d); };
    double D = 64;
    while (true) {
        double g1 = logN(D + 1) + (D + 1) * lt;
        double g2 = logN(D + 2) + (D + 2) * lt;
        if (g2 < g1) {
            double ratio = std::exp(g2 - g1);
            double tail = (2.0 * q / lp) * std::exp(g1) / (1.0 - ratio);
            if (std::exp(g1) == 0.0 || tail < 1e-7)
                break;
        }
        D *= 2;
        if (D > 1e9)
            domain_error("phi: tail bound unachievable within the resource limit");
    }
    double acc = 0.0;
    for (auto& g : em_generators(p, n, static_cast<int>(D))) {
        double td = std::exp(g.degree * lt);
        acc += g.polynomial ? -std::log1p(-td) : std::log1p(td);
    }
    return q * acc / lp;
}

AsymptoticReport asymptotic_check(uint32_t p, int q, int n, const std::vector<double>& taus)
{
    if (n < 2)
        domain_error("asymptotic_check: need n >= 2");
    AsymptoticReport rep;
    double fact = 1.0;
    for (int i = 2; i <= n - 1; ++i)
        fact *= i;
    for (double tau : taus) {
        double f = phi(p, q, n, tau);
        rep.taus.push_back(tau);
        rep.ratios.push_back(f / (q * std::pow(tau, n - 1) / fact));
    }
    rep.increasing = true;
    for (size_t i = 1; i < rep.ratios.size(); ++i)
        if (rep.ratios[i] <= rep.ratios[i - 1])
            rep.increasing = false;
    rep.final_ratio = rep.ratios.empty() ? 0.0 : rep.ratios.back();
    return rep;
}

SerreReport serre_inequality_check(const CofibrationSequenceRecord& rec, int T)
{
    SerreReport rep;
    int D = std::min(T, rec.N - 1);
    int W = rec.W;
    auto hB = homotopy_bidims(rec.base, D, W);
    auto hZ = homotopy_bidims(rec.total, D, W);
    auto hM = homotopy_bidims(rec.cofiber, D, W);

    rep.equality = true;
    for (int s = 0; s <= D; ++s)
        for (int w = 0; w <= W; ++w) {
            long long conv = 0;
            for (int a = 0; a <= s; ++a)
                for (int w1 = 0; w1 <= w; ++w1)
                    conv += hB[a][w1] * hM[s - a][w - w1];
            if (hZ[s][w] > conv)
                invariant_error("Serre inequality violated at degree " + std::to_string(s) +
                                ", weight " + std::to_string(w) + " (" + rec.label + ")");
            if (hZ[s][w] != conv)
                rep.equality = false;
        }
    rep.holds = true;
    rep.degree_checked = D;
    rep.weight_checked = W;
    rep.theta_base.assign(D + 1, 0);
    rep.theta_total.assign(D + 1, 0);
    rep.theta_cofiber.assign(D + 1, 0);
    for (int s = 0; s <= D; ++s)
        for (int w = 0; w <= W; ++w) {
            rep.theta_base[s] += hB[s][w];
            rep.theta_total[s] += hZ[s][w];
            rep.theta_cofiber[s] += hM[s][w];
        }
    return rep;
}

} // namespace aq
