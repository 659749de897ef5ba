#pragma once

#include "aq/resolution.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace aq {

using BigInt = boost::multiprecision::cpp_int;

/* Exact truncated power series with arbitrary-precision coefficients. */
struct TruncatedIntegerSeries {
    int T = 0;
    std::vector<BigInt> c; /* size T+1 */

    static TruncatedIntegerSeries zero(int T)
    {
        return {T, std::vector<BigInt>(T + 1, 0)};
    }
    static TruncatedIntegerSeries one(int T)
    {
        auto s = zero(T);
        s.c[0] = 1;
        return s;
    }
    /* 1/(1 - t^d) truncated */
    static TruncatedIntegerSeries geometric(int d, int T)
    {
        auto s = zero(T);
        for (int k = 0; k * d <= T; ++k)
            s.c[k * d] = 1;
        return s;
    }
    /* 1 + t^d */
    static TruncatedIntegerSeries one_plus(int d, int T)
    {
        auto s = one(T);
        if (d <= T)
            s.c[d] += 1;
        return s;
    }
    std::string str() const;
};

/* Cauchy product at the common (minimal) order. */
TruncatedIntegerSeries mul(const TruncatedIntegerSeries& f, const TruncatedIntegerSeries& g);
TruncatedIntegerSeries pow(const TruncatedIntegerSeries& f, int e);
/* coefficientwise order at the common order */
bool leq(const TruncatedIntegerSeries& f, const TruncatedIntegerSeries& g);
bool eq(const TruncatedIntegerSeries& f, const TruncatedIntegerSeries& g);

/* theta from certified homotopy dims: c_n = total dim pi_n. Rejects dims
 * whose certification stops below T. */
TruncatedIntegerSeries theta(const GradedDims& dims, int T);

/* Admissible word at p = 2: i_j >= 2 i_{j+1}, last entry >= 2. */
struct AdmissibleWord {
    std::vector<int> entries;
    int degree() const
    {
        int d = 0;
        for (int e : entries)
            d += e;
        return d;
    }
    int excess() const
    {
        if (entries.empty())
            return 0;
        int rest = 0;
        for (size_t i = 1; i < entries.size(); ++i)
            rest += entries[i];
        return entries[0] - rest;
    }
};

/* Words with e(I) < n and last entry >= 2, degrees n + |I| <= maxdeg. */
std::vector<AdmissibleWord> admissible_words_p2(int n, int maxdeg);

/* One multiplicative generator of H_*(K(Z^1, n); F_p): a series factor
 * 1/(1-t^degree) (polynomial) or (1+t^degree) (exterior, odd p and odd
 * degree). weight = p^{number of power operations}. */
struct EmGenerator {
    int degree;
    long long weight;
    bool polynomial;
};
std::vector<EmGenerator> em_generators(uint32_t p, int n, int maxdeg);

/* Poincare series of S(V,n) with dim V = q, via the Cartan-Serre basis of
 * the associated Eilenberg-MacLane object. n = 1 is the circle case
 * (1+t)^q; rejects n = 0. */
TruncatedIntegerSeries cartan_theta(uint32_t p, int q, int n, int T);

/* theta of a sphere/connected engine object from its chain blocks, weight
 * by weight over the documented sufficiency bound. */
TruncatedIntegerSeries theta_from_chains(const AlmostFreeAlgebra& X, int T);

/* phi(t) = log_p theta(1 - p^{-tau}); the generator tail is cut when the
 * bound on the discarded log-product drops below 1e-6. */
double phi(uint32_t p, int q, int n, double tau);

struct AsymptoticReport {
    std::vector<double> taus;
    std::vector<double> ratios; /* phi / (q tau^{n-1}/(n-1)!) */
    bool increasing = false;
    double final_ratio = 0.0;
};
AsymptoticReport asymptotic_check(uint32_t p, int q, int n, const std::vector<double>& taus);

/* Coefficientwise Serre bound theta(total) <= theta(base) * theta(cofiber),
 * checked per weight block (throws an invariant error on violation). The
 * reported series are weight-truncated totals. */
struct SerreReport {
    bool holds = false;
    bool equality = false;
    int degree_checked = 0;
    int weight_checked = 0;
    std::vector<long long> theta_base, theta_total, theta_cofiber;
};
SerreReport serre_inequality_check(const CofibrationSequenceRecord& rec, int T);

} // namespace aq
