#pragma once

#include "aq/fp.hpp"

#include <cstdint>
#include <vector>

namespace aq {

/* Order-preserving surjection [m] ->> [k], stored as its value vector
 * (size m+1, values 0..k, steps of 0 or 1). These index the degenerate
 * copies of a generator: alpha corresponds to the simplicial operator
 * alpha^* (a composite of degeneracies applied to a k-simplex). */
struct Surj {
    std::vector<uint8_t> v;

    int level() const { return static_cast<int>(v.size()) - 1; }
    int target() const { return v.empty() ? -1 : v.back(); }

    static Surj identity(int k)
    {
        Surj s;
        s.v.resize(k + 1);
        for (int i = 0; i <= k; ++i)
            s.v[i] = static_cast<uint8_t>(i);
        return s;
    }

    /* alpha o sigma_j : [m+1] ->> [k] (insert a repeat after slot j) */
    Surj compose_sigma(int j) const
    {
        Surj s;
        s.v = v;
        s.v.insert(s.v.begin() + j + 1, v[j]);
        return s;
    }

    /* alpha o delta_i : [m-1] -> [k] (drop slot i); may fail to surject */
    Surj compose_delta(int i) const
    {
        Surj s;
        s.v = v;
        s.v.erase(s.v.begin() + i);
        return s;
    }

    bool surjective() const
    {
        if (v.empty())
            return false;
        if (v[0] != 0)
            return false;
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i] > v[i - 1] + 1)
                return false;
        return true;
    }

    /* positions j in 0..m-1 with alpha(j) = alpha(j+1); a monomial is
     * degenerate at j iff every factor doubles at j */
    uint32_t doubles_mask() const
    {
        uint32_t mask = 0;
        for (size_t j = 0; j + 1 < v.size(); ++j)
            if (v[j] == v[j + 1])
                mask |= (1u << j);
        return mask;
    }

    bool operator==(const Surj& o) const { return v == o.v; }
    bool operator<(const Surj& o) const { return v < o.v; }
};

/* A non-surjective monotone map arising as alpha o delta_i misses exactly
 * one value; factor it as delta_missed o beta with beta surjective. */
struct DeltaFactor {
    bool surjective;
    int missed; /* face index applied to the generator when not surjective */
    Surj beta;  /* [m-1] ->> [k-1] (or [m-1] ->> [k] when surjective) */
};

inline DeltaFactor factor_delta(const Surj& alpha, int i)
{
    DeltaFactor f;
    int k = alpha.target();
    Surj g = alpha.compose_delta(i);
    if (g.surjective() && g.target() == k) {
        f.surjective = true;
        f.missed = -1;
        f.beta = std::move(g);
        return f;
    }
    int missed = -1;
    if (g.v[0] != 0)
        missed = 0;
    else {
        for (size_t t = 1; t < g.v.size(); ++t)
            if (g.v[t] == g.v[t - 1] + 2) {
                missed = g.v[t] - 1;
                break;
            }
        if (missed < 0)
            missed = k; /* top value dropped */
    }
    f.surjective = false;
    f.missed = missed;
    f.beta = g;
    for (auto& x : f.beta.v)
        if (x > missed)
            --x;
    return f;
}

/* All order-preserving surjections [m] ->> [k], in lexicographic order of
 * the value vector. Count is C(m, k). */
std::vector<Surj> all_surjections(int m, int k);

} // namespace aq
