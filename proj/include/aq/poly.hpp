#pragma once

#include "aq/fp.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace aq {

/* Commutative monomial over generator indices of one level of an
 * almost-free algebra. Factors are sorted by generator id; the weight is
 * cached. Order is graded-lexicographic: weight first, then the factor
 * list. */
struct Monomial {
    std::vector<std::pair<uint32_t, uint16_t>> factors; /* (gen, exp), exp > 0 */
    int weight = 0;

    bool is_unit() const { return factors.empty(); }
    int degree() const
    {
        int d = 0;
        for (auto& f : factors)
            d += f.second;
        return d;
    }

    static Monomial unit() { return {}; }
    static Monomial gen(uint32_t g, int w)
    {
        Monomial m;
        m.factors = {{g, 1}};
        m.weight = w;
        return m;
    }

    Monomial times(const Monomial& o) const
    {
        Monomial r;
        r.weight = weight + o.weight;
        r.factors.reserve(factors.size() + o.factors.size());
        size_t i = 0, j = 0;
        while (i < factors.size() || j < o.factors.size()) {
            if (j == o.factors.size() ||
                (i < factors.size() && factors[i].first < o.factors[j].first))
                r.factors.push_back(factors[i++]);
            else if (i == factors.size() || o.factors[j].first < factors[i].first)
                r.factors.push_back(o.factors[j++]);
            else {
                r.factors.emplace_back(factors[i].first,
                                       static_cast<uint16_t>(factors[i].second +
                                                             o.factors[j].second));
                ++i;
                ++j;
            }
        }
        return r;
    }

    bool operator==(const Monomial& o) const { return weight == o.weight && factors == o.factors; }
    bool operator<(const Monomial& o) const
    {
        if (weight != o.weight)
            return weight < o.weight;
        return factors < o.factors;
    }
};

/* Polynomial: sorted term list, coefficients in (0, p). */
struct Poly {
    std::vector<std::pair<Monomial, uint32_t>> terms;

    bool is_zero() const { return terms.empty(); }
    static Poly zero() { return {}; }
    static Poly from_monomial(Monomial m, uint32_t c = 1)
    {
        Poly q;
        if (c)
            q.terms.emplace_back(std::move(m), c);
        return q;
    }

    int max_weight() const
    {
        int w = 0;
        for (auto& t : terms)
            w = std::max(w, t.first.weight);
        return w;
    }
    bool weight_homogeneous() const
    {
        for (auto& t : terms)
            if (t.first.weight != terms[0].first.weight)
                return false;
        return true;
    }
};

inline void poly_normalize(Poly& q, const Fp& fp)
{
    std::sort(q.terms.begin(), q.terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Poly out;
    for (auto& t : q.terms) {
        uint32_t c = t.second % fp.p;
        if (!out.terms.empty() && out.terms.back().first == t.first)
            out.terms.back().second = fp.add(out.terms.back().second, c);
        else if (c)
            out.terms.emplace_back(t.first, c);
    }
    out.terms.erase(std::remove_if(out.terms.begin(), out.terms.end(),
                                   [](const auto& t) { return t.second == 0; }),
                    out.terms.end());
    q = std::move(out);
}

inline Poly poly_add(const Poly& a, const Poly& b, const Fp& fp)
{
    Poly r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (j == b.terms.size() ||
            (i < a.terms.size() && a.terms[i].first < b.terms[j].first))
            r.terms.push_back(a.terms[i++]);
        else if (i == a.terms.size() || b.terms[j].first < a.terms[i].first)
            r.terms.push_back(b.terms[j++]);
        else {
            uint32_t c = fp.add(a.terms[i].second, b.terms[j].second);
            if (c)
                r.terms.emplace_back(a.terms[i].first, c);
            ++i;
            ++j;
        }
    }
    return r;
}

inline Poly poly_scale(const Poly& a, uint32_t c, const Fp& fp)
{
    c %= fp.p;
    Poly r;
    if (!c)
        return r;
    for (auto& t : a.terms)
        r.terms.emplace_back(t.first, fp.mul(t.second, c));
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b, const Fp& fp)
{
    return poly_add(a, poly_scale(b, fp.p - 1, fp), fp);
}

/* Product truncated at weight cap: terms above the cap are dropped, which
 * is sound for every weight-homogeneous computation reported at weight
 * <= cap (all structure maps preserve the grading). */
inline Poly poly_mul(const Poly& a, const Poly& b, const Fp& fp, int weight_cap)
{
    Poly r;
    for (auto& ta : a.terms)
        for (auto& tb : b.terms) {
            if (ta.first.weight + tb.first.weight > weight_cap)
                continue;
            r.terms.emplace_back(ta.first.times(tb.first), fp.mul(ta.second, tb.second));
        }
    poly_normalize(r, fp);
    return r;
}

inline Poly poly_pow(const Poly& a, int e, const Fp& fp, int weight_cap)
{
    Poly r = Poly::from_monomial(Monomial::unit());
    for (int i = 0; i < e; ++i) {
        r = poly_mul(r, a, fp, weight_cap);
        if (r.is_zero())
            break;
    }
    return r;
}

} // namespace aq
