#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aq/oracles.hpp"

#include <random>

using namespace aq;

static Presentation pres(const std::string& text)
{
    return parse_presentation(text);
}

TEST_CASE("minimalize: substitute y = x^2")
{
    auto MP = minimalize(pres("p=2\nvars: x:1, y:2\nrels: y-x^2"));
    CHECK(MP.P.vars.size() == 1);
    CHECK(MP.P.vars[0].first == "x");
    CHECK(MP.P.rels.empty());
    CHECK(MP.eliminated == std::vector<std::string>{"y"});
}

TEST_CASE("minimalize: already minimal is unchanged")
{
    auto MP = minimalize(pres("p=2\nvars: x:1\nrels: x^2"));
    CHECK(MP.P.vars.size() == 1);
    CHECK(MP.P.rels.size() == 1);
    CHECK(MP.eliminated.empty());
}

TEST_CASE("minimalize: F_2[x]/(x) collapses to F")
{
    auto MP = minimalize(pres("p=2\nvars: x:1\nrels: x"));
    CHECK(MP.P.vars.empty());
    CHECK(MP.P.rels.empty());
}

TEST_CASE("minimalize: substitution feeds the remaining relations")
{
    /* y = x^2 and y^2 = 0 become x^4 = 0 */
    auto MP = minimalize(pres("p=2\nvars: x:1, y:2\nrels: y+x^2, y^2"));
    CHECK(MP.P.vars.size() == 1);
    REQUIRE(MP.P.rels.size() == 1);
    CHECK(MP.P.poly_str(MP.P.rels[0]) == "x^4");
}

TEST_CASE("hq01 examples")
{
    auto MP = minimalize(pres("p=2\nvars: x:1\nrels: x^2"));
    auto [h0, h1] = hq01(MP, 8);
    CHECK(h0.dim(1) == 1);
    CHECK(h0.total() == 1);
    CHECK(h1.dim(2) == 1);
    CHECK(h1.total() == 1);

    auto MP2 = minimalize(pres("p=2\nvars: x:1, y:1\nrels: x^2, x*y, y^2"));
    auto [g0, g1] = hq01(MP2, 8);
    CHECK(g0.dim(1) == 2);
    CHECK(g1.dim(2) == 3);
    CHECK(g1.total() == 3);

    auto MP3 = minimalize(pres("p=5\nvars:\nrels:"));
    auto [e0, e1] = hq01(MP3, 4);
    CHECK(e0.total() == 0);
    CHECK(e1.total() == 0);
}

TEST_CASE("hq2_ls: regular sequence has only Koszul syzygies")
{
    auto MP = minimalize(pres("p=2\nvars: x:1, y:1\nrels: x^2, y^3"));
    auto h2 = hq2_ls(MP, 8);
    CHECK(h2.dims.total() == 0);
}

TEST_CASE("hq2_ls: the fat point has two weight-3 syzygies")
{
    auto MP = minimalize(pres("p=2\nvars: x:1, y:1\nrels: x^2, x*y, y^2"));
    auto h2 = hq2_ls(MP, 8);
    CHECK(h2.dims.dim(3) == 2);
    CHECK(h2.dims.total() == 2);
}

TEST_CASE("hq2_ls: no relations, no syzygies")
{
    auto MP = minimalize(pres("p=3\nvars: x:1, y:2\nrels:"));
    auto h2 = hq2_ls(MP, 6);
    CHECK(h2.dims.total() == 0);
}

TEST_CASE("hq2_ls: principal ideals in range have only Koszul syzygies")
{
    for (const char* t : {"p=2\nvars: x:1\nrels: x^2", "p=3\nvars: x:1, y:1\nrels: x^2+x*y",
                          "p=2\nvars: x:1, y:2\nrels: y^3"}) {
        auto h2 = hq2_ls(minimalize(pres(t)), 8);
        CHECK(h2.dims.total() == 0);
    }
}

TEST_CASE("hq2_ls warns when W cannot reach any syzygy")
{
    auto MP = minimalize(pres("p=2\nvars: x:1, y:1\nrels: x^2, x*y, y^2"));
    CHECK(!hq2_ls(MP, 2).saw_syzygy_range);
    CHECK(hq2_ls(MP, 3).saw_syzygy_range);
}

TEST_CASE("tor_poly: Tor^{F_2[x]}(F, F) has dims 1, 1")
{
    auto T = tor_poly(pres("p=2\nvars: x:1\nrels: x"), 3, 6);
    CHECK(T.total_dim(0) == 1);
    CHECK(T.total_dim(1) == 1);
    CHECK(T.dim(1, 1) == 1);
    CHECK(T.total_dim(2) == 0);
}

TEST_CASE("tor_poly: Tor^{F_2[x]}(F, F_2[x]/(x^2)) has dims 1, 1")
{
    /* the target is the module F[x]/(x^2), cut down by the ideal (x) in
     * homological degree bookkeeping: Tor(F, A) via Koszul on x over F[x],
     * i.e. the two-term complex A --x--> A */
    auto T = tor_poly(pres("p=2\nvars: x:1\nrels: x^2"), 3, 8);
    CHECK(T.total_dim(0) == 1);
    CHECK(T.total_dim(1) == 1);
    CHECK(T.total_dim(2) == 0);
}

TEST_CASE("tor_poly: exterior binomial count over q variables")
{
    auto T2 = tor_poly(pres("p=2\nvars: x:1, y:1\nrels: x, y"), 3, 6);
    CHECK(T2.total_dim(0) == 1);
    CHECK(T2.total_dim(1) == 2);
    CHECK(T2.total_dim(2) == 1);
    CHECK(T2.total_dim(3) == 0);

    auto T3 = tor_poly(pres("p=3\nvars: x:1, y:1, z:2\nrels: x, y, z"), 4, 8);
    CHECK(T3.total_dim(0) == 1);
    CHECK(T3.total_dim(1) == 3);
    CHECK(T3.total_dim(2) == 3);
    CHECK(T3.total_dim(3) == 1);
}

TEST_CASE("ci_check: F_2[x]/(x^2) is a complete intersection")
{
    auto v = ci_check(pres("p=2\nvars: x:1\nrels: x^2"), 4, 8);
    CHECK(!v.inconclusive);
    CHECK(v.ci);
    CHECK(v.engine_hq.total_dim(2) == 0);
    CHECK(v.simplicial_dim_in_range == 1);
}

TEST_CASE("ci_check: F_3[x,y]/(x^2, y^3) is a complete intersection")
{
    auto v = ci_check(pres("p=3\nvars: x:1, y:1\nrels: x^2, y^3"), 4, 8);
    CHECK(!v.inconclusive);
    CHECK(v.ci);
    CHECK(v.hq2_oracle.total() == 0);
    CHECK(v.engine_hq.total_dim(2) == 0);
}

TEST_CASE("ci_check: the fat point is not a complete intersection")
{
    auto v = ci_check(pres("p=2\nvars: x:1, y:1\nrels: x^2, x*y, y^2"), 4, 8);
    CHECK(!v.inconclusive);
    CHECK(!v.ci);
    CHECK(v.witness_weight == 3);
    CHECK(v.witness_dim == 2);
    CHECK(v.engine_hq.dim(2, 3) == 2);
}

TEST_CASE("ci_check: a polynomial algebra is a complete intersection")
{
    auto v = ci_check(pres("p=5\nvars: x:1, y:3\nrels:"), 3, 8);
    CHECK(!v.inconclusive);
    CHECK(v.ci);
    CHECK(v.engine_hq.total_dim(1) == 0);
}

TEST_CASE("three variables: the fat point has eight weight-3 syzygy classes")
{
    /* F_2[x,y,z]/m^2: minimal resolution of the ideal has 8 linear
     * syzygies; both the oracle and the engine must see dim H^Q_2 = 8 at
     * weight 3 */
    auto v = ci_check(
        parse_presentation("p=2\nvars: x:1, y:1, z:1\nrels: x^2, x*y, y^2, x*z, y*z, z^2"), 3,
        6);
    CHECK(!v.inconclusive);
    CHECK(!v.ci);
    CHECK(v.hq2_oracle.dim(3) == 8);
    CHECK(v.engine_hq.dim(2, 3) == 8);

    /* and the regular sequence in three variables is a complete
     * intersection */
    auto w = ci_check(parse_presentation("p=2\nvars: x:1, y:1, z:1\nrels: x^2, y^2, z^2"), 3, 6);
    CHECK(!w.inconclusive);
    CHECK(w.ci);
}

TEST_CASE("redundant relations are pruned before the syzygy oracle")
{
    /* x^4 = x * x^3 is a dependent relation; the trivial syzygy it
     * creates must not count toward H^Q_2 */
    auto MP = minimalize(parse_presentation("p=2\nvars: x:1\nrels: x^3, x^4"));
    CHECK(MP.P.rels.size() == 1);
    auto v = ci_check(parse_presentation("p=2\nvars: x:1\nrels: x^3, x^4"), 4, 8);
    CHECK(!v.inconclusive);
    CHECK(v.ci);

    auto v2 = ci_check(parse_presentation("p=3\nvars: x:1, y:2\nrels: x^2*y+x^4, x^2"), 3, 6);
    CHECK(!v2.inconclusive);
    CHECK(v2.ci);
}

TEST_CASE("Tor oracle matches the homotopy of the first envelope cofiber (CI case)")
{
    /* for F_2[x]/(x^2) the cofiber of S(V_0,0) -> A has the homotopy of
     * Tor^{F[x]}(F, A): dims 1, 1, 0 */
    auto P = pres("p=2\nvars: x:1\nrels: x^2");
    auto T = tor_poly(P, 3, 8);
    auto R = resolve(P, 4, 8);
    auto step = postnikov_envelope(R, 0);
    for (int s = 0; s <= 2; ++s)
        CHECK(step.next.pi.total_dim(s) == T.total_dim(s));
}

TEST_CASE("oracle agreement holds on a seeded random corpus")
{
    std::mt19937 rng(20260809);
    int tested = 0;
    for (int trial = 0; trial < 60 && tested < 14; ++trial) {
        uint32_t p = (rng() % 2) ? 2u : 3u;
        int nvars = 1 + rng() % 2;
        std::string text = "p=" + std::to_string(p) + "\nvars: ";
        std::vector<int> vw;
        for (int i = 0; i < nvars; ++i) {
            int w = 1 + rng() % 2;
            vw.push_back(w);
            text += std::string(i ? ", " : "") + char('x' + i) + ":" + std::to_string(w);
        }
        /* random homogeneous relations of weight 2..4 */
        int nrels = 1 + rng() % 2;
        std::vector<std::string> rels;
        for (int r = 0; r < nrels; ++r) {
            int w = 2 + rng() % 3;
            std::string poly;
            /* sum random monomials of weight w */
            for (int t = 0; t < 3; ++t) {
                std::string mono;
                int rem = w;
                for (int i = 0; i < nvars && rem > 0; ++i) {
                    int maxe = rem / vw[i];
                    int e = (i == nvars - 1) ? maxe : static_cast<int>(rng() % (maxe + 1));
                    if (i == nvars - 1 && rem % vw[i] != 0)
                        e = -1; /* weight cannot be completed */
                    if (e > 0) {
                        mono += (mono.empty() ? "" : "*") + std::string(1, char('x' + i)) +
                                "^" + std::to_string(e);
                        rem -= e * vw[i];
                    } else if (e < 0)
                        rem = -1;
                }
                if (rem == 0 && !mono.empty() && (rng() % 2 || poly.empty()))
                    poly += (poly.empty() ? "" : "+") + mono;
            }
            if (!poly.empty())
                rels.push_back(poly);
        }
        if (rels.empty())
            continue;
        text += "\nrels: ";
        for (size_t i = 0; i < rels.size(); ++i)
            text += (i ? ", " : "") + rels[i];
        Presentation P;
        try {
            P = pres(text);
        } catch (const Error&) {
            continue; /* e.g. a generated relation reduced to zero */
        }
        INFO(text);
        auto v = ci_check(P, 3, 6);
        CHECK(!v.inconclusive);
        ++tested;
    }
    CHECK(tested >= 10);
}

TEST_CASE("oracle agreement holds on a small corpus")
{
    for (const char* t :
         {"p=2\nvars: x:1\nrels: x^2", "p=2\nvars: x:1, y:1\nrels: x^2, x*y, y^2",
          "p=3\nvars: x:1, y:1\nrels: x^2, y^3", "p=2\nvars: x:1, y:2\nrels: y-x^2",
          "p=2\nvars: x:1, y:1\nrels: x^3+x*y^2", "p=3\nvars: x:1\nrels:"}) {
        auto v = ci_check(pres(t), 4, 8);
        CHECK(!v.inconclusive);
    }
}
