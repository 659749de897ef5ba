#pragma once

#include "aq/poly.hpp"

#include <string>
#include <vector>

namespace aq {

/* Finitely presented positively-graded augmented F_p-algebra. Relation
 * polynomials are written over the variable indices (generator id = index
 * into vars) and must be weight-homogeneous with zero constant term. */
struct Presentation {
    uint32_t p = 2;
    std::vector<std::pair<std::string, int>> vars; /* name, weight >= 1 */
    std::vector<Poly> rels;

    void validate() const;
    int max_var_weight() const;
    int max_rel_weight() const;
    std::string poly_str(const Poly& q) const;
};

/* Line-oriented input format:
 *   p=<prime>
 *   vars: name:weight, name:weight, ...
 *   rels: poly, poly, ...
 * Statements are separated by newlines or ';'. '#' starts a comment.
 * Polynomials use ^ for powers, * for products, + and - for sums;
 * coefficients are integers reduced mod p. */
Presentation parse_presentation(const std::string& text);

/* Monomials of exactly weight w over the presentation's variables, sorted. */
std::vector<Monomial> var_monomials(const Presentation& P, int w);

/* Weightwise linear-algebra model of A = F_p[vars]/(rels) up to weight W:
 * per weight an echelon basis of the ideal and a chosen complement of
 * monomials representing A. */
class GradedQuotient {
public:
    GradedQuotient(const Presentation& P, int W);

    int W() const { return W_; }
    int dim(int w) const { return static_cast<int>(basis_[w].size()); }
    const std::vector<Monomial>& monomials(int w) const { return monos_[w]; }
    const std::vector<size_t>& basis_monomials(int w) const { return basis_[w]; }

    /* ideal membership / normal form in the chosen complement coordinates */
    std::vector<uint32_t> reduce_coords(const Poly& x, int w) const;
    bool in_ideal(const Poly& x, int w) const;

private:
    const Presentation P_;
    int W_;
    Fp fp_;
    std::vector<std::vector<Monomial>> monos_;          /* [w] */
    std::vector<std::vector<std::vector<uint32_t>>> echelon_; /* ideal rows per weight */
    std::vector<std::vector<size_t>> leads_;
    std::vector<std::vector<size_t>> basis_;            /* complement monomial indices */
};

} // namespace aq
