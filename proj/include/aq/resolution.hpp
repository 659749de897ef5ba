#pragma once

#include "aq/homotopy.hpp"
#include "aq/presentation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace aq {

/* An almost-free model of a target, certified in the range (N, W): the
 * comparison map is a weak equivalence through degree N-1 in weights <= W.
 * Engine-built objects (cofibers, spheres) carry no presentation and are
 * their own cofibrant models. */
struct Resolution {
    AlmostFreeAlgebra X;
    std::optional<Presentation> target;
    int N = 0, W = 0;
    GradedDims pi; /* homotopy of X in range */
    GradedDims hq; /* homotopy of QX in range */
};

/* Stage-by-stage factorization F -> X -> A: stage 0 adjoins the variables;
 * stage k+1 adjoins one (k+1)-cell per minimal module generator of the
 * comparison kernel (k = 0) or of pi_k X (k >= 1), with d0 a normalized
 * Moore representative. */
Resolution resolve(const Presentation& P, int N, int W);

/* Wrap an engine-built cofibrant object, computing its invariants. */
Resolution certify_object(AlmostFreeAlgebra X, int N, int W);

/* pi_* QX: degree N is outside the certified range (see GradedDims). */
GradedDims aq_homology(const Resolution& R);

/* base -> total -> cofiber, base being an initial segment of the cells of
 * total and cofiber = total with the base cells deleted. */
struct CofibrationSequenceRecord {
    AlmostFreeAlgebra base, total, cofiber;
    size_t n_base_cells = 0;
    std::string label;
    int N = 0, W = 0;
};

/* Factor a map through an inclusion of generating spaces followed by a
 * weak equivalence: Z contains the base cells plus attached cells, and the
 * per-cell images define Z -> Y inducing isomorphisms on pi_s for
 * s <= N-1 in weights <= W. */
struct RelativeResolution {
    AlmostFreeAlgebra Z;
    size_t n_base_cells = 0;
    std::vector<Poly> images; /* per cell of Z, an element of Y */
};

RelativeResolution resolve_map(const AlmostFreeAlgebra& base, const std::vector<Poly>& base_images,
                               const AlmostFreeAlgebra& Y, int N, int W);

/* Cofiber of the augmentation: base = resolution of A, total contractible,
 * cofiber = the suspension. */
struct SuspensionResult {
    CofibrationSequenceRecord seq;
    Resolution sigma; /* cofibrant model of the suspension */
};
SuspensionResult suspension(const Resolution& R, int N, int W);

/* Map from the sphere on pi_n ~ H^Q_n hitting chosen cycle representatives
 * (requires an (n-1)-connected object for n >= 1; Hurewicz is verified). */
struct SphereMap {
    AlmostFreeAlgebra source;     /* S(H^Q_n, n) */
    std::vector<Poly> images;     /* Moore cycles in the target */
    int n = 0;
    std::vector<int> weights;     /* weights of the sphere cells */
};
SphereMap build_fn(const Resolution& R, int n);

/* One Postnikov envelope step: the cofibration sequence
 * S(H^Q_n, n) -> A(n) -> A(n+1). For n = 0 the target presentation must be
 * minimal and the step deletes the degree-0 cells. */
struct EnvelopeStep {
    CofibrationSequenceRecord seq;
    Resolution next; /* A(n+1), engine-built */
    int n = 0;
};
EnvelopeStep postnikov_envelope(const Resolution& R, int n);

struct SphereVerdict {
    bool concentrated = false;
    int n = -1;
    int dim = 0;
    std::vector<int> weights;
    bool pi_match = false; /* pi dims agree with the model sphere in range */
};
SphereVerdict recognize_sphere(const Resolution& R);

/* Alternating-sum exactness of the transitivity sequence on a recorded
 * cofibration sequence, per weight block (throws on violation). Applies to
 * records whose cells satisfy weight >= degree+1, which closes the window
 * within the certified range. */
struct LesReport {
    std::vector<int> weights_checked;
    bool ok = false;
};
LesReport transitivity_les_check(const CofibrationSequenceRecord& rec);

/* split tensor record B -> B (x) C -> C for tests and the series module */
CofibrationSequenceRecord tensor_record(const AlmostFreeAlgebra& B, const AlmostFreeAlgebra& C,
                                        std::string label);

} // namespace aq
