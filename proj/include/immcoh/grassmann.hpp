#pragma once

#include "immcoh/algebra.hpp"

#include <optional>

namespace immcoh {

/// Cohomology model of the oriented 2-plane Grassmannian of R^d. For
/// d >= 5 the ring presentation is stored; d = 3 and d = 4 are S^2 and
/// S^2 x S^2 and carry Betti tables only.
struct GrassmannianModel {
    int d = 0;
    int manifold_dim = 0;  // 2(d-2)
    std::optional<AlgebraPresentation> presentation;
};

GrassmannianModel grassmannian_model(int d);

/// Betti table of Gr_2^+(R^d) up to degree min(N, 2(d-2)).
GradedDims grassmannian_betti(int d, int order);

/// Degree shift by the rank -2 Thom class: degree -> degree - shift.
/// Negative degrees are kept in the table for reporting.
GradedDims thom_shift(const GradedDims& v, int shift = 2);

/// Free graded-commutative presentation of the stable cohomology of the
/// immersion moduli for target R^d, with canonical kappa/Delta names.
struct StableAlgebra {
    int d = 0;
    GeneratorList generators;
    TruncatedSeries hilbert;
};

StableAlgebra stable_cohomology(int d, int order);

std::string to_json(const StableAlgebra& a);

/// Hilbert series of Lambda[x_{4n-3}, x_{4n-1}] tensor Sym of a 2g-dim
/// space in degree 4n-2: coefficients of
/// (1+t^{4n-3}) (1+t^{4n-1}) (1-t^{4n-2})^{-2g}.
GradedDims imm_cohomology_hilbert(int g, int n, int order);

}  // namespace immcoh
