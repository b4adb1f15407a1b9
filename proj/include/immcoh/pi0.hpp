#pragma once

#include "immcoh/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace immcoh {

enum class DimClass { Dim3, Dim4, DimAtLeast5 };

/// Finitely generated abelian group in Smith normal coordinates: a free
/// part and a divisibility-chained list of invariant factors.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<long long> invariant_factors;  // each >= 2, each dividing the next

    AbelianGroup() = default;
    AbelianGroup(int free_rank_, std::vector<long long> factors);

    int generator_count() const { return free_rank + static_cast<int>(invariant_factors.size()); }
    bool is_trivial() const { return generator_count() == 0; }
};

/// Group element: one integer per generator, torsion coordinates reduced
/// into [0, factor).
struct AbelianElement {
    std::vector<long long> coords;
};

AbelianElement zero_element(const AbelianGroup& g);
AbelianElement element_of(const AbelianGroup& g, std::vector<long long> coords);
AbelianElement add(const AbelianGroup& g, const AbelianElement& a, const AbelianElement& b);

/// Homomorphism to Z/2 by its value on each generator. A generator of odd
/// torsion order can only map to 0.
struct W2Form {
    std::vector<int> values;  // 0 or 1 per generator

    static W2Form zero(const AbelianGroup& g);
    int evaluate(const AbelianGroup& g, const AbelianElement& x) const;
};

void validate_w2(const AbelianGroup& g, const W2Form& w2);

/// Spin-structure factor of a dim-3 component set. Kept symbolic: a torsor
/// token in general, an Arf class in Z/2 for closed surfaces of genus >= 1
/// where Arf labels the mapping class group orbits.
struct SpinFactor {
    int g = 0;
    int b = 0;
    std::optional<int> arf;  // only for g >= 1, b = 0
};

struct Pi0Element {
    DimClass dim = DimClass::DimAtLeast5;
    AbelianElement h2;
    long long euler = 0;  // dim 4 only
    SpinFactor spin;      // dim 3 only
};

/// Symbolic description of pi_0 of the immersion moduli space for one
/// dimension class, with the mapping class group action recorded.
struct Pi0Description {
    DimClass dim = DimClass::DimAtLeast5;
    AbelianGroup h2;
    W2Form w2;
    int g = 0;
    int b = 0;
    std::string components;      // rendered product description
    std::string mcg_action;      // "trivial" or the Spin-structure action
    std::optional<int> mcg_orbits;  // closed dim-3 count, when defined
};

Pi0Description classify(DimClass dim, const AbelianGroup& h2, const W2Form& w2, int g, int b);

/// Componentwise gluing: homology classes add, dim-4 Euler numbers add,
/// dim-3 Spin factors combine as an opaque union token.
Pi0Element glue(const Pi0Description& desc, const Pi0Element& x, const Pi0Element& y);

Pi0Element identity_element(const Pi0Description& desc);

std::string to_json(const Pi0Description& desc);

}  // namespace immcoh
