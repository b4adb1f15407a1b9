#pragma once

#include "immcoh/rational.hpp"

#include <vector>

namespace immcoh {

enum class DimClass3 { Dim3, DimAbove3 };
enum class MapKind { Closed, Alpha, Beta, Gamma };
enum class RangeMode { Epi, Iso };

struct RangeQuery {
    DimClass3 dim = DimClass3::DimAbove3;
    long long genus = 0;
    MapKind kind = MapKind::Closed;
    RangeMode mode = RangeMode::Iso;
};

/// Largest degree inside the stable range, or -1 for an empty range.
/// Closed surfaces use the (2g-6)/5 and (2g-3)/3 bounds; the alpha and
/// beta stabilisation maps use their epimorphism bounds with the
/// isomorphism range one degree lower; gamma is an isomorphism exactly in
/// beta's epimorphism range.
long long stable_range(const RangeQuery& q);

struct StabilizerOrder {
    long long k = 1;  // feasible stabiliser order
    long long h = 0;  // genus of the quotient surface witnessing it
};

/// All k >= 1 admitting h >= 0 with k*(2-2h) = 2-2g, i.e. the orders that
/// Euler characteristic arithmetic allows for a free finite group action
/// on a genus-g surface. Every such k divides g-1.
std::vector<StabilizerOrder> stabilizer_orders(long long g);

}  // namespace immcoh
