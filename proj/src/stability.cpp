#include "immcoh/stability.hpp"

namespace immcoh {

static long long clamp_range(long long bound)
{
    return bound < 0 ? -1 : bound;
}

long long stable_range(const RangeQuery& q)
{
    if (q.genus < 0)
        throw ValidationError("genus must be >= 0");
    const long long g = q.genus;
    const bool dim3 = q.dim == DimClass3::Dim3;

    long long epi = -1;
    switch (q.kind) {
        case MapKind::Closed:
            // one range only: the map to the infinite loop space
            return clamp_range(dim3 ? floor_div(2 * g - 6, 5) : floor_div(2 * g - 3, 3));
        case MapKind::Alpha:
            epi = dim3 ? floor_div(2 * g - 1, 5) : floor_div(2 * g, 3);
            break;
        case MapKind::Beta:
        case MapKind::Gamma:
            epi = dim3 ? floor_div(2 * g - 2, 5) : floor_div(2 * g - 1, 3);
            break;
    }
    if (q.kind == MapKind::Gamma)
        return clamp_range(epi);  // iso in the same range beta is epi
    return clamp_range(q.mode == RangeMode::Epi ? epi : epi - 1);
}

std::vector<StabilizerOrder> stabilizer_orders(long long g)
{
    if (g < 2)
        throw ValidationError("stabiliser arithmetic needs g >= 2");
    // k*(2-2h) = 2-2g with h >= 0. For g >= 2 both sides are negative,
    // which forces h >= 2 and k*(h-1) = g-1.
    std::vector<StabilizerOrder> out;
    for (long long k = 1; k <= 2 * g - 2; ++k) {
        for (long long h = 0; 2 * h - 2 <= 2 * g - 2; ++h) {
            if (k * (2 - 2 * h) == 2 - 2 * g) {
                out.push_back({k, h});
                break;
            }
        }
    }
    return out;
}

}  // namespace immcoh
