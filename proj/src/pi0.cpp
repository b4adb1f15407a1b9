#include "immcoh/pi0.hpp"

#include <sstream>

namespace immcoh {

AbelianGroup::AbelianGroup(int free_rank_, std::vector<long long> factors)
    : free_rank(free_rank_), invariant_factors(std::move(factors))
{
    if (free_rank < 0)
        throw ValidationError("free rank must be >= 0");
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (invariant_factors[i] < 2)
            throw ValidationError("invariant factors must be >= 2");
        if (i > 0 && invariant_factors[i] % invariant_factors[i - 1] != 0)
            throw ValidationError("invariant factors must form a divisibility chain");
    }
}

static long long mod_reduce(long long x, long long m)
{
    long long r = x % m;
    return r < 0 ? r + m : r;
}

AbelianElement zero_element(const AbelianGroup& g)
{
    return AbelianElement{std::vector<long long>(g.generator_count(), 0)};
}

AbelianElement element_of(const AbelianGroup& g, std::vector<long long> coords)
{
    if (static_cast<int>(coords.size()) != g.generator_count())
        throw ValidationError("element coordinate count does not match group");
    for (size_t i = 0; i < g.invariant_factors.size(); ++i) {
        auto& c = coords[g.free_rank + i];
        c = mod_reduce(c, g.invariant_factors[i]);
    }
    return AbelianElement{std::move(coords)};
}

AbelianElement add(const AbelianGroup& g, const AbelianElement& a, const AbelianElement& b)
{
    std::vector<long long> coords(g.generator_count());
    for (int i = 0; i < g.generator_count(); ++i)
        coords[i] = a.coords[i] + b.coords[i];
    return element_of(g, std::move(coords));
}

W2Form W2Form::zero(const AbelianGroup& g)
{
    return W2Form{std::vector<int>(g.generator_count(), 0)};
}

int W2Form::evaluate(const AbelianGroup& g, const AbelianElement& x) const
{
    long long acc = 0;
    for (int i = 0; i < g.generator_count(); ++i)
        acc += values[i] * x.coords[i];
    return static_cast<int>(mod_reduce(acc, 2));
}

void validate_w2(const AbelianGroup& g, const W2Form& w2)
{
    if (static_cast<int>(w2.values.size()) != g.generator_count())
        throw ValidationError("w2 value count does not match group");
    for (int v : w2.values)
        if (v != 0 && v != 1)
            throw ValidationError("w2 values must be 0 or 1");
    for (size_t i = 0; i < g.invariant_factors.size(); ++i)
        if (g.invariant_factors[i] % 2 == 1 && w2.values[g.free_rank + i] != 0)
            throw ValidationError("w2 must vanish on odd-order torsion generators");
}

static std::string group_to_string(const AbelianGroup& g)
{
    if (g.is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank > 0) {
        os << "Z";
        if (g.free_rank > 1)
            os << "^" << g.free_rank;
        first = false;
    }
    for (long long f : g.invariant_factors) {
        if (!first)
            os << " + ";
        os << "Z/" << f;
        first = false;
    }
    return os.str();
}

Pi0Description classify(DimClass dim, const AbelianGroup& h2, const W2Form& w2, int g, int b)
{
    if (g < 0 || b < 0)
        throw ValidationError("genus and boundary count must be >= 0");
    validate_w2(h2, w2);
    if (h2.is_trivial())
        for (int v : w2.values)
            if (v != 0)
                throw ValidationError("w2 must be trivial when H_2 is trivial");

    Pi0Description d;
    d.dim = dim;
    d.h2 = h2;
    d.w2 = w2;
    d.g = g;
    d.b = b;

    const std::string h2s = group_to_string(h2);
    switch (dim) {
        case DimClass::DimAtLeast5:
            d.components = h2.is_trivial() ? "singleton (connected)" : h2s;
            d.mcg_action = "trivial";
            break;
        case DimClass::Dim4: {
            bool w2_zero = true;
            for (int v : w2.values)
                if (v)
                    w2_zero = false;
            if (h2.is_trivial() || w2_zero)
                d.components = h2.is_trivial() ? "2Z" : "2Z x " + h2s;
            else
                d.components = "{(a, f) in Z x (" + h2s + ") : a = <w2, f> mod 2}";
            d.mcg_action = "trivial";
            break;
        }
        case DimClass::Dim3: {
            std::ostringstream os;
            os << "Spin(Sigma_{" << g << "," << b << "}; *) x (" << h2s << ")";
            d.components = os.str();
            d.mcg_action = "usual action on the set of Spin structures";
            if (b == 0 && g >= 1) {
                // Arf labels the two Spin-structure orbits on a closed surface
                if (h2.free_rank == 0) {
                    long long order = 2;
                    for (long long f : h2.invariant_factors)
                        order *= f;
                    d.mcg_orbits = static_cast<int>(order);
                }
            }
            break;
        }
    }
    return d;
}

Pi0Element identity_element(const Pi0Description& desc)
{
    Pi0Element e;
    e.dim = desc.dim;
    e.h2 = zero_element(desc.h2);
    e.euler = 0;
    e.spin = SpinFactor{0, 0, std::nullopt};
    return e;
}

static void check_dim4_parity(const Pi0Description& desc, const Pi0Element& x)
{
    if (mod_reduce(x.euler, 2) != desc.w2.evaluate(desc.h2, x.h2))
        throw ValidationError("dim-4 element violates the w2 parity congruence");
}

Pi0Element glue(const Pi0Description& desc, const Pi0Element& x, const Pi0Element& y)
{
    if (x.dim != desc.dim || y.dim != desc.dim)
        throw ValidationError("cannot glue elements of mixed dimension classes");
    Pi0Element r;
    r.dim = desc.dim;
    r.h2 = add(desc.h2, x.h2, y.h2);
    r.euler = 0;
    r.spin = SpinFactor{0, 0, std::nullopt};
    if (desc.dim == DimClass::Dim4) {
        check_dim4_parity(desc, x);
        check_dim4_parity(desc, y);
        r.euler = x.euler + y.euler;
    }
    return r;
}

std::string to_json(const Pi0Description& desc)
{
    std::ostringstream os;
    os << "{\"dim_class\": \"";
    switch (desc.dim) {
        case DimClass::Dim3: os << "dim3"; break;
        case DimClass::Dim4: os << "dim4"; break;
        case DimClass::DimAtLeast5: os << "dimAtLeast5"; break;
    }
    os << "\", \"components\": \"" << desc.components << "\", \"mcg_action\": \"" << desc.mcg_action
       << "\"";
    if (desc.mcg_orbits)
        os << ", \"mcg_orbits\": " << *desc.mcg_orbits;
    os << ", \"examples\": [";
    // a few small elements, mostly to make reports concrete
    if (desc.dim == DimClass::Dim4) {
        os << "\"(0, 0)\", \"(2, 0)\"";
    }
    else if (desc.dim == DimClass::Dim3) {
        os << "\"(spin token, 0)\"";
        if (desc.b == 0 && desc.g >= 1)
            os << ", \"(Arf=0, 0)\", \"(Arf=1, 0)\"";
    }
    else {
        os << "\"0\"";
    }
    os << "]}";
    return os.str();
}

}  // namespace immcoh
