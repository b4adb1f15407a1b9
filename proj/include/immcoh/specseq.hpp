#pragma once

#include "immcoh/algebra.hpp"
#include "immcoh/linalg.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace immcoh {

struct BigradedGenerator {
    std::string name;
    int p = 0;
    int q = 0;

    int total() const { return p + q; }
};

/// Page-r differential given on generators; extended to monomials by the
/// Leibniz rule. Generators not listed have zero differential.
struct DifferentialRule {
    int r = 2;
    std::map<std::string, Polynomial> images;
};

using PQ = std::pair<int, int>;

/// One page of a multiplicative first-quadrant spectral sequence, truncated
/// at total degree T.
///
/// Every page is stored as a subquotient of the fixed E2 monomial basis:
/// per bidegree a space of surviving cycles Z and a subspace of boundaries
/// B, with dim E_r^{p,q} = dim Z - dim B. A differential rule attached at
/// page r acts through its Leibniz extension on monomials; this induces a
/// well-defined map on the subquotients because consecutive rules
/// anticommute (checked at turn time). Entries with p + q above the safe
/// window may be distorted by the truncation and are flagged, never
/// silently reported.
class SpectralPage {
public:
    int page_index() const { return r_; }
    int truncation() const { return T_; }
    int safe_total() const { return safe_; }

    const std::vector<BigradedGenerator>& bigraded_generators() const { return bgens_; }
    const GeneratorList& generator_list() const { return pres_.generators; }
    const AlgebraPresentation& presentation() const { return pres_; }

    const std::vector<Monomial>& monomial_basis(int p, int q) const;
    bool has_bucket(int p, int q) const { return basis_.count({p, q}) > 0; }

    int dim_at(int p, int q) const;
    int cycle_rank(int p, int q) const;
    int boundary_rank(int p, int q) const;
    std::map<PQ, int> dims() const;

    /// Dimensions by total degree p+q, restricted to the safe window.
    GradedDims dims_by_total() const;

    bool inside_safe_window(int p, int q) const { return p + q <= safe_; }

    bool has_rule() const { return rule_.has_value(); }
    const DifferentialRule& rule() const { return *rule_; }

    /// Leibniz extension of the attached rule on one monomial.
    Polynomial differential_of(const Monomial& m) const;
    Polynomial differential_of(const Polynomial& x) const;

    /// Count, per bidegree, of basis monomials free of base-row generators
    /// (those with q = 0). These are the free-module generators over the
    /// base polynomial algebra that chart dots represent.
    std::map<PQ, int> module_generator_counts() const;

    friend SpectralPage build_page(std::vector<BigradedGenerator> gens, int r, int T);
    friend SpectralPage extend_leibniz(const SpectralPage& page, const DifferentialRule& rule);
    friend SpectralPage turn_page(const SpectralPage& page);
    friend SpectralPage relabel_page(const SpectralPage& page, int new_r);

private:
    Vec poly_to_vec(const Polynomial& x, const PQ& bucket) const;
    PQ monomial_bidegree(const Monomial& m) const;

    int r_ = 2;
    int T_ = 0;
    int safe_ = 0;
    std::vector<BigradedGenerator> bgens_;
    AlgebraPresentation pres_;  // relation-free; carries degrees and parities
    std::map<PQ, std::vector<Monomial>> basis_;
    std::map<Monomial, int> position_;  // position within its bucket

    struct Subquotient {
        RowBasis cycles;
        RowBasis boundaries;
    };
    std::map<PQ, Subquotient> entries_;
    std::optional<DifferentialRule> rule_;
};

/// Free bigraded graded-commutative algebra on gens, all monomials of total
/// degree <= T, as a starting page with index r and no differential.
SpectralPage build_page(std::vector<BigradedGenerator> gens, int r, int T);

/// E2 page of the immersion-space spectral sequence over R^{2n+1}:
/// polynomial classes kappa_i at (2i, 0), exterior classes x_{4n-3} at
/// (0, 4n-3) and x_{4n-1} at (0, 4n-1), and l_{4n+1+2k} at (3+2k, 4n-2).
SpectralPage build_e2_immersion(int n, int T);

/// Attaches rule to a copy of page, validating bidegrees and d∘d = 0 on
/// every basis monomial inside the truncation window.
SpectralPage extend_leibniz(const SpectralPage& page, const DifferentialRule& rule);

/// Homology of (E_r, d_r) by exact rational linear algebra. With no rule
/// attached the differential is zero and dimensions are unchanged.
SpectralPage turn_page(const SpectralPage& page);

/// Skips pages whose differential vanishes: same data, larger page index.
SpectralPage relabel_page(const SpectralPage& page, int new_r);

struct PageSnapshot {
    int r = 0;
    std::map<PQ, int> dims;
};

/// Unit coefficients for the three differential families, keyed by source
/// generator name. Absent names default to 1.
using UnitChoices = std::map<std::string, Rational>;

struct ImmersionSSRun {
    int n = 0;
    int T = 0;
    int safe_total = 0;
    std::vector<PageSnapshot> history;   // dims of E_2, E_{4n-1}, E_{4n}, E_{4n+1}
    std::vector<DifferentialRule> rules; // the three applied families
    std::vector<SpectralPage> pages;     // the same pages in full
    GradedDims einf_by_total;            // safe window only
    bool einf_concentrated_on_base = false;  // q = 0 within safe window

    const SpectralPage& e2() const { return pages.front(); }
    const SpectralPage& einf() const { return pages.back(); }
};

/// Runs the immersion spectral sequence: d_{4n-2}(x_{4n-3}) = kappa_{2n-1},
/// d_{4n-1}(l_{4n+1+2k}) = kappa_{2n+1+k}, d_{4n}(x_{4n-1}) = kappa_{2n},
/// all other differentials zero, unit coefficients +1 unless overridden.
ImmersionSSRun run_immersion_ss(int n, int T, const UnitChoices* units = nullptr);

}  // namespace immcoh
