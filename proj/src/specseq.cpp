#include "immcoh/specseq.hpp"

#include <sstream>
#include <stdexcept>

namespace immcoh {

const std::vector<Monomial>& SpectralPage::monomial_basis(int p, int q) const
{
    static const std::vector<Monomial> empty;
    auto it = basis_.find({p, q});
    return it == basis_.end() ? empty : it->second;
}

int SpectralPage::dim_at(int p, int q) const
{
    return cycle_rank(p, q) - boundary_rank(p, q);
}

int SpectralPage::cycle_rank(int p, int q) const
{
    auto it = entries_.find({p, q});
    return it == entries_.end() ? 0 : it->second.cycles.rank();
}

int SpectralPage::boundary_rank(int p, int q) const
{
    auto it = entries_.find({p, q});
    return it == entries_.end() ? 0 : it->second.boundaries.rank();
}

std::map<PQ, int> SpectralPage::dims() const
{
    std::map<PQ, int> d;
    for (const auto& [pq, e] : entries_) {
        int k = e.cycles.rank() - e.boundaries.rank();
        if (k != 0)
            d[pq] = k;
    }
    return d;
}

GradedDims SpectralPage::dims_by_total() const
{
    GradedDims gd;
    gd.N = safe_;
    for (const auto& [pq, e] : entries_) {
        const int m = pq.first + pq.second;
        if (m > safe_)
            continue;
        int k = e.cycles.rank() - e.boundaries.rank();
        if (k != 0)
            gd.set(m, gd.at(m) + k);
    }
    return gd;
}

PQ SpectralPage::monomial_bidegree(const Monomial& m) const
{
    int p = 0, q = 0;
    for (size_t i = 0; i < m.exps.size(); ++i) {
        p += m.exps[i] * bgens_[i].p;
        q += m.exps[i] * bgens_[i].q;
    }
    return {p, q};
}

Polynomial SpectralPage::differential_of(const Monomial& m) const
{
    Polynomial result;
    if (!rule_)
        return result;
    const GeneratorList& gens = pres_.generators;
    int prefix_degree = 0;
    for (size_t i = 0; i < gens.size(); ++i) {
        const int e = m.exps[i];
        if (e > 0) {
            auto it = rule_->images.find(gens[i].name);
            if (it != rule_->images.end() && !it->second.is_zero()) {
                // m = A * g_i^e * B; the e copies contribute identical terms
                // since e >= 2 forces g_i even.
                std::vector<int> pre(gens.size(), 0), post(gens.size(), 0);
                for (size_t j = 0; j < i; ++j)
                    pre[j] = m.exps[j];
                post[i] = e - 1;
                for (size_t j = i + 1; j < gens.size(); ++j)
                    post[j] = m.exps[j];
                Polynomial term = multiply(poly_of(gens, make_monomial(gens, pre)), it->second, pres_);
                term = multiply(term, poly_of(gens, make_monomial(gens, post)), pres_);
                Rational c(e);
                if (prefix_degree % 2 != 0)
                    c = -c;
                result = result + term.scaled(c);
            }
            prefix_degree += e * gens[i].degree;
        }
    }
    return result;
}

Polynomial SpectralPage::differential_of(const Polynomial& x) const
{
    Polynomial result;
    for (const auto& [m, c] : x.terms)
        result = result + differential_of(m).scaled(c);
    return result;
}

std::map<PQ, int> SpectralPage::module_generator_counts() const
{
    std::map<PQ, int> counts;
    for (const auto& [pq, mons] : basis_) {
        int n = 0;
        for (const auto& m : mons) {
            bool base_free = true;
            for (size_t i = 0; i < m.exps.size(); ++i)
                if (m.exps[i] > 0 && bgens_[i].q == 0)
                    base_free = false;
            if (base_free)
                ++n;
        }
        if (n > 0)
            counts[pq] = n;
    }
    return counts;
}

Vec SpectralPage::poly_to_vec(const Polynomial& x, const PQ& bucket) const
{
    const auto& mons = monomial_basis(bucket.first, bucket.second);
    Vec v(mons.size(), Rational(0));
    for (const auto& [m, c] : x.terms) {
        auto it = position_.find(m);
        if (it == position_.end() || monomial_bidegree(m) != bucket)
            throw std::logic_error("differential image leaves its bidegree bucket");
        v[it->second] = c;
    }
    return v;
}

SpectralPage build_page(std::vector<BigradedGenerator> gens, int r, int T)
{
    if (T < 0)
        throw ValidationError("truncation bound must be >= 0");
    if (r < 2)
        throw ValidationError("page index must be >= 2");
    SpectralPage page;
    page.r_ = r;
    page.T_ = T;
    page.safe_ = T;
    page.bgens_ = std::move(gens);

    GeneratorList glist;
    for (const auto& bg : page.bgens_) {
        if (bg.p < 0 || bg.q < 0)
            throw ValidationError("bigraded generator '" + bg.name + "' outside the first quadrant");
        glist.emplace_back(bg.name, bg.p + bg.q);
    }
    page.pres_ = AlgebraPresentation(glist, {});

    for (int d = 0; d <= T; ++d) {
        for (const auto& m : monomials_of_degree(glist, d)) {
            const PQ pq = page.monomial_bidegree(m);
            auto& bucket = page.basis_[pq];
            page.position_.emplace(m, static_cast<int>(bucket.size()));
            bucket.push_back(m);
        }
    }
    for (const auto& [pq, mons] : page.basis_) {
        SpectralPage::Subquotient sq;
        sq.cycles = RowBasis(static_cast<int>(mons.size()));
        sq.boundaries = RowBasis(static_cast<int>(mons.size()));
        for (size_t i = 0; i < mons.size(); ++i) {
            Vec unit(mons.size(), Rational(0));
            unit[i] = 1;
            sq.cycles.insert(std::move(unit));
        }
        page.entries_.emplace(pq, std::move(sq));
    }
    return page;
}

SpectralPage build_e2_immersion(int n, int T)
{
    if (n < 2)
        throw ValidationError("immersion spectral sequence needs 2n+1 >= 5");
    std::vector<BigradedGenerator> gens;
    for (int i = 1; 2 * i <= T; ++i) {
        std::ostringstream name;
        name << "kappa_" << i;
        gens.push_back({name.str(), 2 * i, 0});
    }
    if (4 * n - 3 <= T)
        gens.push_back({"x_" + std::to_string(4 * n - 3), 0, 4 * n - 3});
    if (4 * n - 1 <= T)
        gens.push_back({"x_" + std::to_string(4 * n - 1), 0, 4 * n - 1});
    for (int k = 0; 4 * n + 1 + 2 * k <= T; ++k)
        gens.push_back({"l_" + std::to_string(4 * n + 1 + 2 * k), 3 + 2 * k, 4 * n - 2});
    return build_page(std::move(gens), 2, T);
}

SpectralPage extend_leibniz(const SpectralPage& page, const DifferentialRule& rule)
{
    if (rule.r != page.page_index())
        throw ValidationError("differential rule page index does not match the page");
    SpectralPage next = page;
    // bidegree compatibility of each generator image
    for (const auto& [name, image] : rule.images) {
        const int gi = next.pres_.generator_index(name);
        const BigradedGenerator& bg = next.bgens_[gi];
        const PQ target{bg.p + rule.r, bg.q - rule.r + 1};
        for (const auto& [m, c] : image.terms) {
            if (next.monomial_bidegree(m) != target)
                throw ValidationError("differential image of '" + name + "' has wrong bidegree");
        }
        if (!image.is_zero() && target.second < 0)
            throw ValidationError("differential image of '" + name + "' leaves the first quadrant");
    }
    next.rule_ = rule;
    // d o d = 0 wherever both steps stay under the truncation bound
    for (const auto& [pq, mons] : next.basis_) {
        if (pq.first + pq.second + 2 > next.T_)
            continue;
        for (const auto& m : mons)
            if (!next.differential_of(next.differential_of(m)).is_zero())
                throw std::logic_error("differential does not square to zero");
    }
    return next;
}

SpectralPage relabel_page(const SpectralPage& page, int new_r)
{
    if (page.has_rule())
        throw ValidationError("cannot relabel a page with an attached differential");
    if (new_r < page.page_index())
        throw ValidationError("page index can only grow");
    SpectralPage next = page;
    next.r_ = new_r;
    return next;
}

SpectralPage turn_page(const SpectralPage& page)
{
    SpectralPage next = page;
    next.r_ = page.page_index() + 1;
    next.safe_ = std::min(page.safe_, page.T_ - page.page_index());
    next.rule_.reset();
    if (!page.has_rule())
        return next;

    const int r = page.page_index();
    for (auto& [pq, sq] : next.entries_) {
        const auto& [p, q] = pq;
        const auto old_it = page.entries_.find(pq);
        const SpectralPage::Subquotient& old = old_it->second;

        // boundaries gain the image of the cycles one differential back
        const PQ src{p - r, q + r - 1};
        auto src_it = page.entries_.find(src);
        if (src_it != page.entries_.end()) {
            for (const auto& z : src_it->second.cycles.rows()) {
                Polynomial zp;
                const auto& src_mons = page.monomial_basis(src.first, src.second);
                for (size_t i = 0; i < z.size(); ++i)
                    if (z[i] != 0)
                        zp.add_term(src_mons[i], z[i]);
                sq.boundaries.insert(page.poly_to_vec(page.differential_of(zp), pq));
            }
        }

        // cycles shrink to the preimage of the old boundaries at the target
        const PQ tgt{p + r, q - r + 1};
        auto tgt_it = page.entries_.find(tgt);
        if (tgt_it != page.entries_.end()) {
            const auto& mons = page.monomial_basis(p, q);
            const auto& tgt_bound = tgt_it->second.boundaries;
            std::vector<Vec> reduced_images;
            const auto& zrows = old.cycles.rows();
            for (const auto& z : zrows) {
                Polynomial zp;
                for (size_t i = 0; i < z.size(); ++i)
                    if (z[i] != 0)
                        zp.add_term(mons[i], z[i]);
                reduced_images.push_back(tgt_bound.reduce(page.poly_to_vec(page.differential_of(zp), tgt)));
            }
            // induced map must be well defined on the subquotient
            for (const auto& b : old.boundaries.rows()) {
                Polynomial bp;
                for (size_t i = 0; i < b.size(); ++i)
                    if (b[i] != 0)
                        bp.add_term(mons[i], b[i]);
                if (!is_zero(tgt_bound.reduce(page.poly_to_vec(page.differential_of(bp), tgt))))
                    throw std::logic_error("differential not defined on the page subquotient");
            }
            RowBasis new_cycles(static_cast<int>(mons.size()));
            const int tgt_dim = static_cast<int>(page.monomial_basis(tgt.first, tgt.second).size());
            for (const auto& comb : kernel_of_rows(reduced_images, tgt_dim)) {
                Vec v(mons.size(), Rational(0));
                for (size_t i = 0; i < comb.size(); ++i)
                    if (comb[i] != 0)
                        for (size_t j = 0; j < v.size(); ++j)
                            v[j] += comb[i] * zrows[i][j];
                new_cycles.insert(std::move(v));
            }
            sq.cycles = std::move(new_cycles);
        }
        // else: the map out of (p,q) is zero (below the axis) or invisible
        // beyond the truncation; cycles stay as they are and any distorted
        // entries lie outside the safe window.

        for (const auto& b : sq.boundaries.rows())
            if (!sq.cycles.contains(b))
                throw std::logic_error("boundary escaped the cycle space");
    }
    return next;
}

ImmersionSSRun run_immersion_ss(int n, int T, const UnitChoices* units)
{
    ImmersionSSRun run;
    run.n = n;
    run.T = T;
    run.pages.push_back(build_e2_immersion(n, T));
    run.safe_total = T - 4 * n;

    auto unit_for = [&](const std::string& name) -> Rational {
        if (units) {
            auto it = units->find(name);
            if (it != units->end()) {
                if (it->second == 0)
                    throw ValidationError("differential units must be nonzero");
                return it->second;
            }
        }
        return Rational(1);
    };
    auto kappa_poly = [&](const SpectralPage& pg, int i, const Rational& c) -> std::optional<Polynomial> {
        const GeneratorList& gens = pg.generator_list();
        std::ostringstream name;
        name << "kappa_" << i;
        for (size_t j = 0; j < gens.size(); ++j)
            if (gens[j].name == name.str())
                return generator_poly(gens, static_cast<int>(j)).scaled(c);
        return std::nullopt;  // target beyond the truncation
    };
    auto add_image = [&](const SpectralPage& pg, DifferentialRule& rule, const std::string& src,
                         int kappa_index) {
        const GeneratorList& gens = pg.generator_list();
        for (const auto& g : gens)
            if (g.name == src)
                if (auto img = kappa_poly(pg, kappa_index, unit_for(src)))
                    rule.images.emplace(src, std::move(*img));
    };

    const std::string x_lo = "x_" + std::to_string(4 * n - 3);
    const std::string x_hi = "x_" + std::to_string(4 * n - 1);

    SpectralPage page = run.pages.front();
    run.history.push_back({2, page.dims()});

    // d_{4n-2}(x_{4n-3}) = kappa_{2n-1}
    {
        DifferentialRule rule;
        rule.r = 4 * n - 2;
        page = relabel_page(page, rule.r);
        add_image(page, rule, x_lo, 2 * n - 1);
        run.rules.push_back(rule);
        page = turn_page(extend_leibniz(page, rule));
        run.history.push_back({page.page_index(), page.dims()});
        run.pages.push_back(page);
    }
    // d_{4n-1}(l_{4n+1+2k}) = kappa_{2n+1+k}
    {
        DifferentialRule rule;
        rule.r = 4 * n - 1;
        for (int k = 0; 4 * n + 1 + 2 * k <= T; ++k)
            add_image(page, rule, "l_" + std::to_string(4 * n + 1 + 2 * k), 2 * n + 1 + k);
        run.rules.push_back(rule);
        page = turn_page(extend_leibniz(page, rule));
        run.history.push_back({page.page_index(), page.dims()});
        run.pages.push_back(page);
    }
    // d_{4n}(x_{4n-1}) = kappa_{2n}
    {
        DifferentialRule rule;
        rule.r = 4 * n;
        add_image(page, rule, x_hi, 2 * n);
        run.rules.push_back(rule);
        page = turn_page(extend_leibniz(page, rule));
        run.history.push_back({page.page_index(), page.dims()});
        run.pages.push_back(page);
    }

    run.einf_by_total = page.dims_by_total();
    run.einf_concentrated_on_base = true;
    for (const auto& [pq, k] : page.dims())
        if (pq.second != 0 && pq.first + pq.second <= page.safe_total() && k != 0)
            run.einf_concentrated_on_base = false;
    return run;
}

}  // namespace immcoh
