#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "immcoh/chart.hpp"
#include "immcoh/grassmann.hpp"
#include "immcoh/pi0.hpp"
#include "immcoh/qseries.hpp"
#include "immcoh/specseq.hpp"
#include "immcoh/stability.hpp"
#include "immcoh/verify.hpp"

using namespace immcoh;

namespace {

// Relative output paths resolve against IMMCOH_OUTDIR when it is set.
std::string out_path(const std::string& p)
{
    if (p.empty() || std::filesystem::path(p).is_absolute())
        return p;
    const char* base = std::getenv("IMMCOH_OUTDIR");
    if (!base || !*base)
        return p;
    return (std::filesystem::path(base) / p).string();
}

void emit(const std::string& text, const std::string& file)
{
    if (file.empty()) {
        std::cout << text << '\n';
    }
    else {
        const std::string full = out_path(file);
        write_text_atomic(full, text + "\n");
        std::cout << "wrote " << full << '\n';
    }
}

int cmd_stable_cohomology(int d, int max_degree, bool json, const std::string& file)
{
    StableAlgebra alg = stable_cohomology(d, max_degree);
    if (json) {
        emit(to_json(alg), file);
        return 0;
    }
    std::ostringstream os;
    os << "stable rational cohomology for target R^" << d << "\n";
    os << "  spectrum classes (Thom-shifted Betti table):";
    GradedDims shifted = thom_shift(grassmannian_betti(d, 2 * (d - 2)));
    for (const auto& [deg, k] : shifted.dims)
        os << ' ' << deg << ":" << k;
    os << '\n';
    if (alg.generators.empty()) {
        os << "  trivial algebra (Q in degree 0)\n";
    }
    else {
        os << "  free graded-commutative on:";
        for (const auto& g : alg.generators)
            os << ' ' << g.name << "(deg " << g.degree << ")";
        os << '\n';
    }
    os << "  Hilbert coefficients, degrees 0.." << alg.hilbert.order << ":";
    for (int k = 0; k <= alg.hilbert.order; ++k)
        os << ' ' << alg.hilbert.at(k);
    emit(os.str(), file);
    return 0;
}

int cmd_specseq(int n, int T, long long genus, const std::string& svg, const std::string& tsv,
                const std::string& json)
{
    ImmersionSSRun run = run_immersion_ss(n, T);

    // compare E_inf against the infinite-loop-space answer on the safe window
    bool verified = run.einf_concentrated_on_base;
    const StableAlgebra target = stable_cohomology(2 * n + 1, std::max(run.safe_total, 0));
    for (int m = 0; m <= run.safe_total && verified; ++m)
        if (Rational(run.einf_by_total.at(m)) != target.hilbert.at(m))
            verified = false;

    if (!svg.empty())
        write_text_atomic(out_path(svg), chart_svg(run));
    if (!tsv.empty())
        write_text_atomic(out_path(tsv), pages_tsv(run));
    if (!json.empty())
        write_text_atomic(out_path(json), run_json(run, verified));

    std::cout << "immersion spectral sequence, target R^" << 2 * n + 1 << ", truncation " << T
              << ", safe window total degree <= " << run.safe_total << '\n';
    for (const auto& snap : run.history) {
        long total = 0;
        for (const auto& [pq, dim] : snap.dims)
            if (pq.first + pq.second <= run.safe_total)
                total += dim;
        std::cout << "  E_" << snap.r << ": " << total << " classes in the safe window\n";
    }
    std::cout << "  E_inf vs Q[kappa_1..kappa_" << 2 * n - 2 << "]: "
              << (verified ? "verified" : "MISMATCH") << '\n';
    if (genus >= 0) {
        const long long bound =
            stable_range({DimClass3::DimAbove3, genus, MapKind::Closed, RangeMode::Iso});
        std::cout << "  genus " << genus << ": degrees <= " << bound
                  << " of the answer are inside the stable range\n";
    }
    return verified ? 0 : 1;
}

int cmd_qseries(int nq, int nx, bool perturb, bool json, const std::string& file)
{
    IdentityReport rep = footnote_identity_check(nq, nx);
    if (perturb) {
        // negative control: flip one coefficient and require detection
        BiSeries bad = pochhammer_product(nq, nx);
        const int i = std::min(1, nq), j = std::min(1, nx);
        bad.set(i, j, bad.at(i, j) + 1);
        rep.identity = "q-pochhammer (perturbed self-test)";
        rep.first_mismatch = BiSeries::first_mismatch(pochhammer_sum(nq, nx), bad);
        rep.holds = !rep.first_mismatch.has_value();
    }
    if (json) {
        emit(rep.to_json(), file);
    }
    else {
        std::ostringstream os;
        os << rep.identity << " at orders (" << nq << ", " << nx << "): "
           << (rep.holds ? "holds" : "FAILS");
        if (rep.first_mismatch)
            os << " first mismatch at q^" << rep.first_mismatch->first << " x^"
               << rep.first_mismatch->second;
        emit(os.str(), file);
    }
    return rep.holds ? 0 : 1;
}

int cmd_looijenga(int nt, int nu, bool json, const std::string& file)
{
    IdentityReport rep = looijenga_rank_check(nt, nu);
    if (json) {
        emit(rep.to_json(), file);
    }
    else {
        std::ostringstream os;
        os << rep.identity << " at orders (" << nt << ", " << nu << "): "
           << (rep.holds ? "holds" : "FAILS");
        if (rep.first_mismatch)
            os << " first mismatch at t^" << rep.first_mismatch->first << " u^"
               << rep.first_mismatch->second;
        emit(os.str(), file);
    }
    return rep.holds ? 0 : 1;
}

int cmd_ranges(int dim, long long genus, const std::string& map, const std::string& mode, bool json,
               const std::string& file)
{
    if (dim < 3)
        throw ValidationError("--dim must be at least 3");
    RangeQuery q;
    q.dim = dim == 3 ? DimClass3::Dim3 : DimClass3::DimAbove3;
    q.genus = genus;
    if (map == "closed")
        q.kind = MapKind::Closed;
    else if (map == "alpha")
        q.kind = MapKind::Alpha;
    else if (map == "beta")
        q.kind = MapKind::Beta;
    else if (map == "gamma")
        q.kind = MapKind::Gamma;
    else
        throw ValidationError("unknown map kind '" + map + "'");
    q.mode = mode == "epi" ? RangeMode::Epi : RangeMode::Iso;

    const long long bound = stable_range(q);
    if (json) {
        emit("{\"bound\": " + std::to_string(bound) + "}", file);
    }
    else {
        std::ostringstream os;
        os << map << " map, genus " << genus << ", dim" << (dim == 3 ? " = 3" : " > 3") << ", "
           << mode << ": ";
        if (bound < 0)
            os << "empty range";
        else
            os << "degrees * <= " << bound;
        emit(os.str(), file);
    }
    return 0;
}

int cmd_stabilizers(long long genus, bool json, const std::string& file)
{
    auto orders = stabilizer_orders(genus);
    if (json) {
        std::ostringstream os;
        os << "{\"orders\": [";
        for (size_t i = 0; i < orders.size(); ++i) {
            if (i)
                os << ", ";
            os << "{\"k\": " << orders[i].k << ", \"h\": " << orders[i].h << "}";
        }
        os << "]}";
        emit(os.str(), file);
    }
    else {
        std::ostringstream os;
        os << "feasible stabiliser orders for genus " << genus << " (all divide g-1 = "
           << genus - 1 << "):";
        for (const auto& o : orders)
            os << "\n  order " << o.k << "  (quotient surface genus " << o.h << ")";
        emit(os.str(), file);
    }
    return 0;
}

AbelianGroup parse_group(const std::string& spec, W2Form& w2, const std::string& w2bits)
{
    int free_rank = 0;
    std::vector<long long> factors;
    std::string s;
    for (char ch : spec)
        if (!isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (!(s.empty() || s == "trivial" || s == "0")) {
        std::stringstream ss(s);
        std::string term;
        while (std::getline(ss, term, '+')) {
            if (term == "Z") {
                free_rank += 1;
            }
            else if (term.rfind("Z^", 0) == 0) {
                free_rank += std::stoi(term.substr(2));
            }
            else if (term.rfind("Z/", 0) == 0) {
                factors.push_back(std::stoll(term.substr(2)));
            }
            else {
                throw ValidationError("cannot parse group term '" + term + "'");
            }
        }
    }
    AbelianGroup g(free_rank, std::move(factors));
    if (w2bits.empty()) {
        w2 = W2Form::zero(g);
    }
    else {
        if (static_cast<int>(w2bits.size()) != g.generator_count())
            throw ValidationError("--w2 needs one bit per generator");
        w2.values.clear();
        for (char ch : w2bits) {
            if (ch != '0' && ch != '1')
                throw ValidationError("--w2 must be a string of 0s and 1s");
            w2.values.push_back(ch - '0');
        }
    }
    return g;
}

int cmd_pi0(int dim, const std::string& h2spec, const std::string& w2bits, int genus, int boundaries,
            bool json, const std::string& file)
{
    if (dim < 3)
        throw ValidationError("--dim must be at least 3");
    DimClass dc = dim == 3 ? DimClass::Dim3 : (dim == 4 ? DimClass::Dim4 : DimClass::DimAtLeast5);
    W2Form w2;
    AbelianGroup h2 = parse_group(h2spec, w2, w2bits);
    Pi0Description desc = classify(dc, h2, w2, genus, boundaries);
    if (json) {
        emit(to_json(desc), file);
    }
    else {
        std::ostringstream os;
        os << "pi_0 for a simply-connected target of dimension "
           << (dc == DimClass::DimAtLeast5 ? ">= 5" : std::to_string(dim)) << ":\n";
        os << "  components: " << desc.components << '\n';
        os << "  mapping class group action: " << desc.mcg_action;
        if (desc.mcg_orbits)
            os << "\n  orbits: " << *desc.mcg_orbits << " (labeled by Arf invariant and homology class)";
        emit(os.str(), file);
    }
    return 0;
}

int cmd_imm(int genus, int n, int max_degree, bool json, const std::string& file)
{
    GradedDims gd = imm_cohomology_hilbert(genus, n, max_degree);
    if (json) {
        emit(to_json(gd), file);
    }
    else {
        std::ostringstream os;
        os << "H^*(Imm(Sigma_" << genus << ", R^" << 2 * n + 1 << "); Q) dimensions, degrees 0.."
           << max_degree << ":";
        for (int k = 0; k <= max_degree; ++k)
            os << ' ' << gd.at(k);
        emit(os.str(), file);
    }
    return 0;
}

int cmd_verify_all(const std::string& out_dir, bool inject_failure)
{
    VerifyOptions opts;
    opts.out_dir = out_path(out_dir);
    opts.inject_failure = inject_failure;
    if (!opts.out_dir.empty())
        std::filesystem::create_directories(opts.out_dir);
    auto results = run_acceptance_checks(opts);
    int passed = 0;
    for (const auto& r : results) {
        std::cout << "  [" << (r.passed ? " ok " : "FAIL") << "] " << r.name;
        if (!r.passed && !r.detail.empty())
            std::cout << "  -- " << r.detail;
        std::cout << '\n';
        if (r.passed)
            ++passed;
    }
    std::cout << passed << "/" << results.size() << " checks passed\n";
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact calculators for spaces of immersed genus-g surfaces: stable cohomology, "
                 "spectral sequence charts, pi_0 classifications, stable ranges and the "
                 "generating-function identities behind them"};
    app.require_subcommand(1);

    // stable-cohomology
    int sc_dim = 0, sc_N = 20;
    bool sc_json = false;
    std::string sc_file;
    auto* sc = app.add_subcommand("stable-cohomology",
                                  "stable cohomology algebra of the immersion moduli for R^d");
    sc->add_option("--dim", sc_dim, "ambient dimension d >= 3")->required();
    sc->add_option("--max-degree", sc_N, "Hilbert series truncation")->capture_default_str();
    sc->add_flag("--json", sc_json, "emit JSON");
    sc->add_option("-o,--output", sc_file, "write to file instead of stdout");

    // specseq
    int ss_n = 0, ss_T = 30;
    long long ss_genus = -1;
    std::string ss_svg, ss_tsv, ss_json;
    auto* ss = app.add_subcommand("specseq", "run the immersion spectral sequence for R^{2n+1} "
                                             "and verify its limit");
    ss->add_option("--n", ss_n, "half-dimension parameter; target is R^{2n+1}")->required();
    ss->add_option("--max-total", ss_T, "total-degree truncation")->capture_default_str();
    ss->add_option("--genus", ss_genus, "report the stable range for this genus");
    ss->add_option("--svg", ss_svg, "write the chart as SVG");
    ss->add_option("--tsv", ss_tsv, "write page dimensions as TSV (r, p, q, dim)");
    ss->add_option("--json", ss_json, "write the page dump as JSON");

    // qseries
    int qs_q = 50, qs_x = 20;
    bool qs_perturb = false, qs_json = false;
    std::string qs_file;
    auto* qs = app.add_subcommand("qseries", "verify the q-Pochhammer series identity");
    qs->add_option("--order-q", qs_q, "q truncation order")->capture_default_str();
    qs->add_option("--order-x", qs_x, "x truncation order")->capture_default_str();
    qs->add_flag("--perturb", qs_perturb, "negative control: perturb one coefficient");
    qs->add_flag("--json", qs_json, "emit JSON");
    qs->add_option("-o,--output", qs_file, "write to file instead of stdout");

    // looijenga
    int lj_t = 40, lj_u = 10;
    bool lj_json = false;
    std::string lj_file;
    auto* lj = app.add_subcommand("looijenga", "verify the free-module rank bookkeeping identity");
    lj->add_option("--order-t", lj_t, "t truncation order")->capture_default_str();
    lj->add_option("--order-u", lj_u, "u truncation order")->capture_default_str();
    lj->add_flag("--json", lj_json, "emit JSON");
    lj->add_option("-o,--output", lj_file, "write to file instead of stdout");

    // ranges
    int rg_dim = 0;
    long long rg_genus = 0;
    std::string rg_map = "closed", rg_mode = "iso", rg_file;
    bool rg_json = false;
    auto* rg = app.add_subcommand("ranges", "stable range calculators");
    rg->add_option("--dim", rg_dim, "ambient dimension (3, or anything larger)")->required();
    rg->add_option("--genus", rg_genus, "genus g >= 0")->required();
    rg->add_option("--map", rg_map, "closed | alpha | beta | gamma")->capture_default_str();
    rg->add_option("--mode", rg_mode, "epi | iso")
        ->capture_default_str()
        ->check(CLI::IsMember({"epi", "iso"}));
    rg->add_flag("--json", rg_json, "emit JSON");
    rg->add_option("-o,--output", rg_file, "write to file instead of stdout");

    // stabilizers
    long long st_genus = 0;
    bool st_json = false;
    std::string st_file;
    auto* st = app.add_subcommand("stabilizers", "Euler-characteristic-feasible stabiliser orders");
    st->add_option("--genus", st_genus, "genus g >= 2")->required();
    st->add_flag("--json", st_json, "emit JSON");
    st->add_option("-o,--output", st_file, "write to file instead of stdout");

    // pi0
    int p0_dim = 0, p0_genus = 0, p0_bdry = 0;
    std::string p0_h2 = "trivial", p0_w2, p0_file;
    bool p0_json = false;
    auto* p0 = app.add_subcommand("pi0", "symbolic pi_0 of the immersion moduli");
    p0->add_option("--dim", p0_dim, "target dimension (3, 4, or >= 5)")->required();
    p0->add_option("--h2", p0_h2, "H_2 of the target, e.g. 'trivial', 'Z', 'Z^2+Z/4'")->capture_default_str();
    p0->add_option("--w2", p0_w2, "w_2 values on the generators, e.g. '101'");
    p0->add_option("--genus", p0_genus, "surface genus")->capture_default_str();
    p0->add_option("--boundaries", p0_bdry, "boundary components")->capture_default_str();
    p0->add_flag("--json", p0_json, "emit JSON");
    p0->add_option("-o,--output", p0_file, "write to file instead of stdout");

    // imm
    int im_genus = 0, im_n = 2, im_N = 20;
    bool im_json = false;
    std::string im_file;
    auto* im = app.add_subcommand("imm", "cohomology dimensions of the parametrised immersion space");
    im->add_option("--genus", im_genus, "surface genus")->required();
    im->add_option("--n", im_n, "target is R^{2n+1}")->capture_default_str();
    im->add_option("--max-degree", im_N, "truncation degree")->capture_default_str();
    im->add_flag("--json", im_json, "emit JSON");
    im->add_option("-o,--output", im_file, "write to file instead of stdout");

    // verify-all
    std::string va_out;
    bool va_inject = false;
    auto* va = app.add_subcommand("verify-all", "run the whole verification suite");
    va->add_option("--out", va_out, "directory for chart artifacts");
    va->add_flag("--inject-failure", va_inject, "self test of the exit-code contract");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sc->parsed())
            return cmd_stable_cohomology(sc_dim, sc_N, sc_json, sc_file);
        if (ss->parsed())
            return cmd_specseq(ss_n, ss_T, ss_genus, ss_svg, ss_tsv, ss_json);
        if (qs->parsed())
            return cmd_qseries(qs_q, qs_x, qs_perturb, qs_json, qs_file);
        if (lj->parsed())
            return cmd_looijenga(lj_t, lj_u, lj_json, lj_file);
        if (rg->parsed())
            return cmd_ranges(rg_dim, rg_genus, rg_map, rg_mode, rg_json, rg_file);
        if (st->parsed())
            return cmd_stabilizers(st_genus, st_json, st_file);
        if (p0->parsed())
            return cmd_pi0(p0_dim, p0_h2, p0_w2, p0_genus, p0_bdry, p0_json, p0_file);
        if (im->parsed())
            return cmd_imm(im_genus, im_n, im_N, im_json, im_file);
        if (va->parsed())
            return cmd_verify_all(va_out, va_inject);
    }
    catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
