#include "immcoh/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace immcoh {

void write_text_atomic(const std::string& path, const std::string& content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os)
            throw std::runtime_error("cannot open '" + tmp + "' for writing");
        os << content;
        if (!os.flush())
            throw std::runtime_error("write to '" + tmp + "' failed");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
}

std::string pages_tsv(const ImmersionSSRun& run)
{
    std::ostringstream os;
    os << "r\tp\tq\tdim\n";
    for (const auto& snap : run.history)
        for (const auto& [pq, dim] : snap.dims)
            os << snap.r << '\t' << pq.first << '\t' << pq.second << '\t' << dim << '\n';
    return os.str();
}

std::string chart_svg(const ImmersionSSRun& run)
{
    const auto dots = run.e2().module_generator_counts();

    int max_p = 0, max_q = 0;
    for (const auto& [pq, n] : dots) {
        max_p = std::max(max_p, pq.first);
        max_q = std::max(max_q, pq.second);
    }
    struct Arrow {
        int r, p0, q0, p1, q1;
    };
    std::vector<Arrow> arrows;
    for (const auto& rule : run.rules) {
        for (const auto& [name, image] : rule.images) {
            if (image.is_zero())
                continue;
            for (const auto& bg : run.e2().bigraded_generators()) {
                if (bg.name == name) {
                    arrows.push_back({rule.r, bg.p, bg.q, bg.p + rule.r, bg.q - rule.r + 1});
                    max_p = std::max(max_p, bg.p + rule.r);
                }
            }
        }
    }

    const int cell = 22;
    const int margin = 42;
    const int w = margin + (max_p + 2) * cell + 10;
    const int h = margin + (max_q + 2) * cell + 10;
    auto X = [&](double p) { return margin + (p + 0.5) * cell; };
    auto Y = [&](double q) { return h - margin - (q + 0.5) * cell; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
       << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    os << "  <rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";

    // grid
    os << "  <g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (int p = 0; p <= max_p + 1; ++p)
        os << "    <line x1=\"" << X(p) - cell / 2.0 << "\" y1=\"" << Y(max_q + 1) << "\" x2=\""
           << X(p) - cell / 2.0 << "\" y2=\"" << Y(-0.5) << "\"/>\n";
    for (int q = 0; q <= max_q + 1; ++q)
        os << "    <line x1=\"" << X(-0.5) << "\" y1=\"" << Y(q) + cell / 2.0 << "\" x2=\""
           << X(max_p + 1) << "\" y2=\"" << Y(q) + cell / 2.0 << "\"/>\n";
    os << "  </g>\n";

    // axes with tick labels on the even lines
    os << "  <g font-family=\"sans-serif\" font-size=\"10\" fill=\"#333333\">\n";
    for (int p = 0; p <= max_p; p += 2)
        os << "    <text x=\"" << X(p) << "\" y=\"" << h - margin + 14
           << "\" text-anchor=\"middle\">" << p << "</text>\n";
    for (int q = 0; q <= max_q; q += 2)
        os << "    <text x=\"" << margin - 8 << "\" y=\"" << Y(q) + 3
           << "\" text-anchor=\"end\">" << q << "</text>\n";
    os << "    <text x=\"" << X(max_p / 2) << "\" y=\"" << h - 6
       << "\" text-anchor=\"middle\">p</text>\n";
    os << "    <text x=\"12\" y=\"" << Y(max_q / 2) << "\" text-anchor=\"middle\">q</text>\n";
    os << "  </g>\n";

    // differential arrows, one colour per page
    auto colour = [&](int r) {
        const char* palette[3] = {"#bb3333", "#3355bb", "#338844"};
        int base = 4 * run.n - 2;
        int idx = r - base;
        return (idx >= 0 && idx < 3) ? palette[idx] : "#555555";
    };
    os << "  <g stroke-width=\"1.4\" fill=\"none\">\n";
    for (const auto& a : arrows) {
        const double x0 = X(a.p0), y0 = Y(a.q0), x1 = X(a.p1), y1 = Y(a.q1);
        // shorten so heads do not sit on the dots
        const double t = 0.94;
        const double xs = x0 + (x1 - x0) * (1 - t), ys = y0 + (y1 - y0) * (1 - t);
        const double xe = x0 + (x1 - x0) * t, ye = y0 + (y1 - y0) * t;
        os << "    <line stroke=\"" << colour(a.r) << "\" x1=\"" << xs << "\" y1=\"" << ys
           << "\" x2=\"" << xe << "\" y2=\"" << ye << "\"/>\n";
        // arrowhead
        const double dx = xe - xs, dy = ye - ys;
        const double len = std::max(1.0, std::sqrt(dx * dx + dy * dy));
        const double ux = dx / len, uy = dy / len;
        os << "    <path stroke=\"" << colour(a.r) << "\" fill=\"" << colour(a.r) << "\" d=\"M"
           << xe << ' ' << ye << " L" << xe - 7 * ux + 3 * uy << ' ' << ye - 7 * uy - 3 * ux
           << " L" << xe - 7 * ux - 3 * uy << ' ' << ye - 7 * uy + 3 * ux << " Z\"/>\n";
    }
    os << "  </g>\n";

    // module generator dots
    os << "  <g fill=\"#222222\">\n";
    for (const auto& [pq, count] : dots) {
        double radius = 3.0 + 1.2 * (count - 1);
        if (radius > 8)
            radius = 8;
        os << "    <circle cx=\"" << X(pq.first) << "\" cy=\"" << Y(pq.second) << "\" r=\""
           << radius << "\"/>\n";
        if (count > 1)
            os << "    <text x=\"" << X(pq.first) + 6 << "\" y=\"" << Y(pq.second) - 5
               << "\" font-family=\"sans-serif\" font-size=\"9\">" << count << "</text>\n";
    }
    os << "  </g>\n";
    os << "</svg>\n";
    return os.str();
}

std::string run_json(const ImmersionSSRun& run, bool verified)
{
    std::ostringstream os;
    os << "{\"n\": " << run.n << ", \"T\": " << run.T << ", \"safe_total\": " << run.safe_total
       << ", \"pages\": [";
    for (size_t s = 0; s < run.history.size(); ++s) {
        if (s)
            os << ", ";
        os << "{\"r\": " << run.history[s].r << ", \"entries\": [";
        bool first = true;
        for (const auto& [pq, dim] : run.history[s].dims) {
            if (!first)
                os << ", ";
            first = false;
            os << "{\"p\": " << pq.first << ", \"q\": " << pq.second << ", \"dim\": " << dim
               << ", \"safe\": " << (pq.first + pq.second <= run.safe_total ? "true" : "false")
               << "}";
        }
        os << "]}";
    }
    os << "], \"einf_by_total\": " << to_json(run.einf_by_total)
       << ", \"verified\": " << (verified ? "true" : "false") << "}";
    return os.str();
}

}  // namespace immcoh
