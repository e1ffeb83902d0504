#include "dtwist/floer/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dtwist/errors.hpp"

namespace dtwist::floer {

using surface::Dart;
using surface::dart_of;
using surface::reverse;

namespace {

struct Crossing {
    std::size_t line[2];
    double param[2];
};

double frac(double v) { return v - std::floor(v); }

}  // namespace

TorusOverlay torus_overlay(const std::vector<std::pair<int, int>>& slopes) {
    const std::size_t n = slopes.size();
    bool independent = false;
    for (const auto& [a, b] : slopes) {
        if (std::gcd(std::abs(a), std::abs(b)) != 1) throw CurveError("slope (" + std::to_string(a) + "," + std::to_string(b) + ") is not primitive");
        const auto [c, d] = slopes.front();
        independent = independent || a * d - b * c != 0;
    }
    if (!independent) throw CurveError("torus overlay needs two non-parallel slopes");

    // Offsets along a low-discrepancy sequence keep all crossings double points.
    std::vector<std::pair<double, double>> offset(n);
    for (std::size_t i = 0; i < n; ++i)
        offset[i] = {frac(0.1234 + 0.6180339887 * static_cast<double>(i + 1)), frac(0.3141 + 0.4142135623 * static_cast<double>(i + 1))};

    std::vector<Crossing> crossings;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double a = slopes[i].first, b = slopes[i].second, c = slopes[j].first, d = slopes[j].second;
            const double det = -a * d + b * c;
            if (det == 0) continue;
            const double dx = offset[j].first - offset[i].first, dy = offset[j].second - offset[i].second;
            const int rx = static_cast<int>(std::abs(a) + std::abs(c)) + 2, ry = static_cast<int>(std::abs(b) + std::abs(d)) + 2;
            // t (a,b) - s (c,d) = (dx + kx, dy + ky)
            for (int kx = -rx; kx <= rx; ++kx) {
                for (int ky = -ry; ky <= ry; ++ky) {
                    const double ux = dx + kx, uy = dy + ky;
                    const double t = (-d * ux + c * uy) / det;
                    const double s = (-b * ux + a * uy) / det;
                    if (t >= 0 && t < 1 && s >= 0 && s < 1) crossings.push_back({{i, j}, {t, s}});
                }
            }
        }
    }

    // Edges: consecutive crossings along each line.
    std::vector<std::vector<std::pair<double, std::size_t>>> along(n);
    for (std::size_t v = 0; v < crossings.size(); ++v)
        for (int side = 0; side < 2; ++side) along[crossings[v].line[side]].push_back({crossings[v].param[side], v});
    std::vector<std::string> names;
    std::vector<std::vector<Dart>> line_darts(n);
    // star[v] holds (angle, dart leaving v).
    std::vector<std::vector<std::pair<double, Dart>>> star(crossings.size());
    std::vector<int> head_of;
    for (std::size_t i = 0; i < n; ++i) {
        auto& pts = along[i];
        std::sort(pts.begin(), pts.end());
        const double ang = std::atan2(static_cast<double>(slopes[i].second), static_cast<double>(slopes[i].first));
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const int e = static_cast<int>(names.size());
            names.push_back("l" + std::to_string(i) + "_" + std::to_string(k));
            const std::size_t from = pts[k].second, to = pts[(k + 1) % pts.size()].second;
            line_darts[i].push_back(dart_of(e, false));
            star[from].push_back({ang, dart_of(e, false)});
            star[to].push_back({ang + M_PI, dart_of(e, true)});
        }
    }
    std::vector<int> tail(2 * names.size(), -1), pos(2 * names.size(), -1);
    for (std::size_t v = 0; v < star.size(); ++v) {
        for (auto& [a, d] : star[v]) a = std::remainder(a, 2 * M_PI);
        std::sort(star[v].begin(), star[v].end());
        for (std::size_t k = 0; k < star[v].size(); ++k) {
            tail[static_cast<std::size_t>(star[v][k].second)] = static_cast<int>(v);
            pos[static_cast<std::size_t>(star[v][k].second)] = static_cast<int>(k);
        }
    }
    // Face successor: at the head, reverse and step once clockwise.
    auto next = [&](Dart d) {
        const Dart r = reverse(d);
        const auto& st = star[static_cast<std::size_t>(tail[static_cast<std::size_t>(r)])];
        const std::size_t p = static_cast<std::size_t>(pos[static_cast<std::size_t>(r)]);
        return st[(p + st.size() - 1) % st.size()].second;
    };
    std::vector<char> seen(2 * names.size(), 0);
    std::vector<std::vector<Dart>> faces;
    for (std::size_t d0 = 0; d0 < seen.size(); ++d0) {
        if (seen[d0]) continue;
        std::vector<Dart> f;
        for (Dart d = static_cast<Dart>(d0); !seen[static_cast<std::size_t>(d)]; d = next(d)) {
            seen[static_cast<std::size_t>(d)] = 1;
            f.push_back(d);
        }
        faces.push_back(std::move(f));
    }
    TorusOverlay out;
    out.surface = surface::CombinatorialSurface::build(names, faces);
    if (out.surface.euler() != 0) throw InternalConsistencyError("torus overlay does not have Euler characteristic 0");
    for (std::size_t i = 0; i < n; ++i) {
        surface::CellCurve c{"(" + std::to_string(slopes[i].first) + "," + std::to_string(slopes[i].second) + ")", line_darts[i]};
        surface::validate_curve(out.surface, c);
        out.curves.push_back(std::move(c));
    }
    return out;
}

}  // namespace dtwist::floer
