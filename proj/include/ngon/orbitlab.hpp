#pragma once
// Orbit analysis: IND index sequences, the exact affine composition PIM,
// period detection, and period-doubling centers.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <ngon/isomaps.hpp>

namespace ngon {

enum class Termination { periodic, singular_hit, max_iter_reached };

template <typename T>
struct OrbitRecord {
    Vec2T<T> start{};
    std::vector<int> indices;  // 1-based supporting-vertex labels
    std::vector<int> steps;    // successive index differences mod N
    std::int64_t period = 0;   // 0 when not periodic
    Termination termination = Termination::max_iter_reached;
};

// IND: supporting-vertex index sequence of the tau orbit.  Seeds that land
// on a singular set may be displaced by the conventional surrogate offset
// (0, 1e-6) before iterating.
template <typename T>
OrbitRecord<T> ind(int N, Vec2T<T> p, std::int64_t count,
                   bool surrogate = false) {
    if (surrogate) p.y += T(1) / 1000000;
    OrbitRecord<T> rec;
    rec.start = p;
    auto vs = polygon_vertices<T>(N);
    for (std::int64_t i = 0; i < count; ++i) {
        auto r = tau<T>(N, p, &vs);
        if (r.singular) {
            rec.termination = Termination::singular_hit;
            return rec;
        }
        if (!rec.indices.empty()) {
            int d = (r.vertex_index - rec.indices.back()) % N;
            rec.steps.push_back(d < 0 ? d + N : d);
        }
        rec.indices.push_back(r.vertex_index);
        p = r.point;
    }
    rec.termination = Termination::max_iter_reached;
    return rec;
}

// PIM: exact affine composition of tau along a prescribed index sequence,
// p_{j+1} = 2 c_{ind[j]} - p_j.  Works over any scalar, including exact
// vertex coordinates supplied by the caller.
template <typename T>
Vec2T<T> pim(const std::vector<Vec2T<T>>& vertices,
             const std::vector<int>& indices, Vec2T<T> p) {
    for (int idx : indices) {
        if (idx < 1 || idx > static_cast<int>(vertices.size()))
            throw std::out_of_range("pim: vertex index out of range");
        const auto& c = vertices[static_cast<size_t>(idx - 1)];
        p = {2 * c.x - p.x, 2 * c.y - p.y};
    }
    return p;
}

// Period of the tau orbit of p: first positional return within tol whose
// index history would repeat (checked by requiring the supporting vertex of
// the returned point to match the first step).  Returns period 0 with the
// termination reason on failure.
template <typename T>
OrbitRecord<T> tau_period(int N, const Vec2T<T>& start, std::int64_t max_iter,
                          T tol) {
    OrbitRecord<T> rec;
    rec.start = start;
    auto vs = polygon_vertices<T>(N);
    Vec2T<T> p = start;
    int first_index = 0;
    for (std::int64_t i = 1; i <= max_iter; ++i) {
        auto r = tau<T>(N, p, &vs);
        if (r.singular) {
            rec.termination = Termination::singular_hit;
            return rec;
        }
        if (i == 1) first_index = r.vertex_index;
        p = r.point;
        using std::abs;
        if (abs(p.x - start.x) < tol && abs(p.y - start.y) < tol) {
            // Identical index history on repeat: the next supporting vertex
            // from the returned point must equal the first one.
            auto nxt = tau<T>(N, p, &vs);
            if (!nxt.singular && nxt.vertex_index == first_index) {
                rec.period = i;
                rec.termination = Termination::periodic;
                return rec;
            }
        }
    }
    rec.termination = Termination::max_iter_reached;
    return rec;
}

// Convenience: double-precision bracket followed by high-precision
// confirmation (35 digits, tol 1e-20) for long orbits.
inline std::int64_t tau_period_confirmed(int N, const Vec2Big& start,
                                         std::int64_t max_iter) {
    Vec2T<double> sd{static_cast<double>(start.x), static_cast<double>(start.y)};
    auto bracket = tau_period<double>(N, sd, max_iter, 1e-9);
    if (bracket.period == 0) return 0;
    if (bracket.period < 10000000) {
        auto hi = tau_period<BigFloat>(N, start, bracket.period + 2,
                                       BigFloat("1e-20"));
        return hi.period;
    }
    return bracket.period;
}

// Center of a period-doubling tile: tau^{period/2} acts on the tile as a
// point reflection; the center is the midpoint of p and tau^{period/2}(p),
// verified by applying tau^{period/2} again.
template <typename T>
Vec2T<T> period_doubling_center(int N, const Vec2T<T>& p, std::int64_t period,
                                T tol) {
    if (period % 2 != 0)
        throw std::domain_error("period_doubling_center: odd period");
    auto vs = polygon_vertices<T>(N);
    Vec2T<T> q = p;
    for (std::int64_t i = 0; i < period / 2; ++i) {
        auto r = tau<T>(N, q, &vs);
        if (r.singular)
            throw std::domain_error("period_doubling_center: singular orbit");
        q = r.point;
    }
    Vec2T<T> c{(p.x + q.x) / 2, (p.y + q.y) / 2};
    Vec2T<T> c2 = c;
    for (std::int64_t i = 0; i < period / 2; ++i) {
        auto r = tau<T>(N, c2, &vs);
        if (r.singular)
            throw std::domain_error("period_doubling_center: singular center");
        c2 = r.point;
    }
    using std::abs;
    if (abs(c2.x - c.x) > tol || abs(c2.y - c.y) > tol)
        throw std::domain_error("period_doubling_center: verification failed");
    return c;
}

}  // namespace ngon
