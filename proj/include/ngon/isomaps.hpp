#pragma once
// The four iso-maps: outer billiards tau (and inverse), dual-center map Dc,
// digital-filter map Df (with rectification), and the web-coordinate map tw.
//
// All maps are templated on the scalar type; `double` is intended for
// rendering only, `BigFloat` (35 significant digits by default) for orbit
// analysis.  Boundary inputs are reported as Singular rather than resolved
// by an arbitrary tie-break.

#include <cmath>
#include <optional>
#include <variant>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include <ngon/exactfield.hpp>
#include <ngon/geometry.hpp>

namespace ngon {

template <typename T>
struct Vec2T {
    T x{}, y{};
};
using Vec2Big = Vec2T<BigFloat>;

enum class SingularKind { on_polygon, on_trailing_edge, on_axis };

template <typename T>
struct StepResult {
    bool singular = false;
    SingularKind kind = SingularKind::on_polygon;
    Vec2T<T> point{};     // mapped point (valid when !singular; for on_axis
                          // the map proceeds and point is also valid)
    int vertex_index = 0; // 1-based supporting-vertex label (tau only)
};

template <typename T>
T pi_of() {
    return boost::math::constants::pi<T>();
}
template <>
inline double pi_of<double>() {
    return M_PI;
}

// Vertices of the canonical N-gon (apothem 1) in scalar type T.
// Index j (0-based) carries paper label j+1; labels run clockwise.
template <typename T>
std::vector<Vec2T<T>> polygon_vertices(int N) {
    const T pi = pi_of<T>();
    const T R = T(1) / cos(pi / N);
    std::vector<Vec2T<T>> vs;
    vs.reserve(static_cast<size_t>(N));
    for (int j = 0; j < N; ++j) {
        T a = (N % 2 == 1) ? pi / 2 - 2 * pi * (j + 1) / N
                           : -pi / 2 + (2 * (j + 1) - 1) * pi / N;
        vs.push_back({R * cos(a), R * sin(a)});
    }
    return vs;
}

template <typename T>
T cross3(const Vec2T<T>& o, const Vec2T<T>& a, const Vec2T<T>& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Outer billiards map: reflect p through the supporting vertex c, i.e. the
// vertex with -cross(p, c, v) > 0 for every other vertex v.  Points on the
// polygon or on a trailing edge line (where the supporting vertex is
// ambiguous) are Singular.
template <typename T>
StepResult<T> tau(int N, const Vec2T<T>& p,
                  const std::vector<Vec2T<T>>* verts = nullptr) {
    std::vector<Vec2T<T>> own;
    if (!verts) {
        own = polygon_vertices<T>(N);
        verts = &own;
    }
    const auto& vs = *verts;
    int best = -1;
    for (int i = 0; i < N; ++i) {
        bool ok = true, grazing = false;
        for (int j = 0; j < N && ok; ++j) {
            if (j == i) continue;
            T c = -cross3(p, vs[static_cast<size_t>(i)], vs[static_cast<size_t>(j)]);
            if (c < 0) ok = false;
            else if (c == 0) grazing = true;
        }
        if (ok) {
            if (grazing || best >= 0) {
                StepResult<T> r;
                r.singular = true;
                r.kind = SingularKind::on_trailing_edge;
                return r;
            }
            best = i;
        }
    }
    if (best < 0) {
        StepResult<T> r;  // p inside or on the polygon
        r.singular = true;
        r.kind = SingularKind::on_polygon;
        return r;
    }
    const auto& c = vs[static_cast<size_t>(best)];
    StepResult<T> r;
    r.point = {2 * c.x - p.x, 2 * c.y - p.y};
    r.vertex_index = best + 1;
    return r;
}

// tau^{-1} = Tr . tau . Tr with Tr the mirror about the polygon's vertical
// symmetry axis (x = 0 in the canonical frame).
template <typename T>
StepResult<T> tau_inverse(int N, const Vec2T<T>& p,
                          const std::vector<Vec2T<T>>* verts = nullptr) {
    StepResult<T> r = tau<T>(N, Vec2T<T>{-p.x, p.y}, verts);
    if (!r.singular) r.point.x = -r.point.x;
    return r;
}

// Dual-center map on C: dc(z) = e^{-2 pi i / N} (z - Sign[Im z]).
// Im z == 0 proceeds with Sign = 0 but is flagged on_axis.
template <typename T>
StepResult<T> dc(int N, const Vec2T<T>& z) {
    const T pi = pi_of<T>();
    T c = cos(2 * pi / N), s = sin(2 * pi / N);
    T sgn = (z.y > 0) ? T(1) : (z.y < 0 ? T(-1) : T(0));
    T re = z.x - sgn, im = z.y;
    StepResult<T> r;
    r.point = {c * re + s * im, -s * re + c * im};  // multiply by e^{-i 2pi/N}
    if (sgn == 0) {
        r.singular = true;
        r.kind = SingularKind::on_axis;
    }
    return r;
}

// Digital-filter map (N even only): {x,y} -> {y, f(-x + w y)},
// w = 2 cos(2 pi / N), f(z) = Mod[z+1, 2] - 1 (wrap to [-1, 1)).
template <typename T>
T wrap_pm1(T z) {
    // Mod[z + 1, 2] - 1
    T m = fmod(z + 1, T(2));
    if (m < 0) m += 2;
    return m - 1;
}

template <typename T>
Vec2T<T> df(int N, const Vec2T<T>& p) {
    if (N % 2 != 0)
        throw std::domain_error("df: digital-filter map requires N even");
    const T w = 2 * cos(2 * pi_of<T>() / N);
    return {p.y, wrap_pm1(-p.x + w * p.y)};
}

// Rectifying conjugacy for the overflow-free linear part L(x,y)=(y,-x+wy):
// with theta = 2 pi / N and z = y - e^{i theta} x, L acts as multiplication
// by e^{-i theta}.  df_rectify returns (Re z, Im z); an overflow-free df
// orbit maps to a pure clockwise rotation by theta.
template <typename T>
Vec2T<T> df_rectify(int N, const Vec2T<T>& p) {
    const T th = 2 * pi_of<T>() / N;
    return {p.y - p.x * cos(th), -p.x * sin(th)};
}

// Web coordinates: similarity taking star[1] of N to the origin and
// MidS[1] to (-1/2, 0).  The recorded calibration constant is 1/(2 tan(pi/N)).
template <typename T>
Vec2T<T> tw(int N, const Vec2T<T>& p) {
    const T t1 = tan(pi_of<T>() / N);
    return {(p.x + t1) / (2 * t1), (p.y + 1) / (2 * t1)};
}

template <typename T>
Vec2T<T> tw_inverse(int N, const Vec2T<T>& p) {
    const T t1 = tan(pi_of<T>() / N);
    return {p.x * 2 * t1 - t1, p.y * 2 * t1 - 1};
}

template <typename T>
T tw_scale(int N) {
    return T(1) / (2 * tan(pi_of<T>() / N));
}

}  // namespace ngon
