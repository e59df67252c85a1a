#pragma once
// Planar primitives shared by the tile-geometry and map layers.
//
// Canonical tau-space frame: the regular N-gon is centered at the origin with
// apothem hN = 1 and its base edge on the line y = -1.  For N odd the polygon
// is vertex-up (vertex N at the top), for N even it is edge-down; in both
// cases vertex labels run clockwise, matching the published orbit index
// sequences.  The First Family develops on the leftward extension of the base
// edge (negative x); right-side objects are reflections.

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <ngon/exactfield.hpp>

namespace ngon {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

// Exact planar point: both coordinates in Q(zeta_{4N}).
struct ExactVec2 {
    FieldElement x;
    FieldElement y;
};

// A regular n-gon tile.  `phase` is the angle of vertex 1 from the center.
// Exact centers/heights are carried alongside the float data when the tile
// was produced by an exact construction.
struct RegularTile {
    int sides = 0;
    Vec2 center;
    double height = 0.0;  // apothem
    double radius = 0.0;  // circumradius = height / cos(pi/sides)
    double phase = 0.0;
    std::string label;

    std::optional<ExactVec2> exact_center;
    std::optional<FieldElement> exact_height;

    std::vector<Vec2> vertices() const {
        std::vector<Vec2> vs;
        vs.reserve(static_cast<size_t>(sides));
        for (int j = 0; j < sides; ++j) {
            double a = phase + 2.0 * M_PI * j / sides;
            vs.push_back({center.x + radius * std::cos(a),
                          center.y + radius * std::sin(a)});
        }
        return vs;
    }
};

// Mutated ("weave"/Riffle) tile: the underlying regular tile replaced by two
// interleaved m-gons sharing its base line.
struct MutatedTile {
    RegularTile underlying;
    int component_sides = 0;
    RegularTile components[2];
    int base_star_index = 0;
    int base_span = 0;  // star points spanned
};

// Phase conventions for tiles tangent to a horizontal line from above:
// an n-gon resting edge-down has a vertex at angle -pi/2 + pi/n from its
// center (and every 2pi/n thereafter).
inline double edge_down_phase(int sides) { return -M_PI / 2 + M_PI / sides; }

// Vertices of the canonical N-gon itself (apothem 1, centered).  Clockwise
// labels: index j (0-based) is vertex j+1 of the paper's c_k numbering.
inline std::vector<Vec2> canonical_vertices(int N) {
    std::vector<Vec2> vs;
    vs.reserve(static_cast<size_t>(N));
    double R = 1.0 / std::cos(M_PI / N);
    for (int j = 0; j < N; ++j) {
        double a = (N % 2) ? (M_PI / 2 - 2.0 * M_PI * (j + 1) / N)
                           : (-M_PI / 2 + (2 * (j + 1) - 1) * M_PI / N);
        vs.push_back({R * std::cos(a), R * std::sin(a)});
    }
    return vs;
}

}  // namespace ngon
