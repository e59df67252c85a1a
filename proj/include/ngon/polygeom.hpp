#pragma once
// First Families, star points, Two-Star Lemma, DS[k] tiles, ideal generation
// chains, step-2 families and towers.
//
// Placement conventions (validated against Table 22.1 and the published
// period laws; see README):
//   - hN = 1, base edge on y = -1, family on the leftward extension.
//   - t_k := tan(k*pi/N);  star[k] of N = (-t_k, -1);  MidS[k] = -(t_k + t1);
//     cS[k] = (-(t_k + t1), -1 + t1*t_k);  hS[k] = t1*t_k.
//   - N even: S[k] are N-gons, D = S[N/2-1] (hD = 1), M = S[N/2-2].
//   - N odd: S[k] are 2N-gons with the same heights/midpoints; D = S[(N-1)/2],
//     M the penultimate tile.
//   - GenStar = star[1] of D = (-t_{K}, -1) with K the D index (both parities).

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <ngon/geometry.hpp>

namespace ngon {

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct DegenerateStars : std::domain_error {
    using std::domain_error::domain_error;
};
struct WrongParity : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Normalization { height_one, side_one };

struct FirstFamily {
    int N = 0;
    Normalization normalization = Normalization::height_one;
    std::vector<RegularTile> tiles;   // S[1..K], 1-based via tile(k)
    std::vector<Vec2> star_points;    // star[1..K+...] on the left extension
    std::vector<double> scales;       // scale[k] = tan(pi/N)/tan(k pi/N)
    double genscale = 0.0;
    Vec2 genstar;
    int d_index = 0;  // k with S[k] = D
    int m_index = 0;  // k with S[k] = M

    const RegularTile& tile(int k) const {
        if (k < 1 || k > static_cast<int>(tiles.size()))
            throw IndexOutOfRange("S[k] index out of range");
        return tiles[static_cast<size_t>(k - 1)];
    }
    const RegularTile& D() const { return tile(d_index); }
    const RegularTile& M() const { return tile(m_index); }
};

inline double gen_scale_double(int N) {
    if (N % 2 == 0) {
        double t = std::tan(M_PI / N);
        return t * t;
    }
    return std::tan(M_PI / N) * std::tan(M_PI / (2 * N));
}

// Tile resting on y = -1 with given base-midpoint abscissa and apothem.
inline RegularTile base_tile(int sides, double mid_x, double height,
                             std::string label) {
    RegularTile t;
    t.sides = sides;
    t.height = height;
    t.radius = height / std::cos(M_PI / sides);
    t.center = {mid_x, -1.0 + height};
    t.phase = edge_down_phase(sides);
    t.label = std::move(label);
    return t;
}

inline FirstFamily first_family(int N,
                                Normalization norm = Normalization::height_one) {
    if (N < 3) throw IndexOutOfRange("first_family requires N >= 3");
    FirstFamily ff;
    ff.N = N;
    ff.normalization = norm;
    const int K = (N % 2 == 0) ? N / 2 - 1 : (N - 1) / 2;
    const int sides = (N % 2 == 0) ? N : 2 * N;
    const double t1 = std::tan(M_PI / N);
    // side_one: sN = 2*hN*tan(pi/N) = 1  =>  hN = 1/(2 t1).
    const double unit = (norm == Normalization::height_one) ? 1.0 : 1.0 / (2 * t1);
    for (int k = 1; k <= K; ++k) {
        double tk = std::tan(k * M_PI / N);
        ff.tiles.push_back(base_tile(sides, -(tk + t1) * unit, t1 * tk * unit,
                                     "S[" + std::to_string(k) + "]"));
        ff.star_points.push_back({-tk * unit, -unit});
        ff.scales.push_back(t1 / tk);
    }
    ff.d_index = K;
    ff.m_index = K - 1;
    ff.genscale = gen_scale_double(N);
    ff.genstar = {-std::tan(ff.d_index * M_PI / N) * unit, -unit};
    if (ff.d_index >= 1) {
        ff.tiles[static_cast<size_t>(ff.d_index - 1)].label = "D";
        if (ff.m_index >= 1)
            ff.tiles[static_cast<size_t>(ff.m_index - 1)].label = "M";
    }
    return ff;
}

// star[k] = base midpoint + dir * h * tan(k pi / n), k = 1..ceil(n/2)-1,
// ordered outward from the midpoint.  dir = -1 follows the family's
// leftward development.
inline std::vector<Vec2> star_points(const RegularTile& tile, int dir = -1) {
    std::vector<Vec2> pts;
    int K = (tile.sides + 1) / 2 - 1;
    double base_y = tile.center.y - tile.height;
    for (int k = 1; k <= K; ++k) {
        pts.push_back({tile.center.x + dir * tile.height * std::tan(k * M_PI / tile.sides),
                       base_y});
    }
    return pts;
}

// Two-Star Lemma: a tile spanning star[j] and star[k] of an n-gon whose base
// interval has length d has apothem d / |tan(j pi/n) - tan(k pi/n)|.
inline double two_star_height(double d, int j, int k, int n) {
    if (j == k) throw DegenerateStars("two_star_height: j == k");
    if (j <= 0 || k <= 0 || j >= n || k >= n)
        throw IndexOutOfRange("two_star_height: invalid star index");
    return std::abs(d) / std::abs(std::tan(j * M_PI / n) - std::tan(k * M_PI / n));
}

struct StarAnchor {
    Vec2 star;     // a star point on the tile's base line
    double offset; // signed distance from the star to the base midpoint
};

// Generic tile builder; anchor is either an explicit center or a star point
// plus signed midpoint offset along the base line.
inline RegularTile build_tile(Vec2 center, double height, int sides,
                              double phase, std::string label = {}) {
    RegularTile t;
    t.sides = sides;
    t.height = height;
    t.radius = height / std::cos(M_PI / sides);
    t.center = center;
    t.phase = phase;
    t.label = std::move(label);
    return t;
}

inline RegularTile build_tile(const StarAnchor& a, double height, int sides,
                              std::string label = {}) {
    return build_tile({a.star.x + a.offset, a.star.y + height}, height, sides,
                      edge_down_phase(sides), std::move(label));
}

// DS[k]: next-generation tiles on the edges of S[2].
//   N even: the S[k] of S[2]'s First Family, developing back toward S[1]:
//     hDS[k] = hS[2]*t1*t_k,  cDS[k].x = cS[2].x + hS[2]*(t_k + t1).
//   N odd: oversized 2N-gons of the "star[2] family":
//     hDS[k] = hS[2]*tan(pi/N)*tan(k pi/2N), midpoint at
//     StarS2[k] + hDS[k]*tan((N-k) pi/2N) toward S[1].
inline RegularTile ds_tile(int N, int k) {
    const double t1 = std::tan(M_PI / N);
    const double t2 = std::tan(2 * M_PI / N);
    const double h2 = t1 * t2;
    const double c2x = -(t2 + t1);
    if (N % 2 == 0) {
        if (k < 1 || k > N / 2 - 2) throw IndexOutOfRange("ds_tile: k out of range");
        double tk = std::tan(k * M_PI / N);
        return base_tile(N, c2x + h2 * (tk + t1), h2 * t1 * tk,
                         "DS[" + std::to_string(k) + "]");
    }
    if (k < 1 || k > N - 2) throw IndexOutOfRange("ds_tile: k out of range");
    // S[2] of N odd is a 2N-gon; its stars step by tan(k pi/2N).
    double h = h2 * std::tan(M_PI / N) * std::tan(k * M_PI / (2 * N));
    double star_s2 = c2x + h2 * std::tan(k * M_PI / (2 * N));
    double mid = star_s2 + h * std::tan((N - k) * M_PI / (2 * N));
    return base_tile(2 * N, mid, h, "DS[" + std::to_string(k) + "]");
}

// Ideal generation chain (Definition 2.1): M[k], D[k] converge to GenStar
// with hM[k+1]/hM[k] = hD[k+1]/hD[k] = GenScale[N] (GenScale[N/2] when N is
// twice-odd).  M[1] = S[1], D[1] = S[2]; subsequent pairs are the similarity
// images about GenStar.
inline std::vector<std::pair<RegularTile, RegularTile>>
ideal_generation_chain(int N, int depth) {
    if (N <= 4) throw IndexOutOfRange("ideal_generation_chain requires N > 4");
    if (depth < 1) throw IndexOutOfRange("depth >= 1");
    FirstFamily ff = first_family(N);
    bool twice_odd_n = (N % 2 == 0) && ((N / 2) % 2 == 1);
    double gs = twice_odd_n ? gen_scale_double(N / 2) : gen_scale_double(N);
    Vec2 G = ff.genstar;
    RegularTile M = ff.tile(1);
    RegularTile D = ff.tile(2);
    std::vector<std::pair<RegularTile, RegularTile>> chain;
    for (int k = 1; k <= depth; ++k) {
        RegularTile m = M, d = D;
        m.label = "M[" + std::to_string(k) + "]";
        d.label = "D[" + std::to_string(k) + "]";
        chain.emplace_back(m, d);
        auto contract = [&](RegularTile& t) {
            t.center = G + gs * (t.center - G);
            t.height *= gs;
            t.radius *= gs;
        };
        contract(M);
        contract(D);
    }
    return chain;
}

// Step-2 families (N twice-even): tiles on consecutive odd star points of
// S[1].  hS_kx = hS[k]*hS[1]/scale[2]; midpoint at starS1[k] shifted by the
// star[2]-of-S[1] displacement along the development direction.
inline std::vector<RegularTile> step2_family(int N) {
    if (N % 4 != 0) throw WrongParity("step2_family requires N twice-even");
    FirstFamily ff = first_family(N);
    const double t1 = std::tan(M_PI / N);
    const double t2 = std::tan(2 * M_PI / N);
    const double h1 = ff.tile(1).height;
    std::vector<RegularTile> out;
    for (int k = 1; k <= N / 2 - 1; ++k) {
        double tk = std::tan(k * M_PI / N);
        double h = ff.tile(std::min<int>(k, (int)ff.tiles.size())).height; // hS[k]
        h = (t1 * tk) * h1 / (t1 / t2);  // hS[k]*hS[1]/scale[2]
        double star_s1 = ff.tile(1).center.x - h1 * tk;
        double mid = star_s1 - h1 * t2;
        out.push_back(base_tile(N, mid, h, "S" + std::to_string(k) + "x"));
    }
    return out;
}

// Towers: S[k] and S[k+2] share star[k+1] (N even) / star[2k+2] (N odd).
inline int tower_shared_star(int N, int k) {
    int K = (N % 2 == 0) ? N / 2 - 1 : (N - 1) / 2;
    if (k < 1 || k + 2 > K + 1) throw IndexOutOfRange("tower_shared_star: k");
    return (N % 2 == 0) ? k + 1 : 2 * k + 2;
}

}  // namespace ngon
