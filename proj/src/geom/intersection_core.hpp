#pragma once
// internal: frames, tile chains and lift enumeration shared by the geometry and cover code

#include <map>
#include <stdexcept>

#include "scc/geom/intersection.hpp"

namespace scc::detail {

struct BoundaryHit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// closed geodesic of a cyclically reduced word, normalised so that its axis is (0, inf)
struct Frame {
    Word w;     // cyclically reduced
    Word conj;  // original = conj * w * conj^-1
    IMat2 W;
    IVec2 va, vr;  // attracting / repelling eigenvectors
    IMat2 P;       // va -> inf, vr -> 0, W acts as z -> kappa z
    Interval kappa, s, s2, ks2;
    double s_d = 0, kappa_d = 0;
};

struct Tile {
    Word word;
    IMat2 m;
    double x = 0, y = 0;  // centre in frame coordinates
};

Frame make_frame(const FuchsianModel& M, const Word& w, double cfac);
std::vector<Tile> segment_tiles(const FuchsianModel& M, const Frame& f, int max_tiles);

struct Lift {
    Word g;
    IVec2 u, v;  // endpoints in frame coordinates
    Interval H;  // squared crossing height
};

// lifts g.axis(f2) (g = h1 h2^-1) crossing the fundamental segment of f1;
// distinct modulo <w2> on the right; throws PrecisionExhausted / BoundaryHit
std::vector<Lift> crossing_lifts(const FuchsianModel& M, const Frame& f1, const std::vector<Tile>& t1, const Frame& f2,
                                 const std::vector<Tile>& t2, const LiftFilter& filter);

// primitive root of f.w found from the tile chain, if f.w is a proper power
std::optional<std::pair<Word, int>> geometric_root(const FuchsianModel& M, const Frame& f, const std::vector<Tile>& tiles);

// boundary angles (attracting, repelling) of h^-1 . axis for every tile h
std::vector<std::pair<double, double>> lift_angles(const Frame& f, const std::vector<Tile>& tiles);

extern const double kSegmentFactors[5];

}  // namespace scc::detail
