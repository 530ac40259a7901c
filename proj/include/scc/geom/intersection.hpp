#pragma once

#include <functional>
#include <json.hpp>
#include <optional>
#include <vector>

#include "scc/geom/fuchsian.hpp"

namespace scc {

// predicate on lift words; used to restrict lifts to a finite-index subgroup
using LiftFilter = std::function<bool(const Word&)>;

struct SelfIntersectionReport {
    Word word;
    int count = 0;
    std::vector<Word> witnesses;  // crossing lifts u: u.axis(w) crosses the fundamental segment of axis(w)
    bool certified = false;
    mpfr_prec_t precision_bits = 0;
    int tiles = 0;  // tiles of the tessellation meeting the fundamental segment
    nlohmann::json to_json() const;
};

struct SearchLimits {
    mpfr_prec_t max_bits = 4096;
    int max_tiles = 20000;
};

// pre: w nontrivial, not a proper power
SelfIntersectionReport self_intersection(const FuchsianModel& M, const Word& w, const LiftFilter& in_subgroup = {},
                                         const SearchLimits& lim = {});
// transverse intersections of the closed geodesics of w1 and w2
SelfIntersectionReport mutual_intersection(const FuchsianModel& M, const Word& w1, const Word& w2,
                                           const LiftFilter& in_subgroup = {}, const SearchLimits& lim = {});
// throws PrecisionExhausted if the count could not be certified
bool is_simple(const FuchsianModel& M, const Word& w);

struct FigureEight {
    Word gamma1, gamma2;  // gamma2 * gamma1 = w' (cyclic reduction of w), so gamma1 * gamma2 is conjugate to w
    Word conjugator;      // w = conjugator * w' * conjugator^-1
    Word witness;         // the crossing lift used
    double crossing_height = 0;
    bool free_exact = false;  // [gamma1, gamma2] != 1, hence <gamma1, gamma2> free of rank 2
    int pingpong_power = 0;   // m with isometric circles of gamma_i^{+-m} disjoint, 0 if none found
};
FigureEight figure_eight_decompose(const FuchsianModel& M, const Word& w, const LiftFilter& in_subgroup = {});

// proper power detection: literal periodicity first, then a geometric root search
std::optional<std::pair<Word, int>> is_proper_power(const FuchsianModel& M, const Word& w);

// conjugacy classes of nontrivial elements with l_X <= r, canonical representatives
std::vector<Word> enumerate_classes(const FuchsianModel& M, int r);
// exact conjugacy test for nontrivial elements (geometric candidates, exact verification)
bool are_conjugate(const FuchsianModel& M, const Word& a, const Word& b);

struct QuadraticRow {
    int length = 0;     // l_X
    int classes = 0;    // primitive classes of this length
    int max_count = 0;  // max self-intersection among them
    Word argmax;
    double fitted_C = 0;  // least C with count <= C l_X^2 over all lengths <= this one
    bool certified = true;
};
std::vector<QuadraticRow> quadratic_bound_report(const FuchsianModel& M, int r);

}  // namespace scc
