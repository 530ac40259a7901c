#pragma once

#include <functional>
#include <json.hpp>
#include <optional>
#include <vector>

#include "scc/geom/intersection.hpp"

namespace scc {

// Transitive right action of pi_1(S_g) on sheets {0..N-1}; sheet 0 is the basepoint.
// The subgroup K of the cover is the stabiliser of sheet 0.
struct CosetTable {
    int genus = 0;
    int degree = 0;
    std::vector<std::vector<int>> perm;  // perm[k][i] = image of sheet i under generator k

    static CosetTable trivial(int genus);
    int act(int sheet, const Word& w) const;  // letters applied left to right
    std::vector<int> permutation(const Word& w) const;
    bool contains(const Word& w) const { return act(0, w) == 0; }
    // bijective generators, relator acts trivially, transitive
    bool is_valid() const;

    nlohmann::json to_json() const;  // {genus, degree, perms: {"a1": [1-based images], ...}}
    static CosetTable from_json(const nlohmann::json& j);
    bool operator==(const CosetTable& o) const { return genus == o.genus && perm == o.perm; }
};

enum class CoverClasses { PerSubgroup, PerConjugacyClass };

// Low-index enumeration of transitive tables of exactly this degree, depth-first over the least
// undefined entry; stops early when fn returns false. Returns false if stopped.
bool for_each_cover(int genus, int degree, CoverClasses mode, const std::function<bool(const CosetTable&)>& fn);
// all covers of degree 1..max_degree, by degree then enumeration order
std::vector<CosetTable> low_index_covers(int genus, int max_degree, CoverClasses mode = CoverClasses::PerConjugacyClass);

int cover_genus(const CosetTable& t);
// K_fine subset of K_coarse, witnessed by an equivariant sheet map sending 0 to 0
std::optional<std::vector<int>> refinement_map(const CosetTable& fine, const CosetTable& coarse);

LiftFilter subgroup_filter(const CosetTable& t);

// self-intersection of the lift of w to the cover; throws PreconditionError unless w is in K
SelfIntersectionReport lifted_self_intersection(const FuchsianModel& M, const CosetTable& t, const Word& w);

struct FigureEightCover {
    bool found = false;
    CosetTable cover;
    FigureEight decomposition;
    int lifted_count = 0;
    int loop1_count = 0, loop2_count = 0, loops_mutual = 0;
    long covers_examined = 0;
    int max_degree = 0;
    nlohmann::json to_json() const;
};

// first cover (degree 1 upwards) containing w in which w lifts to a figure eight with
// embedded, disjoint subloops; throws PreconditionError for simple words and proper powers
FigureEightCover find_figure_eight_cover(const FuchsianModel& M, const Word& w, int max_degree);

struct PatelParams {
    double d = 1, e = 1;  // unknown constants, caller supplied
    double beta = 1;      // total boundary length of the convex core
    int n = 2;            // rank
    double length = 1;    // translation length of the curve
};
// 4n - 4 + (2 sinh(d (l / e + 2)) / pi) beta
double patel_bound(const PatelParams& p);

}  // namespace scc
