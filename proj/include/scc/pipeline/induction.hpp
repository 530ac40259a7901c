#pragma once

#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "scc/covers/covers.hpp"
#include "scc/exact/matrix.hpp"
#include "scc/tqft/representation.hpp"

namespace scc {

// Projective representation of the base group pi_1(S_g): images of a1 b1 ... ag bg.
struct Representation {
    int genus = 0;
    std::string marker;  // "base", "so3:p=5", "ind[2]:so3:p=5", "sum(...)"
    std::vector<ExactMatrix> gens, inv;

    static Representation from_so3(const SO3Rep& R);
    int dim() const { return gens.empty() ? 0 : gens[0].dim(); }
    long order() const { return gens.empty() ? 1 : gens[0].order(); }
    ExactMatrix image(const Word& w) const;
    nlohmann::json to_json() const;
};

// Representation of the subgroup K of a cover, evaluated on words of the base group lying in K.
struct SubgroupRep {
    CosetTable table;
    int dim = 0;
    long order = 1;
    std::string marker;
    std::function<ExactMatrix(const Word&)> eval;
};

// Schreier transversal: shortlex-least word from sheet 0 to each sheet
std::vector<Word> schreier_transversal(const CosetTable& t);

SubgroupRep restrict_to(const Representation& rho, const CosetTable& t);
// Ind_K^G: generator x acts by the sheet permutation of x with block (i, i.x) = V(t_i x t_{i.x}^-1)
Representation induce(const SubgroupRep& V);
Representation induce(const Representation& rho, const CosetTable& t);
// Ind_{K'}^{K} for K' in K (fine refines coarse), as a representation of K
SubgroupRep induce_to(const SubgroupRep& V, const CosetTable& coarse);

Representation direct_sum(const std::vector<Representation>& reps);

// sum over sheets fixed by w of tr V(t_i w t_i^-1)
Cyclotomic frobenius_character(const SubgroupRep& V, const Word& w);

}  // namespace scc
