#pragma once

#include <array>
#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "scc/exact/matrix.hpp"
#include "scc/group/word.hpp"
#include "scc/tqft/fusion.hpp"

namespace scc {

// SO(3) quantum representation of pi_1(S_2) at odd level p, through point pushing.
//
// Spine: two lollipops joined at a trivalent vertex carrying the marked leg (colour 2).
// Basis vector (a, c1, c2, b): loop colours a, b of the handles, stem colours c1, c2,
// admissible at (a, a, c1), (c1, c2, 2), (b, b, c2); ordered lexicographically.
// Handle h: alpha_h is the loop meridian (diagonal twist), beta_h the longitude.
class SO3Rep {
public:
    using Vec = std::array<int, 4>;

    explicit SO3Rep(int p, int genus = 2);  // only genus 2 has a curve dictionary

    const Fusion& fusion() const { return F_; }
    int level() const { return F_.level(); }
    int genus() const { return 2; }
    int dim() const { return static_cast<int>(basis_.size()); }
    long order() const { return F_.order(); }
    const std::vector<Vec>& basis() const { return basis_; }

    // decomposition curves: "alpha1", "alpha2", "stem1", "stem2"; diagonal
    ExactMatrix twist(const std::string& curve) const;
    // twist along the longitude of a handle (h = 0, 1), from the loop-colour fusion rule
    const ExactMatrix& twist_beta(int h) const { return Tb_[h]; }
    // change to the basis where the leg meets the loop of handle h (theta with a leg)
    const ExactMatrix& fmove(int h) const { return Fm_[h]; }
    const ExactMatrix& fmove_inverse(int h) const { return Fi_[h]; }
    // S = T_alpha T_beta T_alpha on handle h
    ExactMatrix smove(int h) const;

    // images of a1 b1 a2 b2 (index 0..3); the relator maps to a scalar
    const ExactMatrix& push(int gen) const { return gens_[gen]; }
    const ExactMatrix& push_inverse(int gen) const { return inv_[gen]; }
    ExactMatrix rho(const Word& w) const;

    // diagonal invariant form from theta and loop values
    const ExactMatrix& hermitian_form() const { return H_; }
    // M^dagger H M = c H for some scalar c
    bool preserves_form(const ExactMatrix& M) const;

    nlohmann::json to_json() const;  // {genus, level, dim, basis, generators: {a1: matrix, ...}}

private:
    Fusion F_;
    std::vector<Vec> basis_;
    std::map<Vec, int> index_;
    ExactMatrix Tb_[2], Fm_[2], Fi_[2], diag_[2], diag_inv_[2];
    ExactMatrix gens_[4], inv_[4];
    ExactMatrix H_;

    ExactMatrix build_twist_beta(int h) const;
    void build_fmove(int h);
};

// inverse of a matrix whose nonzero pattern splits into small blocks
ExactMatrix block_inverse(const ExactMatrix& M);

struct ImageOrder {
    int level = 0;
    ProjectiveOrder order;
    std::string to_string() const;
    nlohmann::json to_json() const;
};
// projective order of rho_p(w): scalar-power search to 4p^2, then the norm certificate
ImageOrder order_of_image(const SO3Rep& R, const Word& w, const OrderOptions& opt = {});

}  // namespace scc
