#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "scc/geom/interval.hpp"
#include "scc/group/surface_group.hpp"

namespace scc {

struct IMat2 {
    Interval a, b, c, d;
    static IMat2 identity();
    IMat2 operator*(const IMat2& o) const;
    IMat2 inv_sl2() const;  // adjugate; exact inverse for determinant 1
    Interval trace() const { return a + d; }
    Interval det() const { return a * d - b * c; }
    bool contains_identity() const;
    bool contains_minus_identity() const;
    bool contains_pm_identity() const { return contains_identity() || contains_minus_identity(); }
    double max_width() const;
};

// homogeneous point (x : y) on the boundary RP^1, or a vector in R^2
struct IVec2 {
    Interval x, y;
};
IVec2 apply(const IMat2& m, const IVec2& v);

// Regular 4g-gon model: generators are side pairings of the regular hyperbolic
// 4g-gon with all angles 2 pi / 4g, centred at i in the upper half plane.
class FuchsianModel {
public:
    FuchsianModel(const SurfaceGroup& G, mpfr_prec_t bits = 256);

    const SurfaceGroup& group() const { return G_; }
    int genus() const { return G_.genus(); }
    mpfr_prec_t precision() const { return bits_; }

    const IMat2& generator(int l) const { return gens_[l + 2 * G_.genus()]; }
    IMat2 holonomy(const Word& w) const;
    // 2 arccosh(|tr| / 2); throws PreconditionError on identity / non-hyperbolic
    Interval translation_length(const Word& w) const;

    double side_translation() const { return side_t_; }  // distance between centres of adjacent tiles
    double circumradius() const { return circ_r_; }

    // the same model at another precision (cached, shared)
    std::shared_ptr<const FuchsianModel> at_precision(mpfr_prec_t bits) const;

private:
    const SurfaceGroup& G_;
    mpfr_prec_t bits_;
    std::vector<IMat2> gens_;
    double side_t_ = 0, circ_r_ = 0;
    mutable std::map<mpfr_prec_t, std::shared_ptr<const FuchsianModel>> cache_;
    mutable std::mutex mu_;
};

struct Axis {
    IVec2 attracting, repelling;  // eigenvectors, boundary points
    Interval multiplier;          // lambda_attr / lambda_rep = exp(translation length)
    Interval length;
};
Axis axis_of(const IMat2& W);  // W hyperbolic; throws PrecisionExhausted if undecided

// max over nontrivial elements with l_X <= r of translation_length / l_X
struct Distortion {
    double lambda;
    Word argmax;
};
Distortion distortion_constant(const FuchsianModel& M, int r);

}  // namespace scc
