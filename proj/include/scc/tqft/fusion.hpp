#pragma once

#include <array>
#include <map>
#include <mutex>
#include <vector>

#include "scc/exact/cyclotomic.hpp"

namespace scc {

// SO(3) skein data at odd level p over Q(A), A = zeta_{2p}.
// Colours are the even integers 0, 2, ..., p - 3.
class Fusion {
public:
    explicit Fusion(int p);  // p odd, >= 3

    int level() const { return p_; }
    long order() const { return 2L * p_; }
    const std::vector<int>& colours() const { return colours_; }
    Cyclotomic A() const { return Cyclotomic::zeta(order(), 1); }
    Cyclotomic zero() const { return Cyclotomic(order()); }
    Cyclotomic one() const { return Cyclotomic(order(), 1); }

    // even sum, triangle inequalities, i + j + k <= 2p - 4
    bool admissible(int i, int j, int k) const;

    const Cyclotomic& qint(int n) const;   // [n] = (A^2n - A^-2n) / (A^2 - A^-2), n >= 0
    const Cyclotomic& qfact(int n) const;  // [n]!
    Cyclotomic delta(int n) const;         // (-1)^n [n + 1]
    Cyclotomic theta(int a, int b, int c) const;
    // Masbaum-Vogel tetrahedron with edges A B E / C D F (faces ABF, CDF, ADE, BCE)
    Cyclotomic tet(int a, int b, int e, int c, int d, int f) const;
    // F-move coefficient replacing diagonal e of the quadrilateral (a b c d) by f
    Cyclotomic sixj(int a, int b, int c, int d, int e, int f) const;
    Cyclotomic twist(int c) const;  // (-1)^c A^{c^2 + 2c}
    Cyclotomic hopf(int j, int k) const;

    struct PentagonReport {
        long tuples = 0;     // admissible boundary colourings and initial diagonals
        long nonzero = 0;    // residual entries that are not exactly zero
    };
    // flip the five diagonals of a triangulated pentagon around the cycle and compare with the identity
    PentagonReport pentagon() const;

private:
    int p_;
    std::vector<int> colours_;
    std::vector<Cyclotomic> qint_, qfact_;
    mutable std::mutex mu_;
    mutable std::map<std::array<int, 6>, Cyclotomic> tet_cache_;
    mutable std::map<std::array<int, 3>, Cyclotomic> theta_cache_;
};

// admissible colourings of the caterpillar spine of a genus g surface with one leg of the given colour
long verlinde_dim(int genus, int p, int marked_colour = 2);

}  // namespace scc
