// Internal helpers shared by the coefficient and polynomial modules.
#pragma once

#include "suq/cgc.hpp"

#include <initializer_list>
#include <stdexcept>

namespace suq::detail {

inline int neg1pow(const Rat& n) { return (to_int(n) % 2 == 0) ? 1 : -1; }

// Guards a hand-derived summation bound: some reciprocal factorial must vanish one step past it.
inline void check_bound(std::initializer_list<Rat> recip_args_past_bound) {
    for (const auto& a : recip_args_past_bound)
        if (a < 0) return;
    throw std::logic_error("summation bound does not terminate the series");
}

struct PosR {
    Rat k1, m1, k2, m2, k, mu;
    explicit PosR(const CGPosLabel& l)
        : k1(R(l.kappa1)), m1(R(l.mu1)), k2(R(l.kappa2)), m2(R(l.mu2)), k(R(l.kappa)), mu(R(l.mu)) {}
};

struct MixR {
    Rat k, mu, j, m, kp, mup;
    explicit MixR(const CGMixedLabel& l)
        : k(R(l.kappa)), mu(R(l.mu)), j(R(l.j)), m(R(l.m)), kp(R(l.kappa_p)), mup(R(l.mu_p)) {}
};

}  // namespace suq::detail
