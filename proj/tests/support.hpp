#pragma once

#include "linf/superspace.hpp"

#include <initializer_list>

namespace linf::test {

inline BasisCochain bc(std::initializer_list<int> exps, int target)
{
    MultiIndex I;
    for (int e : exps)
        I.push_back(static_cast<std::uint8_t>(e));
    return {I, target - 1};
}

inline Cochain e(const SuperSpace& s, std::initializer_list<int> exps, int target, const Rational& c = 1)
{
    return Cochain(s, bc(exps, target), c);
}

}
