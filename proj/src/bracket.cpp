#include "linf/bracket.hpp"

#include <mutex>

namespace linf {

Cochain compose(const SuperSpace& space, const BasisCochain& f, const BasisCochain& g)
{
    Cochain out(space);
    int jg = g.target;
    if (f.index[jg] == 0)
        return out;
    MultiIndex T = f.index;
    T[jg] -= 1;
    MultiIndex J = T;
    for (int i = 0; i < space.dim(); ++i)
        J[i] += g.index[i];
    if (!is_valid(space, J) || degree(J) > space.weight_cutoff)
        return out;

    Rational mult = 1;
    for (int i = space.odd_count; i < space.dim(); ++i)
        if (g.index[i] && T[i])
            mult *= binomial(J[i], g.index[i]);
    int eps = monomial_product_sign(space, g.index, T);
    MultiIndex ej(space.dim(), 0);
    ej[jg] = 1;
    int s2 = monomial_product_sign(space, ej, T);
    Rational coef = mult * eps * s2 * index_factorial(g.index) * index_factorial(f.index) / index_factorial(J);
    out.add_term({J, f.target}, coef);
    return out;
}

Cochain compose(const Cochain& f, const Cochain& g)
{
    Cochain out(f.space());
    for (auto& [bf, cf] : f.terms())
        for (auto& [bg, cg] : g.terms()) {
            auto c = compose(f.space(), bf, bg);
            out += (cf * cg) * c;
        }
    return out;
}

Cochain bracket(const SuperSpace& space, const BasisCochain& a, const BasisCochain& b)
{
    Cochain out = compose(space, a, b);
    Cochain ba = compose(space, b, a);
    int sign = (a.parity(space) & b.parity(space)) ? -1 : 1;
    out -= Rational(sign) * ba;
    if (kSignCalibration != 1)
        out *= kSignCalibration;
    return out;
}

Cochain bracket(const Cochain& a, const Cochain& b)
{
    if (!(a.space() == b.space()))
        throw ContractViolation("bracket: cochains live on different spaces");
    Cochain out(a.space());
    for (auto& [ba, ca] : a.terms())
        for (auto& [bb, cb] : b.terms())
            out += (ca * cb) * bracket(a.space(), ba, bb);
    return out;
}

Cochain coboundary(const Cochain& phi, const Cochain& d)
{
    return bracket(phi, d);
}

CodifferentialCheck is_codifferential(const Cochain& d)
{
    int p = d.parity();
    if (p == -1 && !d.is_zero())
        throw ContractViolation("is_codifferential: mixed parity input");
    CodifferentialCheck r;
    r.witness = bracket(d, d);
    r.ok = (d.is_zero() || p == 1) && r.witness.is_zero();
    if (r.ok)
        r.witness = Cochain(d.space());
    return r;
}

const Cochain& BracketTable::get(const BasisCochain& a, const BasisCochain& b)
{
    auto key = std::make_pair(a, b);
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
    }
    Cochain value = linf::bracket(space_, a, b);
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(std::move(key), std::move(value)).first->second;
}

Cochain BracketTable::bracket(const Cochain& a, const Cochain& b)
{
    Cochain out(space_);
    for (auto& [ba, ca] : a.terms())
        for (auto& [bb, cb] : b.terms()) {
            const Cochain& c = get(ba, bb);
            if (!c.is_zero())
                out += (ca * cb) * c;
        }
    return out;
}

std::size_t BracketTable::size() const
{
    std::shared_lock lock(mutex_);
    return cache_.size();
}

}
