#include "linf/param_cochain.hpp"

namespace linf {

void ParamCochain::add(const BasisCochain& b, const GrassmannSeries& s)
{
    if (s.is_zero())
        return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
        terms_.emplace(b, s.with_cutoff(cutoff_));
        return;
    }
    it->second += s;
    if (it->second.is_zero())
        terms_.erase(it);
}

void ParamCochain::add(const Cochain& c, const GrassmannSeries& s)
{
    for (auto& [b, q] : c.terms())
        add(b, q * s);
}

GrassmannSeries ParamCochain::coefficient(const BasisCochain& b) const
{
    auto it = terms_.find(b);
    return it == terms_.end() ? GrassmannSeries(reg_, cutoff_) : it->second;
}

int ParamCochain::parity() const
{
    int p = -2;
    for (auto& [b, s] : terms_) {
        int sp = s.parity();
        if (sp < 0)
            return -1;
        int q = (b.parity(space_) + sp) & 1;
        if (p == -2)
            p = q;
        else if (p != q)
            return -1;
    }
    return p == -2 ? 0 : p;
}

ParamCochain ParamCochain::order_part(int n) const
{
    ParamCochain r(space_, reg_, cutoff_);
    for (auto& [b, s] : terms_)
        r.add(b, s.order_part(n));
    return r;
}

ParamCochain ParamCochain::truncated_weight(int max_weight) const
{
    ParamCochain r(space_, reg_, cutoff_);
    for (auto& [b, s] : terms_)
        if (b.weight() <= max_weight)
            r.terms_.emplace(b, s);
    return r;
}

ParamCochain& ParamCochain::operator+=(const ParamCochain& o)
{
    for (auto& [b, s] : o.terms_)
        add(b, s);
    return *this;
}

ParamCochain& ParamCochain::operator*=(const Rational& r)
{
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, s] : terms_)
        s *= r;
    return *this;
}

namespace {

void accumulate(std::map<BasisCochain, GrassmannSeries::Terms>& acc, const Cochain& c, const GrassmannSeries& a,
                const GrassmannSeries& b, int sign_a_odd, const ParameterRegistry& reg, const BracketWindow& w,
                const Rational& factor)
{
    for (auto& [ma, ca] : a.terms()) {
        if (ma.order + b.min_order() > w.max_order)
            break;
        Rational fa = ca * factor;
        if (sign_a_odd && monomial_parity(reg, ma))
            fa = -fa;
        for (auto& [mb, cb] : b.terms()) {
            int ord = ma.order + mb.order;
            if (ord > w.max_order || ord > a.cutoff())
                break;
            if (ord < w.min_order)
                continue;
            int s = monomial_sign(reg, ma, mb);
            if (s == 0)
                continue;
            auto m = monomial_product(ma, mb);
            Rational v = fa * cb;
            if (s < 0)
                v = -v;
            for (auto& [bc, q] : c.terms()) {
                auto& terms = acc[bc];
                auto [it, inserted] = terms.try_emplace(m, v * q);
                if (!inserted) {
                    it->second += v * q;
                    if (it->second == 0)
                        terms.erase(it);
                }
            }
        }
    }
}

ParamCochain collect(const ParamCochain& like, std::map<BasisCochain, GrassmannSeries::Terms>& acc)
{
    ParamCochain out(like.space(), like.registry(), like.cutoff());
    for (auto& [b, terms] : acc) {
        GrassmannSeries s(like.registry(), like.cutoff());
        for (auto& [m, c] : terms)
            s.add_term(m, c);
        out.add(b, s);
    }
    return out;
}

}

ParamCochain bracket(const ParamCochain& x, const ParamCochain& y, BracketTable& table, const BracketWindow& w)
{
    std::map<BasisCochain, GrassmannSeries::Terms> acc;
    const auto& reg = *x.registry();
    for (auto& [bx, sx] : x.terms())
        for (auto& [by, sy] : y.terms()) {
            if (bx.weight() + by.weight() - 1 > w.max_weight)
                continue;
            if (sx.min_order() + sy.min_order() > w.max_order)
                continue;
            const Cochain& c = table.get(bx, by);
            if (c.is_zero())
                continue;
            accumulate(acc, c, sx, sy, by.parity(x.space()), reg, w, Rational(1));
        }
    return collect(x, acc);
}

ParamCochain half_square(const ParamCochain& x, BracketTable& table, const BracketWindow& w)
{
    std::map<BasisCochain, GrassmannSeries::Terms> acc;
    const auto& reg = *x.registry();
    const Rational half(1, 2);
    for (auto ix = x.terms().begin(); ix != x.terms().end(); ++ix)
        for (auto iy = ix; iy != x.terms().end(); ++iy) {
            const auto& [bx, sx] = *ix;
            const auto& [by, sy] = *iy;
            if (bx.weight() + by.weight() - 1 > w.max_weight)
                continue;
            if (sx.min_order() + sy.min_order() > w.max_order)
                continue;
            const Cochain& c = table.get(bx, by);
            if (c.is_zero())
                continue;
            accumulate(acc, c, sx, sy, by.parity(x.space()), reg, w, ix == iy ? half : Rational(1));
        }
    return collect(x, acc);
}

ParamCochain exp_ad(const ParamCochain& x, int series_order, const ParamCochain& target, BracketTable& table)
{
    ParamCochain out = target;
    ParamCochain term = target;
    for (int k = 1; k <= series_order; ++k) {
        term = bracket(x, term, table);
        term *= Rational(1, k);
        if (term.is_zero())
            break;
        out += term;
    }
    return out;
}

std::string format_param_cochain(const ParamCochain& x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    for (auto& [b, s] : x.terms()) {
        if (!out.empty())
            out += "\n";
        out += format_basis(x.space(), b) + " : " + format_series(s);
    }
    return out;
}

}
