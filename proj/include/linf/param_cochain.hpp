#pragma once

#include "linf/bracket.hpp"
#include "linf/paramring.hpp"

namespace linf {

// Element of L tensored with the parameter ring: basis cochain -> series.
// Series sit to the right of cochains, so [c1 a1, c2 a2] = (-1)^{|a1||c2|} [c1,c2] a1 a2.
class ParamCochain {
public:
    using Terms = std::map<BasisCochain, GrassmannSeries>;

    ParamCochain() = default;
    ParamCochain(const SuperSpace& space, RegistryPtr reg, int cutoff)
        : space_(space), reg_(std::move(reg)), cutoff_(cutoff)
    {
    }

    const SuperSpace& space() const { return space_; }
    const RegistryPtr& registry() const { return reg_; }
    int cutoff() const { return cutoff_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const BasisCochain& b, const GrassmannSeries& s);
    void add(const Cochain& c, const GrassmannSeries& s);
    GrassmannSeries coefficient(const BasisCochain& b) const;
    // -1 when mixed
    int parity() const;
    ParamCochain order_part(int n) const;
    ParamCochain truncated_weight(int max_weight) const;

    ParamCochain& operator+=(const ParamCochain& o);
    ParamCochain& operator*=(const Rational& r);
    friend ParamCochain operator+(ParamCochain a, const ParamCochain& b) { return a += b; }
    friend ParamCochain operator*(const Rational& r, ParamCochain a) { return a *= r; }
    bool operator==(const ParamCochain& o) const { return terms_ == o.terms_; }

private:
    SuperSpace space_;
    RegistryPtr reg_;
    int cutoff_ = 0;
    Terms terms_;
};

struct BracketWindow {
    int max_weight = 1 << 30;
    int min_order = 0;
    int max_order = 1 << 30;
};

ParamCochain bracket(const ParamCochain& x, const ParamCochain& y, BracketTable& table, const BracketWindow& w = {});
// (1/2)[x,x] for x odd, using the symmetry of the pair sum.
ParamCochain half_square(const ParamCochain& x, BracketTable& table, const BracketWindow& w = {});

// sum_{k<=series_order} (ad x)^k (target) / k!, truncated by the series cutoff.
ParamCochain exp_ad(const ParamCochain& x, int series_order, const ParamCochain& target, BracketTable& table);

std::string format_param_cochain(const ParamCochain& x);

}
