#include "linf/paramring.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace linf {

ParameterRegistry::ParameterRegistry(std::vector<Parameter> params) : params_(std::move(params))
{
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (params_[i].parity != 0 && params_[i].parity != 1)
            throw ContractViolation("parameter parity must be 0 or 1");
        if (!by_name_.emplace(params_[i].name, i).second)
            throw ContractViolation("duplicate parameter name " + params_[i].name);
    }
}

std::optional<std::size_t> ParameterRegistry::find(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        return std::nullopt;
    return it->second;
}

std::size_t ParameterRegistry::index(const std::string& name) const
{
    auto i = find(name);
    if (!i)
        throw ContractViolation("unknown parameter " + name);
    return *i;
}

RegistryPtr make_registry(std::vector<Parameter> params)
{
    return std::make_shared<const ParameterRegistry>(std::move(params));
}

GrassmannMonomial::GrassmannMonomial(std::vector<std::uint8_t> e) : exps(std::move(e))
{
    for (auto x : exps)
        order += x;
}

int monomial_parity(const ParameterRegistry& reg, const GrassmannMonomial& m)
{
    int p = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i] && reg.is_odd(i))
            p ^= 1;
    return p;
}

int monomial_sign(const ParameterRegistry& reg, const GrassmannMonomial& a, const GrassmannMonomial& b)
{
    int s = 0, odd_after = 0;
    for (std::size_t i = a.exps.size(); i-- > 0;) {
        if (!reg.is_odd(i))
            continue;
        if (a.exps[i] && b.exps[i])
            return 0;
        if (b.exps[i])
            s += odd_after;
        odd_after += a.exps[i];
    }
    return (s & 1) ? -1 : 1;
}

GrassmannMonomial monomial_product(const GrassmannMonomial& a, const GrassmannMonomial& b)
{
    GrassmannMonomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        m.exps[i] += b.exps[i];
    m.order = a.order + b.order;
    return m;
}

GrassmannSeries GrassmannSeries::constant(RegistryPtr reg, int cutoff, const Rational& c)
{
    GrassmannSeries s(reg, cutoff);
    s.add_term(GrassmannMonomial(reg->size()), c);
    return s;
}

GrassmannSeries GrassmannSeries::generator(RegistryPtr reg, int cutoff, std::size_t index, const Rational& c)
{
    GrassmannSeries s(reg, cutoff);
    GrassmannMonomial m(reg->size());
    m.exps.at(index) = 1;
    m.order = 1;
    s.add_term(m, c);
    return s;
}

GrassmannSeries GrassmannSeries::generator(RegistryPtr reg, int cutoff, const std::string& name, const Rational& c)
{
    auto i = reg->index(name);
    return generator(std::move(reg), cutoff, i, c);
}

void GrassmannSeries::add_term(const GrassmannMonomial& m, const Rational& c)
{
    if (c == 0 || m.order > cutoff_)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational GrassmannSeries::coefficient(const GrassmannMonomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int GrassmannSeries::min_order() const
{
    return terms_.empty() ? -1 : terms_.begin()->first.order;
}

int GrassmannSeries::parity() const
{
    int p = -1;
    for (auto& [m, c] : terms_) {
        int q = monomial_parity(*reg_, m);
        if (p == -1)
            p = q;
        else if (p != q)
            return -1;
    }
    return p == -1 ? 0 : p;
}

GrassmannSeries GrassmannSeries::order_part(int n) const
{
    GrassmannSeries r(reg_, cutoff_);
    for (auto& [m, c] : terms_)
        if (m.order == n)
            r.terms_.emplace(m, c);
    return r;
}

GrassmannSeries GrassmannSeries::truncated(int order) const
{
    GrassmannSeries r(reg_, cutoff_);
    for (auto& [m, c] : terms_)
        if (m.order <= order)
            r.terms_.emplace(m, c);
    return r;
}

GrassmannSeries GrassmannSeries::with_cutoff(int cutoff) const
{
    GrassmannSeries r(reg_, cutoff);
    for (auto& [m, c] : terms_)
        if (m.order <= cutoff)
            r.terms_.emplace(m, c);
    return r;
}

GrassmannSeries GrassmannSeries::parity_part(int p) const
{
    GrassmannSeries r(reg_, cutoff_);
    for (auto& [m, c] : terms_)
        if (monomial_parity(*reg_, m) == p)
            r.terms_.emplace(m, c);
    return r;
}

void GrassmannSeries::check(const GrassmannSeries& o) const
{
    if (reg_ != o.reg_ && !(o.is_zero() || is_zero()))
        throw ContractViolation("series over different parameter registries");
}

GrassmannSeries& GrassmannSeries::operator+=(const GrassmannSeries& o)
{
    check(o);
    if (!reg_)
        reg_ = o.reg_, cutoff_ = o.cutoff_;
    for (auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

GrassmannSeries& GrassmannSeries::operator-=(const GrassmannSeries& o)
{
    check(o);
    if (!reg_)
        reg_ = o.reg_, cutoff_ = o.cutoff_;
    for (auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

GrassmannSeries& GrassmannSeries::operator*=(const Rational& r)
{
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= r;
    return *this;
}

GrassmannSeries multiply(const GrassmannSeries& a, const GrassmannSeries& b)
{
    if (a.registry() != b.registry())
        throw ContractViolation("multiply: different parameter registries");
    if (a.cutoff() != b.cutoff())
        throw ContractViolation("multiply: cutoffs differ");
    GrassmannSeries out(a.registry(), a.cutoff());
    const auto& reg = *a.registry();
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            if (ma.order + mb.order > a.cutoff())
                break;
            int s = monomial_sign(reg, ma, mb);
            if (s == 0)
                continue;
            Rational v = ca * cb;
            if (s != 1)
                v = -v;
            out.add_term(monomial_product(ma, mb), v);
        }
    }
    return out;
}

GrassmannSeries substitute(const GrassmannSeries& s, const std::map<std::size_t, GrassmannSeries>& assignment,
                           RegistryPtr target, int target_cutoff)
{
    const auto& reg = *s.registry();
    std::vector<GrassmannSeries> image(reg.size());
    std::vector<bool> ready(reg.size(), false);
    auto image_of = [&](std::size_t i) -> const GrassmannSeries& {
        if (ready[i])
            return image[i];
        auto it = assignment.find(i);
        if (it != assignment.end()) {
            if (it->second.registry() != target && !it->second.is_zero())
                throw ContractViolation("assignment series over the wrong registry");
            if (!it->second.is_zero() && it->second.parity() != reg[i].parity)
                throw ContractViolation("assignment for " + reg[i].name + " does not preserve parity");
            image[i] = it->second.is_zero() ? GrassmannSeries(target, target_cutoff) : it->second.with_cutoff(target_cutoff);
        } else {
            if (target != s.registry())
                throw ContractViolation("no assignment for " + reg[i].name);
            image[i] = GrassmannSeries::generator(target, target_cutoff, i);
        }
        ready[i] = true;
        return image[i];
    };
    for (auto& [i, img] : assignment) {
        if (i >= reg.size())
            throw ContractViolation("assignment index out of range");
        image_of(i);
    }
    std::vector<std::vector<GrassmannSeries>> powers(reg.size());
    auto power = [&](std::size_t i, int e) -> const GrassmannSeries& {
        auto& p = powers[i];
        if (p.empty())
            p.push_back(GrassmannSeries::constant(target, target_cutoff, 1));
        while (static_cast<int>(p.size()) <= e)
            p.push_back(multiply(p.back(), image_of(i)));
        return p[e];
    };
    GrassmannSeries out(target, target_cutoff);
    for (auto& [m, c] : s.terms()) {
        auto term = GrassmannSeries::constant(target, target_cutoff, c);
        for (std::size_t i = 0; i < m.exps.size() && !term.is_zero(); ++i)
            if (m.exps[i])
                term = multiply(term, power(i, m.exps[i]));
        out += term;
    }
    return out;
}

std::string format_monomial(const ParameterRegistry& reg, const GrassmannMonomial& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (!m.exps[i])
            continue;
        if (!out.empty())
            out += "*";
        out += reg[i].name;
        if (m.exps[i] > 1)
            out += "^" + std::to_string(m.exps[i]);
    }
    return out;
}

std::string format_series(const GrassmannSeries& s)
{
    if (s.is_zero())
        return "0";
    std::string out;
    for (auto& [m, c] : s.terms()) {
        if (!out.empty())
            out += " + ";
        out += to_string(c);
        if (m.order > 0)
            out += "*" + format_monomial(*s.registry(), m);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GrassmannSeries& s)
{
    return os << format_series(s);
}

GrassmannSeries parse_series(RegistryPtr reg, int cutoff, const std::string& text)
{
    GrassmannSeries out(reg, cutoff);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto number = [&]() {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected integer", pos);
        return text.substr(start, pos - start);
    };
    skip();
    if (text.substr(pos) == "0")
        return out;
    bool first = true;
    while (true) {
        skip();
        if (pos >= text.size()) {
            if (first)
                throw ParseError("empty series", pos);
            break;
        }
        Rational sign = 1;
        bool had_sign = false;
        while (pos < text.size() && (text[pos] == '+' || text[pos] == '-' || std::isspace(static_cast<unsigned char>(text[pos])))) {
            if (text[pos] == '-')
                sign = -sign;
            if (text[pos] != ' ')
                had_sign = true;
            ++pos;
        }
        if (!first && !had_sign)
            throw ParseError("expected '+' or '-'", pos);
        Rational coef = 1;
        GrassmannSeries term = GrassmannSeries::constant(reg, cutoff, 1);
        bool need_factor = true;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::string num = number();
            if (pos < text.size() && text[pos] == '/') {
                ++pos;
                num += "/" + number();
            }
            coef = parse_rational(num);
            skip();
            need_factor = false;
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                need_factor = true;
            }
        }
        while (need_factor) {
            skip();
            std::size_t start = pos;
            while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                                         text[pos] == '.' || text[pos] == ','))
                ++pos;
            if (start == pos)
                throw ParseError("expected parameter name", pos);
            std::string name = text.substr(start, pos - start);
            auto idx = reg->find(name);
            if (!idx)
                throw ParseError("unknown parameter " + name, start);
            int e = 1;
            skip();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip();
                e = std::stoi(number());
            }
            auto g = GrassmannSeries::generator(reg, cutoff, *idx);
            for (int k = 0; k < e; ++k)
                term = multiply(term, g);
            skip();
            need_factor = pos < text.size() && text[pos] == '*';
            if (need_factor)
                ++pos;
        }
        out += (sign * coef) * term;
        first = false;
    }
    return out;
}

RelationSet::RelationSet(RegistryPtr reg, int cutoff, std::vector<Relation> relations,
                         std::optional<std::vector<int>> grading)
    : reg_(std::move(reg)), cutoff_(cutoff), relations_(std::move(relations)), grading_(std::move(grading))
{
    if (grading_ && grading_->size() != reg_->size())
        throw ContractViolation("grading must assign one degree per parameter");
    for (auto& r : relations_) {
        if (r.series.registry() != reg_ && !r.series.is_zero())
            throw ContractViolation("relation over the wrong registry");
        if (!r.series.is_zero() && r.series.cutoff() != cutoff_)
            throw ContractViolation("relation cutoff differs from the set cutoff");
    }
    if (grading_) {
        for (auto& r : relations_) {
            if (r.series.is_zero())
                continue;
            int d = degree(r.series.terms().begin()->first);
            for (auto& [m, c] : r.series.terms())
                if (degree(m) != d) {
                    grading_.reset();
                    return;
                }
        }
    }
}

RelationSet::RelationSet(const RelationSet& o)
    : reg_(o.reg_), cutoff_(o.cutoff_), relations_(o.relations_), grading_(o.grading_)
{
}

RelationSet& RelationSet::operator=(const RelationSet& o)
{
    if (this != &o) {
        std::scoped_lock lock(mutex_);
        reg_ = o.reg_;
        cutoff_ = o.cutoff_;
        relations_ = o.relations_;
        grading_ = o.grading_;
        blocks_.clear();
        multipliers_.clear();
        multipliers_built_ = false;
    }
    return *this;
}

int RelationSet::degree(const GrassmannMonomial& m) const
{
    if (!grading_)
        return 0;
    int d = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        d += (*grading_)[i] * m.exps[i];
    return d;
}

void RelationSet::build_monomials() const
{
    if (multipliers_built_)
        return;
    int min_rel = cutoff_ + 1;
    for (auto& r : relations_)
        if (!r.series.is_zero())
            min_rel = std::min(min_rel, r.series.min_order());
    int max_order = cutoff_ - min_rel;
    std::size_t n = reg_->size();
    GrassmannMonomial cur(n);
    std::vector<GrassmannMonomial> out;
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        int top = reg_->is_odd(i) ? std::min(1, remaining) : remaining;
        for (int e = 0; e <= top; ++e) {
            cur.exps[i] = static_cast<std::uint8_t>(e);
            cur.order += e;
            self(self, i + 1, remaining - e);
            cur.order -= e;
        }
        cur.exps[i] = 0;
    };
    if (max_order >= 0)
        rec(rec, 0, max_order);
    multipliers_ = std::move(out);
    multipliers_built_ = true;
}

void RelationSet::reduce_row(Row& r, const Block& b) const
{
    auto it = r.begin();
    while (it != r.end()) {
        auto p = b.pivots.find(it->first);
        if (p == b.pivots.end()) {
            ++it;
            continue;
        }
        GrassmannMonomial key = it->first;
        Rational f = it->second;
        for (auto& [m, c] : p->second) {
            auto [jt, inserted] = r.try_emplace(m, Rational(-f * c));
            if (!inserted) {
                jt->second -= f * c;
                if (jt->second == 0)
                    r.erase(jt);
            }
        }
        it = r.upper_bound(key);
    }
}

const RelationSet::Block& RelationSet::block(int deg) const
{
    auto found = blocks_.find(deg);
    if (found != blocks_.end())
        return found->second;
    build_monomials();
    Block b;
    for (auto& rel : relations_) {
        if (rel.series.is_zero())
            continue;
        int rd = degree(rel.series.terms().begin()->first);
        int ro = rel.series.min_order();
        for (auto& m : multipliers_) {
            if (m.order + ro > cutoff_)
                continue;
            if (grading_ && degree(m) + rd != deg)
                continue;
            Row row;
            for (auto& [rm, c] : rel.series.terms()) {
                if (m.order + rm.order > cutoff_)
                    continue;
                int s = monomial_sign(*reg_, m, rm);
                if (s == 0)
                    continue;
                row.emplace(monomial_product(m, rm), s == 1 ? c : Rational(-c));
            }
            reduce_row(row, b);
            if (row.empty())
                continue;
            Rational inv = 1 / row.begin()->second;
            for (auto& [mm, c] : row)
                c *= inv;
            GrassmannMonomial key = row.begin()->first;
            b.pivots.emplace(std::move(key), std::move(row));
        }
    }
    return blocks_.emplace(deg, std::move(b)).first->second;
}

GrassmannSeries RelationSet::reduce(const GrassmannSeries& s) const
{
    if (s.is_zero())
        return s;
    if (s.registry() != reg_)
        throw ContractViolation("reduce: series over a different registry");
    if (s.cutoff() != cutoff_)
        throw ContractViolation("reduce: cutoffs differ");
    std::scoped_lock lock(mutex_);
    std::map<int, Row> parts;
    for (auto& [m, c] : s.terms())
        parts[degree(m)].emplace(m, c);
    GrassmannSeries out(reg_, cutoff_);
    for (auto& [deg, row] : parts) {
        reduce_row(row, block(deg));
        for (auto& [m, c] : row)
            out.add_term(m, c);
    }
    return out;
}

std::vector<GrassmannSeries> RelationSet::reduction_basis() const
{
    std::scoped_lock lock(mutex_);
    std::vector<int> degrees{0};
    if (grading_) {
        build_monomials();
        std::map<int, bool> seen;
        for (auto& rel : relations_) {
            if (rel.series.is_zero())
                continue;
            int rd = degree(rel.series.terms().begin()->first);
            for (auto& m : multipliers_)
                seen[degree(m) + rd] = true;
        }
        degrees.clear();
        for (auto& [d, _] : seen)
            degrees.push_back(d);
    }
    std::vector<GrassmannSeries> out;
    for (int d : degrees)
        for (auto& [key, row] : block(d).pivots) {
            GrassmannSeries g(reg_, cutoff_);
            for (auto& [m, c] : row)
                g.add_term(m, c);
            out.push_back(std::move(g));
        }
    return out;
}

}
