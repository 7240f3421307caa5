#include "linf/extend.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace linf {

namespace {

GrassmannMonomial mono(int u, int theta)
{
    return GrassmannMonomial(std::vector<std::uint8_t>{std::uint8_t(u), std::uint8_t(theta)});
}

std::string mono_text(int u, int theta)
{
    std::string out;
    if (u == 1)
        out = "u";
    else if (u > 1)
        out = "u^" + std::to_string(u);
    if (theta)
        out += out.empty() ? "theta" : "*theta";
    return out.empty() ? "1" : out;
}

// u-power of the order-m coefficient of a class.
int u_power(const ClassInfo& c, int m) { return c.parity == 1 ? m : m - 1; }
int theta_power(const ClassInfo& c) { return c.parity == 1 ? 0 : 1; }
// A relation has the parity of its class.
GrassmannMonomial relation_mono(const ClassInfo& c, int m) { return mono(c.parity == 1 ? m - 1 : m, c.parity); }
std::string relation_mono_text(const ClassInfo& c, int m) { return mono_text(c.parity == 1 ? m - 1 : m, c.parity); }

const ClassInfo& class_of(const DeformationState& st, const std::string& label)
{
    if (auto c = st.find_class(label))
        return *c;
    throw ContractViolation("unknown class label '" + label + "'");
}

std::vector<Rational> scaled(std::vector<Rational> v, const Rational& r)
{
    for (auto& x : v)
        x *= r;
    return v;
}

bool all_zero(const std::vector<Rational>& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

class Solver {
public:
    Solver(const DeformationState& st, const OneParameterDeformation& def, int target, int known)
        : st_(st), tgt_(one_parameter_registry()), target_(target), known_(known), coef_(st.classes.size())
    {
        for (std::size_t i = 0; i < st.classes.size(); ++i)
            for (int m = 1; m <= def.known_order; ++m) {
                Rational c = def.coefficient(st.classes[i].label, m);
                if (c != 0)
                    coef_[i][m] = c;
            }
        for (auto& r : st.relations)
            relation_class_.push_back(&class_of(st, r.origin));
    }

    ExtensionOutcome run(int lookahead)
    {
        ExtensionOutcome out;
        out.target_order = target_;
        out.lookahead = lookahead;
        for (int m = 2; m <= target_; ++m) {
            int j = m - 1;
            std::vector<Rational> rem;
            if (j <= known_) {
                rem = residue(m);
            } else {
                rem = step(j, {});
                log_order(out, j);
            }
            if (all_zero(rem))
                continue;
            if (j > known_ && try_lookahead(out, m, lookahead))
                continue;
            out.verdict = ExtensionOutcome::Verdict::obstructed;
            out.obstruction_order = m;
            out.max_order = m - 1;
            out.obstruction = Cochain(st_.space());
            auto eqs = equations(m);
            for (std::size_t i = 0; i < eqs.size(); ++i) {
                if (rem[i] == 0)
                    continue;
                const ClassInfo& c = *relation_class_[eqs[i]];
                out.obstruction += rem[i] * c.rep;
                out.obstruction_terms.push_back({c.label, rem[i], relation_mono_text(c, m)});
            }
            for (int k = known_ + 1; k <= m - 2; ++k)
                if (!system(k).kernel.empty())
                    out.obstruction_certain = false;
            out.witness = witness(m - 2);
            note_unchecked(out, m);
            return out;
        }
        out.verdict = ExtensionOutcome::Verdict::extends;
        out.max_order = target_;
        out.witness = witness(target_ - 1);
        note_unchecked(out, target_);
        return out;
    }

private:
    struct OrderSystem {
        RationalMatrix a;                           // equations x class unknowns
        std::vector<std::vector<Rational>> kernel;  // free directions
        std::vector<std::vector<Rational>> colspace; // row-reduced, with pivots
        std::vector<std::size_t> pivots;
    };

    // Relation indices certified at order m.
    std::vector<std::size_t> equations(int m) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < st_.relations.size(); ++i)
            if (st_.bracket_exact_through(relation_class_[i]->weight) >= m)
                out.push_back(i);
        return out;
    }

    std::map<std::size_t, GrassmannSeries> assignment(int cutoff) const
    {
        std::map<std::size_t, GrassmannSeries> f;
        for (std::size_t i = 0; i < st_.classes.size(); ++i) {
            const auto& c = st_.classes[i];
            GrassmannSeries s(tgt_, cutoff);
            for (auto& [m, v] : coef_[i])
                if (m <= cutoff)
                    s.add_term(mono(u_power(c, m), theta_power(c)), v);
            f[c.parameter] = s;
        }
        return f;
    }

    std::vector<Rational> residue(int m) const
    {
        auto f = assignment(m);
        std::vector<Rational> out;
        for (auto i : equations(m)) {
            const ClassInfo& c = *relation_class_[i];
            auto img = substitute(st_.relations[i].series.truncated(m), f, tgt_, m);
            out.push_back(img.coefficient(relation_mono(c, m)));
        }
        return out;
    }

    void set_order(int j, const std::vector<Rational>& x)
    {
        for (std::size_t i = 0; i < coef_.size(); ++i) {
            coef_[i].erase(j);
            if (i < x.size() && x[i] != 0)
                coef_[i][j] = x[i];
        }
    }

    // The residue at order j + 1 is affine in the order-j unknowns, with linear part
    // fixed by the order-one data.
    const OrderSystem& system(int j)
    {
        auto it = systems_.find(j);
        if (it != systems_.end())
            return it->second;
        auto saved = coef_;
        std::size_t n = coef_.size();
        set_order(j, {});
        auto base = residue(j + 1);
        OrderSystem sys;
        sys.a = RationalMatrix(base.size(), n);
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Rational> e(n);
            e[k] = 1;
            set_order(j, e);
            auto r = residue(j + 1);
            for (std::size_t i = 0; i < base.size(); ++i)
                sys.a(i, k) = r[i] - base[i];
        }
        coef_ = saved;
        sys.kernel = nullspace(sys.a);
        RationalMatrix t(n, base.size());
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t k = 0; k < n; ++k)
                t(k, i) = sys.a(i, k);
        auto rr = rref(t);
        for (std::size_t r = 0; r < rr.rank; ++r) {
            std::vector<Rational> row(base.size());
            for (std::size_t i = 0; i < base.size(); ++i)
                row[i] = rr.reduced(r, i);
            sys.colspace.push_back(row);
        }
        sys.pivots = rr.pivots;
        return systems_.emplace(j, std::move(sys)).first->second;
    }

    // Chooses the order-j coefficients (canonical solution plus lambda along the kernel)
    // and returns the part of the order-(j+1) residue outside the image.
    std::vector<Rational> step(int j, const std::vector<Rational>& lambda)
    {
        const OrderSystem& sys = system(j);
        set_order(j, {});
        auto r0 = residue(j + 1);
        auto rem = r0;
        for (std::size_t r = 0; r < sys.colspace.size(); ++r) {
            Rational c = rem[sys.pivots[r]];
            if (c != 0)
                for (std::size_t i = 0; i < rem.size(); ++i)
                    rem[i] -= c * sys.colspace[r][i];
        }
        std::vector<Rational> rhs(r0.size());
        for (std::size_t i = 0; i < r0.size(); ++i)
            rhs[i] = rem[i] - r0[i];
        auto x = solve(sys.a, rhs);
        if (!x)
            throw std::logic_error("inconsistent reduced system");
        for (std::size_t k = 0; k < lambda.size() && k < sys.kernel.size(); ++k)
            for (std::size_t i = 0; i < x->size(); ++i)
                (*x)[i] += lambda[k] * sys.kernel[k][i];
        set_order(j, *x);
        return rem;
    }

    // Re-solves orders from..m-1 with the given kernel coordinates on the revisable
    // orders and returns every remainder, concatenated.
    std::vector<Rational> chain(int from, int m, const std::vector<int>& revisable, const std::vector<Rational>& lambda)
    {
        std::vector<Rational> out;
        std::size_t pos = 0;
        for (int j = from; j <= m - 1; ++j) {
            std::vector<Rational> l;
            if (std::find(revisable.begin(), revisable.end(), j) != revisable.end()) {
                std::size_t k = system(j).kernel.size();
                l.assign(lambda.begin() + pos, lambda.begin() + pos + k);
                pos += k;
            }
            auto rem = step(j, l);
            out.insert(out.end(), rem.begin(), rem.end());
        }
        return out;
    }

    // Linearizes the remainders in the free directions of up to L earlier orders;
    // a candidate is accepted only after an exact re-run.
    bool try_lookahead(ExtensionOutcome& out, int m, int lookahead)
    {
        auto saved = coef_;
        for (int depth = 1; depth <= lookahead; ++depth) {
            int from = std::max(known_ + 1, m - 1 - depth);
            std::vector<int> revisable;
            std::size_t dims = 0;
            for (int j = from; j <= m - 2; ++j)
                if (auto k = system(j).kernel.size()) {
                    revisable.push_back(j);
                    dims += k;
                }
            if (dims == 0)
                continue;
            from = revisable.front();
            std::vector<Rational> lambda(dims);
            bool ok = false;
            for (int iter = 0; iter < 3 && !ok; ++iter) {
                coef_ = saved;
                auto f0 = chain(from, m, revisable, lambda);
                if (all_zero(f0)) {
                    ok = true;
                    break;
                }
                RationalMatrix jac(f0.size(), dims);
                for (std::size_t k = 0; k < dims; ++k) {
                    auto l = lambda;
                    l[k] += 1;
                    coef_ = saved;
                    auto f = chain(from, m, revisable, l);
                    for (std::size_t i = 0; i < f0.size(); ++i)
                        jac(i, k) = f[i] - f0[i];
                }
                auto delta = solve(jac, scaled(f0, -1));
                if (!delta)
                    break;
                for (std::size_t k = 0; k < dims; ++k)
                    lambda[k] += (*delta)[k];
            }
            if (!ok) {
                coef_ = saved;
                ok = all_zero(chain(from, m, revisable, lambda));
            }
            if (ok) {
                std::ostringstream os;
                os << "lookahead depth " << depth << " at order " << m << ": revised orders";
                for (int j : revisable)
                    os << " " << j;
                out.free_choices.push_back(os.str());
                for (int j = from; j <= m - 1; ++j)
                    log_order(out, j);
                return true;
            }
        }
        coef_ = saved;
        return false;
    }

    void log_order(ExtensionOutcome& out, int j)
    {
        const OrderSystem& sys = system(j);
        std::ostringstream os;
        os << "order " << j << ": " << coef_.size() << " unknowns, " << sys.a.rows() << " conditions, "
           << sys.kernel.size() << " free";
        bool any = false;
        for (std::size_t i = 0; i < coef_.size(); ++i) {
            auto it = coef_[i].find(j);
            if (it == coef_[i].end())
                continue;
            const auto& c = st_.classes[i];
            os << (any ? ", " : "; set ") << c.label << " = " << to_string(it->second) << "*"
               << mono_text(u_power(c, j), theta_power(c));
            any = true;
        }
        out.free_choices.push_back(os.str());
    }

    OneParameterDeformation witness(int through) const
    {
        OneParameterDeformation w;
        w.known_order = std::max(through, 1);
        for (std::size_t i = 0; i < coef_.size(); ++i) {
            const auto& c = st_.classes[i];
            for (auto& [m, v] : coef_[i])
                if (m <= w.known_order)
                    (c.parity == 1 ? w.even_part : w.odd_part)[c.label][m] = v;
        }
        return w;
    }

    void note_unchecked(ExtensionOutcome& out, int order) const
    {
        for (std::size_t i = 0; i < st_.relations.size(); ++i) {
            int e = st_.bracket_exact_through(relation_class_[i]->weight);
            if (e < order)
                out.unchecked.push_back({st_.relations[i].origin, e});
        }
    }

    const DeformationState& st_;
    RegistryPtr tgt_;
    int target_;
    int known_;
    std::vector<std::map<int, Rational>> coef_; // by class, keyed by order
    std::vector<const ClassInfo*> relation_class_;
    std::map<int, OrderSystem> systems_;
};

}

Rational OneParameterDeformation::coefficient(const std::string& label, int order) const
{
    for (auto* part : {&even_part, &odd_part}) {
        auto it = part->find(label);
        if (it == part->end())
            continue;
        auto jt = it->second.find(order);
        if (jt != it->second.end())
            return jt->second;
    }
    return 0;
}

RegistryPtr one_parameter_registry()
{
    static RegistryPtr reg = make_registry({{"u", 0, 0, ""}, {"theta", 1, 0, ""}});
    return reg;
}

OneParameterDeformation parse_deformation(const DeformationState& st, const std::string& text)
{
    OneParameterDeformation def;
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw ContractViolation("empty deformation");
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= s.size(); ++i)
        if (i == s.size() ||
            ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '+' && s[i - 1] != '-')) {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    int top = 0;
    for (auto t : terms) {
        Rational coef = 1;
        while (!t.empty() && (t[0] == '+' || t[0] == '-')) {
            if (t[0] == '-')
                coef = -coef;
            t = t.substr(1);
        }
        if (t.empty())
            throw ContractViolation("dangling sign in '" + text + "'");
        if (t == "0")
            continue;
        std::string label;
        int u = 0, theta = 0;
        std::stringstream ss(t);
        std::string f;
        while (std::getline(ss, f, '*')) {
            if (f.empty())
                throw ContractViolation("malformed term '" + t + "'");
            if (std::isdigit(static_cast<unsigned char>(f[0]))) {
                try {
                    coef *= parse_rational(f);
                } catch (const std::invalid_argument&) {
                    throw ContractViolation("bad coefficient '" + f + "'");
                }
            } else if (f == "u") {
                u += 1;
            } else if (f.rfind("u^", 0) == 0) {
                u += std::stoi(f.substr(2));
            } else if (f == "theta") {
                if (theta)
                    throw ContractViolation("theta squared in '" + t + "'");
                theta = 1;
            } else {
                if (!label.empty())
                    throw ContractViolation("two class labels in '" + t + "'");
                label = f;
            }
        }
        if (label.empty())
            throw ContractViolation("no class label in '" + t + "'");
        const ClassInfo& c = class_of(st, label);
        if (theta_power(c) != theta)
            throw ContractViolation("class " + label + (c.parity == 1 ? " takes plain u powers" : " needs a theta factor"));
        int order = u + theta;
        if (order < 1)
            throw ContractViolation("term '" + t + "' has no parameter");
        auto& slot = (c.parity == 1 ? def.even_part : def.odd_part)[label][order];
        slot += coef;
        if (slot == 0)
            (c.parity == 1 ? def.even_part : def.odd_part)[label].erase(order);
        top = std::max(top, order);
    }
    for (auto* part : {&def.even_part, &def.odd_part})
        for (auto it = part->begin(); it != part->end();)
            it = it->second.empty() ? part->erase(it) : std::next(it);
    def.known_order = std::max(top, 1);
    return def;
}

std::string format_deformation(const DeformationState& st, const OneParameterDeformation& def)
{
    std::string out;
    for (auto& c : st.classes) {
        auto* part = c.parity == 1 ? &def.even_part : &def.odd_part;
        auto it = part->find(c.label);
        if (it == part->end())
            continue;
        for (auto& [m, v] : it->second) {
            if (v == 0)
                continue;
            if (!out.empty())
                out += " + ";
            out += to_string(v) + "*" + c.label + "*" + mono_text(u_power(c, m), theta_power(c));
        }
    }
    return out.empty() ? "0" : out;
}

std::map<std::size_t, GrassmannSeries> identification(const DeformationState& st, const OneParameterDeformation& def,
                                                      const RegistryPtr& target, int cutoff)
{
    for (auto* part : {&def.even_part, &def.odd_part})
        for (auto& [label, _] : *part)
            class_of(st, label);
    std::map<std::size_t, GrassmannSeries> f;
    for (auto& c : st.classes) {
        GrassmannSeries s(target, cutoff);
        for (int m = 1; m <= cutoff; ++m) {
            Rational v = def.coefficient(c.label, m);
            if (v != 0)
                s.add_term(mono(u_power(c, m), theta_power(c)), v);
        }
        f[c.parameter] = s;
    }
    return f;
}

std::vector<RelationResidue> evaluate_relations(const OneParameterDeformation& def, const DeformationState& st,
                                                int cutoff)
{
    auto tgt = one_parameter_registry();
    auto f = identification(st, def, tgt, cutoff);
    std::vector<RelationResidue> out;
    for (auto& r : st.relations) {
        const ClassInfo& c = class_of(st, r.origin);
        out.push_back({r.origin, c.weight, st.bracket_exact_through(c.weight),
                       substitute(r.series.truncated(cutoff), f, tgt, cutoff)});
    }
    return out;
}

namespace {

void check_target(const DeformationState& st, int target_order)
{
    if (target_order < 2)
        throw ContractViolation("target order must be at least 2");
    if (target_order > st.order_cutoff)
        throw ContractViolation("target order " + std::to_string(target_order) + " exceeds the order cutoff " +
                                std::to_string(st.order_cutoff));
}

}

ExtensionOutcome analyze(const OneParameterDeformation& def, const DeformationState& st, int target_order,
                         int lookahead)
{
    check_target(st, target_order);
    identification(st, def, one_parameter_registry(), 1);
    Solver solver(st, def, target_order, def.known_order);
    return solver.run(lookahead);
}

ExtensionOutcome check_completion(const OneParameterDeformation& def, const DeformationState& st, int target_order)
{
    check_target(st, target_order);
    identification(st, def, one_parameter_registry(), 1);
    Solver solver(st, def, target_order, target_order);
    auto out = solver.run(0);
    out.lookahead = 0;
    return out;
}

ParamCochain push_forward(const OneParameterDeformation& def, const DeformationState& st, int cutoff)
{
    auto tgt = one_parameter_registry();
    auto f = identification(st, def, tgt, cutoff);
    ParamCochain out(st.space(), tgt, cutoff);
    for (auto& [b, s] : st.current.terms())
        out.add(b, substitute(s.truncated(cutoff), f, tgt, cutoff));
    return out;
}

PushForwardCheck verify_push_forward(const ParamCochain& pf, const DeformationState& st)
{
    BracketWindow w;
    w.max_weight = st.space().weight_cutoff;
    w.max_order = pf.cutoff();
    auto sq = half_square(pf, *st.table, w);
    PushForwardCheck rep;
    rep.checked_order = pf.cutoff();
    for (auto& [b, s] : sq.terms()) {
        int limit = std::min(pf.cutoff(), st.bracket_exact_through(b.weight()));
        for (auto& [m, c] : s.terms())
            if (m.order <= limit && c != 0) {
                ++rep.surviving_terms;
                if (rep.lowest_surviving_order < 0 || m.order < rep.lowest_surviving_order)
                    rep.lowest_surviving_order = m.order;
            }
    }
    return rep;
}

std::string format_outcome(const DeformationState& st, const ExtensionOutcome& out)
{
    std::ostringstream os;
    const auto& sp = st.space();
    os << "Extension analysis\n";
    os << "  space: " << sp.even_count << " even | " << sp.odd_count << " odd, weight cutoff " << sp.weight_cutoff
       << ", order cutoff " << st.order_cutoff << "\n";
    os << "  sign calibration: +1\n";
    os << "  target order " << out.target_order << ", lookahead " << out.lookahead << "\n";
    if (out.verdict == ExtensionOutcome::Verdict::extends) {
        os << "  verdict: EXTENDS through order " << out.target_order << "\n";
    } else {
        os << "  verdict: OBSTRUCTED at order " << out.obstruction_order << " (extends to order " << out.max_order
           << ")";
        if (!out.obstruction_certain)
            os << " within lookahead " << out.lookahead;
        os << "\n  obstruction: ";
        bool first = true;
        for (auto& t : out.obstruction_terms) {
            os << (first ? "" : " + ") << to_string(t.coefficient) << "*" << t.label << " " << t.monomial;
            first = false;
        }
        os << "\n";
    }
    os << "  witness: " << format_deformation(st, out.witness) << "\n";
    os << "  solver path:\n";
    if (out.free_choices.empty())
        os << "    no free orders\n";
    for (auto& c : out.free_choices)
        os << "    " << c << "\n";
    if (!out.unchecked.empty()) {
        os << "  relations checked only through:";
        for (auto& [l, e] : out.unchecked)
            os << " " << l << "(" << e << ")";
        os << "\n";
    }
    return os.str();
}

std::string format_outcome_structured(const DeformationState& st, const ExtensionOutcome& out)
{
    std::ostringstream os;
    const auto& sp = st.space();
    os << "# linf extend v1\n";
    os << "space even=" << sp.even_count << " odd=" << sp.odd_count << " weight_cutoff=" << sp.weight_cutoff
       << "\n";
    os << "codifferential " << format_cochain(st.d) << "\n";
    os << "sign_calibration +1\n";
    os << "order_cutoff " << st.order_cutoff << " target_order " << out.target_order << " lookahead " << out.lookahead
       << "\n";
    if (out.verdict == ExtensionOutcome::Verdict::extends) {
        os << "verdict extends max_order=" << out.max_order << "\n";
    } else {
        os << "verdict obstructed order=" << out.obstruction_order << " max_order=" << out.max_order
           << " certain=" << (out.obstruction_certain ? "yes" : "no") << "\n";
        for (auto& t : out.obstruction_terms)
            os << "obstruction class=" << t.label << " coefficient=" << to_string(t.coefficient)
               << " monomial=" << t.monomial << "\n";
        os << "obstruction_cochain " << format_cochain(out.obstruction) << "\n";
    }
    for (auto& c : st.classes)
        for (int m = 1; m <= out.witness.known_order; ++m) {
            Rational v = out.witness.coefficient(c.label, m);
            if (v != 0)
                os << "witness class=" << c.label << " order=" << m << " coefficient=" << to_string(v)
                   << " monomial=" << mono_text(u_power(c, m), theta_power(c)) << "\n";
        }
    for (auto& c : out.free_choices)
        os << "path " << c << "\n";
    for (auto& [l, e] : out.unchecked)
        os << "unchecked relation=" << l << " exact_through=" << e << "\n";
    return os.str();
}

}
