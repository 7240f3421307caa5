#include "linf/versal.hpp"

#include <algorithm>
#include <sstream>

namespace linf {

std::vector<int> DeformationState::grading() const
{
    std::vector<int> g;
    for (auto& p : registry->params())
        g.push_back(d_weight - p.weight);
    return g;
}

RelationSet DeformationState::relation_set() const
{
    return RelationSet(registry, order_cutoff, relations, grading());
}

int DeformationState::bracket_exact_through(int w) const
{
    return w >= 1 && w < int(bracket_exact_order.size()) ? bracket_exact_order[w] : 0;
}

int DeformationState::correction_exact_through(int w) const
{
    return w >= 1 && w < int(correction_exact_order.size()) ? correction_exact_order[w] : 0;
}

const CorrectionTerm* DeformationState::correction(const std::string& label) const
{
    for (auto& c : corrections)
        if (c.label == label)
            return &c;
    return nullptr;
}

const ClassInfo* DeformationState::find_class(const std::string& label) const
{
    for (auto& c : classes)
        if (c.label == label)
            return &c;
    return nullptr;
}

VersalOptions options_from(const Preset& p)
{
    return {p.class_seeds, p.complement_seeds, p.parameter_names};
}

namespace {

// Corrections of weight w come from coboundaries of weight w + k - 1; above the
// working weight they are never computed, and the gap spreads to lower weights
// one bracket at a time. Iterates the first-affected orders to a fixed point.
void exact_windows(DeformationState& st)
{
    int W = st.working_weight(), k = st.d_weight, inf = st.order_cutoff + 1;
    std::vector<int> minord(W + 1, 2), T(W + 1, inf), c(W + 1, inf);
    for (auto& cl : st.classes)
        minord[cl.weight] = 1;
    if (k <= W)
        minord[k] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int w = W; w >= 1; --w) {
            int s = w + k - 1;
            int cw = std::min(c[w], s > W ? 2 : T[s]);
            int tw = T[w];
            for (int w1 = 1; w1 <= w; ++w1)
                if (int w2 = w + 1 - w1; w2 <= W)
                    tw = std::min(tw, c[w1] + minord[w2]);
            tw = std::min(tw, inf);
            if (cw != c[w] || tw != T[w])
                changed = true;
            c[w] = cw;
            T[w] = tw;
        }
    }
    st.bracket_exact_order.assign(W + 1, 0);
    st.correction_exact_order.assign(W + 1, 0);
    for (int w = 1; w <= W; ++w) {
        st.bracket_exact_order[w] = T[w] - 1;
        st.correction_exact_order[w] = c[w] - 1;
    }
}

std::string generic_parameter_name(const std::string& label)
{
    std::string out = "u";
    for (char c : label.substr(label[0] == 'h' ? 1 : 0))
        out += (c == '.' || c == ',') ? '_' : c;
    return out;
}

}

DeformationState infinitesimal(const Cochain& d, int order_cutoff, const VersalOptions& opts)
{
    if (d.parity() != 1)
        throw ContractViolation("codifferential must be odd");
    auto check = is_codifferential(d);
    if (!check.ok)
        throw ContractViolation("not a codifferential: [d,d] = " + format_cochain(check.witness));
    if (order_cutoff < 1)
        throw ContractViolation("order cutoff must be positive");

    DeformationState st;
    st.d = d;
    st.d_weight = homogeneous_weight(d);
    st.order = 1;
    st.order_cutoff = order_cutoff;
    st.cohomology = std::make_shared<CohomologyTable>(d, opts.class_seeds, opts.complement_seeds);
    st.table = std::make_shared<BracketTable>(d.space());
    const auto& coh = *st.cohomology;

    auto seed_rank = [&](const std::string& label) {
        for (std::size_t i = 0; i < opts.class_seeds.size(); ++i)
            if (opts.class_seeds[i].label == label)
                return i;
        return opts.class_seeds.size();
    };
    std::vector<Parameter> params;
    for (int w = 1; w <= coh.max_weight(); ++w) {
        std::vector<ClassInfo> here;
        for (int p = 0; p < 2; ++p) {
            const auto& blk = coh.block(w, p);
            for (std::size_t i = 0; i < blk.classes.size(); ++i)
                here.push_back({blk.classes[i].label, w, p, i, 0, blk.classes[i].rep});
        }
        std::stable_sort(here.begin(), here.end(),
                         [&](const ClassInfo& a, const ClassInfo& b) { return seed_rank(a.label) < seed_rank(b.label); });
        for (auto& c : here) {
            c.parameter = params.size();
            auto it = opts.parameter_names.find(c.label);
            std::string name = it != opts.parameter_names.end() ? it->second : generic_parameter_name(c.label);
            params.push_back({name, 1 - c.parity, w, c.label});
            st.classes.push_back(c);
        }
    }
    st.registry = make_registry(params);
    st.current = ParamCochain(d.space(), st.registry, order_cutoff);
    st.current.add(d, GrassmannSeries::constant(st.registry, order_cutoff, 1));
    for (auto& c : st.classes) {
        st.current.add(c.rep, GrassmannSeries::generator(st.registry, order_cutoff, c.parameter));
        st.relations.push_back({c.label, GrassmannSeries(st.registry, order_cutoff)});
    }
    exact_windows(st);
    if (coh.max_weight() < d.space().weight_cutoff)
        st.warnings.push_back("classes of weight > " + std::to_string(coh.max_weight()) +
                              " are not represented (weight cutoff " + std::to_string(d.space().weight_cutoff) + ")");
    return st;
}

DeformationState step(const DeformationState& state)
{
    if (state.order >= state.order_cutoff)
        return state;
    DeformationState st = state;
    int n = st.order + 1;
    const auto& coh = *st.cohomology;
    const auto& space = st.space();
    const auto& reg = *st.registry;
    BracketWindow win{st.working_weight(), n, n};
    ParamCochain B = half_square(st.current, *st.table, win);

    std::map<std::pair<int, GrassmannMonomial>, Cochain> groups;
    for (auto& [b, s] : B.terms())
        for (auto& [m, c] : s.terms()) {
            auto key = std::make_pair(b.weight(), m);
            auto it = groups.find(key);
            if (it == groups.end())
                it = groups.emplace(key, Cochain(space)).first;
            it->second.add_term(b, c);
        }

    std::map<std::string, std::size_t> class_pos;
    for (std::size_t i = 0; i < st.classes.size(); ++i)
        class_pos[st.classes[i].label] = i;
    std::map<std::string, std::size_t> corr_pos;
    for (std::size_t i = 0; i < st.corrections.size(); ++i)
        corr_pos[st.corrections[i].label] = i;

    ParamCochain added(space, st.registry, st.order_cutoff);
    for (auto& [key, cochain] : groups) {
        if (cochain.is_zero())
            continue;
        const auto& [w, m] = key;
        int mp = monomial_parity(reg, m);
        auto co = coh.decompose(cochain);
        const auto& blk = coh.block(w, cochain.parity());
        GrassmannSeries mono(st.registry, st.order_cutoff);
        mono.add_term(m, 1);
        for (std::size_t i = 0; i < co.classes.size(); ++i)
            if (co.classes[i] != 0)
                st.relations[class_pos.at(blk.classes[i].label)].series += co.classes[i] * mono;
        if (w - st.d_weight + 1 < 1)
            continue;
        const auto& src = coh.block(w - st.d_weight + 1, 1 - cochain.parity());
        for (std::size_t j = 0; j < co.coboundaries.size(); ++j) {
            if (co.coboundaries[j] == 0)
                continue;
            const auto& pre = src.complement[blk.coboundary_source[j]];
            Rational a = mp ? co.coboundaries[j] : Rational(-co.coboundaries[j]);
            auto it = corr_pos.find(pre.label);
            if (it == corr_pos.end()) {
                it = corr_pos.emplace(pre.label, st.corrections.size()).first;
                st.corrections.push_back({pre.label, pre.rep.min_weight(), pre.rep, GrassmannSeries(st.registry, st.order_cutoff)});
            }
            st.corrections[it->second].series += a * mono;
            added.add(pre.rep, a * mono);
        }
    }
    if (!added.is_zero()) {
        st.current += added;
        st.correction_orders.push_back(n);
    }
    st.order = n;
    return st;
}

ConstructResult construct(const Cochain& d, int max_order, const VersalOptions& opts)
{
    if (max_order < 1)
        throw ContractViolation("max_order must be positive");
    ConstructResult r{infinitesimal(d, max_order, opts), false, 1};
    while (r.state.order < max_order)
        r.state = step(r.state);
    r.closed_at = r.state.last_correction_order();
    if (r.closed_at < max_order || r.state.classes.empty()) {
        auto rep = verify_bracket_vanishes(r.state);
        r.closed = rep.lowest_surviving_order == -1;
    }
    return r;
}

VanishingReport verify_bracket_vanishes(const DeformationState& state)
{
    VanishingReport rep;
    const auto& coh = *state.cohomology;
    const auto& space = state.space();
    auto rels = state.relation_set();
    BracketWindow win{state.working_weight(), 0, state.order_cutoff};
    ParamCochain B = half_square(state.current, *state.table, win);
    auto note = [](int& slot, int o) { slot = slot == -1 ? o : std::min(slot, o); };
    for (auto& [b, s] : B.terms()) {
        auto r = rels.reduce(s);
        int limit = state.bracket_exact_through(b.weight());
        for (auto& [m, c] : r.terms()) {
            if (m.order <= limit) {
                ++rep.surviving_terms;
                note(rep.lowest_surviving_order, m.order);
            } else {
                note(rep.lowest_surviving_order_unchecked, m.order);
            }
            note(rep.lowest_by_weight.try_emplace(b.weight(), -1).first->second, m.order);
        }
    }

    std::map<std::pair<int, GrassmannMonomial>, Cochain> groups;
    for (auto& [b, s] : B.terms())
        for (auto& [m, c] : s.terms()) {
            auto key = std::make_pair(b.weight(), m);
            auto it = groups.find(key);
            if (it == groups.end())
                it = groups.emplace(key, Cochain(space)).first;
            it->second.add_term(b, c);
        }
    std::map<std::string, GrassmannSeries> raw;
    std::map<std::string, int> weights;
    std::vector<std::string> order;
    for (auto& [key, cochain] : groups) {
        if (cochain.is_zero())
            continue;
        auto co = coh.decompose(cochain);
        const auto& blk = coh.block(key.first, cochain.parity());
        GrassmannSeries mono(state.registry, state.order_cutoff);
        mono.add_term(key.second, 1);
        for (std::size_t j = 0; j < co.complement.size(); ++j) {
            if (co.complement[j] == 0)
                continue;
            const auto& label = blk.complement[j].label;
            auto it = raw.find(label);
            if (it == raw.end()) {
                it = raw.emplace(label, GrassmannSeries(state.registry, state.order_cutoff)).first;
                order.push_back(label);
                weights[label] = key.first;
            }
            it->second += co.complement[j] * mono;
        }
    }
    for (auto& label : order) {
        const auto& s = raw.at(label);
        if (s.is_zero())
            continue;
        rep.complement.push_back({label, weights.at(label), s, rels.reduce(s)});
    }
    return rep;
}

namespace {

const char* parity_name(int p)
{
    return p ? "odd" : "even";
}

std::string status_line(const DeformationState& st, bool closed, int closed_at)
{
    if (closed)
        return "closed at order " + std::to_string(closed_at) + " (no corrections through order " +
               std::to_string(st.order) + ")";
    return "truncated at order " + std::to_string(st.order);
}

}

std::string dump_structured(const DeformationState& st, bool closed, int closed_at)
{
    std::ostringstream os;
    const auto& s = st.space();
    os << "# linf versal v1\n";
    os << "space even=" << s.even_count << " odd=" << s.odd_count << " weight_cutoff=" << s.weight_cutoff << "\n";
    os << "codifferential " << format_cochain(st.d) << "\n";
    os << "sign_calibration " << (kSignCalibration > 0 ? "+1" : "-1") << "\n";
    os << "order " << st.order << " order_cutoff " << st.order_cutoff << "\n";
    os << "status " << status_line(st, closed, closed_at) << "\n";
    for (int w = 1; w <= st.working_weight(); ++w)
        os << "window weight=" << w << " bracket_exact_order=" << st.bracket_exact_through(w)
           << " correction_exact_order=" << st.correction_exact_through(w) << "\n";
    for (auto& c : st.classes) {
        const auto& p = (*st.registry)[c.parameter];
        os << "param " << p.name << " parity=" << parity_name(p.parity) << " weight=" << p.weight << " class=" << c.label
           << " rep=" << format_cochain(c.rep) << "\n";
    }
    for (auto& c : st.corrections)
        os << "correction " << c.label << " weight=" << c.weight << " rep=" << format_cochain(c.rep) << " : "
           << format_series(c.series) << "\n";
    for (auto& r : st.relations)
        os << "relation " << r.origin << " : " << format_series(r.series) << "\n";
    for (auto& w : st.warnings)
        os << "warning " << w << "\n";
    return os.str();
}

std::string dump_table(const DeformationState& st, bool closed, int closed_at)
{
    std::ostringstream os;
    const auto& s = st.space();
    os << "Versal deformation of " << format_cochain(st.d) << "\n";
    os << "  space: " << s.even_count << " even | " << s.odd_count << " odd, weight cutoff " << s.weight_cutoff
       << ", order cutoff " << st.order_cutoff << "\n";
    os << "  sign calibration: " << (kSignCalibration > 0 ? "+1" : "-1") << "\n";
    os << "  status: " << status_line(st, closed, closed_at) << "\n";
    os << "  validity window (weight: highest exact order of relations / corrections):";
    for (int w = 1; w <= st.working_weight(); ++w)
        os << (w == 1 ? " " : ", ") << w << ": " << st.bracket_exact_through(w) << "/" << st.correction_exact_through(w);
    os << "\n\nParameters\n";
    if (st.classes.empty())
        os << "  none\n";
    for (auto& c : st.classes) {
        const auto& p = (*st.registry)[c.parameter];
        os << "  " << p.name << " (" << parity_name(p.parity) << ", weight " << p.weight << ")  " << c.label << " = "
           << format_cochain(c.rep) << "\n";
    }
    os << "\nCorrections\n";
    if (st.corrections.empty())
        os << "  none\n";
    for (auto& c : st.corrections)
        os << "  " << c.label << " = " << format_cochain(c.rep) << "\n      " << format_series(c.series) << "\n";
    os << "\nRelations\n";
    if (st.relations.empty())
        os << "  none\n";
    for (auto& r : st.relations)
        os << "  " << r.origin << ": " << (r.series.is_zero() ? "trivial" : format_series(r.series) + " = 0") << "\n";
    for (auto& w : st.warnings)
        os << "\nwarning: " << w << "\n";
    return os.str();
}

}
