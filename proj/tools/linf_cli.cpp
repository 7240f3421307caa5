#include "linf/bracket.hpp"
#include "linf/extend.hpp"
#include "linf/versal.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace linf;

namespace {

enum Exit { ok = 0, validation = 2, obstructed = 3, cutoff = 4 };

struct CliError {
    int code;
    std::string message;
};

struct Config {
    std::string space;
    std::string d;
    std::string preset;
    int weight_cutoff = 7;
    int order_cutoff = 5;
    std::string format = "table";
    std::string out;
    int lookahead = 2;
    std::string def;
    int target_order = 0;
};

struct Setup {
    SuperSpace space;
    Cochain d;
    VersalOptions opts;
    std::string profile; // preset name, empty for generic labels
};

SuperSpace parse_space(const std::string& text, int cutoff)
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CliError{validation, "--space expects O,E (odd count, even count)"};
    try {
        std::size_t a = 0, b = 0;
        int odd = std::stoi(text.substr(0, comma), &a);
        int even = std::stoi(text.substr(comma + 1), &b);
        if (a != comma || b != text.size() - comma - 1 || odd < 0 || even < 0 || odd + even == 0)
            throw std::invalid_argument("space");
        return SuperSpace(odd, even, cutoff);
    } catch (const std::logic_error&) {
        throw CliError{validation, "bad --space '" + text + "'"};
    }
}

Setup resolve(const Config& cfg)
{
    if (cfg.weight_cutoff < 1 || cfg.order_cutoff < 1)
        throw CliError{validation, "cutoffs must be positive"};
    Setup s;
    if (!cfg.preset.empty()) {
        if (!cfg.d.empty())
            throw CliError{validation, "give either --preset or --d, not both"};
        auto p = find_preset(cfg.preset, cfg.weight_cutoff);
        if (!p)
            throw CliError{validation, "unknown preset '" + cfg.preset + "' (type100, type010)"};
        if (!cfg.space.empty() && !(parse_space(cfg.space, cfg.weight_cutoff) == p->space))
            throw CliError{validation, "preset " + cfg.preset + " lives on --space 1,2"};
        s.space = p->space;
        s.d = p->d;
        s.opts = options_from(*p);
        s.profile = p->name;
    } else {
        if (cfg.d.empty())
            throw CliError{validation, "one of --preset or --d is required"};
        if (cfg.space.empty())
            throw CliError{validation, "--d needs --space O,E"};
        s.space = parse_space(cfg.space, cfg.weight_cutoff);
        try {
            s.d = parse_cochain(s.space, cfg.d);
        } catch (const RangeError& e) {
            throw CliError{cutoff, std::string("codifferential does not fit the weight cutoff: ") + e.what()};
        } catch (const std::exception& e) {
            throw CliError{validation, std::string("cannot parse --d: ") + e.what()};
        }
        for (const char* name : {"type100", "type010"}) {
            auto p = find_preset(name, cfg.weight_cutoff);
            if (p->space == s.space && p->d == s.d) {
                s.opts = options_from(*p);
                s.profile = name;
            }
        }
    }
    if (s.d.is_zero())
        throw CliError{validation, "the codifferential is zero"};
    if (s.d.parity() != 1)
        throw CliError{validation, "the codifferential must be odd"};
    try {
        homogeneous_weight(s.d);
    } catch (const ContractViolation&) {
        throw CliError{validation, "the codifferential must be homogeneous in weight"};
    }
    auto chk = is_codifferential(s.d);
    if (!chk.ok)
        throw CliError{validation, "[d,d] != 0, residual " + format_cochain(chk.witness)};
    return s;
}

std::string header_table(const std::string& title, const Setup& s, const Config& cfg)
{
    std::ostringstream os;
    os << title << " for d = " << format_cochain(s.d) << "\n";
    os << "  space: " << s.space.even_count << " even | " << s.space.odd_count << " odd, weight cutoff "
       << s.space.weight_cutoff << ", order cutoff " << cfg.order_cutoff << "\n";
    os << "  sign calibration: +1\n";
    os << "  labels: " << (s.profile.empty() ? "generic" : s.profile) << "\n";
    return os.str();
}

std::string header_structured(const std::string& kind, const Setup& s, const Config& cfg)
{
    std::ostringstream os;
    os << "# linf " << kind << " v1\n";
    os << "space even=" << s.space.even_count << " odd=" << s.space.odd_count
       << " weight_cutoff=" << s.space.weight_cutoff << "\n";
    os << "codifferential " << format_cochain(s.d) << "\n";
    os << "sign_calibration +1\n";
    os << "order_cutoff " << cfg.order_cutoff << "\n";
    os << "labels " << (s.profile.empty() ? "generic" : s.profile) << "\n";
    return os.str();
}

CohomologyTable make_table(const Setup& s)
{
    return CohomologyTable(s.d, s.opts.class_seeds, s.opts.complement_seeds);
}

std::string cmd_cohomology(const Setup& s, const Config& cfg)
{
    auto table = make_table(s);
    bool structured = cfg.format == "structured";
    std::ostringstream os;
    int W = table.max_weight();
    if (structured) {
        os << header_structured("cohomology", s, cfg) << "window complete_weights=" << W << "\n";
    } else {
        os << header_table("Cohomology", s, cfg) << "  validity window: blocks complete through weight " << W << "\n";
    }
    for (int w = 1; w <= W; ++w) {
        std::size_t e = table.dimension(w, 0), o = table.dimension(w, 1);
        if (structured)
            os << "dim weight=" << w << " even=" << e << " odd=" << o << " total=" << e + o << "\n";
        else
            os << "weight " << w << ": dim " << e + o << " (" << e << " even | " << o << " odd)\n";
        for (int p : {1, 0})
            for (auto& c : table.block(w, p).classes) {
                if (structured)
                    os << "class weight=" << w << " parity=" << (p ? "odd" : "even") << " label=" << c.label
                       << " rep=" << format_cochain(c.rep) << "\n";
                else
                    os << "  " << c.label << " = " << format_cochain(c.rep) << "\n";
            }
    }
    return os.str();
}

std::string in_labels(const CohomologyTable& table, const Cochain& c)
{
    if (c.is_zero())
        return "0";
    int w = homogeneous_weight(c);
    const auto& blk = table.block(w, c.parity());
    auto co = table.decompose(c);
    std::string out;
    auto add = [&](const std::vector<Rational>& v, const std::vector<LabeledCochain>& labels) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0)
                out += (out.empty() ? "" : " + ") + to_string(v[i]) + "*" + labels[i].label;
    };
    add(co.classes, blk.classes);
    add(co.coboundaries, blk.coboundaries);
    add(co.complement, blk.complement);
    return out;
}

std::string cmd_brackets(const Setup& s, const Config& cfg)
{
    auto table = make_table(s);
    BracketTable bt(s.space);
    bool structured = cfg.format == "structured";
    std::ostringstream os;
    int W = table.max_weight();
    if (structured)
        os << header_structured("brackets", s, cfg) << "window complete_weights=" << W << "\n";
    else
        os << header_table("Brackets", s, cfg) << "  validity window: results through weight " << W << "\n";
    if (!structured)
        os << "Coboundaries:\n";
    for (int w = 1; w <= W; ++w)
        for (int p : {1, 0})
            for (auto& c : table.block(w, p).complement) {
                auto dc = coboundary(c.rep, s.d).truncated(s.space.weight_cutoff);
                if (structured)
                    os << "coboundary source=" << c.label << " weight=" << w << " value=" << format_cochain(dc) << "\n";
                else
                    os << "  D(" << c.label << ") = " << format_cochain(dc) << "\n";
            }
    std::vector<LabeledCochain> classes;
    std::vector<int> weights;
    for (int w = 1; w <= W; ++w)
        for (int p : {1, 0})
            for (auto& c : table.block(w, p).classes) {
                classes.push_back(c);
                weights.push_back(w);
            }
    if (!structured)
        os << "Brackets of classes:\n";
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i; j < classes.size(); ++j) {
            if (weights[i] + weights[j] - 1 > W)
                continue;
            auto b = bt.bracket(classes[i].rep, classes[j].rep);
            auto text = in_labels(table, b);
            if (structured)
                os << "bracket left=" << classes[i].label << " right=" << classes[j].label << " value=" << text << "\n";
            else
                os << "  [" << classes[i].label << "," << classes[j].label << "] = " << text << "\n";
        }
    return os.str();
}

ConstructResult build_versal(const Setup& s, const Config& cfg)
{
    if (s.space.weight_cutoff - homogeneous_weight(s.d) + 1 < 1)
        throw CliError{cutoff, "weight cutoff below the weight of d"};
    return construct(s.d, cfg.order_cutoff, s.opts);
}

std::string cmd_versal(const Setup& s, const Config& cfg)
{
    auto r = build_versal(s, cfg);
    return cfg.format == "structured" ? dump_structured(r.state, r.closed, r.closed_at)
                                      : dump_table(r.state, r.closed, r.closed_at);
}

std::string cmd_extend(const Setup& s, const Config& cfg, int& code)
{
    if (cfg.def.empty())
        throw CliError{validation, "extend needs --def"};
    int target = cfg.target_order ? cfg.target_order : cfg.order_cutoff;
    if (target < 2)
        throw CliError{validation, "--target-order must be at least 2"};
    if (target > cfg.order_cutoff)
        throw CliError{cutoff, "--target-order exceeds --order-cutoff"};
    if (cfg.lookahead < 0)
        throw CliError{validation, "--lookahead must be non-negative"};
    auto r = build_versal(s, cfg);
    OneParameterDeformation def;
    try {
        def = parse_deformation(r.state, cfg.def);
    } catch (const ContractViolation& e) {
        throw CliError{validation, std::string("bad --def: ") + e.what()};
    }
    if (def.known_order >= target)
        throw CliError{cutoff, "--def reaches order " + std::to_string(def.known_order) + ", target order is " +
                                   std::to_string(target)};
    auto out = analyze(def, r.state, target, cfg.lookahead);
    code = out.verdict == ExtensionOutcome::Verdict::obstructed ? obstructed : ok;
    return cfg.format == "structured" ? format_outcome_structured(r.state, out) : format_outcome(r.state, out);
}

}

int main(int argc, char** argv)
{
    CLI::App app{"Brackets, cohomology, versal deformations and extensions of L-infinity codifferentials"};
    app.require_subcommand(1);
    Config cfg;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--space", cfg.space, "O,E: odd and even dimensions");
        sub->add_option("--d", cfg.d, "codifferential, e.g. \"psi[0,2,0;1]\"");
        sub->add_option("--preset", cfg.preset, "type100 | type010");
        sub->add_option("--weight-cutoff", cfg.weight_cutoff, "highest cochain weight")->capture_default_str();
        sub->add_option("--order-cutoff", cfg.order_cutoff, "highest parameter order")->capture_default_str();
        sub->add_option("--format", cfg.format, "table | structured")
            ->check(CLI::IsMember({"table", "structured"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out, "write the report to FILE");
    };
    auto* brackets = app.add_subcommand("brackets", "coboundary table and brackets of classes");
    auto* cohomology = app.add_subcommand("cohomology", "dimensions and representatives per weight");
    auto* versal = app.add_subcommand("versal", "miniversal deformation with relations");
    auto* extend = app.add_subcommand("extend", "extension of a one-parameter deformation");
    for (auto* sub : {brackets, cohomology, versal, extend})
        common(sub);
    extend->add_option("--def", cfg.def, "deformation, e.g. \"xi*u + tau1*theta\"")->required();
    extend->add_option("--target-order", cfg.target_order, "order to extend to (default: order cutoff)");
    extend->add_option("--lookahead", cfg.lookahead, "earlier orders the solver may revise")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : int(validation);
    }

    int code = ok;
    std::string report;
    try {
        Setup s = resolve(cfg);
        if (*brackets)
            report = cmd_brackets(s, cfg);
        else if (*cohomology)
            report = cmd_cohomology(s, cfg);
        else if (*versal)
            report = cmd_versal(s, cfg);
        else
            report = cmd_extend(s, cfg, code);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const RangeError& e) {
        std::cerr << "error: cutoff insufficient: " << e.what() << "\n";
        return cutoff;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return validation;
    }
    if (cfg.out.empty()) {
        std::cout << report;
    } else {
        std::ofstream f(cfg.out);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.out << "\n";
            return validation;
        }
        f << report;
    }
    return code;
}
