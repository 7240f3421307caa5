#include "linf/presets.hpp"

namespace linf {

namespace {

Cochain term(const SuperSpace& s, int a, int b, int c, int target, const Rational& coef = 1)
{
    MultiIndex I{std::uint8_t(a), std::uint8_t(b), std::uint8_t(c)};
    Cochain out(s);
    if (a >= 0 && b >= 0 && c >= 0 && a + b + c >= 1 && a + b + c <= s.weight_cutoff)
        out.add_term({I, target - 1}, coef);
    return out;
}

std::string idx(int k, int l)
{
    return std::to_string(k) + "," + std::to_string(l);
}

}

namespace type100 {
Cochain d(const SuperSpace& s) { return term(s, 0, 2, 0, 1); }
Cochain xi(const SuperSpace& s) { return term(s, 0, 1, 0, 1); }
Cochain psi(const SuperSpace& s, int n) { return term(s, 0, 0, n, 1); }
Cochain phi(const SuperSpace& s, int n) { return term(s, 0, 0, n, 3); }
Cochain sigma(const SuperSpace& s, int n) { return term(s, 0, 1, n - 1, 3); }
Cochain tau(const SuperSpace& s, int n) { return term(s, 1, 0, n - 1, 1, 2) + term(s, 0, 1, n - 1, 2); }
Cochain gamma(const SuperSpace& s, int k, int l) { return term(s, 0, k, l, 2, Rational(1, 2)); }
Cochain alpha(const SuperSpace& s, int k, int l) { return term(s, 1, k, l, 2); }
Cochain beta(const SuperSpace& s, int k, int l) { return term(s, 1, k, l, 3); }
}

namespace type010 {
Cochain d(const SuperSpace& s) { return term(s, 0, 1, 1, 1); }
Cochain psi1(const SuperSpace& s) { return term(s, 0, 0, 1, 1); }
Cochain psi2(const SuperSpace& s) { return term(s, 0, 1, 0, 1); }
Cochain phi(const SuperSpace& s, int n) { return term(s, 1, 0, n, 1) + term(s, 0, 0, n + 1, 3); }
Cochain sigma(const SuperSpace& s, int n) { return term(s, 1, n, 0, 1) + term(s, 0, n + 1, 0, 2); }
Cochain alpha(const SuperSpace& s, int k, int l) { return term(s, 0, k, l, 3); }
Cochain gamma(const SuperSpace& s, int k) { return alpha(s, k, 1); }
Cochain epsilon(const SuperSpace& s, int k) { return alpha(s, 0, k); }
Cochain beta(const SuperSpace& s, int k) { return term(s, 0, 0, k, 2); }
Cochain tau(const SuperSpace& s, int k, int l) { return term(s, 1, k, l, 2); }
Cochain xi(const SuperSpace& s, int k, int l) { return term(s, 1, k, l, 3); }
}

Preset preset_type100(int N)
{
    Preset p;
    p.name = "type100";
    p.space = SuperSpace(1, 2, N);
    const auto& s = p.space;
    p.d = type100::d(s);
    auto add_class = [&](const std::string& label, const std::string& param, Cochain c) {
        if (!c.is_zero()) {
            p.class_seeds.push_back({label, std::move(c)});
            p.parameter_names[label] = param;
        }
    };
    for (int n = 1; n <= N; ++n) {
        if (n == 1)
            add_class("xi", "s1", type100::xi(s));
        add_class("psi" + std::to_string(n), "t" + std::to_string(n), type100::psi(s, n));
        add_class("phi" + std::to_string(n), "th" + std::to_string(n), type100::phi(s, n));
        add_class("sigma" + std::to_string(n), "e" + std::to_string(n), type100::sigma(s, n));
        add_class("tau" + std::to_string(n), "z" + std::to_string(n), type100::tau(s, n));
    }
    for (int w = 1; w <= N; ++w) {
        for (int k = 0; k <= w; ++k)
            p.complement_seeds.push_back({"gamma" + idx(k, w - k), type100::gamma(s, k, w - k)});
        for (int k = 0; k <= w - 1; ++k)
            p.complement_seeds.push_back({"alpha" + idx(k, w - 1 - k), type100::alpha(s, k, w - 1 - k)});
        for (int k = 0; k <= w - 1; ++k)
            p.complement_seeds.push_back({"beta" + idx(k, w - 1 - k), type100::beta(s, k, w - 1 - k)});
    }
    return p;
}

Preset preset_type010(int N)
{
    Preset p;
    p.name = "type010";
    p.space = SuperSpace(1, 2, N);
    const auto& s = p.space;
    p.d = type010::d(s);
    auto add_class = [&](const std::string& label, const std::string& param, Cochain c) {
        if (!c.is_zero()) {
            p.class_seeds.push_back({label, std::move(c)});
            p.parameter_names[label] = param;
        }
    };
    add_class("psi1", "t1", type010::psi1(s));
    add_class("psi2", "t2", type010::psi2(s));
    for (int n = 0; n < N; ++n) {
        add_class("phi" + std::to_string(n), "th" + std::to_string(n), type010::phi(s, n));
        add_class("sigma" + std::to_string(n), "e" + std::to_string(n), type010::sigma(s, n));
    }
    for (int w = 1; w <= N; ++w) {
        for (int k = 0; k <= w; ++k) {
            int l = w - k;
            std::string label = k == 0 ? "epsilon" + std::to_string(l)
                                : l == 1 ? "gamma" + std::to_string(k)
                                         : "alpha" + idx(k, l);
            p.complement_seeds.push_back({label, type010::alpha(s, k, l)});
        }
        p.complement_seeds.push_back({"beta" + std::to_string(w), type010::beta(s, w)});
        for (int k = 0; k <= w - 1; ++k)
            p.complement_seeds.push_back({"tau" + idx(k, w - 1 - k), type010::tau(s, k, w - 1 - k)});
        for (int k = 0; k <= w - 1; ++k)
            p.complement_seeds.push_back({"xi" + idx(k, w - 1 - k), type010::xi(s, k, w - 1 - k)});
    }
    return p;
}

std::optional<Preset> find_preset(const std::string& name, int weight_cutoff)
{
    if (name == "type100")
        return preset_type100(weight_cutoff);
    if (name == "type010")
        return preset_type010(weight_cutoff);
    return std::nullopt;
}

}
