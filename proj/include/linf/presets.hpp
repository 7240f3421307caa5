#pragma once

#include "linf/exactlinalg.hpp"

#include <map>
#include <optional>
#include <string>

namespace linf {

struct Preset {
    std::string name;
    SuperSpace space;
    Cochain d;
    std::vector<LabeledCochain> class_seeds;
    std::vector<LabeledCochain> complement_seeds;
    std::map<std::string, std::string> parameter_names; // class label -> parameter name
};

// d = psi[0,2,0;1] on 1 odd | 2 even.
Preset preset_type100(int weight_cutoff);
// d = psi[0,1,1;1] on 1 odd | 2 even.
Preset preset_type010(int weight_cutoff);
std::optional<Preset> find_preset(const std::string& name, int weight_cutoff);

namespace type100 {
Cochain d(const SuperSpace& s);
Cochain xi(const SuperSpace& s);
Cochain psi(const SuperSpace& s, int n);
Cochain phi(const SuperSpace& s, int n);
Cochain sigma(const SuperSpace& s, int n);
Cochain tau(const SuperSpace& s, int n);
Cochain gamma(const SuperSpace& s, int k, int l);
Cochain alpha(const SuperSpace& s, int k, int l);
Cochain beta(const SuperSpace& s, int k, int l);
}

namespace type010 {
Cochain d(const SuperSpace& s);
Cochain psi1(const SuperSpace& s);
Cochain psi2(const SuperSpace& s);
Cochain phi(const SuperSpace& s, int n);
Cochain sigma(const SuperSpace& s, int n);
Cochain alpha(const SuperSpace& s, int k, int l);
Cochain gamma(const SuperSpace& s, int k); // alpha(k,1)
Cochain epsilon(const SuperSpace& s, int k); // alpha(0,k)
Cochain beta(const SuperSpace& s, int k);
Cochain tau(const SuperSpace& s, int k, int l);
Cochain xi(const SuperSpace& s, int k, int l);
}

}
