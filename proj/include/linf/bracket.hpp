#pragma once

#include "linf/superspace.hpp"

#include <map>
#include <shared_mutex>
#include <utility>

namespace linf {

// Sign convention: [a,b] = a∘b - (-1)^{|a||b|} b∘a, where g in f∘g is applied to
// the leading factors of its input.  Calibrated against the known tables with no
// global flip.
inline constexpr int kSignCalibration = 1;

// Single basis cochain (or zero) of weight weight(f) + weight(g) - 1.
Cochain compose(const SuperSpace& space, const BasisCochain& f, const BasisCochain& g);
Cochain compose(const Cochain& f, const Cochain& g);

Cochain bracket(const SuperSpace& space, const BasisCochain& a, const BasisCochain& b);
Cochain bracket(const Cochain& a, const Cochain& b);

// D(phi) = [phi, d].
Cochain coboundary(const Cochain& phi, const Cochain& d);

struct CodifferentialCheck {
    bool ok = false;
    Cochain witness; // [d,d] when ok is false
};

CodifferentialCheck is_codifferential(const Cochain& d);

// Memo of basis-pair brackets.  Lookups take a shared lock, insertions an exclusive one.
class BracketTable {
public:
    explicit BracketTable(const SuperSpace& space) : space_(space) {}

    const SuperSpace& space() const { return space_; }
    const Cochain& get(const BasisCochain& a, const BasisCochain& b);
    Cochain bracket(const Cochain& a, const Cochain& b);
    std::size_t size() const;

private:
    SuperSpace space_;
    mutable std::shared_mutex mutex_;
    std::map<std::pair<BasisCochain, BasisCochain>, Cochain> cache_;
};

}
