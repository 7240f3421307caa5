#pragma once

#include "linf/exactlinalg.hpp"
#include "linf/param_cochain.hpp"
#include "linf/presets.hpp"

#include <memory>
#include <string>
#include <vector>

namespace linf {

struct ClassInfo {
    std::string label;
    int weight = 0;
    int parity = 0;
    std::size_t block_index = 0; // position among the block's classes
    std::size_t parameter = 0;   // registry index
    Cochain rep;
};

struct CorrectionTerm {
    std::string label; // preimage label
    int weight = 0;
    Cochain rep;
    GrassmannSeries series;
};

struct DeformationState {
    Cochain d;
    int d_weight = 0;
    int order = 1;
    int order_cutoff = 2;
    std::shared_ptr<const CohomologyTable> cohomology;
    RegistryPtr registry;
    std::vector<ClassInfo> classes; // registry order
    ParamCochain current;
    std::vector<Relation> relations; // one per class, registry order
    std::vector<CorrectionTerm> corrections;
    std::vector<int> correction_orders; // orders at which corrections were added
    std::vector<std::string> warnings;
    std::shared_ptr<BracketTable> table;
    // Indexed by cochain weight: highest total order at which the self-bracket
    // (hence the relations of that class weight) and the corrections are
    // unaffected by the weight cutoff.
    std::vector<int> bracket_exact_order;
    std::vector<int> correction_exact_order;

    const SuperSpace& space() const { return d.space(); }
    // Highest weight handled by the order loop; D of this weight still fits the cutoff.
    int working_weight() const { return space().weight_cutoff - d_weight + 1; }
    int bracket_exact_through(int w) const;
    int correction_exact_through(int w) const;
    std::vector<int> grading() const;
    RelationSet relation_set() const;
    const CorrectionTerm* correction(const std::string& label) const;
    const ClassInfo* find_class(const std::string& label) const;
    int last_correction_order() const { return correction_orders.empty() ? 1 : correction_orders.back(); }
};

struct VersalOptions {
    std::vector<LabeledCochain> class_seeds;
    std::vector<LabeledCochain> complement_seeds;
    std::map<std::string, std::string> parameter_names;
};

VersalOptions options_from(const Preset& p);

// Throws ContractViolation (with the [d,d] witness in the message) when d is not a codifferential.
DeformationState infinitesimal(const Cochain& d, int order_cutoff, const VersalOptions& opts = {});
DeformationState step(const DeformationState& state);

struct ConstructResult {
    DeformationState state;
    bool closed = false;
    int closed_at = 0; // last order that needed corrections
};

ConstructResult construct(const Cochain& d, int max_order, const VersalOptions& opts = {});

struct CoefficientReport {
    std::string label;
    int weight = 0;
    GrassmannSeries raw;
    GrassmannSeries reduced;
};

struct VanishingReport {
    // Lowest total order of a surviving residual term inside the exact window, -1 if none.
    int lowest_surviving_order = -1;
    // Same outside the window, where truncation leaves the residual uncertified.
    int lowest_surviving_order_unchecked = -1;
    std::map<int, int> lowest_by_weight; // all surviving terms, by cochain weight
    std::size_t surviving_terms = 0; // inside the window
    std::vector<CoefficientReport> complement; // raw and reduced coordinates along preimage cochains
};

VanishingReport verify_bracket_vanishes(const DeformationState& state);

// Structured text dump with header, registry, deformation, relations and validity window.
std::string dump_structured(const DeformationState& state, bool closed, int closed_at);
std::string dump_table(const DeformationState& state, bool closed, int closed_at);

}
