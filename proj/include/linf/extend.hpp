#pragma once

#include "linf/versal.hpp"

#include <map>
#include <string>
#include <vector>

namespace linf {

// Image of the versal parameters in K[[u,theta]].  Coefficients are indexed by
// total order: index i multiplies u^i for a class with an even parameter and
// u^(i-1) theta for a class with an odd parameter.
struct OneParameterDeformation {
    std::map<std::string, std::map<int, Rational>> even_part; // odd classes
    std::map<std::string, std::map<int, Rational>> odd_part;  // even classes
    int known_order = 1;

    bool empty() const { return even_part.empty() && odd_part.empty(); }
    Rational coefficient(const std::string& label, int order) const;
};

// Terms like "xi*u + tau1*theta - 1/2*phi1*u*theta"; "0" is the zero deformation.
// known_order is the highest order present (1 for the zero deformation).
OneParameterDeformation parse_deformation(const DeformationState& state, const std::string& text);
std::string format_deformation(const DeformationState& state, const OneParameterDeformation& def);

RegistryPtr one_parameter_registry(); // u even, theta odd
// Every versal parameter to its image series; classes absent from def map to zero.
std::map<std::size_t, GrassmannSeries> identification(const DeformationState& state, const OneParameterDeformation& def,
                                                      const RegistryPtr& target, int cutoff);

struct RelationResidue {
    std::string label;
    int weight = 0;
    int exact_through = 0; // orders above this are not certified
    GrassmannSeries image;
};

std::vector<RelationResidue> evaluate_relations(const OneParameterDeformation& def, const DeformationState& state,
                                                int cutoff);

struct ObstructionTerm {
    std::string label;
    Rational coefficient;
    std::string monomial; // "u^2*theta" etc.
};

struct ExtensionOutcome {
    enum class Verdict { extends, obstructed };
    Verdict verdict = Verdict::extends;
    int target_order = 0;
    // Extends: target_order.  Obstructed at order m: m - 1.
    int max_order = 0;
    int obstruction_order = 0;
    Cochain obstruction;
    std::vector<ObstructionTerm> obstruction_terms;
    // False when earlier orders had free choices the lookahead could not exhaust.
    bool obstruction_certain = true;
    int lookahead = 2;
    OneParameterDeformation witness;
    std::vector<std::string> free_choices;
    // Relations whose window ends below target_order, with the last checked order.
    std::vector<std::pair<std::string, int>> unchecked;
};

ExtensionOutcome analyze(const OneParameterDeformation& def, const DeformationState& state, int target_order,
                         int lookahead = 2);

// Treats def as complete: every coefficient above known_order is zero, nothing is solved.
ExtensionOutcome check_completion(const OneParameterDeformation& def, const DeformationState& state, int target_order);

// d^infinity with the parameters replaced by their images, over K[[u,theta]] truncated at cutoff.
ParamCochain push_forward(const OneParameterDeformation& def, const DeformationState& state, int cutoff);

struct PushForwardCheck {
    int lowest_surviving_order = -1; // inside the certified window
    std::size_t surviving_terms = 0;
    int checked_order = 0;
};

// (1/2)[pf,pf] computed through the bracket engine; a weight-w term of order m is
// certified when m <= min(cutoff, bracket_exact_through(w)).
PushForwardCheck verify_push_forward(const ParamCochain& pf, const DeformationState& state);

std::string format_outcome(const DeformationState& state, const ExtensionOutcome& out);
std::string format_outcome_structured(const DeformationState& state, const ExtensionOutcome& out);

}
