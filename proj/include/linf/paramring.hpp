#pragma once

#include "linf/rational.hpp"
#include "linf/superspace.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace linf {

struct Parameter {
    std::string name;
    int parity = 0;
    int weight = 0;     // weight of the class it multiplies
    std::string origin; // class label
};

class ParameterRegistry {
public:
    ParameterRegistry() = default;
    explicit ParameterRegistry(std::vector<Parameter> params);

    std::size_t size() const { return params_.size(); }
    const Parameter& operator[](std::size_t i) const { return params_[i]; }
    const std::vector<Parameter>& params() const { return params_; }
    std::optional<std::size_t> find(const std::string& name) const;
    std::size_t index(const std::string& name) const; // throws ContractViolation
    bool is_odd(std::size_t i) const { return params_[i].parity == 1; }

private:
    std::vector<Parameter> params_;
    std::map<std::string, std::size_t> by_name_;
};

using RegistryPtr = std::shared_ptr<const ParameterRegistry>;
RegistryPtr make_registry(std::vector<Parameter> params);

// Exponents in registry order; odd parameters have exponent 0 or 1.
struct GrassmannMonomial {
    std::vector<std::uint8_t> exps;
    int order = 0;

    GrassmannMonomial() = default;
    explicit GrassmannMonomial(std::size_t n) : exps(n, 0) {}
    explicit GrassmannMonomial(std::vector<std::uint8_t> e);

    bool operator==(const GrassmannMonomial& o) const { return exps == o.exps; }
    // Total order first, then larger exponents on earlier parameters first.
    bool operator<(const GrassmannMonomial& o) const
    {
        if (order != o.order)
            return order < o.order;
        return o.exps < exps;
    }
};

int monomial_parity(const ParameterRegistry& reg, const GrassmannMonomial& m);
// a*b = sign * (a+b); sign 0 when an odd parameter repeats.
int monomial_sign(const ParameterRegistry& reg, const GrassmannMonomial& a, const GrassmannMonomial& b);
GrassmannMonomial monomial_product(const GrassmannMonomial& a, const GrassmannMonomial& b);

class GrassmannSeries {
public:
    using Terms = std::map<GrassmannMonomial, Rational>;

    GrassmannSeries() = default;
    GrassmannSeries(RegistryPtr reg, int cutoff) : reg_(std::move(reg)), cutoff_(cutoff) {}

    static GrassmannSeries constant(RegistryPtr reg, int cutoff, const Rational& c);
    static GrassmannSeries generator(RegistryPtr reg, int cutoff, std::size_t index, const Rational& c = 1);
    static GrassmannSeries generator(RegistryPtr reg, int cutoff, const std::string& name, const Rational& c = 1);

    const RegistryPtr& registry() const { return reg_; }
    int cutoff() const { return cutoff_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const GrassmannMonomial& m, const Rational& c);
    Rational coefficient(const GrassmannMonomial& m) const;
    int min_order() const; // -1 for zero
    int parity() const;    // -1 when mixed; 0 for zero
    GrassmannSeries order_part(int n) const;
    GrassmannSeries truncated(int order) const;
    GrassmannSeries with_cutoff(int cutoff) const;
    GrassmannSeries parity_part(int p) const;

    GrassmannSeries& operator+=(const GrassmannSeries& o);
    GrassmannSeries& operator-=(const GrassmannSeries& o);
    GrassmannSeries& operator*=(const Rational& r);
    friend GrassmannSeries operator+(GrassmannSeries a, const GrassmannSeries& b) { return a += b; }
    friend GrassmannSeries operator-(GrassmannSeries a, const GrassmannSeries& b) { return a -= b; }
    friend GrassmannSeries operator*(const Rational& r, GrassmannSeries a) { return a *= r; }
    GrassmannSeries operator-() const { return Rational(-1) * *this; }

    bool operator==(const GrassmannSeries& o) const { return terms_ == o.terms_; }

private:
    void check(const GrassmannSeries& o) const;

    RegistryPtr reg_;
    int cutoff_ = 0;
    Terms terms_;
};

GrassmannSeries multiply(const GrassmannSeries& a, const GrassmannSeries& b);
inline GrassmannSeries operator*(const GrassmannSeries& a, const GrassmannSeries& b) { return multiply(a, b); }

// Ring morphism into target's registry.  Parameters absent from the assignment map
// to themselves, which requires the target registry to be the source registry.
GrassmannSeries substitute(const GrassmannSeries& s, const std::map<std::size_t, GrassmannSeries>& assignment,
                           RegistryPtr target, int target_cutoff);

std::string format_series(const GrassmannSeries& s);
std::string format_monomial(const ParameterRegistry& reg, const GrassmannMonomial& m);
// Accepts the output of format_series, plus bare monomials and "u^2*theta" style terms.
GrassmannSeries parse_series(RegistryPtr reg, int cutoff, const std::string& text);
std::ostream& operator<<(std::ostream& os, const GrassmannSeries& s);

struct Relation {
    std::string origin; // class label
    GrassmannSeries series;
};

// The ideal generated by the relations, truncated at the cutoff.  An optional
// integer grading (one degree per parameter) splits the reduction basis into
// independent blocks when every relation is homogeneous.
class RelationSet {
public:
    RelationSet() = default;
    RelationSet(RegistryPtr reg, int cutoff, std::vector<Relation> relations,
                std::optional<std::vector<int>> grading = std::nullopt);
    RelationSet(const RelationSet& o);
    RelationSet& operator=(const RelationSet& o);

    const std::vector<Relation>& relations() const { return relations_; }
    const RegistryPtr& registry() const { return reg_; }
    int cutoff() const { return cutoff_; }
    bool graded() const { return grading_.has_value(); }

    GrassmannSeries reduce(const GrassmannSeries& s) const;
    bool in_ideal(const GrassmannSeries& s) const { return reduce(s).is_zero(); }
    // Row-reduced spanning set of every graded piece of the ideal.
    std::vector<GrassmannSeries> reduction_basis() const;

private:
    using Row = std::map<GrassmannMonomial, Rational>;
    struct Block {
        std::map<GrassmannMonomial, Row> pivots;
    };

    int degree(const GrassmannMonomial& m) const;
    const Block& block(int deg) const;
    void reduce_row(Row& r, const Block& b) const;
    void build_monomials() const;

    RegistryPtr reg_;
    int cutoff_ = 0;
    std::vector<Relation> relations_;
    std::optional<std::vector<int>> grading_;

    mutable std::mutex mutex_;
    mutable std::map<int, Block> blocks_;
    mutable std::vector<GrassmannMonomial> multipliers_;
    mutable bool multipliers_built_ = false;
};

}
