#pragma once

#include "linf/superspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linf {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    bool operator==(const RationalMatrix&) const = default;

    static RationalMatrix identity(std::size_t n);
    // Columns are the given vectors.
    static RationalMatrix from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows);

    std::vector<BasisCochain> row_labels;
    std::vector<BasisCochain> col_labels;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct RrefResult {
    RationalMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

RrefResult rref(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);
// Basis of the right kernel, one vector per free column, in column order.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Incrementally grown row-reduced span.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t n) : n_(n) {}
    std::size_t dim() const { return rows_.size(); }
    bool contains(std::vector<Rational> v) const;
    // Returns true when v was independent and got added.
    bool insert(std::vector<Rational> v);

private:
    void reduce(std::vector<Rational>& v) const;
    std::size_t n_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

// Coordinates of cochains in a fixed list of basis cochains.
class BlockBasis {
public:
    BlockBasis() = default;
    explicit BlockBasis(std::vector<BasisCochain> basis);
    std::size_t size() const { return basis_.size(); }
    const std::vector<BasisCochain>& basis() const { return basis_; }
    // Throws ContractViolation when c has support outside the block.
    std::vector<Rational> coordinates(const Cochain& c) const;
    Cochain cochain(const SuperSpace& space, const std::vector<Rational>& v) const;
    std::optional<std::size_t> position(const BasisCochain& b) const;

private:
    std::vector<BasisCochain> basis_;
    std::map<BasisCochain, std::size_t> pos_;
};

struct NoSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LabeledCochain {
    std::string label;
    Cochain rep;
};

// One (weight, parity) block of L: L = H + B + C with B = D(C at weight w-k+1),
// H cocycles independent modulo B and C a complement of the cocycles.
struct CohomologyBlock {
    int weight = 0;
    int parity = 0;
    BlockBasis basis;
    std::vector<LabeledCochain> classes;     // H
    std::vector<LabeledCochain> coboundaries; // B, label "D(gamma)"
    std::vector<std::size_t> coboundary_source; // index into preimage block (w-k+1, 1-p)
    std::vector<LabeledCochain> complement;  // C
    std::size_t cocycle_dim = 0;
    RationalMatrix decomposition; // inverse of [H | B | C]
};

struct BlockCoordinates {
    std::vector<Rational> classes;
    std::vector<Rational> coboundaries;
    std::vector<Rational> complement;
};

class CohomologyTable {
public:
    // seeds: preferred class representatives and preferred complement elements,
    // each sorted into its block by weight and parity.
    CohomologyTable(const Cochain& d, std::vector<LabeledCochain> class_seeds = {},
                    std::vector<LabeledCochain> complement_seeds = {});

    const SuperSpace& space() const { return space_; }
    const Cochain& codifferential() const { return d_; }
    int d_weight() const { return k_; }
    // Highest weight with a complete block.
    int max_weight() const { return max_weight_; }
    const CohomologyBlock& block(int weight, int parity) const;
    bool has_block(int weight) const { return weight >= 1 && weight <= max_weight_; }
    std::size_t dimension(int weight, int parity) const { return block(weight, parity).classes.size(); }

    BlockCoordinates decompose(const Cochain& c) const; // c homogeneous in weight and parity
    // gamma in the complement with D(gamma) = target.  Throws NoSolution.
    Cochain preimage(const Cochain& target) const;

private:
    SuperSpace space_;
    Cochain d_;
    int k_ = 0;
    int max_weight_ = 0;
    std::vector<CohomologyBlock> blocks_; // index 2*(w-1)+p
};

int homogeneous_weight(const Cochain& d); // throws ContractViolation when mixed
RationalMatrix coboundary_matrix(const Cochain& d, int weight, int parity);

CohomologyBlock cohomology_basis(const Cochain& d, int weight, int parity);
Cochain preimage(const Cochain& d, const Cochain& target);

}
