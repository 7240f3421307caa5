#pragma once

#include "linf/rational.hpp"

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace linf {

struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at position " + std::to_string(pos)), position(pos)
    {
    }
    std::size_t position;
};

// w_1..w_odd are odd, w_{odd+1}..w_{odd+even} are even.
struct SuperSpace {
    int odd_count = 0;
    int even_count = 0;
    int weight_cutoff = 1;

    SuperSpace() = default;
    SuperSpace(int odd, int even, int cutoff);

    int dim() const { return odd_count + even_count; }
    bool is_odd(int slot) const { return slot < odd_count; }
    SuperSpace with_cutoff(int cutoff) const { return SuperSpace(odd_count, even_count, cutoff); }

    bool operator==(const SuperSpace&) const = default;
};

// Exponents over the basis of W, zero-based slots.
using MultiIndex = std::vector<std::uint8_t>;

int degree(const MultiIndex& I);
int parity(const SuperSpace& space, const MultiIndex& I);
bool is_valid(const SuperSpace& space, const MultiIndex& I);
Rational index_factorial(const MultiIndex& I);

// w_A * w_B = sign * w_{A+B}; sign 0 when an odd vector is squared.
int monomial_product_sign(const SuperSpace& space, const MultiIndex& A, const MultiIndex& B);

struct BasisCochain {
    MultiIndex index;
    int target = 0; // zero-based slot of w_j

    int weight() const { return degree(index); }
    int parity(const SuperSpace& space) const;

    bool operator==(const BasisCochain&) const = default;
    std::strong_ordering operator<=>(const BasisCochain& o) const;
};

// evaluate(c, J) = coefficient of w_target in c(w_J).
Rational evaluate(const BasisCochain& c, const MultiIndex& monomial);

// Basis of L_n in canonical order.
std::vector<BasisCochain> basis_of_weight(const SuperSpace& space, int n);
std::vector<BasisCochain> basis_of_weight(const SuperSpace& space, int n, int parity);
std::vector<MultiIndex> monomials_of_degree(const SuperSpace& space, int n);

class Cochain {
public:
    using Terms = std::map<BasisCochain, Rational>;

    Cochain() = default;
    explicit Cochain(const SuperSpace& space) : space_(space) {}
    Cochain(const SuperSpace& space, const BasisCochain& b, const Rational& c = 1);

    const SuperSpace& space() const { return space_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const BasisCochain& b) const;
    void add_term(const BasisCochain& b, const Rational& c);

    // -1 when parities are mixed or the cochain is zero.
    int parity() const;
    int min_weight() const;
    int max_weight() const;
    Cochain weight_part(int w) const;
    Cochain truncated(int max_weight) const;

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    Cochain& operator*=(const Rational& r);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Rational& r, Cochain a) { return a *= r; }
    Cochain operator-() const { return Rational(-1) * *this; }

    bool operator==(const Cochain& o) const { return space_ == o.space_ && terms_ == o.terms_; }

private:
    void check_space(const Cochain& o) const;

    SuperSpace space_;
    Terms terms_;
};

Cochain add(const Cochain& a, const Cochain& b, const Rational& r = 1);
Cochain scale(const Cochain& a, const Rational& r);

std::string format_basis(const SuperSpace& space, const BasisCochain& b);
std::string format_cochain(const Cochain& c);
Cochain parse_cochain(const SuperSpace& space, std::string_view text);
BasisCochain parse_basis(const SuperSpace& space, std::string_view text);

std::ostream& operator<<(std::ostream& os, const Cochain& c);

}
