#include "linf/superspace.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace linf {

SuperSpace::SuperSpace(int odd, int even, int cutoff) : odd_count(odd), even_count(even), weight_cutoff(cutoff)
{
    if (odd < 0 || even < 0 || odd + even < 1)
        throw ContractViolation("SuperSpace needs at least one basis vector");
    if (cutoff < 1)
        throw ContractViolation("weight cutoff must be positive");
}

int degree(const MultiIndex& I)
{
    int d = 0;
    for (auto e : I)
        d += e;
    return d;
}

int parity(const SuperSpace& space, const MultiIndex& I)
{
    int p = 0;
    for (int i = 0; i < space.odd_count; ++i)
        p += I[i];
    return p & 1;
}

bool is_valid(const SuperSpace& space, const MultiIndex& I)
{
    if (static_cast<int>(I.size()) != space.dim())
        return false;
    for (int i = 0; i < space.odd_count; ++i)
        if (I[i] > 1)
            return false;
    return true;
}

Rational index_factorial(const MultiIndex& I)
{
    Rational r = 1;
    for (auto e : I)
        if (e > 1)
            r *= factorial(e);
    return r;
}

int monomial_product_sign(const SuperSpace& space, const MultiIndex& A, const MultiIndex& B)
{
    int s = 0;
    int odd_after = 0;
    for (int i = space.odd_count - 1; i >= 0; --i) {
        if (A[i] && B[i])
            return 0;
        if (B[i])
            s += odd_after;
        odd_after += A[i];
    }
    return (s & 1) ? -1 : 1;
}

int BasisCochain::parity(const SuperSpace& space) const
{
    return (linf::parity(space, index) + (space.is_odd(target) ? 1 : 0)) & 1;
}

std::strong_ordering BasisCochain::operator<=>(const BasisCochain& o) const
{
    if (auto c = weight() <=> o.weight(); c != 0)
        return c;
    if (auto c = target <=> o.target; c != 0)
        return c;
    return index <=> o.index;
}

Rational evaluate(const BasisCochain& c, const MultiIndex& monomial)
{
    if (degree(monomial) != c.weight())
        throw ContractViolation("evaluate: degree mismatch");
    return monomial == c.index ? index_factorial(c.index) : Rational(0);
}

namespace {

void enumerate(const SuperSpace& space, int slot, int remaining, MultiIndex& cur, std::vector<MultiIndex>& out)
{
    if (slot == space.dim()) {
        if (remaining == 0)
            out.push_back(cur);
        return;
    }
    int top = space.is_odd(slot) ? std::min(1, remaining) : remaining;
    for (int e = 0; e <= top; ++e) {
        cur[slot] = static_cast<std::uint8_t>(e);
        enumerate(space, slot + 1, remaining - e, cur, out);
    }
    cur[slot] = 0;
}

}

std::vector<MultiIndex> monomials_of_degree(const SuperSpace& space, int n)
{
    std::vector<MultiIndex> out;
    MultiIndex cur(space.dim(), 0);
    enumerate(space, 0, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BasisCochain> basis_of_weight(const SuperSpace& space, int n)
{
    if (n < 1 || n > space.weight_cutoff)
        throw RangeError("weight " + std::to_string(n) + " outside 1.." + std::to_string(space.weight_cutoff));
    auto monos = monomials_of_degree(space, n);
    std::vector<BasisCochain> out;
    for (int j = 0; j < space.dim(); ++j)
        for (auto& m : monos)
            out.push_back({m, j});
    return out;
}

std::vector<BasisCochain> basis_of_weight(const SuperSpace& space, int n, int p)
{
    auto all = basis_of_weight(space, n);
    std::vector<BasisCochain> out;
    for (auto& b : all)
        if (b.parity(space) == p)
            out.push_back(b);
    return out;
}

Cochain::Cochain(const SuperSpace& space, const BasisCochain& b, const Rational& c) : space_(space)
{
    add_term(b, c);
}

Rational Cochain::coefficient(const BasisCochain& b) const
{
    auto it = terms_.find(b);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Cochain::add_term(const BasisCochain& b, const Rational& c)
{
    if (c == 0)
        return;
    if (!is_valid(space_, b.index) || b.target < 0 || b.target >= space_.dim())
        throw ContractViolation("basis cochain does not belong to the space");
    if (b.weight() < 1 || b.weight() > space_.weight_cutoff)
        throw RangeError("basis cochain weight outside 1.." + std::to_string(space_.weight_cutoff));
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

int Cochain::parity() const
{
    int p = -1;
    for (auto& [b, c] : terms_) {
        int q = b.parity(space_);
        if (p == -1)
            p = q;
        else if (p != q)
            return -1;
    }
    return p;
}

int Cochain::min_weight() const
{
    return terms_.empty() ? 0 : terms_.begin()->first.weight();
}

int Cochain::max_weight() const
{
    return terms_.empty() ? 0 : terms_.rbegin()->first.weight();
}

Cochain Cochain::weight_part(int w) const
{
    Cochain r(space_);
    for (auto& [b, c] : terms_)
        if (b.weight() == w)
            r.terms_.emplace(b, c);
    return r;
}

Cochain Cochain::truncated(int max_weight) const
{
    Cochain r(space_);
    for (auto& [b, c] : terms_)
        if (b.weight() <= max_weight)
            r.terms_.emplace(b, c);
    return r;
}

void Cochain::check_space(const Cochain& o) const
{
    if (!(space_ == o.space_))
        throw ContractViolation("cochains live on different spaces");
}

Cochain& Cochain::operator+=(const Cochain& o)
{
    check_space(o);
    for (auto& [b, c] : o.terms_)
        add_term(b, c);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o)
{
    check_space(o);
    for (auto& [b, c] : o.terms_)
        add_term(b, -c);
    return *this;
}

Cochain& Cochain::operator*=(const Rational& r)
{
    if (r == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_)
        c *= r;
    return *this;
}

Cochain add(const Cochain& a, const Cochain& b, const Rational& r)
{
    Cochain out = a;
    out += scale(b, r);
    return out;
}

Cochain scale(const Cochain& a, const Rational& r)
{
    Cochain out = a;
    out *= r;
    return out;
}

std::string format_basis(const SuperSpace& space, const BasisCochain& b)
{
    std::ostringstream os;
    os << (b.parity(space) ? "psi[" : "phi[");
    for (std::size_t i = 0; i < b.index.size(); ++i)
        os << (i ? "," : "") << int(b.index[i]);
    os << ";" << b.target + 1 << "]";
    return os.str();
}

std::string format_cochain(const Cochain& c)
{
    if (c.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto& [b, q] : c.terms()) {
        Rational a = abs(q);
        if (first)
            out += q < 0 ? "-" : "";
        else
            out += q < 0 ? " - " : " + ";
        if (a != 1)
            out += to_string(a) + "*";
        out += format_basis(c.space(), b);
        first = false;
    }
    return out;
}

namespace {

struct Scanner {
    std::string_view s;
    std::size_t pos = 0;

    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof()
    {
        skip();
        return pos >= s.size();
    }
    bool peek(char c)
    {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    void expect(char c)
    {
        if (!peek(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    bool accept_word(std::string_view w)
    {
        skip();
        if (s.substr(pos, w.size()) == w) {
            pos += w.size();
            return true;
        }
        return false;
    }
    std::string integer()
    {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (start == pos)
            throw ParseError("expected integer", pos);
        return std::string(s.substr(start, pos - start));
    }
};

BasisCochain parse_head(const SuperSpace& space, Scanner& sc)
{
    std::size_t at = sc.pos;
    int head;
    if (sc.accept_word("phi"))
        head = 0;
    else if (sc.accept_word("psi"))
        head = 1;
    else
        throw ParseError("expected phi or psi", sc.pos);
    sc.expect('[');
    MultiIndex I;
    for (;;) {
        std::string e = sc.integer();
        if (e.size() > 3 || std::stoi(e) > 255)
            throw ParseError("exponent too large", sc.pos);
        I.push_back(static_cast<std::uint8_t>(std::stoi(e)));
        if (sc.peek(';'))
            break;
        sc.expect(',');
    }
    sc.expect(';');
    std::string t = sc.integer();
    sc.expect(']');
    if (static_cast<int>(I.size()) != space.dim())
        throw ParseError("index length does not match dim W = " + std::to_string(space.dim()), at);
    for (int i = 0; i < space.odd_count; ++i)
        if (I[i] > 1)
            throw ParseError("odd slot " + std::to_string(i + 1) + " has exponent > 1", at);
    int j = std::stoi(t);
    if (t.size() > 6 || j < 1 || j > space.dim())
        throw ParseError("target out of range", at);
    BasisCochain b{I, j - 1};
    if (b.weight() < 1)
        throw ParseError("weight-0 cochain", at);
    if (b.parity(space) != head)
        throw ParseError(std::string("head ") + (head ? "psi" : "phi") + " does not match parity", at);
    return b;
}

}

BasisCochain parse_basis(const SuperSpace& space, std::string_view text)
{
    Scanner sc{text};
    auto b = parse_head(space, sc);
    if (!sc.eof())
        throw ParseError("trailing input", sc.pos);
    return b;
}

Cochain parse_cochain(const SuperSpace& space, std::string_view text)
{
    Scanner sc{text};
    Cochain out(space);
    if (sc.eof())
        throw ParseError("empty cochain", 0);
    if (sc.peek('0')) {
        std::size_t save = sc.pos;
        sc.integer();
        if (sc.eof())
            return out;
        sc.pos = save;
    }
    bool first = true;
    while (!sc.eof()) {
        Rational sign = 1;
        if (sc.peek('+') || sc.peek('-')) {
            if (sc.s[sc.pos] == '-')
                sign = -1;
            ++sc.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-'", sc.pos);
        }
        Rational coef = 1;
        sc.skip();
        if (sc.pos < sc.s.size() && std::isdigit(static_cast<unsigned char>(sc.s[sc.pos]))) {
            std::string num = sc.integer();
            if (sc.peek('/')) {
                ++sc.pos;
                std::string den = sc.integer();
                if (den.find_first_not_of('0') == std::string::npos)
                    throw ParseError("zero denominator", sc.pos);
                num += "/" + den;
            }
            coef = parse_rational(num);
            sc.expect('*');
        }
        auto b = parse_head(space, sc);
        if (b.weight() > space.weight_cutoff)
            throw ParseError("weight exceeds cutoff " + std::to_string(space.weight_cutoff), sc.pos);
        out.add_term(b, sign * coef);
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Cochain& c)
{
    return os << format_cochain(c);
}

}
