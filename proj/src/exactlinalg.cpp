#include "linf/exactlinalg.hpp"

#include "linf/bracket.hpp"

namespace linf {

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<std::vector<Rational>>& cols, std::size_t rows)
{
    RationalMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i];
    return m;
}

RrefResult rref(const RationalMatrix& m)
{
    RrefResult r{m, {}, 0};
    auto& a = r.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != row)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(row, j));
        Rational inv = 1 / a(row, col);
        for (std::size_t j = col; j < a.cols(); ++j)
            a(row, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0)
                continue;
            Rational f = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                if (a(row, j) != 0)
                    a(i, j) -= f * a(row, j);
        }
        r.pivots.push_back(col);
        ++row;
    }
    r.rank = row;
    return r;
}

std::size_t rank(const RationalMatrix& m)
{
    return rref(m).rank;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m)
{
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots)
        is_pivot[p] = true;
    std::vector<std::vector<Rational>> out;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.reduced(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b)
{
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == a.cols())
        return std::nullopt;
    std::vector<Rational> x(a.cols());
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        x[r.pivots[i]] = r.reduced(i, a.cols());
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m)
{
    if (m.rows() != m.cols())
        return std::nullopt;
    std::size_t n = m.rows();
    if (n == 0)
        return RationalMatrix(0, 0);
    RationalMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto r = rref(aug);
    if (r.rank < n || r.pivots[n - 1] != n - 1)
        return std::nullopt;
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = r.reduced(i, n + j);
    return out;
}

void EchelonSpan::reduce(std::vector<Rational>& v) const
{
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (c == 0)
            continue;
        Rational f = c;
        for (std::size_t j = 0; j < n_; ++j)
            if (rows_[r][j] != 0)
                v[j] -= f * rows_[r][j];
    }
}

bool EchelonSpan::contains(std::vector<Rational> v) const
{
    reduce(v);
    for (auto& x : v)
        if (x != 0)
            return false;
    return true;
}

bool EchelonSpan::insert(std::vector<Rational> v)
{
    reduce(v);
    std::size_t p = 0;
    while (p < n_ && v[p] == 0)
        ++p;
    if (p == n_)
        return false;
    Rational inv = 1 / v[p];
    for (auto& x : v)
        x *= inv;
    for (auto& row : rows_) {
        if (row[p] == 0)
            continue;
        Rational f = row[p];
        for (std::size_t j = 0; j < n_; ++j)
            if (v[j] != 0)
                row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

BlockBasis::BlockBasis(std::vector<BasisCochain> basis) : basis_(std::move(basis))
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        pos_.emplace(basis_[i], i);
}

std::vector<Rational> BlockBasis::coordinates(const Cochain& c) const
{
    std::vector<Rational> v(basis_.size());
    for (auto& [b, q] : c.terms()) {
        auto it = pos_.find(b);
        if (it == pos_.end())
            throw ContractViolation("cochain term " + format_basis(c.space(), b) + " outside block");
        v[it->second] = q;
    }
    return v;
}

Cochain BlockBasis::cochain(const SuperSpace& space, const std::vector<Rational>& v) const
{
    Cochain c(space);
    for (std::size_t i = 0; i < v.size(); ++i)
        c.add_term(basis_[i], v[i]);
    return c;
}

std::optional<std::size_t> BlockBasis::position(const BasisCochain& b) const
{
    auto it = pos_.find(b);
    if (it == pos_.end())
        return std::nullopt;
    return it->second;
}

int homogeneous_weight(const Cochain& d)
{
    if (d.is_zero())
        throw ContractViolation("codifferential is zero");
    if (d.min_weight() != d.max_weight())
        throw ContractViolation("codifferential must be homogeneous in weight");
    return d.min_weight();
}

RationalMatrix coboundary_matrix(const Cochain& d, int weight, int parity)
{
    const auto& space = d.space();
    int k = homogeneous_weight(d);
    int tw = weight + k - 1;
    if (tw > space.weight_cutoff)
        throw RangeError("D on weight " + std::to_string(weight) + " needs weight cutoff >= " + std::to_string(tw));
    int tp = (parity + d.parity()) & 1;
    BlockBasis src(basis_of_weight(space, weight, parity));
    BlockBasis dst(basis_of_weight(space, tw, tp));
    std::vector<std::vector<Rational>> cols;
    for (auto& b : src.basis())
        cols.push_back(dst.coordinates(coboundary(Cochain(space, b), d)));
    auto m = RationalMatrix::from_columns(cols, dst.size());
    m.col_labels = src.basis();
    m.row_labels = dst.basis();
    return m;
}

namespace {

std::string generic_label(char prefix, int weight, std::size_t index)
{
    return std::string(1, prefix) + std::to_string(weight) + "." + std::to_string(index);
}

}

CohomologyTable::CohomologyTable(const Cochain& d, std::vector<LabeledCochain> class_seeds,
                                 std::vector<LabeledCochain> complement_seeds)
    : space_(d.space()), d_(d)
{
    k_ = homogeneous_weight(d);
    if (d.parity() != 1)
        throw ContractViolation("codifferential must be odd");
    auto check = is_codifferential(d);
    if (!check.ok)
        throw ContractViolation("[d,d] != 0: " + format_cochain(check.witness));
    max_weight_ = space_.weight_cutoff - k_ + 1;
    if (max_weight_ < 1)
        throw RangeError("weight cutoff must be >= " + std::to_string(k_));

    std::vector<std::vector<std::vector<Rational>>> images(2 * max_weight_);
    blocks_.resize(2 * max_weight_);
    for (int w = 1; w <= max_weight_; ++w) {
        std::size_t generic_c = 0;
        for (int p = 0; p < 2; ++p) {
            auto& blk = blocks_[2 * (w - 1) + p];
            blk.weight = w;
            blk.parity = p;
            blk.basis = BlockBasis(basis_of_weight(space_, w, p));
            int tw = w + k_ - 1;
            BlockBasis dst(basis_of_weight(space_, tw, 1 - p));
            EchelonSpan img(dst.size());
            auto try_add = [&](const std::string* label, const Cochain& c) {
                auto v = dst.coordinates(coboundary(c, d_));
                if (img.insert(v))
                    blk.complement.push_back({label ? *label : generic_label('c', w, generic_c++), c});
            };
            for (auto& s : complement_seeds)
                if (!s.rep.is_zero() && s.rep.min_weight() == w && s.rep.max_weight() == w && s.rep.parity() == p)
                    try_add(&s.label, s.rep);
            for (auto& b : blk.basis.basis())
                try_add(nullptr, Cochain(space_, b));
            blk.cocycle_dim = blk.basis.size() - img.dim();
        }
    }

    for (int w = 1; w <= max_weight_; ++w) {
        std::size_t generic_h = 0;
        for (int p = 0; p < 2; ++p) {
            auto& blk = blocks_[2 * (w - 1) + p];
            int sw = w - k_ + 1;
            if (sw >= 1) {
                const auto& src = blocks_[2 * (sw - 1) + (1 - p)];
                for (std::size_t i = 0; i < src.complement.size(); ++i) {
                    blk.coboundaries.push_back(
                        {"D(" + src.complement[i].label + ")", coboundary(src.complement[i].rep, d_)});
                    blk.coboundary_source.push_back(i);
                }
            }
            EchelonSpan span(blk.basis.size());
            for (auto& b : blk.coboundaries)
                span.insert(blk.basis.coordinates(b.rep));
            int tw = w + k_ - 1;
            BlockBasis dst(basis_of_weight(space_, tw, 1 - p));
            for (auto& s : class_seeds) {
                if (s.rep.is_zero() || s.rep.min_weight() != w || s.rep.max_weight() != w || s.rep.parity() != p)
                    continue;
                if (!coboundary(s.rep, d_).is_zero())
                    throw ContractViolation("class seed " + s.label + " is not a cocycle");
                if (!span.insert(blk.basis.coordinates(s.rep)))
                    throw ContractViolation("class seed " + s.label + " is dependent modulo coboundaries");
                blk.classes.push_back(s);
                ++generic_h;
            }
            RationalMatrix dm(dst.size(), blk.basis.size());
            for (std::size_t j = 0; j < blk.basis.size(); ++j) {
                auto v = dst.coordinates(coboundary(Cochain(space_, blk.basis.basis()[j]), d_));
                for (std::size_t i = 0; i < dst.size(); ++i)
                    dm(i, j) = v[i];
            }
            for (auto& z : nullspace(dm))
                if (span.insert(z))
                    blk.classes.push_back({generic_label('h', w, generic_h++), blk.basis.cochain(space_, z)});
            if (blk.classes.size() + blk.coboundaries.size() != blk.cocycle_dim)
                throw ContractViolation("cohomology block dimension mismatch at weight " + std::to_string(w));

            std::vector<std::vector<Rational>> cols;
            for (auto& c : blk.classes)
                cols.push_back(blk.basis.coordinates(c.rep));
            for (auto& c : blk.coboundaries)
                cols.push_back(blk.basis.coordinates(c.rep));
            for (auto& c : blk.complement)
                cols.push_back(blk.basis.coordinates(c.rep));
            auto inv = inverse(RationalMatrix::from_columns(cols, blk.basis.size()));
            if (!inv)
                throw ContractViolation("H + B + C does not span the block");
            blk.decomposition = *inv;
        }
    }
}

const CohomologyBlock& CohomologyTable::block(int weight, int parity) const
{
    if (weight < 1 || weight > max_weight_)
        throw RangeError("cohomology at weight " + std::to_string(weight) + " needs weight cutoff >= " +
                         std::to_string(weight + k_ - 1));
    return blocks_[2 * (weight - 1) + (parity & 1)];
}

BlockCoordinates CohomologyTable::decompose(const Cochain& c) const
{
    BlockCoordinates out;
    if (c.is_zero())
        return out;
    int w = c.min_weight();
    int p = c.parity();
    if (w != c.max_weight() || p < 0)
        throw ContractViolation("decompose needs a weight- and parity-homogeneous cochain");
    const auto& blk = block(w, p);
    auto v = blk.basis.coordinates(c);
    std::size_t n = v.size();
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (v[j] != 0 && blk.decomposition(i, j) != 0)
                x[i] += blk.decomposition(i, j) * v[j];
    std::size_t h = blk.classes.size(), b = blk.coboundaries.size();
    out.classes.assign(x.begin(), x.begin() + h);
    out.coboundaries.assign(x.begin() + h, x.begin() + h + b);
    out.complement.assign(x.begin() + h + b, x.end());
    return out;
}

Cochain CohomologyTable::preimage(const Cochain& target) const
{
    Cochain gamma(space_);
    if (target.is_zero())
        return gamma;
    auto co = decompose(target);
    for (auto& x : co.classes)
        if (x != 0)
            throw NoSolution("target has a nonzero cohomology component");
    for (auto& x : co.complement)
        if (x != 0)
            throw NoSolution("target is not a cocycle");
    const auto& blk = block(target.min_weight(), target.parity());
    const auto& src = block(target.min_weight() - k_ + 1, 1 - target.parity());
    for (std::size_t i = 0; i < co.coboundaries.size(); ++i)
        gamma += co.coboundaries[i] * src.complement[blk.coboundary_source[i]].rep;
    return gamma;
}

CohomologyBlock cohomology_basis(const Cochain& d, int weight, int parity)
{
    int k = homogeneous_weight(d);
    if (weight + k - 1 > d.space().weight_cutoff)
        throw RangeError("cohomology at weight " + std::to_string(weight) + " needs weight cutoff >= " +
                         std::to_string(weight + k - 1));
    CohomologyTable t(d);
    return t.block(weight, parity);
}

Cochain preimage(const Cochain& d, const Cochain& target)
{
    CohomologyTable t(d);
    return t.preimage(target);
}

}
