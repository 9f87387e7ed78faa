#include "twistk/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "twistk/arith.hpp"

namespace twistk::abelian {

namespace {

// Rewrites a multiset of cyclic orders (each >= 1) into an invariant-factor
// chain via repeated (gcd, lcm) exchanges.
std::vector<Int> to_invariant_chain(std::vector<Int> v)
{
    for (const Int& x : v)
        if (x < 1)
            throw std::domain_error("cyclic order must be positive");
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            Int g = arith::gcd(v[i], v[j]);
            if (g != v[i]) {
                Int l = v[i] / g * v[j];
                v[i] = g;
                v[j] = l;
            }
        }
    }
    std::erase(v, Int(1));
    return v;
}

}  // namespace

AbGroup::AbGroup(std::size_t free_rank, std::vector<Int> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors))
{
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw std::domain_error("invariant factor must be at least 2");
        if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
            throw std::domain_error("invariant factors must form a divisibility chain");
    }
}

AbGroup AbGroup::from_cyclic_orders(std::size_t free_rank, std::vector<Int> orders)
{
    return AbGroup(free_rank, to_invariant_chain(std::move(orders)));
}

AbGroup AbGroup::cyclic(const Int& n)
{
    if (n < 1)
        throw std::domain_error("cyclic: order must be positive");
    if (n == 1)
        return trivial();
    return AbGroup(0, {n});
}

std::optional<Int> AbGroup::order() const
{
    if (free_rank_ > 0)
        return std::nullopt;
    return torsion_order();
}

Int AbGroup::torsion_order() const
{
    Int o = 1;
    for (const Int& d : factors_)
        o *= d;
    return o;
}

std::string AbGroup::str() const
{
    if (is_trivial())
        return "0";
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first)
            out << " + ";
        first = false;
    };
    if (free_rank_ == 1) {
        sep();
        out << "Z";
    } else if (free_rank_ > 1) {
        sep();
        out << "Z^" << free_rank_;
    }
    for (std::size_t i = 0; i < factors_.size();) {
        std::size_t j = i;
        while (j < factors_.size() && factors_[j] == factors_[i])
            ++j;
        sep();
        if (j - i == 1)
            out << "Z/" << factors_[i];
        else
            out << "(Z/" << factors_[i] << ")^" << (j - i);
        i = j;
    }
    return out.str();
}

AbGroup p_part(const AbGroup& g, const Int& p)
{
    std::vector<Int> parts;
    for (const Int& d : g.invariant_factors()) {
        Int q = arith::p_power_part(p, d);
        if (q > 1)
            parts.push_back(q);
    }
    return AbGroup(0, std::move(parts));  // valuations are monotone along the chain
}

AbGroup direct_sum(const AbGroup& a, const AbGroup& b)
{
    std::vector<Int> orders = a.invariant_factors();
    orders.insert(orders.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return AbGroup::from_cyclic_orders(a.free_rank() + b.free_rank(), std::move(orders));
}

AbGroup tensor_cyclic(const AbGroup& g, const Int& m)
{
    if (m < 1)
        throw std::domain_error("tensor_cyclic: m must be positive");
    std::vector<Int> orders;
    for (std::size_t i = 0; i < g.free_rank(); ++i)
        orders.push_back(m);
    for (const Int& d : g.invariant_factors())
        orders.push_back(arith::gcd(d, m));
    return AbGroup::from_cyclic_orders(0, std::move(orders));
}

AbGroup tor_cyclic(const AbGroup& g, const Int& m)
{
    if (m < 1)
        throw std::domain_error("tor_cyclic: m must be positive");
    std::vector<Int> orders;
    for (const Int& d : g.invariant_factors())
        orders.push_back(arith::gcd(d, m));
    return AbGroup::from_cyclic_orders(0, std::move(orders));
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0))
{
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Int> entries)
    : rows_(rows), cols_(cols), data_(entries)
{
    if (data_.size() != rows * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d)
{
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(i, i) = d[i];
    return m;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) += a * rhs.at(k, j);
        }
    return out;
}

Int IntMatrix::determinant() const
{
    if (rows_ != cols_)
        throw std::invalid_argument("determinant: matrix must be square");
    std::size_t n = rows_;
    if (n == 0)
        return 1;
    IntMatrix a(*this);
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t i = k + 1;
            while (i < n && a.at(i, k) == 0)
                ++i;
            if (i == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a.at(k, j), a.at(i, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::str() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            out << (j == 0 ? "[" : ", ") << at(i, j);
        out << "]" << (i + 1 == rows_ ? "]" : "\n");
    }
    if (rows_ == 0)
        out << "[]";
    return out.str();
}

std::vector<Int> SmithNormalForm::diagonal() const
{
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i)
        out.push_back(d.at(i, i));
    return out;
}

namespace {

// Row/column operation tracker. Every operation applied to the work matrix
// is mirrored into the transform and its inverse, so u * m * v = a holds
// throughout and u * u_inv = v * v_inv = id.
struct Reduction {
    IntMatrix a, u, u_inv, v, v_inv;

    explicit Reduction(const IntMatrix& m)
        : a(m),
          u(IntMatrix::identity(m.rows())),
          u_inv(IntMatrix::identity(m.rows())),
          v(IntMatrix::identity(m.cols())),
          v_inv(IntMatrix::identity(m.cols()))
    {
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < a.cols(); ++c)
            std::swap(a.at(i, c), a.at(j, c));
        for (std::size_t c = 0; c < u.cols(); ++c)
            std::swap(u.at(i, c), u.at(j, c));
        for (std::size_t r = 0; r < u_inv.rows(); ++r)
            std::swap(u_inv.at(r, i), u_inv.at(r, j));
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < a.rows(); ++r)
            std::swap(a.at(r, i), a.at(r, j));
        for (std::size_t r = 0; r < v.rows(); ++r)
            std::swap(v.at(r, i), v.at(r, j));
        for (std::size_t c = 0; c < v_inv.cols(); ++c)
            std::swap(v_inv.at(i, c), v_inv.at(j, c));
    }

    // row i += q * row j
    void add_row(std::size_t i, std::size_t j, const Int& q)
    {
        if (q == 0)
            return;
        for (std::size_t c = 0; c < a.cols(); ++c)
            a.at(i, c) += q * a.at(j, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            u.at(i, c) += q * u.at(j, c);
        for (std::size_t r = 0; r < u_inv.rows(); ++r)
            u_inv.at(r, j) -= q * u_inv.at(r, i);
    }

    // col i += q * col j
    void add_col(std::size_t i, std::size_t j, const Int& q)
    {
        if (q == 0)
            return;
        for (std::size_t r = 0; r < a.rows(); ++r)
            a.at(r, i) += q * a.at(r, j);
        for (std::size_t r = 0; r < v.rows(); ++r)
            v.at(r, i) += q * v.at(r, j);
        for (std::size_t c = 0; c < v_inv.cols(); ++c)
            v_inv.at(j, c) -= q * v_inv.at(i, c);
    }

    void negate_row(std::size_t i)
    {
        for (std::size_t c = 0; c < a.cols(); ++c)
            a.at(i, c) = -a.at(i, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            u.at(i, c) = -u.at(i, c);
        for (std::size_t r = 0; r < u_inv.rows(); ++r)
            u_inv.at(r, i) = -u_inv.at(r, i);
    }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m)
{
    Reduction red(m);
    IntMatrix& a = red.a;
    const std::size_t nr = a.rows(), nc = a.cols();

    for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
        for (;;) {
            // least-|value| nonzero pivot in the trailing submatrix
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    const Int& x = a.at(i, j);
                    if (x == 0)
                        continue;
                    Int ax = abs(x);
                    if (best == 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0)
                goto done;  // trailing submatrix is zero
            red.swap_rows(t, pi);
            red.swap_cols(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                Int q = a.at(i, t) / a.at(t, t);
                red.add_row(i, t, -q);
                if (a.at(i, t) != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                Int q = a.at(t, j) / a.at(t, t);
                red.add_col(j, t, -q);
                if (a.at(t, j) != 0)
                    dirty = true;
            }
            if (dirty)
                continue;  // a residue smaller than the pivot appeared

            // make the pivot divide everything that remains, so the
            // diagonal comes out as a divisibility chain
            bool divides_all = true;
            for (std::size_t i = t + 1; i < nr && divides_all; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        red.add_row(t, i, Int(1));
                        divides_all = false;
                        break;
                    }
            if (divides_all)
                break;
        }
        if (a.at(t, t) < 0)
            red.negate_row(t);
    }
done:
    return SmithNormalForm{red.u, red.a, red.v, red.u_inv, red.v_inv};
}

AbGroup cokernel(const IntMatrix& m)
{
    if (m.cols() == 0 || m.is_zero())
        return AbGroup::free(m.rows());
    SmithNormalForm snf = smith_normal_form(m);
    std::vector<Int> diag = snf.diagonal();
    std::vector<Int> factors;
    std::size_t nonzero = 0;
    for (const Int& d : diag)
        if (d != 0) {
            ++nonzero;
            if (d >= 2)
                factors.push_back(d);
        }
    return AbGroup(m.rows() - nonzero, std::move(factors));
}

AbGroup homology_pair(const IntMatrix& d_out, const IntMatrix& d_in)
{
    if (d_out.cols() != d_in.rows())
        throw std::invalid_argument("homology_pair: middle ranks disagree");
    if (!(d_out * d_in).is_zero())
        throw std::invalid_argument("homology_pair: d_out * d_in != 0, not a complex");

    const std::size_t n = d_out.cols();
    SmithNormalForm snf = smith_normal_form(d_out);
    std::vector<Int> diag = snf.diagonal();

    // kernel basis of d_out = columns of V at zero diagonal positions
    std::vector<std::size_t> kernel_idx;
    for (std::size_t i = 0; i < n; ++i)
        if (i >= diag.size() || diag[i] == 0)
            kernel_idx.push_back(i);

    // coordinates of im(d_in) in that basis
    IntMatrix w = snf.v_inv * d_in;
    for (std::size_t i = 0; i < n; ++i) {
        bool in_kernel = std::binary_search(kernel_idx.begin(), kernel_idx.end(), i);
        if (in_kernel)
            continue;
        for (std::size_t j = 0; j < w.cols(); ++j)
            if (w.at(i, j) != 0)
                throw std::logic_error("homology_pair: image not contained in kernel");
    }
    IntMatrix presentation(kernel_idx.size(), d_in.cols());
    for (std::size_t r = 0; r < kernel_idx.size(); ++r)
        for (std::size_t j = 0; j < d_in.cols(); ++j)
            presentation.at(r, j) = w.at(kernel_idx[r], j);
    return cokernel(presentation);
}

}  // namespace twistk::abelian
