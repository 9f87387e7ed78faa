#include "twistk/khorami.hpp"

#include <stdexcept>

#include "twistk/arith.hpp"

namespace twistk::khorami {

Int structure_constant(int k, int i, int j)
{
    if (k < 0 || i < 0 || j < 0)
        throw std::domain_error("structure_constant: indices must be nonnegative");
    if (k < std::max(i, j) || k > i + j)
        return 0;
    // ((1+u)(1+v) - 1)^k = sum_m (-1)^(k-m) C(k,m) (1+u)^m (1+v)^m
    Int c = 0;
    for (int m = std::max(i, j); m <= k; ++m) {
        Int term = arith::binom(k, m) * arith::binom(m, i) * arith::binom(m, j);
        c += (k - m) % 2 == 0 ? term : -term;
    }
    return c;
}

TruncatedRing::TruncatedRing(int truncation) : n_(truncation)
{
    if (n_ < 0)
        throw std::domain_error("TruncatedRing: truncation must be nonnegative");
    const std::size_t w = static_cast<std::size_t>(n_) + 1;

    std::vector<Int> pascal(w * w, Int(0));
    for (std::size_t n = 0; n < w; ++n) {
        pascal[n * w] = 1;
        for (std::size_t k = 1; k <= n; ++k)
            pascal[n * w + k] = pascal[(n - 1) * w + k - 1]
                + (k < n ? pascal[(n - 1) * w + k] : Int(0));
    }

    table_.assign(w * w * w, Int(0));
    for (int k = 0; k <= n_; ++k)
        for (int i = 0; i <= n_; ++i)
            for (int j = i; j <= n_; ++j) {
                if (k < std::max(i, j) || k > i + j)
                    continue;
                Int c = 0;
                for (int m = std::max(i, j); m <= k; ++m) {
                    Int term = pascal[static_cast<std::size_t>(k) * w + m]
                        * pascal[static_cast<std::size_t>(m) * w + i]
                        * pascal[static_cast<std::size_t>(m) * w + j];
                    c += (k - m) % 2 == 0 ? term : -term;
                }
                table_[(static_cast<std::size_t>(k) * w + i) * w + j] = c;
                table_[(static_cast<std::size_t>(k) * w + j) * w + i] = c;
            }
}

const Int& TruncatedRing::constant(int k, int i, int j) const
{
    if (k < 0 || i < 0 || j < 0 || k > n_ || i > n_ || j > n_)
        throw std::out_of_range("TruncatedRing::constant: index beyond truncation");
    const std::size_t w = static_cast<std::size_t>(n_) + 1;
    return table_[(static_cast<std::size_t>(k) * w + i) * w + j];
}

RModuleElt TruncatedRing::multiply_basis(int i, int j) const
{
    std::vector<Int> out(static_cast<std::size_t>(n_) + 1, Int(0));
    for (int k = std::max(i, j); k <= n_ && k <= i + j; ++k)
        out[k] = constant(k, i, j);
    return RModuleElt(*this, std::move(out));
}

RModuleElt::RModuleElt(const TruncatedRing& ring, std::vector<Int> coeffs)
    : ring_(&ring), coeffs_(std::move(coeffs))
{
    if (coeffs_.size() != static_cast<std::size_t>(ring.truncation()) + 1)
        throw std::invalid_argument("RModuleElt: coefficient vector length must be N+1");
}

RModuleElt RModuleElt::basis(const TruncatedRing& ring, int j)
{
    if (j < 0 || j > ring.truncation())
        throw std::out_of_range("RModuleElt::basis: index beyond truncation");
    std::vector<Int> c(static_cast<std::size_t>(ring.truncation()) + 1, Int(0));
    c[j] = 1;
    return RModuleElt(ring, std::move(c));
}

RModuleElt RModuleElt::operator+(const RModuleElt& rhs) const
{
    std::vector<Int> out = coeffs_;
    for (std::size_t t = 0; t < out.size(); ++t)
        out[t] += rhs.coeffs_[t];
    return RModuleElt(*ring_, std::move(out));
}

RModuleElt RModuleElt::operator*(const RModuleElt& rhs) const
{
    const int n = ring_->truncation();
    std::vector<Int> out(static_cast<std::size_t>(n) + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
        if (coeffs_[i] == 0)
            continue;
        for (int j = 0; j <= n; ++j) {
            if (rhs.coeffs_[j] == 0)
                continue;
            Int c = coeffs_[i] * rhs.coeffs_[j];
            for (int k = std::max(i, j); k <= n && k <= i + j; ++k)
                out[k] += c * ring_->constant(k, i, j);
        }
    }
    return RModuleElt(*ring_, std::move(out));
}

RModuleElt RModuleElt::scaled(const Int& c) const
{
    std::vector<Int> out = coeffs_;
    for (Int& x : out)
        x *= c;
    return RModuleElt(*ring_, std::move(out));
}

Int epsilon(const RModuleElt& v)
{
    Int s = v.coeffs()[0];
    if (v.coeffs().size() > 1)
        s += v.coeffs()[1];
    return s;
}

abelian::AbGroup tensor_over_r(const Int& h, const TruncatedRing& ring)
{
    if (h < 1)
        throw std::domain_error("tensor_over_r: h must be positive");
    const int n = ring.truncation();
    if (n < 2)
        throw std::domain_error("tensor_over_r: truncation must be at least 2");

    abelian::IntMatrix relations(1, static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        relations.at(0, j) = epsilon(ring.multiply_basis(1, j).scaled(h));
    return abelian::cokernel(relations);
}

abelian::AbGroup tensor_over_r(const Int& h, int truncation)
{
    return tensor_over_r(h, TruncatedRing(truncation));
}

abelian::AbGroup serre_homology_ph(const Int& h, int degree)
{
    using abelian::AbGroup;
    using abelian::IntMatrix;
    if (h < 1)
        throw std::domain_error("serre_homology_ph: h must be positive");
    if (degree < 0)
        throw std::domain_error("serre_homology_ph: degree must be nonnegative");
    if (degree == 0)
        return AbGroup::free(1);

    if (degree % 2 == 0) {
        // transgression of u^n is n*h*u^(n-1)*y, a rank-one presentation
        Int n = degree / 2;
        IntMatrix d_in(1, 1, {n * h});
        return abelian::cokernel(d_in);
    }
    if (degree < 3)
        return AbGroup::trivial();
    // odd degree 2n+1: the surviving corner is the kernel of the same map
    Int n = (degree - 1) / 2;
    IntMatrix d_out(1, 1, {n * h});
    IntMatrix d_in(1, 0);
    return abelian::homology_pair(d_out, d_in);
}

}  // namespace twistk::khorami
