#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "twistk/int_types.hpp"

namespace twistk::abelian {

/// A finitely generated abelian group in invariant-factor normal form:
/// Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
/// The trivial group is AbGroup(0, {}).
class AbGroup {
public:
    AbGroup() = default;
    AbGroup(std::size_t free_rank, std::vector<Int> invariant_factors);

    /// Builds the normal form of Z^free_rank + sum Z/orders[i]; the orders
    /// may come in any order and may include 1s (dropped).
    static AbGroup from_cyclic_orders(std::size_t free_rank, std::vector<Int> orders);
    static AbGroup trivial() { return AbGroup(); }
    static AbGroup cyclic(const Int& n);
    static AbGroup free(std::size_t rank) { return AbGroup(rank, {}); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_cyclic() const { return free_rank_ == 0 && factors_.size() <= 1; }
    bool is_finite() const { return free_rank_ == 0; }

    /// Order of the group; nullopt when infinite (free_rank > 0).
    std::optional<Int> order() const;

    /// Order of the torsion subgroup.
    Int torsion_order() const;

    /// e.g. "0", "Z", "Z^2", "Z/4", "(Z/2)^4 + Z/8".
    std::string str() const;

    bool operator==(const AbGroup&) const = default;

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> factors_;
};

/// The p-primary component of the torsion subgroup of g.
AbGroup p_part(const AbGroup& g, const Int& p);

AbGroup direct_sum(const AbGroup& a, const AbGroup& b);

/// g tensor Z/m.
AbGroup tensor_cyclic(const AbGroup& g, const Int& m);

/// Tor(g, Z/m).
AbGroup tor_cyclic(const AbGroup& g, const Int& m);

/// A dense matrix over Z presenting a map Z^cols -> Z^rows.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Int> entries);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix&) const = default;

    /// Exact determinant (fraction-free Bareiss elimination); square only.
    Int determinant() const;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

struct SmithNormalForm {
    IntMatrix u;  // unimodular, rows x rows
    IntMatrix d;  // diagonal, same shape as input, d1 | d2 | ...
    IntMatrix v;  // unimodular, cols x cols
    // inverses of the transforms, maintained alongside them
    IntMatrix u_inv;
    IntMatrix v_inv;

    std::vector<Int> diagonal() const;
};

/// U * M * V = D with U, V unimodular and D diagonal with a divisibility
/// chain. Pivoting always selects a nonzero entry of least absolute value.
SmithNormalForm smith_normal_form(const IntMatrix& m);

/// Z^rows / image(M), in normal form.
AbGroup cokernel(const IntMatrix& m);

/// ker(d_out) / im(d_in) for a two-term complex
/// Z^k --d_in--> Z^n --d_out--> Z^m. Throws std::invalid_argument unless
/// d_out * d_in = 0.
AbGroup homology_pair(const IntMatrix& d_out, const IntMatrix& d_in);

}  // namespace twistk::abelian
