#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "gkz/errors.hpp"

namespace gkz::lattice {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Reduced rational with explicit denominator check.
Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(const std::string& s);     // "p/q" or "p"
std::string rat_to_string(const Rat& q); // always "p/q"

RatVec to_rat(const IntVec& v);
Rat dot(const RatVec& a, const IntVec& b);
Int dot(const IntVec& a, const IntVec& b);

// Dense arbitrary-precision integer matrix, column-major storage.
class IntegerMatrix {
  public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(const std::vector<IntVec>& rows);
    static IntegerMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }
    Int& at(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }

    IntVec column(std::size_t j) const;
    std::vector<IntVec> columns() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
    void negate_row(std::size_t i);

    IntegerMatrix multiplied(const IntegerMatrix& rhs) const;
    IntVec apply(const IntVec& v) const;
    RatVec apply(const RatVec& v) const;

    bool operator==(const IntegerMatrix& rhs) const = default;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    IntVec data_;
};

// U * A * V = D with U, V unimodular, D diagonal with d_1 | d_2 | ...
struct SmithForm {
    IntegerMatrix D, U, V;
};

SmithForm smith(const IntegerMatrix& a);

// Determinant by fraction-free Gaussian elimination (Bareiss).
Int determinant(const IntegerMatrix& a);

// Index of the sublattice spanned by the columns of a nonsingular square B,
// i.e. |det B|. Throws SingularError.
Int sublattice_index(const IntegerMatrix& b);

// Basis of the saturated integer kernel {v : Av = 0}; empty iff trivial.
std::vector<IntVec> kernel_basis(const IntegerMatrix& a);

// Rank over Q.
std::size_t rank(const IntegerMatrix& a);

// Exact inverse of a unimodular integer matrix.
IntegerMatrix unimodular_inverse(const IntegerMatrix& u);

enum class ConeMembership { Outside, Boundary, RelativeInterior };

// Decides p in pos_Q(generators) by exact feasibility; RelativeInterior means
// p admits a representation with all coefficients strictly positive.
ConeMembership cone_member(const std::vector<IntVec>& generators, const RatVec& p);

// A rational covector c with <g, c> > 0 for every generator, or absent. By
// Gordan's alternative, absent iff a nonzero nonnegative relation among the
// generators exists.
std::optional<RatVec> strictly_positive_functional(const std::vector<IntVec>& generators);

// The complementary certificate: a nonzero nonnegative rational a with
// sum a_i g_i = 0 (normalized to sum a_i = 1), or absent.
std::optional<RatVec> positive_relation(const std::vector<IntVec>& generators);

// Primitive integer normal to the span of the given vectors in Z^r; the span
// must have rank exactly r-1. Returns the lexicographically-positive
// representative. Throws RankError.
IntVec primitive_normal(const std::vector<IntVec>& vectors, std::size_t r);

// Coordinates on the hyperplane lambda-perp for a primitive lambda: an
// integral basis of lambda-perp (columns of `basis`, rank r-1), an exact
// coordinate map for vectors in the hyperplane, and an integral lift chi_tw
// with <chi_tw, lambda> = 1.
struct HyperplaneCoords {
    IntegerMatrix basis;      // r x (r-1)
    IntVec chi_tw;            // length r
    IntegerMatrix inverse;    // r x r, inverse of [chi_tw | basis]

    IntVec coords(const IntVec& v) const;   // v must lie in lambda-perp
    RatVec coords(const RatVec& v) const;
    IntVec lift(const IntVec& y) const { return basis.apply(y); }
};

HyperplaneCoords hyperplane_coordinates(const IntVec& lambda);

Int vector_gcd(const IntVec& v);
bool is_primitive(const IntVec& v);
bool is_zero(const IntVec& v);

namespace detail {

// Exact-pivot simplex on max c.x s.t. Ax = b, x >= 0 (desk scale).
enum class LpStatus { Infeasible, Optimal, Unbounded };

struct LpResult {
    LpStatus status;
    Rat value;
    RatVec solution;
};

LpResult solve_lp(const std::vector<RatVec>& a_rows, const RatVec& b, const RatVec& c);

}  // namespace detail

}  // namespace gkz::lattice
