#include "gkz/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

namespace gkz::lattice {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int num(s);
            return Rat(num);
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("cannot parse rational '" + s + "'");
    }
}

std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RatVec to_rat(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

Rat dot(const RatVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * Rat(b[i]);
    return acc;
}

Int dot(const IntVec& a, const IntVec& b) {
    assert(a.size() == b.size());
    Int acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVec>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DomainError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_columns(const std::vector<IntVec>& cols, std::size_t rows) {
    IntegerMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw DomainError("column dimension mismatch");
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

IntVec IntegerMatrix::column(std::size_t j) const {
    IntVec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<IntVec> IntegerMatrix::columns() const {
    std::vector<IntVec> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
}

void IntegerMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntegerMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntegerMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += factor * at(src, k);
}

void IntegerMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& factor) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += factor * at(k, src);
}

void IntegerMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

IntegerMatrix IntegerMatrix::multiplied(const IntegerMatrix& rhs) const {
    assert(cols_ == rhs.rows_);
    IntegerMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rhs.cols_; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < cols_; ++k) acc += at(i, k) * rhs.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

IntVec IntegerMatrix::apply(const IntVec& v) const {
    assert(v.size() == cols_);
    IntVec out(rows_, Int(0));
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) out[i] += at(i, j) * v[j];
    return out;
}

RatVec IntegerMatrix::apply(const RatVec& v) const {
    assert(v.size() == cols_);
    RatVec out(rows_, Rat(0));
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) out[i] += Rat(at(i, j)) * v[j];
    return out;
}

namespace {

// Location of the minimal nonzero |entry| in D[t.., t..], row-major scan.
bool min_abs_pivot(const IntegerMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

bool row_col_clear(const IntegerMatrix& d, std::size_t t) {
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d.at(i, t) != 0) return false;
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

}  // namespace

SmithForm smith(const IntegerMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithForm f{a, IntegerMatrix::identity(m), IntegerMatrix::identity(n)};
    IntegerMatrix& d = f.D;
    const std::size_t nmin = std::min(m, n);

    for (std::size_t t = 0; t < nmin; ++t) {
        std::size_t pi = t, pj = t;
        if (!min_abs_pivot(d, t, pi, pj)) break;  // remaining block zero
        for (;;) {
            min_abs_pivot(d, t, pi, pj);
            d.swap_rows(t, pi);
            f.U.swap_rows(t, pi);
            d.swap_cols(t, pj);
            f.V.swap_cols(t, pj);

            for (std::size_t i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                if (q != 0) {
                    d.add_row_multiple(i, t, -q);
                    f.U.add_row_multiple(i, t, -q);
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col_multiple(j, t, -q);
                    f.V.add_col_multiple(j, t, -q);
                }
            }
            if (!row_col_clear(d, t)) continue;

            // Enforce the divisibility chain before moving on.
            bool fixed = true;
            for (std::size_t i = t + 1; i < m && fixed; ++i)
                for (std::size_t j = t + 1; j < n && fixed; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row_multiple(t, i, 1);
                        f.U.add_row_multiple(t, i, 1);
                        fixed = false;
                    }
            if (fixed) break;
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            f.U.negate_row(t);
        }
    }
    return f;
}

Int determinant(const IntegerMatrix& a) {
    if (a.rows() != a.cols()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntegerMatrix m = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return 0;
            m.swap_rows(k, swap_row);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    Int result = sign * m.at(n - 1, n - 1);
    return result;
}

Int sublattice_index(const IntegerMatrix& b) {
    Int det = determinant(b);
    if (det == 0) throw SingularError("sublattice basis is singular");
    return abs(det);
}

std::vector<IntVec> kernel_basis(const IntegerMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    SmithForm f = smith(a);
    std::vector<IntVec> basis;
    for (std::size_t j = 0; j < n; ++j) {
        bool zero_image = j >= std::min(m, n) || f.D.at(j, j) == 0;
        if (zero_image) basis.push_back(f.V.column(j));
    }
    return basis;
}

std::size_t rank(const IntegerMatrix& a) {
    SmithForm f = smith(a);
    std::size_t r = 0;
    for (std::size_t j = 0; j < std::min(a.rows(), a.cols()); ++j)
        if (f.D.at(j, j) != 0) ++r;
    return r;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& u) {
    if (u.rows() != u.cols()) throw DomainError("inverse of non-square matrix");
    const std::size_t n = u.rows();
    // Rational Gauss-Jordan on [u | I], then integrality check.
    std::vector<RatVec> work(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) work[i][j] = Rat(u.at(i, j));
        work[i][n + i] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i)
            if (work[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv == n) throw SingularError("matrix is singular");
        std::swap(work[k], work[piv]);
        Rat inv_p = 1 / work[k][k];
        for (std::size_t j = 0; j < 2 * n; ++j) work[k][j] *= inv_p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || work[i][k] == 0) continue;
            Rat factor = work[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) work[i][j] -= factor * work[k][j];
        }
    }
    IntegerMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& q = work[i][n + j];
            if (q.get_den() != 1) throw DomainError("matrix is not unimodular");
            inv.at(i, j) = q.get_num();
        }
    return inv;
}

Int vector_gcd(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    return g;
}

bool is_primitive(const IntVec& v) { return vector_gcd(v) == 1; }

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

IntVec primitive_normal(const std::vector<IntVec>& vectors, std::size_t r) {
    if (r == 0) throw RankError("no ambient lattice for a normal vector");
    for (const IntVec& v : vectors)
        if (v.size() != r) throw DomainError("normal: dimension mismatch");
    IntegerMatrix a = vectors.empty() ? IntegerMatrix(0, r) : IntegerMatrix::from_rows(vectors);
    std::vector<IntVec> ker = kernel_basis(a);
    if (ker.size() != 1) {
        throw RankError("span rank is " + std::to_string(r - ker.size()) +
                        ", expected " + std::to_string(r - 1));
    }
    IntVec lambda = ker[0];
    Int g = vector_gcd(lambda);
    assert(g > 0);
    if (g != 1)
        for (Int& x : lambda) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    for (const Int& x : lambda) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : lambda) y = -y;
        break;
    }
    return lambda;
}

IntVec HyperplaneCoords::coords(const IntVec& v) const {
    RatVec y = coords(to_rat(v));
    IntVec out;
    out.reserve(y.size());
    for (const Rat& q : y) {
        assert(q.get_den() == 1);
        out.push_back(q.get_num());
    }
    return out;
}

RatVec HyperplaneCoords::coords(const RatVec& v) const {
    RatVec y = inverse.apply(v);
    if (y.empty() || y[0] != 0)
        throw DomainError("vector does not lie on the hyperplane");
    return RatVec(y.begin() + 1, y.end());
}

HyperplaneCoords hyperplane_coordinates(const IntVec& lambda) {
    const std::size_t r = lambda.size();
    if (r == 0 || is_zero(lambda) || !is_primitive(lambda))
        throw NotPrimitiveError("one-parameter subgroup vector is not primitive");
    SmithForm f = smith(IntegerMatrix::from_rows({lambda}));
    // lambda^T * V = u * e_1^T with u = +-1 since lambda is primitive.
    assert(f.D.at(0, 0) == 1);
    Int u = dot(lambda, f.V.column(0));
    assert(u == 1 || u == -1);

    HyperplaneCoords h;
    h.chi_tw = f.V.column(0);
    if (u == -1)
        for (Int& x : h.chi_tw) x = -x;
    h.basis = IntegerMatrix(r, r - 1);
    for (std::size_t j = 1; j < r; ++j)
        for (std::size_t i = 0; i < r; ++i) h.basis.at(i, j - 1) = f.V.at(i, j);
    IntegerMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        m.at(i, 0) = h.chi_tw[i];
        for (std::size_t j = 1; j < r; ++j) m.at(i, j) = h.basis.at(i, j - 1);
    }
    h.inverse = unimodular_inverse(m);
    return h;
}

ConeMembership cone_member(const std::vector<IntVec>& generators, const RatVec& p) {
    const std::size_t r = p.size();
    for (const IntVec& g : generators)
        if (g.size() != r) throw DomainError("cone: dimension mismatch");
    const std::size_t k = generators.size();
    if (k == 0) {
        bool zero = std::all_of(p.begin(), p.end(), [](const Rat& q) { return q == 0; });
        return zero ? ConeMembership::RelativeInterior : ConeMembership::Outside;
    }

    std::vector<RatVec> rows(r, RatVec(k, Rat(0)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) rows[i][j] = Rat(generators[j][i]);
    auto feas = detail::solve_lp(rows, p, RatVec(k, Rat(0)));
    if (feas.status == detail::LpStatus::Infeasible) return ConeMembership::Outside;

    // Strictness: maximize tau with a_j = tau + y_j, y >= 0, tau >= 0.
    std::vector<RatVec> rows2(r, RatVec(k + 1, Rat(0)));
    for (std::size_t i = 0; i < r; ++i) {
        Rat colsum = 0;
        for (std::size_t j = 0; j < k; ++j) {
            rows2[i][j + 1] = Rat(generators[j][i]);
            colsum += rows2[i][j + 1];
        }
        rows2[i][0] = colsum;
    }
    RatVec objective(k + 1, Rat(0));
    objective[0] = 1;
    auto strict = detail::solve_lp(rows2, p, objective);
    assert(strict.status != detail::LpStatus::Infeasible);
    if (strict.status == detail::LpStatus::Unbounded || strict.value > 0)
        return ConeMembership::RelativeInterior;
    return ConeMembership::Boundary;
}

std::optional<RatVec> strictly_positive_functional(const std::vector<IntVec>& generators) {
    if (generators.empty()) return RatVec{};
    const std::size_t r = generators[0].size();
    for (const IntVec& g : generators)
        if (g.size() != r) throw DomainError("functional: dimension mismatch");
    const std::size_t k = generators.size();
    // Variables: u (r), v (r), slack s (k); <g_i, u - v> - s_i = 1.
    std::vector<RatVec> rows(k, RatVec(2 * r + k, Rat(0)));
    RatVec b(k, Rat(1));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            rows[i][j] = Rat(generators[i][j]);
            rows[i][r + j] = -Rat(generators[i][j]);
        }
        rows[i][2 * r + i] = -1;
    }
    auto res = detail::solve_lp(rows, b, RatVec(2 * r + k, Rat(0)));
    if (res.status == detail::LpStatus::Infeasible) return std::nullopt;
    RatVec c(r, Rat(0));
    for (std::size_t j = 0; j < r; ++j) c[j] = res.solution[j] - res.solution[r + j];
    return c;
}

std::optional<RatVec> positive_relation(const std::vector<IntVec>& generators) {
    if (generators.empty()) return std::nullopt;
    const std::size_t r = generators[0].size();
    const std::size_t k = generators.size();
    std::vector<RatVec> rows(r + 1, RatVec(k, Rat(0)));
    RatVec b(r + 1, Rat(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < k; ++j) rows[i][j] = Rat(generators[j][i]);
    for (std::size_t j = 0; j < k; ++j) rows[r][j] = 1;
    b[r] = 1;
    auto res = detail::solve_lp(rows, b, RatVec(k, Rat(0)));
    if (res.status == detail::LpStatus::Infeasible) return std::nullopt;
    return res.solution;
}

}  // namespace gkz::lattice
