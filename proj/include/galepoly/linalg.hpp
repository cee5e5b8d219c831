#ifndef GALEPOLY_LINALG_HPP
#define GALEPOLY_LINALG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

namespace galepoly {

/// Arbitrary-precision rational; GMP keeps every value in lowest terms.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;

/// Reduced row echelon form together with the pivot column of each nonzero row.
template <typename Scalar>
struct RowEchelon
{
    MatrixX<Scalar> reduced;
    std::vector<Eigen::Index> pivotColumns;

    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivotColumns.size()); }
};

/**
 * Gauss-Jordan elimination over an exact field.
 *
 * Columns are scanned left to right; in each column the pivot is the first
 * row (at or below the current pivot row) holding a nonzero entry. The output
 * is therefore a deterministic function of the input.
 */
template <typename Derived>
RowEchelon<typename Derived::Scalar> reducedRowEchelon(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    RowEchelon<Scalar> out;
    out.reduced = m;
    MatrixX<Scalar>& a = out.reduced;
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();

    Eigen::Index pivotRow = 0;
    for (Eigen::Index c = 0; c < cols && pivotRow < rows; ++c)
    {
        Eigen::Index found = -1;
        for (Eigen::Index r = pivotRow; r < rows; ++r)
        {
            if (a(r, c) != 0)
            {
                found = r;
                break;
            }
        }
        if (found < 0)
            continue;
        if (found != pivotRow)
            a.row(found).swap(a.row(pivotRow));

        const Scalar inv = Scalar(1) / a(pivotRow, c);
        for (Eigen::Index j = c; j < cols; ++j)
        {
            if (a(pivotRow, j) != 0)
                a(pivotRow, j) *= inv;
        }
        for (Eigen::Index r = 0; r < rows; ++r)
        {
            if (r == pivotRow || a(r, c) == 0)
                continue;
            const Scalar factor = a(r, c);
            for (Eigen::Index j = c; j < cols; ++j)
            {
                if (a(pivotRow, j) != 0)
                    a(r, j) -= factor * a(pivotRow, j);
            }
        }
        out.pivotColumns.push_back(c);
        ++pivotRow;
    }
    return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& m)
{
    return reducedRowEchelon(m).rank();
}

/**
 * Basis of {x : Mx = 0}, one column per free variable (in increasing column
 * order). Each basis column sets its free variable to 1 and every other free
 * variable to 0.
 */
template <typename Derived>
MatrixX<typename Derived::Scalar> kernelBasis(const Eigen::MatrixBase<Derived>& m)
{
    using Scalar = typename Derived::Scalar;
    const auto ech = reducedRowEchelon(m);
    const Eigen::Index cols = m.cols();

    std::vector<bool> isPivot(static_cast<std::size_t>(cols), false);
    for (auto c : ech.pivotColumns)
        isPivot[static_cast<std::size_t>(c)] = true;

    std::vector<Eigen::Index> freeColumns;
    for (Eigen::Index c = 0; c < cols; ++c)
        if (!isPivot[static_cast<std::size_t>(c)])
            freeColumns.push_back(c);

    MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(cols, static_cast<Eigen::Index>(freeColumns.size()));
    for (std::size_t k = 0; k < freeColumns.size(); ++k)
    {
        const Eigen::Index f = freeColumns[k];
        const auto col = static_cast<Eigen::Index>(k);
        basis(f, col) = 1;
        for (std::size_t r = 0; r < ech.pivotColumns.size(); ++r)
            basis(ech.pivotColumns[r], col) = -ech.reduced(static_cast<Eigen::Index>(r), f);
    }
    return basis;
}

/// Some x with Mx = b (free variables set to 0), or nullopt if inconsistent.
template <typename DerivedM, typename DerivedB>
std::optional<VectorX<typename DerivedM::Scalar>> solveLinear(const Eigen::MatrixBase<DerivedM>& m,
                                                              const Eigen::MatrixBase<DerivedB>& b)
{
    using Scalar = typename DerivedM::Scalar;
    eigen_assert(b.size() == m.rows());
    MatrixX<Scalar> augmented(m.rows(), m.cols() + 1);
    augmented.leftCols(m.cols()) = m;
    augmented.col(m.cols()) = b;
    const auto ech = reducedRowEchelon(augmented);

    VectorX<Scalar> x = VectorX<Scalar>::Zero(m.cols());
    for (std::size_t r = 0; r < ech.pivotColumns.size(); ++r)
    {
        const Eigen::Index c = ech.pivotColumns[r];
        if (c == m.cols())
            return std::nullopt;
        x(c) = ech.reduced(static_cast<Eigen::Index>(r), m.cols());
    }
    return x;
}

template <typename Derived>
bool isZero(const Eigen::MatrixBase<Derived>& m)
{
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0)
                return false;
    return true;
}

/// "num/den" with den > 1, or plain "num".
std::string toString(const Rational& q);

/// Parses "num/den" or an integer. Throws ParseError on anything else.
Rational parseRational(std::string_view text);

/// True when q is stored in canonical form (gcd 1, positive denominator).
bool isCanonical(const Rational& q);

}  // namespace galepoly

#endif  // GALEPOLY_LINALG_HPP
