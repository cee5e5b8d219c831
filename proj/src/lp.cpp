#include "galepoly/lp.hpp"

#include <stdexcept>

#include "galepoly/errors.hpp"

namespace galepoly {

namespace {

/**
 * Dense phase-1 tableau. Columns [0, n) are structural, [n, n+r) artificial,
 * column n+r is the right-hand side; row r holds reduced costs, with the
 * negated objective value in its last entry.
 */
class Phase1Tableau
{
    public:
        Phase1Tableau(const MatrixXq& a, const VectorXq& b)
            : rows_(a.rows()), structural_(a.cols()), sign_(a.rows()), basis_(static_cast<std::size_t>(a.rows()))
        {
            const Eigen::Index width = structural_ + rows_ + 1;
            t_ = MatrixXq::Zero(rows_ + 1, width);
            for (Eigen::Index i = 0; i < rows_; ++i)
            {
                sign_(i) = b(i) < 0 ? -1 : 1;
                for (Eigen::Index j = 0; j < structural_; ++j)
                {
                    if (a(i, j) != 0)
                        t_(i, j) = sign_(i) < 0 ? Rational(-a(i, j)) : a(i, j);
                }
                t_(i, structural_ + i) = 1;
                t_(i, width - 1) = sign_(i) < 0 ? Rational(-b(i)) : b(i);
                basis_[static_cast<std::size_t>(i)] = structural_ + i;
            }
            for (Eigen::Index j = 0; j < structural_; ++j)
            {
                Rational s = 0;
                for (Eigen::Index i = 0; i < rows_; ++i)
                    s += t_(i, j);
                t_(rows_, j) = -s;
            }
            Rational s = 0;
            for (Eigen::Index i = 0; i < rows_; ++i)
                s += t_(i, width - 1);
            t_(rows_, width - 1) = -s;
        }

        void solve()
        {
            const Eigen::Index rhs = t_.cols() - 1;
            while (true)
            {
                // Bland: least-index entering column with negative reduced cost.
                Eigen::Index entering = -1;
                for (Eigen::Index j = 0; j < rhs; ++j)
                {
                    if (t_(rows_, j) < 0)
                    {
                        entering = j;
                        break;
                    }
                }
                if (entering < 0)
                    return;

                Eigen::Index leaving = -1;
                Rational bestRatio;
                for (Eigen::Index i = 0; i < rows_; ++i)
                {
                    if (t_(i, entering) <= 0)
                        continue;
                    Rational ratio = t_(i, rhs) / t_(i, entering);
                    if (leaving < 0 || ratio < bestRatio ||
                        (ratio == bestRatio && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)]))
                    {
                        leaving = i;
                        bestRatio = std::move(ratio);
                    }
                }
                if (leaving < 0)
                    throw std::logic_error("phase-1 objective unbounded");
                pivot(leaving, entering);
            }
        }

        Rational objective() const { return -t_(rows_, t_.cols() - 1); }

        VectorXq primal() const
        {
            VectorXq x = VectorXq::Zero(structural_);
            for (Eigen::Index i = 0; i < rows_; ++i)
            {
                const Eigen::Index j = basis_[static_cast<std::size_t>(i)];
                if (j < structural_)
                    x(j) = t_(i, t_.cols() - 1);
            }
            return x;
        }

        /// y with y^T A <= 0 and y^T b = objective, in the original row signs.
        VectorXq dual() const
        {
            VectorXq y(rows_);
            for (Eigen::Index i = 0; i < rows_; ++i)
            {
                Rational yi = 1 - t_(rows_, structural_ + i);
                y(i) = sign_(i) < 0 ? Rational(-yi) : yi;
            }
            return y;
        }

    private:
        void pivot(Eigen::Index row, Eigen::Index col)
        {
            const Eigen::Index width = t_.cols();
            std::vector<Eigen::Index> support;
            support.reserve(static_cast<std::size_t>(width));
            const Rational inv = 1 / t_(row, col);
            for (Eigen::Index j = 0; j < width; ++j)
            {
                if (t_(row, j) != 0)
                {
                    t_(row, j) *= inv;
                    support.push_back(j);
                }
            }
            for (Eigen::Index i = 0; i <= rows_; ++i)
            {
                if (i == row || t_(i, col) == 0)
                    continue;
                const Rational factor = t_(i, col);
                for (auto j : support)
                    t_(i, j) -= factor * t_(row, j);
            }
            basis_[static_cast<std::size_t>(row)] = col;
        }

        Eigen::Index rows_;
        Eigen::Index structural_;
        MatrixXq t_;
        Eigen::VectorXi sign_;
        std::vector<Eigen::Index> basis_;
};

bool verifyFeasibility(const MatrixXq& a, const VectorXq& b, const FeasibilityResult& r)
{
    if (r.feasible)
    {
        for (Eigen::Index j = 0; j < r.solution.size(); ++j)
            if (r.solution(j) < 0)
                return false;
        return a * r.solution == b;
    }
    const VectorXq ya = a.transpose() * r.farkas;
    for (Eigen::Index j = 0; j < ya.size(); ++j)
        if (ya(j) > 0)
            return false;
    return r.farkas.dot(b) > 0;
}

}  // namespace

FeasibilityResult solveNonnegative(const MatrixXq& a, const VectorXq& b)
{
    if (b.size() != a.rows())
        throw DimensionMismatch("right-hand side length differs from row count");
    Phase1Tableau tableau(a, b);
    tableau.solve();

    FeasibilityResult result;
    result.feasible = tableau.objective() == 0;
    if (result.feasible)
        result.solution = tableau.primal();
    else
        result.farkas = tableau.dual();
    if (!verifyFeasibility(a, b, result))
        throw std::logic_error("simplex produced an invalid certificate");
    return result;
}

std::string toString(CertificateKind kind)
{
    switch (kind)
    {
        case CertificateKind::PositiveDependence: return "PositiveDependence";
        case CertificateKind::StiemkeWitness: return "StiemkeWitness";
        case CertificateKind::RankDeficiency: return "RankDeficiency";
    }
    return "?";
}

bool verifyCertificate(const MatrixXq& vectors, const DependenceCertificate& cert)
{
    switch (cert.kind)
    {
        case CertificateKind::PositiveDependence:
        {
            if (static_cast<Eigen::Index>(cert.lambda.size()) != vectors.cols())
                return false;
            VectorXq lambda(vectors.cols());
            for (Eigen::Index i = 0; i < lambda.size(); ++i)
            {
                lambda(i) = cert.lambda[static_cast<std::size_t>(i)];
                if (lambda(i) < 1)
                    return false;
            }
            return isZero(vectors * lambda);
        }
        case CertificateKind::StiemkeWitness:
        {
            if (!cert.functional || cert.functional->size() != vectors.rows())
                return false;
            const VectorXq values = vectors.transpose() * *cert.functional;
            bool strict = false;
            for (Eigen::Index i = 0; i < values.size(); ++i)
            {
                if (values(i) < 0)
                    return false;
                strict = strict || values(i) > 0;
            }
            return strict;
        }
        case CertificateKind::RankDeficiency:
        {
            if (!cert.deficientDirection || cert.deficientDirection->size() != vectors.rows())
                return false;
            return !isZero(*cert.deficientDirection) && isZero(vectors.transpose() * *cert.deficientDirection);
        }
    }
    return false;
}

DependenceCertificate strictPositiveDependence(const MatrixXq& vectors)
{
    if (vectors.cols() == 0)
        throw EmptySelection("no vectors selected");

    // lambda = 1 + mu with mu >= 0 turns strict positivity into standard form.
    const VectorXq rhs = -(vectors * VectorXq::Ones(vectors.cols()));
    const FeasibilityResult lp = solveNonnegative(vectors, rhs);

    DependenceCertificate cert;
    if (lp.feasible)
    {
        cert.kind = CertificateKind::PositiveDependence;
        cert.lambda.reserve(static_cast<std::size_t>(vectors.cols()));
        for (Eigen::Index i = 0; i < vectors.cols(); ++i)
            cert.lambda.push_back(1 + lp.solution(i));
    }
    else
    {
        cert.kind = CertificateKind::StiemkeWitness;
        cert.functional = VectorXq(-lp.farkas);
    }
    if (!verifyCertificate(vectors, cert))
        throw std::logic_error("dependence certificate failed verification");
    return cert;
}

DependenceCertificate strictPositiveDependence(const VectorConfiguration& config, const IndexSet& selection)
{
    if (selection.empty())
        throw EmptySelection("no vectors selected");
    return strictPositiveDependence(config.columns(selection));
}

SpanResult positivelySpans(const MatrixXq& vectors)
{
    if (vectors.cols() == 0)
        throw EmptySelection("no vectors selected");
    SpanResult result;
    const MatrixXq transposed = vectors.transpose();
    const MatrixXq left = kernelBasis(transposed);
    if (left.cols() > 0)
    {
        result.spans = false;
        result.certificate.kind = CertificateKind::RankDeficiency;
        result.certificate.deficientDirection = VectorXq(left.col(0));
        return result;
    }
    result.certificate = strictPositiveDependence(vectors);
    result.spans = result.certificate.kind == CertificateKind::PositiveDependence;
    return result;
}

SpanResult positivelySpans(const VectorConfiguration& config, const IndexSet& selection)
{
    if (selection.empty())
        throw EmptySelection("no vectors selected");
    return positivelySpans(config.columns(selection));
}

SpanResult interiorPointTest(const MatrixXq& points, const VectorXq& x)
{
    if (points.rows() != x.size())
        throw DimensionMismatch("query point has length " + std::to_string(x.size()) + ", points live in R^" +
                                std::to_string(points.rows()));
    MatrixXq shifted = points;
    for (Eigen::Index j = 0; j < shifted.cols(); ++j)
        shifted.col(j) -= x;
    return positivelySpans(shifted);
}

SpanResult interiorPointTest(const PointConfiguration& points, const VectorXq& x)
{
    return interiorPointTest(points.matrix(), x);
}

bool isNonnegativeCombination(const MatrixXq& vectors, const VectorXq& v)
{
    return solveNonnegative(vectors, v).feasible;
}

bool inConvexHull(const MatrixXq& points, const VectorXq& x)
{
    if (points.rows() != x.size())
        throw DimensionMismatch("query point dimension differs from point dimension");
    MatrixXq a(points.rows() + 1, points.cols());
    a.topRows(points.rows()) = points;
    a.row(points.rows()).setOnes();
    VectorXq b(x.size() + 1);
    b.head(x.size()) = x;
    b(x.size()) = 1;
    return solveNonnegative(a, b).feasible;
}

bool isVertex(const MatrixXq& points, Eigen::Index i)
{
    if (points.cols() <= 1)
        return true;
    MatrixXq others(points.rows(), points.cols() - 1);
    others.leftCols(i) = points.leftCols(i);
    others.rightCols(points.cols() - 1 - i) = points.rightCols(points.cols() - 1 - i);
    return !inConvexHull(others, points.col(i));
}

}  // namespace galepoly
