#pragma once

// Exact linear algebra on graded pieces of A_q(X): joint kernels of U_q
// operators, module closures, subspace intersection and the q-zonal vector.
//
// Subspaces are kept fraction-free: every basis row is a Laurent-coefficient
// vector, rows are fully inter-reduced (each pivot column occurs in exactly
// one row) and each row is primitive with a normalized pivot coefficient.
// Over the UFD Z[v, v^-1] that form is unique, so it compares like an RREF
// without ever dividing; rref() performs the division on demand.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "qz/rational_scalar.hpp"
#include "qz/symplectic.hpp"

namespace qz
{

    // Graded dimension cap; QZ_CAP in the environment overrides 100000.
    std::size_t component_cap();

    struct GradedComponent
    {
        int N = 0;
        int degree = 0;
        std::vector<Monomial> basis;

        // All normal monomials of degree d. Throws ComponentTooLarge above the cap.
        static GradedComponent full(int N, int d);
        // Only monomials whose sp-weight w_{2i-1} - w_{2i} vanishes on the
        // columns (left) and/or rows (right). Joint kernels of operator sets
        // containing sp_e(i,i) and sp_f(i,i) on a side live there.
        static GradedComponent sp_weight_zero(int N, int d, bool left, bool right);
    };

    // binomial(N^2 + d - 1, d)
    std::size_t graded_dimension(int N, int d);

    class SubspaceBasis
    {
    public:
        explicit SubspaceBasis(int N = 0) : n_(N) {}
        static SubspaceBasis span(int N, const std::vector<QPolynomial> &vectors);

        int ambient() const { return n_; }
        std::size_t rank() const { return rows_.size(); }
        const std::vector<QPolynomial> &rows() const { return rows_; }
        std::vector<Monomial> pivots() const;

        bool contains(const QPolynomial &p) const;
        // Reduced row echelon rows over Q(v), pivot entries 1.
        std::vector<std::map<Monomial, RationalScalar>> rref() const;

        friend bool operator==(const SubspaceBasis &a, const SubspaceBasis &b)
        {
            return a.n_ == b.n_ && a.rows_ == b.rows_;
        }

        // Builds from rows already in canonical form (internal use).
        static SubspaceBasis from_canonical(int N, std::vector<QPolynomial> rows);

    private:
        int n_;
        std::vector<QPolynomial> rows_; // sorted by pivot
    };

    nlohmann::json to_json(const SubspaceBasis &b, int degree);

    struct SidedOp
    {
        Side side;
        UqElement op;
    };

    // Left and/or right sp generating sets as operator lists.
    std::vector<SidedOp> sp_operators(int N, bool left, bool right);

    SubspaceBasis operator_kernel(const std::vector<SidedOp> &ops, const GradedComponent &component);
    SubspaceBasis operator_kernel_serial(const std::vector<SidedOp> &ops, const GradedComponent &component);

    // Product of powers of principal minors for a dominant weight lambda,
    // m_s = lambda_s - lambda_{s+1}.
    QPolynomial highest_weight_vector(const std::vector<int> &lambda, int N);

    enum class Sides
    {
        Left,
        Right,
        Both
    };

    // Span of the seed under all e_k, f_k on the requested sides. The seed
    // must be a bi-weight vector (throws Inhomogeneous otherwise).
    SubspaceBasis module_closure(const QPolynomial &seed, Sides sides);

    SubspaceBasis intersect(const SubspaceBasis &a, const SubspaceBasis &b);

    // Symmetric-function side of restrict_H: t_{2i-1} t_{2i} -> s_i.
    using SPolynomial = std::map<std::vector<int>, RationalScalar>;
    SPolynomial to_s_variables(const TorusPolynomial &t);
    std::string s_poly_to_string(const SPolynomial &s);

    struct ZonalVector
    {
        std::vector<int> mu;
        int N = 0;
        QPolynomial vector{1};  // primitive Laurent representative
        RationalScalar scale;   // Z_mu = scale * vector
        SPolynomial restricted; // restrict_H(Z_mu) in s, coefficient of s^mu is 1
        std::size_t kernel_dim = 0;
        std::size_t closure_dim = 0;
        std::string normalization = "coefficient of s^mu in restrict_H is 1";
    };

    // Throws NotOneDimensional when the intersection is not a line.
    ZonalVector zonal_vector(const std::vector<int> &mu, int N);

    std::size_t graded_bi_invariant_dimension(int m, int N);

    // Partitions of m with at most k parts.
    std::size_t count_partitions(int m, int k);

} // namespace qz
