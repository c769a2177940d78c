#pragma once

// Symmetric polynomials over Q(q,t): monomial symmetric functions, the
// Macdonald difference operators D_1 and D_r, P_lambda by triangular
// eigen-solve, the central-element scalar c_k and the comparison of
// restricted q-zonal vectors against P_mu under the candidate conventions.

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "qz/isotypic.hpp"
#include "qz/qt_rational.hpp"

namespace qz
{

    // Weakly decreasing, no trailing zeros in canonical form.
    using Partition = std::vector<int>;

    Partition normalize_partition(Partition p);
    Partition parse_partition(const std::string &text); // "2,1" or "(2,1)"
    std::string partition_to_string(const Partition &p);
    int partition_size(const Partition &p);

    // a >= b in dominance order (same size assumed; false otherwise).
    bool dominates(const Partition &a, const Partition &b);
    // Partitions of d with at most n parts, reverse lexicographic (largest first).
    std::vector<Partition> partitions(int d, int n);

    using Exponent = std::vector<int>;
    using MBasis = std::map<Partition, QTRational>;

    struct SymPolynomial
    {
        int n = 0;
        std::map<Exponent, QTRational> terms;
        bool symmetric = false;

        explicit SymPolynomial(int nvars = 0) : n(nvars) {}

        bool is_zero() const { return terms.empty(); }
        void add(const Exponent &e, const QTRational &c);
        QTRational coeff(const Exponent &e) const;

        // Coefficients constant on S_n orbits.
        bool check_symmetric() const;
        // Coefficients in the m-basis; throws NonzeroRemainder if not symmetric.
        MBasis to_m_basis() const;
        static SymPolynomial from_m_basis(int n, const MBasis &m);

        friend SymPolynomial operator+(const SymPolynomial &a, const SymPolynomial &b);
        friend SymPolynomial operator-(const SymPolynomial &a, const SymPolynomial &b);
        friend SymPolynomial operator*(const SymPolynomial &a, const SymPolynomial &b);
        friend SymPolynomial operator*(const QTRational &c, const SymPolynomial &a);
        friend bool operator==(const SymPolynomial &a, const SymPolynomial &b)
        {
            return a.n == b.n && a.terms == b.terms;
        }

        std::string to_string() const;
    };

    SymPolynomial monomial_symmetric(const Partition &lambda, int n);
    SymPolynomial variable(int i, int n); // x_i, 1-based

    // T_{u,x_i}: x_i -> u x_i.
    SymPolynomial shift(const SymPolynomial &f, int i, const QTRational &u);

    // prod_{i<j} (x_i - x_j)
    SymPolynomial vandermonde(int n);
    // Exact multivariate division, lex order. Throws NonzeroRemainder.
    SymPolynomial divide_exact(const SymPolynomial &f, const SymPolynomial &g);

    // sum_i prod_{j != i} (t x_i - x_j)/(x_i - x_j) T_{q,x_i}, over the common
    // denominator Delta.
    SymPolynomial macdonald_D1(const SymPolynomial &f);
    // Coefficient of X^{n-r} in Delta^{-1} sum_w eps(w) x^{w delta}
    // prod_i (X + t^{(w delta)_i} T_{q,x_i}).
    SymPolynomial macdonald_Dr(const SymPolynomial &f, int r);

    // Columns D_1 m_mu expressed in the m-basis, all mu |- d with <= n parts.
    std::map<Partition, MBasis> d1_matrix(int d, int n);
    std::map<Partition, MBasis> d1_matrix_serial(int d, int n);

    // sum_i q^{lambda_i} t^{n-i}
    QTRational macdonald_eigenvalue(const Partition &lambda, int n);
    // e_r(q^{lambda_i} t^{n-i})
    QTRational macdonald_Dr_eigenvalue(const Partition &lambda, int n, int r);

    // Monic, dominance-triangular eigenfunction of D_1. Throws
    // EigenvalueCollision if a diagonal entry of the solve vanishes.
    SymPolynomial macdonald_P(const Partition &lambda, int n);
    MBasis macdonald_P_mbasis(const Partition &lambda, int n);

    // Coefficientwise f(q*, t*).
    SymPolynomial specialize(const SymPolynomial &f, const QTRational &q_star, const QTRational &t_star);

    nlohmann::json to_json(const SymPolynomial &f);
    SymPolynomial sym_polynomial_from_json(const nlohmann::json &j);

    // q_int and q_factorial (symmetric [k], q = v^2) live with LaurentScalar.

    // q^{2|l| + C(n,2) + k(n-1)} [k]! [n-k]! sum_{i_1<..<i_k}
    //   q^{-2 l_{i_1} - .. - 2 l_{i_k} + 2(i_1 - n) + .. + 2(i_k - n)}
    LaurentScalar ck_scalar(int k, const Partition &lambda, int n);
    // The closed form commonly quoted for c_1 on a doubled weight:
    // q^{4|l| + C(2n',2) + 2(2n'-1) - 1} [2]^2 [2n'-2]! sum_{i<=n'} q^{-2 l_i + 4(i-n')}
    LaurentScalar c1_doubled_display(const Partition &lambda, int n_half);
    // (l_1, l_1, l_2, l_2, ...) padded to 2 n'
    Partition doubled(const Partition &lambda, int n_half);
    // ck_scalar(kc, doubled(lambda), 2n') / (q^{4|lambda|} e_ke(q^{-2 lambda_i} q^{-4(n'-i)}))
    RationalScalar ck_eigenvalue_ratio(int kc, int ke, const Partition &lambda, int n_half);

    // Inversions of a one-line permutation of 1..n.
    int permutation_length(const std::vector<int> &w);
    std::vector<std::vector<int>> all_permutations(int n);

    struct CosetCheck
    {
        int n = 0, k = 0;
        std::size_t checked = 0;
        std::size_t failures = 0;
    };
    // Writes every w in S_n as tau sigma_1 sigma_2 with tau a minimal coset
    // representative of S_k x S_{n-k} and checks
    // l(w) = l(tau) + l(sigma_1) + l(sigma_2), l(tau) = sum_{i<=k} (tau_i - i).
    CosetCheck check_coset_lengths(int n, int k);
    // sum_{S_n} q^{2 l(w)} = q^{C(n,2)} [n]!
    bool check_length_generating_function(int n);

    struct Convention
    {
        std::string label;
        int q_exp_v; // q* = v^{q_exp_v}, and v^2 = q
        int t_exp_v;
    };
    // (q^2, q^4), (q^2, q^-4), (q^-2, q^-4)
    std::vector<Convention> standard_conventions();

    struct ConventionResult
    {
        Convention convention;
        bool matches = false;
        RationalScalar constant; // restricted coefficient of s^mu / P coefficient of m_mu
        std::size_t mismatched_terms = 0;
        std::string note;
    };

    struct ZonalComparison
    {
        Partition mu;
        int N = 0;
        ZonalVector zonal;
        // All restricted coefficients are Laurent polynomials in v.
        bool laurent_coefficients = true;
        std::vector<ConventionResult> results;
        std::vector<std::string> matched() const;
    };

    ZonalComparison compare_zonal(const Partition &mu, int N,
                                  const std::vector<Convention> &conventions = standard_conventions());
    // Throws NoConventionMatches when nothing matched.
    void require_match(const ZonalComparison &c);
    nlohmann::json to_json(const ZonalComparison &c);

} // namespace qz
