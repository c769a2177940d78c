#pragma once

// Quantum-symplectic invariants in A_q(X) for even N = 2m: the sp elements of
// U_q(gl_N), the quadratic generators z^L/z^R, quantum Pfaffians, a^R_r, E_r
// and the diagonal / triangular restriction maps.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qz/uq_action.hpp"

namespace qz
{

    enum class SpKind
    {
        E,
        F,
        H
    };

    // sp_e(i,j), sp_f(i,j), sp_h(i,j) with 1 <= i,j <= N/2. The diagonal
    // sp_h(i,i) = E_{2i-1,2i-1} - E_{2i,2i} is realized as [e_{2i-1}, f_{2i-1}],
    // the quantum counterpart of the classical Cartan difference.
    UqElement sp_element(SpKind kind, int i, int j, int N);

    // sp_e(j,j), sp_f(j,j) for all j and sp_e(i,i+1), sp_f(i,i+1).
    std::vector<UqElement> sp_generating_set(int N);
    // Every sp_e(i,j), sp_f(i,j), 1 <= i,j <= N/2.
    std::vector<UqElement> sp_full_set(int N);

    // Explicit form, valid for any 1 <= i,j <= N including i >= j.
    QPolynomial z_generator(Side side, int i, int j, int N);

    struct RelationCheck
    {
        std::string relation; // "AS1", ...
        std::vector<int> indices;
        bool pass = false;
        std::size_t residual_terms = 0;
    };

    // AS1, AS9 on all pairs, AS3 on i<j<k, AS2, AS6, AS7, AS8 on i<j<k<l.
    // There are no relations labelled AS4 or AS5.
    std::vector<RelationCheck> verify_AS_relations(Side side, int N);
    nlohmann::json to_json(const std::vector<RelationCheck> &report);

    struct Matching
    {
        std::vector<std::pair<int, int>> pairs; // i_k < j_k, i_1 < i_2 < ...
    };

    // All perfect matchings of the sorted set, in lexicographic order.
    std::vector<Matching> all_matchings(const std::vector<int> &elems);
    // Inversions of the word i_1 j_1 i_2 j_2 ...
    int matching_length(const Matching &m);

    QPolynomial quantum_pfaffian(int N);
    QPolynomial quantum_pfaffian_serial(int N);
    // Pfaffian over matchings of {1..r} only.
    QPolynomial partial_pfaffian(int r, int N);

    bool invariance_kernel_check(const QPolynomial &p, Side side, bool full_set = false);

    // phi(J) = union of {2a-1, 2a} over a in J.
    std::vector<int> phi(const std::vector<int> &J);
    // r-subsets of {1..n}, lexicographic.
    std::vector<std::vector<int>> subsets(int n, int r);

    QPolynomial a_R(int r, int N);
    // mu weakly decreasing of length <= N/2; lambda is its doubling, so the
    // multiplicity of Lambda_{2r} is mu_r - mu_{r+1}.
    QPolynomial a_R_lambda(const std::vector<int> &mu, int N);
    QPolynomial E_r(int r, int N);

    // Commutative Laurent-coefficient polynomial in t_1..t_N.
    struct TorusPolynomial
    {
        int N = 0;
        std::map<std::vector<int>, LaurentScalar> terms; // exponent vector -> coeff

        bool is_zero() const { return terms.empty(); }
        void add(const std::vector<int> &e, const LaurentScalar &c);
        std::string to_string(const char *var = "t") const;
        friend bool operator==(const TorusPolynomial &, const TorusPolynomial &) = default;
    };

    TorusPolynomial restrict_H(const QPolynomial &p);

    enum class BorelSign
    {
        Plus,  // upper triangular image, x_ij -> 0 for i > j
        Minus, // lower triangular image, x_ij -> 0 for i < j
    };
    // The killed letters span an ideal that is closed under straightening, so
    // the image is p with every monomial containing a killed letter dropped.
    QPolynomial restrict_Borel(const QPolynomial &p, BorelSign sign);

    enum class Coset
    {
        G_mod_Bplus,  // column weight lambda, killed by left e_k
        Bminus_mod_G, // row weight lambda, killed by right f_k
    };
    bool relative_invariant_check(const QPolynomial &p, const WeightVector &lambda, Coset coset);

} // namespace qz
