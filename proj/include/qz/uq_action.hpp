#pragma once

// Left and right U_q(gl_N) actions on A_q(X).
//
// Left action moves column indices, right action moves row indices. Both
// extend to products through the coproduct
//   e_k -> e_k (x) q^{-alpha_k/2} + q^{alpha_k/2} (x) e_k   (same for f_k),
// so factors left of the acted position pick up q^{alpha_k/2} and factors to
// the right pick up q^{-alpha_k/2}.

#include <map>
#include <string>
#include <vector>

#include "qz/qmatrix.hpp"

namespace qz
{

    enum class Side
    {
        Left,
        Right
    };

    const char *side_name(Side s);

    // lambda in (1/2) Z^N, stored with doubled coordinates.
    struct WeightVector
    {
        std::vector<int> doubled;

        static WeightVector from_coords(const std::vector<int> &coords);
        static WeightVector epsilon(int N, int i);
        static WeightVector alpha(int N, int k);      // eps_k - eps_{k+1}
        static WeightVector fundamental(int N, int k); // eps_1 + ... + eps_k

        int size() const { return static_cast<int>(doubled.size()); }
        friend auto operator<=>(const WeightVector &, const WeightVector &) = default;
    };

    struct UqAtom
    {
        enum Kind
        {
            E,
            F,
            K
        };
        Kind kind = E;
        int k = 0;           // for E, F
        WeightVector weight; // for K: the atom is q^weight

        static UqAtom e(int k) { return {E, k, {}}; }
        static UqAtom f(int k) { return {F, k, {}}; }
        static UqAtom q_weight(const WeightVector &w) { return {K, 0, w}; }

        std::string to_string() const;
        friend auto operator<=>(const UqAtom &, const UqAtom &) = default;
    };

    // Linear combination of words in the atoms; a word a_1 a_2 ... a_m is the
    // algebra product, so on the left it acts as a_1.(a_2.(... a_m.p)) and on
    // the right as ((p.a_1).a_2)... .
    class UqElement
    {
    public:
        using Word = std::vector<UqAtom>;

        UqElement() = default;
        static UqElement atom(const UqAtom &a);
        static UqElement e(int k) { return atom(UqAtom::e(k)); }
        static UqElement f(int k) { return atom(UqAtom::f(k)); }
        static UqElement q_weight(const WeightVector &w) { return atom(UqAtom::q_weight(w)); }
        static UqElement scalar(const LaurentScalar &c);

        const std::map<Word, LaurentScalar> &terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }

        friend UqElement operator+(const UqElement &a, const UqElement &b);
        friend UqElement operator-(const UqElement &a, const UqElement &b);
        friend UqElement operator*(const UqElement &a, const UqElement &b); // composition ab
        friend UqElement operator*(const LaurentScalar &c, const UqElement &a);
        friend bool operator==(const UqElement &, const UqElement &) = default;

        std::string to_string() const;

    private:
        void add(const Word &w, const LaurentScalar &c);
        std::map<Word, LaurentScalar> terms_;
    };

    // Bracket ab - ba.
    UqElement commutator(const UqElement &a, const UqElement &b);

    QPolynomial act_generator(Side side, const UqAtom &atom, const QPolynomial &p);
    QPolynomial act(Side side, const UqElement &u, const QPolynomial &p);

    // Root vector E_{i,j} = E_{i,k}E_{k,j} - E_{k,j}E_{i,k} with E_{k,k+1} = e_k,
    // E_{k+1,k} = f_k. The intermediate k must lie strictly between i and j;
    // k = 0 selects min(i,j)+1.
    UqElement composite_E(int N, int i, int j, int k = 0);

    // Text syntax: e1, f3, q[0,1,0,-1], qh[1,-1,0,0] or q½[...] (doubled
    // coordinates), E(1,4) for composites, juxtaposition for composition,
    // + and -, integer or parenthesised Laurent scalar prefixes such as
    // 3 e1, (v^2-1) f2 e1, v^-1 e1.
    UqElement parse_uq(const std::string &text, int N);

    void clear_action_cache();

} // namespace qz
