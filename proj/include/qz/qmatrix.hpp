#pragma once

// The quantum matrix algebra A_q(X) on N x N generators x_ij.
//
// Normal order is row-major on (row, col). A monomial is stored as a packed
// byte string of letter codes 16*row + col, so N is limited to 15 and the
// degree to Monomial::kMaxDegree. Codes are nonzero, which makes the byte
// array order (std::array comparison) the lexicographic word order with
// proper prefixes first.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "qz/laurent.hpp"

namespace qz
{

    constexpr int kMaxAmbient = 15;

    struct Generator
    {
        int row = 1;
        int col = 1;

        std::uint8_t code() const { return static_cast<std::uint8_t>(16 * row + col); }
        static Generator from_code(std::uint8_t c) { return {c >> 4, c & 15}; }

        friend auto operator<=>(const Generator &, const Generator &) = default;
    };

    class Monomial
    {
    public:
        static constexpr std::size_t kMaxDegree = 16;

        Monomial() = default;

        // Letters are stored as given; callers that need a normal word must
        // sort first (normal_form does this with the algebra relations).
        static Monomial from_codes(const std::vector<std::uint8_t> &codes);
        static Monomial from_word(const std::vector<Generator> &word);

        std::size_t size() const
        {
            std::size_t n = 0;
            while (n < kMaxDegree && w_[n] != 0)
                ++n;
            return n;
        }
        bool empty() const { return w_[0] == 0; }
        std::uint8_t code(std::size_t i) const { return w_[i]; }
        Generator letter(std::size_t i) const { return Generator::from_code(w_[i]); }
        std::uint8_t back() const { return w_[size() - 1]; }

        Monomial appended(std::uint8_t c) const;
        Monomial without_back() const;
        Monomial with_letter(std::size_t i, std::uint8_t c) const
        {
            Monomial m = *this;
            m.w_[i] = c;
            return m;
        }
        bool is_sorted() const;
        std::vector<Generator> word() const;

        std::uint64_t hash() const;

        friend auto operator<=>(const Monomial &, const Monomial &) = default;
        friend bool operator==(const Monomial &, const Monomial &) = default;

        std::string to_string() const;

    private:
        std::array<std::uint8_t, kMaxDegree> w_{};
    };

    struct MonomialHash
    {
        std::size_t operator()(const Monomial &m) const { return static_cast<std::size_t>(m.hash()); }
    };

    struct BiWeight
    {
        std::vector<int> rows;
        std::vector<int> cols;
        friend bool operator==(const BiWeight &, const BiWeight &) = default;
    };

    BiWeight bi_weight(const Monomial &m, int N);

    class QPolynomial
    {
    public:
        using TermMap = std::map<Monomial, LaurentScalar>;

        explicit QPolynomial(int N);
        static QPolynomial one(int N);
        static QPolynomial generator(int N, int i, int j);
        // Stores m as is; m must already be a normal (sorted) word.
        static QPolynomial term(int N, const Monomial &m, LaurentScalar c);

        int ambient() const { return n_; }
        const TermMap &terms() const { return terms_; }
        std::size_t size() const { return terms_.size(); }
        bool is_zero() const { return terms_.empty(); }
        LaurentScalar coeff(const Monomial &m) const;

        // Adds c * m where m is a normal word.
        void add_term(const Monomial &m, const LaurentScalar &c);

        QPolynomial operator-() const;
        QPolynomial &operator+=(const QPolynomial &o);
        QPolynomial &operator-=(const QPolynomial &o);
        friend QPolynomial operator+(QPolynomial a, const QPolynomial &b) { return a += b; }
        friend QPolynomial operator-(QPolynomial a, const QPolynomial &b) { return a -= b; }
        friend QPolynomial operator*(const LaurentScalar &c, const QPolynomial &p);
        friend QPolynomial operator*(const QPolynomial &a, const QPolynomial &b);

        friend bool operator==(const QPolynomial &a, const QPolynomial &b)
        {
            return a.n_ == b.n_ && a.terms_ == b.terms_;
        }
        friend bool operator!=(const QPolynomial &a, const QPolynomial &b) { return !(a == b); }

        // Degree of the first term; -1 for zero.
        int degree() const;
        bool is_homogeneous() const;

        std::string to_string() const;

    private:
        int n_;
        TermMap terms_;
    };

    // PBW normal form of c * x_{w1} x_{w2} ... in ambient N.
    QPolynomial normal_form(int N, const std::vector<Generator> &word, const LaurentScalar &coeff = 1);
    QPolynomial normal_form(int N, const Monomial &word, const LaurentScalar &coeff = 1);

    // Reference rewriter: repeatedly straightens the leftmost out-of-order
    // adjacent pair. Exponential in the worst case; used as a test oracle.
    QPolynomial normal_form_bubble(int N, const std::vector<Generator> &word, const LaurentScalar &coeff = 1);

    // Product with the parallel kernel (OpenMP over the terms of a).
    QPolynomial multiply(const QPolynomial &a, const QPolynomial &b);
    // Same product, single-threaded; kept as the reference for the parallel one.
    QPolynomial multiply_serial(const QPolynomial &a, const QPolynomial &b);

    // Product of many factors, left to right.
    QPolynomial product(const std::vector<QPolynomial> &factors, int N);
    QPolynomial power(const QPolynomial &p, int e);

    // Quantum minor with rows I and columns J (1-based, strictly increasing).
    QPolynomial quantum_minor(int N, const std::vector<int> &I, const std::vector<int> &J);
    QPolynomial quantum_det(int N);

    // Common row/column multidegree of every term; throws Inhomogeneous.
    BiWeight bi_weight(const QPolynomial &p);

    // All normal monomials of degree d in N x N generators, in normal order.
    std::vector<Monomial> enumerate_monomials(int N, int d);

    // Drops all cached straightening results of the calling thread.
    void clear_normal_form_cache();
    std::size_t normal_form_cache_size();

    nlohmann::json to_json(const QPolynomial &p);
    QPolynomial qpoly_from_json(const nlohmann::json &j);

    // Inversion count of a sequence.
    int inversion_count(const std::vector<int> &w);

    void check_index(int N, int i, const char *what);

} // namespace qz
