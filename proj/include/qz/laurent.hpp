#pragma once

// Exact Laurent polynomials in v with integer coefficients, where v^2 = q.
// Half-integer powers of q appearing in the quantum-group formulas are
// integer powers of v, so every stored exponent is an integer.

#include <compare>
#include <cstddef>
#include <map>
#include <string>

#include "json.hpp"

#include "qz/poly.hpp"

namespace qz
{

    class Rational;

    class LaurentScalar
    {
    public:
        LaurentScalar() = default;
        LaurentScalar(int c) : LaurentScalar(Integer(c)) {} // NOLINT: implicit by intent
        LaurentScalar(Integer c);                          // NOLINT
        LaurentScalar(int shift, IntPoly body);

        // c * v^k
        static LaurentScalar monomial(Integer c, int k);
        static LaurentScalar v_power(int k) { return monomial(1, k); }
        // q^k = v^{2k}
        static LaurentScalar q_power(int k) { return monomial(1, 2 * k); }
        static LaurentScalar from_terms(const std::map<int, Integer> &terms);

        bool is_zero() const { return body_.is_zero(); }
        bool is_one() const { return shift_ == 0 && body_.is_one(); }
        bool is_monomial() const;

        // Lowest and highest v-exponent; undefined for zero.
        int low_exponent() const { return shift_; }
        int high_exponent() const { return shift_ + body_.degree(); }
        Integer coeff(int k) const;
        std::size_t term_count() const;
        std::map<int, Integer> terms() const;

        const IntPoly &body() const { return body_; }

        LaurentScalar operator-() const;
        LaurentScalar &operator+=(const LaurentScalar &o);
        LaurentScalar &operator-=(const LaurentScalar &o);
        LaurentScalar &operator*=(const LaurentScalar &o);
        friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar &b) { return a += b; }
        friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar &b) { return a -= b; }
        friend LaurentScalar operator*(const LaurentScalar &a, const LaurentScalar &b);

        LaurentScalar times_v_power(int k) const;
        LaurentScalar pow(unsigned e) const;

        // v -> v^{-1}
        LaurentScalar bar() const;

        friend bool operator==(const LaurentScalar &a, const LaurentScalar &b)
        {
            return a.shift_ == b.shift_ && a.body_ == b.body_;
        }
        friend bool operator!=(const LaurentScalar &a, const LaurentScalar &b) { return !(a == b); }

        // Evaluation homomorphism at v = v0 (v0 != 0).
        Rational specialize(const Rational &v0) const;

        // Human-readable form in v, e.g. "v^4 - 2 + v^-4".
        std::string to_string() const;

    private:
        void normalize();

        int shift_ = 0;
        IntPoly body_; // body_.coeff(0) != 0 unless zero
    };

    // Symmetric q-integer [j] = (q^j - q^-j)/(q - q^-1), j >= 0.
    LaurentScalar q_int(int j);
    // [k]! = [1][2]...[k], [0]! = 1.
    LaurentScalar q_factorial(int k);

    // JSON object mapping decimal v-exponent to decimal coefficient string.
    nlohmann::json to_json(const LaurentScalar &a);
    LaurentScalar laurent_from_json(const nlohmann::json &j);

    // Parses expressions such as "v^4 - 2 + v^-4", "3*v^2", "-q^-1", "(q-q^-1)".
    LaurentScalar parse_laurent(const std::string &text);

    // Exact rational numbers for specialization.
    class Rational
    {
    public:
        Rational() = default;
        Rational(int n) : num_(n) {} // NOLINT
        Rational(Integer n) : num_(std::move(n)) {} // NOLINT
        Rational(Integer n, Integer d);

        const Integer &num() const { return num_; }
        const Integer &den() const { return den_; }
        bool is_zero() const { return num_.is_zero(); }

        Rational operator-() const { return Rational(-num_, den_); }
        friend Rational operator+(const Rational &a, const Rational &b);
        friend Rational operator-(const Rational &a, const Rational &b);
        friend Rational operator*(const Rational &a, const Rational &b);
        friend Rational operator/(const Rational &a, const Rational &b);
        friend bool operator==(const Rational &a, const Rational &b)
        {
            return a.num_ == b.num_ && a.den_ == b.den_;
        }
        friend bool operator!=(const Rational &a, const Rational &b) { return !(a == b); }

        std::string to_string() const;

    private:
        Integer num_ = 0;
        Integer den_ = 1;
    };

} // namespace qz
