#pragma once

#include <string>

#include "qz/laurent.hpp"
#include "qz/rational_scalar.hpp"

namespace qz
{

    // Z[q][t]: outer variable t, coefficients in Z[q].
    using QTPoly = Poly<IntPoly>;

    // Element of Q(q,t) in reduced form: gcd(num, den) = 1 in Z[q,t] and the
    // leading coefficient of den (in t, then q) is positive.
    class QTRational
    {
    public:
        QTRational() = default;
        QTRational(int c) : num_(IntPoly(c)) {}                 // NOLINT
        QTRational(const Integer &c) : num_(IntPoly(c)) {}      // NOLINT
        QTRational(QTPoly num) : num_(std::move(num)) {}        // NOLINT
        QTRational(const QTPoly &num, const QTPoly &den);

        static QTRational q();
        static QTRational t();
        // c * q^a * t^b for any integers a, b
        static QTRational monomial(const Integer &c, int a, int b);

        const QTPoly &num() const { return num_; }
        const QTPoly &den() const { return den_; }
        bool is_zero() const { return num_.is_zero(); }
        bool is_polynomial() const { return den_.is_one(); }

        QTRational operator-() const;
        friend QTRational operator+(const QTRational &a, const QTRational &b);
        friend QTRational operator-(const QTRational &a, const QTRational &b);
        friend QTRational operator*(const QTRational &a, const QTRational &b);
        friend QTRational operator/(const QTRational &a, const QTRational &b);
        QTRational &operator+=(const QTRational &o) { return *this = *this + o; }
        QTRational &operator-=(const QTRational &o) { return *this = *this - o; }
        QTRational &operator*=(const QTRational &o) { return *this = *this * o; }
        QTRational pow(int e) const;

        friend bool operator==(const QTRational &a, const QTRational &b)
        {
            return a.num_ == b.num_ && a.den_ == b.den_;
        }
        friend bool operator!=(const QTRational &a, const QTRational &b) { return !(a == b); }

        // f(q*, t*) for arbitrary rational functions q*, t*.
        QTRational substitute(const QTRational &q_star, const QTRational &t_star) const;

        // Image in Q(v) under q -> v^qv, t -> v^tv. Throws SubstitutionSingular
        // when the denominator vanishes.
        RationalScalar to_v(int q_exp_v, int t_exp_v) const;

        std::string to_string() const;

    private:
        void reduce();

        QTPoly num_;
        QTPoly den_ = QTPoly(IntPoly(1));
    };

    std::string qt_poly_to_string(const QTPoly &p);

    // Parses rational expressions in q and t such as "q^2", "t^-1",
    // "(1-q*t)/(1-t)", "q^-4".
    QTRational parse_qt(const std::string &text);

} // namespace qz
