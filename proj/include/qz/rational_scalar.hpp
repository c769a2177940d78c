#pragma once

#include <string>

#include "qz/laurent.hpp"

namespace qz
{

    // Element of Q(v), stored as num / den with num a Laurent polynomial and
    // den a polynomial in v with nonzero constant term, positive leading
    // coefficient, and gcd(num, den) = 1. Powers of v are units and live in num.
    class RationalScalar
    {
    public:
        RationalScalar() = default;
        RationalScalar(int c) : num_(c) {}               // NOLINT
        RationalScalar(LaurentScalar c) : num_(std::move(c)) {} // NOLINT
        RationalScalar(const LaurentScalar &num, const LaurentScalar &den);

        const LaurentScalar &num() const { return num_; }
        const IntPoly &den() const { return den_; }
        LaurentScalar den_laurent() const { return LaurentScalar(0, den_); }

        bool is_zero() const { return num_.is_zero(); }
        bool is_laurent() const { return den_.is_one(); }

        RationalScalar operator-() const;
        friend RationalScalar operator+(const RationalScalar &a, const RationalScalar &b);
        friend RationalScalar operator-(const RationalScalar &a, const RationalScalar &b);
        friend RationalScalar operator*(const RationalScalar &a, const RationalScalar &b);
        friend RationalScalar operator/(const RationalScalar &a, const RationalScalar &b);
        RationalScalar &operator+=(const RationalScalar &o) { return *this = *this + o; }
        RationalScalar &operator-=(const RationalScalar &o) { return *this = *this - o; }
        RationalScalar &operator*=(const RationalScalar &o) { return *this = *this * o; }

        RationalScalar inverse() const;

        friend bool operator==(const RationalScalar &a, const RationalScalar &b)
        {
            return a.num_ == b.num_ && a.den_ == b.den_;
        }
        friend bool operator!=(const RationalScalar &a, const RationalScalar &b) { return !(a == b); }

        // True when only even powers of v occur, i.e. the value lies in Q(q).
        bool is_even_in_v() const;

        std::string to_string() const;

    private:
        void reduce();

        LaurentScalar num_;
        IntPoly den_ = IntPoly(1);
    };

} // namespace qz
