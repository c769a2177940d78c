#include "qz/rational_scalar.hpp"

namespace qz
{

    RationalScalar::RationalScalar(const LaurentScalar &num, const LaurentScalar &den)
    {
        if (den.is_zero())
            throw DivisionByZero("RationalScalar with zero denominator");
        // num / (v^s * body) = (num * v^-s) / body
        num_ = num.times_v_power(-den.low_exponent());
        den_ = den.body();
        reduce();
    }

    void RationalScalar::reduce()
    {
        if (num_.is_zero())
        {
            den_ = IntPoly(1);
            return;
        }
        if (den_.is_constant())
        {
            const Integer d = den_.lead();
            Integer g = gcd_of(num_.body().content(), d);
            if (d < 0)
                g = -g;
            if (g != 1)
            {
                num_ = LaurentScalar(num_.low_exponent(), num_.body().divided_by_scalar(g));
                den_ = IntPoly(exact_div(d, g));
            }
            return;
        }
        IntPoly g = gcd(num_.body(), den_);
        if (sign_of(den_.lead()) < 0)
            g = -g;
        if (!g.is_one())
        {
            num_ = LaurentScalar(num_.low_exponent(), exact_quotient(num_.body(), g));
            den_ = exact_quotient(den_, g);
        }
    }

    RationalScalar RationalScalar::operator-() const
    {
        RationalScalar r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RationalScalar operator+(const RationalScalar &a, const RationalScalar &b)
    {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        RationalScalar r;
        if (a.den_ == b.den_)
        {
            r.num_ = a.num_ + b.num_;
            r.den_ = a.den_;
            if (!r.den_.is_one())
                r.reduce();
            else if (r.num_.is_zero())
                r.den_ = IntPoly(1);
            return r;
        }
        r.num_ = a.num_ * LaurentScalar(0, b.den_) + b.num_ * LaurentScalar(0, a.den_);
        r.den_ = a.den_ * b.den_;
        r.reduce();
        return r;
    }

    RationalScalar operator-(const RationalScalar &a, const RationalScalar &b) { return a + (-b); }

    RationalScalar operator*(const RationalScalar &a, const RationalScalar &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        RationalScalar r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_ * b.den_;
        if (!r.den_.is_one())
            r.reduce();
        return r;
    }

    RationalScalar RationalScalar::inverse() const
    {
        if (is_zero())
            throw DivisionByZero("inverse of zero in Q(v)");
        return RationalScalar(LaurentScalar(0, den_), num_);
    }

    RationalScalar operator/(const RationalScalar &a, const RationalScalar &b) { return a * b.inverse(); }

    bool RationalScalar::is_even_in_v() const
    {
        for (const auto &[k, c] : num_.terms())
            if (k % 2 != 0)
                return false;
        const auto &d = den_.coeffs();
        for (std::size_t i = 1; i < d.size(); i += 2)
            if (!d[i].is_zero())
                return false;
        return true;
    }

    std::string RationalScalar::to_string() const
    {
        if (den_.is_one())
            return num_.to_string();
        return "(" + num_.to_string() + ")/(" + LaurentScalar(0, den_).to_string() + ")";
    }

} // namespace qz
