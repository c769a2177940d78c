#pragma once

// Dense univariate polynomials over an exact GCD domain.
//
// Poly<Integer> is Z[x]; Poly<Poly<Integer>> is Z[q][t]. The coefficient
// domain R must provide the free functions is_zero, sign_of, gcd_of and
// exact_div; they are supplied below for Integer and, recursively, for Poly.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qz/errors.hpp"

namespace qz
{

    using Integer = boost::multiprecision::cpp_int;

    inline bool is_zero(const Integer &a) { return a.is_zero(); }
    inline int sign_of(const Integer &a) { return a.sign(); }
    inline Integer gcd_of(const Integer &a, const Integer &b)
    {
        return boost::multiprecision::gcd(a, b);
    }
    inline Integer exact_div(const Integer &a, const Integer &b)
    {
        if (b.is_zero())
            throw DivisionByZero("integer division by zero");
        Integer q, r;
        boost::multiprecision::divide_qr(a, b, q, r);
        if (!r.is_zero())
            throw InexactDivision("integer quotient is not exact");
        return q;
    }

    template <class R>
    class Poly;

    // Poly<R> is itself a GCD domain, which makes Poly<Poly<R>> work. Declared
    // before the class so qualified calls inside it see these overloads.
    template <class R>
    bool is_zero(const Poly<R> &a);
    template <class R>
    int sign_of(const Poly<R> &a);
    template <class R>
    Poly<R> gcd_of(const Poly<R> &a, const Poly<R> &b);
    template <class R>
    Poly<R> exact_div(const Poly<R> &a, const Poly<R> &b);

    template <class R>
    class Poly
    {
    public:
        using coeff_type = R;

        Poly() = default;
        explicit Poly(R c)
        {
            if (!qz::is_zero(c))
                c_.push_back(std::move(c));
        }
        explicit Poly(int c) : Poly(R(c)) {}

        static Poly from_coeffs(std::vector<R> c)
        {
            Poly p;
            p.c_ = std::move(c);
            p.trim();
            return p;
        }
        static Poly monomial(R c, std::size_t deg)
        {
            Poly p;
            if (qz::is_zero(c))
                return p;
            p.c_.assign(deg + 1, R(0));
            p.c_[deg] = std::move(c);
            return p;
        }
        static Poly x() { return monomial(R(1), 1); }

        bool is_zero() const { return c_.empty(); }
        bool is_one() const { return c_.size() == 1 && c_[0] == R(1); }
        bool is_constant() const { return c_.size() <= 1; }
        int degree() const { return static_cast<int>(c_.size()) - 1; }
        const R &lead() const { return c_.back(); }
        const std::vector<R> &coeffs() const { return c_; }
        std::size_t size() const { return c_.size(); }

        R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }

        // Number of trailing zero coefficients, i.e. the largest k with x^k | p.
        std::size_t low_degree() const
        {
            std::size_t k = 0;
            while (k < c_.size() && qz::is_zero(c_[k]))
                ++k;
            return k;
        }

        Poly shifted_down(std::size_t k) const
        {
            Poly p;
            if (k >= c_.size())
                return p;
            p.c_.assign(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end());
            return p;
        }
        Poly shifted_up(std::size_t k) const
        {
            if (is_zero())
                return {};
            Poly p;
            p.c_.assign(k, R(0));
            p.c_.insert(p.c_.end(), c_.begin(), c_.end());
            return p;
        }

        Poly operator-() const
        {
            Poly p = *this;
            for (auto &c : p.c_)
                c = -c;
            return p;
        }

        Poly &operator+=(const Poly &o)
        {
            if (o.c_.size() > c_.size())
                c_.resize(o.c_.size(), R(0));
            for (std::size_t i = 0; i < o.c_.size(); ++i)
                c_[i] += o.c_[i];
            trim();
            return *this;
        }
        Poly &operator-=(const Poly &o)
        {
            if (o.c_.size() > c_.size())
                c_.resize(o.c_.size(), R(0));
            for (std::size_t i = 0; i < o.c_.size(); ++i)
                c_[i] -= o.c_[i];
            trim();
            return *this;
        }
        friend Poly operator+(Poly a, const Poly &b) { return a += b; }
        friend Poly operator-(Poly a, const Poly &b) { return a -= b; }

        friend Poly operator*(const Poly &a, const Poly &b)
        {
            Poly p;
            if (a.is_zero() || b.is_zero())
                return p;
            p.c_.assign(a.c_.size() + b.c_.size() - 1, R(0));
            for (std::size_t i = 0; i < a.c_.size(); ++i)
            {
                if (qz::is_zero(a.c_[i]))
                    continue;
                for (std::size_t j = 0; j < b.c_.size(); ++j)
                    p.c_[i + j] += a.c_[i] * b.c_[j];
            }
            p.trim();
            return p;
        }
        Poly &operator*=(const Poly &o) { return *this = *this * o; }

        Poly scaled(const R &s) const
        {
            if (qz::is_zero(s))
                return {};
            Poly p = *this;
            for (auto &c : p.c_)
                c *= s;
            return p;
        }
        Poly divided_by_scalar(const R &s) const
        {
            Poly p = *this;
            for (auto &c : p.c_)
                c = exact_div(c, s);
            return p;
        }

        friend bool operator==(const Poly &a, const Poly &b) { return a.c_ == b.c_; }
        friend bool operator!=(const Poly &a, const Poly &b) { return !(a == b); }

        R content() const
        {
            R g(0);
            for (const auto &c : c_)
            {
                g = gcd_of(g, c);
                if (g == R(1))
                    break;
            }
            return g;
        }

        // Content removed and leading coefficient made positive.
        Poly primitive_part() const
        {
            if (is_zero())
                return {};
            R g = content();
            if (sign_of(lead()) < 0)
                g = -g;
            return g == R(1) ? *this : divided_by_scalar(g);
        }

        Poly sign_normalized() const { return (!is_zero() && sign_of(lead()) < 0) ? -*this : *this; }

        // Horner evaluation in any ring that accepts R coefficients.
        template <class S>
        S evaluate(const S &x) const
        {
            S acc(0);
            for (std::size_t i = c_.size(); i-- > 0;)
                acc = acc * x + S(c_[i]);
            return acc;
        }

    private:
        void trim()
        {
            while (!c_.empty() && qz::is_zero(c_.back()))
                c_.pop_back();
        }

        std::vector<R> c_;
    };

    // lc(b)^k * a reduced modulo b, k chosen by the loop (the unit factor is
    // irrelevant to every caller because they take primitive parts).
    template <class R>
    Poly<R> pseudo_remainder(Poly<R> a, const Poly<R> &b)
    {
        if (b.is_zero())
            throw DivisionByZero("pseudo-remainder by zero polynomial");
        const int db = b.degree();
        while (!a.is_zero() && a.degree() >= db)
        {
            const std::size_t shift = static_cast<std::size_t>(a.degree() - db);
            R la = a.lead();
            a = a.scaled(b.lead()) - b.scaled(la).shifted_up(shift);
        }
        return a;
    }

    // Quotient a / b; throws InexactDivision unless b divides a in R[x].
    template <class R>
    Poly<R> exact_quotient(Poly<R> a, const Poly<R> &b)
    {
        if (b.is_zero())
            throw DivisionByZero("polynomial division by zero");
        if (a.is_zero())
            return {};
        if (b.is_constant())
            return a.divided_by_scalar(b.lead());
        const int db = b.degree();
        std::vector<R> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0, R(0));
        while (!a.is_zero())
        {
            if (a.degree() < db)
                throw InexactDivision("polynomial quotient is not exact");
            const std::size_t shift = static_cast<std::size_t>(a.degree() - db);
            R c = exact_div(a.lead(), b.lead());
            a -= b.scaled(c).shifted_up(shift);
            q[shift] = std::move(c);
        }
        return Poly<R>::from_coeffs(std::move(q));
    }

    // Primitive PRS gcd, normalized to a positive leading coefficient.
    template <class R>
    Poly<R> gcd(const Poly<R> &a, const Poly<R> &b)
    {
        if (a.is_zero())
            return b.sign_normalized();
        if (b.is_zero())
            return a.sign_normalized();
        R ca = a.content();
        R cb = b.content();
        R c = gcd_of(ca, cb);
        if (sign_of(c) < 0)
            c = -c;
        if (a.is_constant() || b.is_constant())
            return Poly<R>(c);
        Poly<R> x = a.primitive_part();
        Poly<R> y = b.primitive_part();
        if (x.degree() < y.degree())
            std::swap(x, y);
        while (true)
        {
            if (y == x)
                break;
            Poly<R> r = pseudo_remainder(x, y);
            if (r.is_zero())
                break;
            if (r.is_constant())
                return Poly<R>(c);
            x = std::move(y);
            y = r.primitive_part();
        }
        return y.primitive_part().scaled(c);
    }

    template <class R>
    bool is_zero(const Poly<R> &a) { return a.is_zero(); }
    template <class R>
    int sign_of(const Poly<R> &a) { return a.is_zero() ? 0 : sign_of(a.lead()); }
    template <class R>
    Poly<R> gcd_of(const Poly<R> &a, const Poly<R> &b) { return gcd(a, b); }
    template <class R>
    Poly<R> exact_div(const Poly<R> &a, const Poly<R> &b) { return exact_quotient(a, b); }

    using IntPoly = Poly<Integer>;

} // namespace qz
