#include "qz/qt_rational.hpp"

#include <cctype>
#include <sstream>

namespace qz
{

    namespace
    {
        // Polynomial value of c * q^a * t^b with a, b >= 0.
        QTPoly qt_monomial(const Integer &c, int a, int b)
        {
            return QTPoly::monomial(IntPoly::monomial(c, static_cast<std::size_t>(a)),
                                    static_cast<std::size_t>(b));
        }

        // Largest power of q dividing every coefficient.
        std::size_t q_valuation(const QTPoly &p)
        {
            std::size_t v = SIZE_MAX;
            for (const auto &c : p.coeffs())
                if (!c.is_zero())
                    v = std::min(v, c.low_degree());
            return v == SIZE_MAX ? 0 : v;
        }

        QTPoly q_shift_down(const QTPoly &p, std::size_t k)
        {
            if (k == 0)
                return p;
            std::vector<IntPoly> c;
            for (const auto &x : p.coeffs())
                c.push_back(x.shifted_down(k));
            return QTPoly::from_coeffs(std::move(c));
        }
    } // namespace

    QTRational::QTRational(const QTPoly &num, const QTPoly &den) : num_(num), den_(den)
    {
        if (den_.is_zero())
            throw DivisionByZero("QTRational with zero denominator");
        reduce();
    }

    QTRational QTRational::q() { return QTRational(qt_monomial(1, 1, 0)); }
    QTRational QTRational::t() { return QTRational(qt_monomial(1, 0, 1)); }

    QTRational QTRational::monomial(const Integer &c, int a, int b)
    {
        QTPoly n = qt_monomial(c, std::max(a, 0), std::max(b, 0));
        QTPoly d = qt_monomial(1, std::max(-a, 0), std::max(-b, 0));
        return QTRational(n, d);
    }

    void QTRational::reduce()
    {
        if (num_.is_zero())
        {
            den_ = QTPoly(IntPoly(1));
            return;
        }
        if (den_.is_one())
            return;
        // Strip common monomial factors first; they are the most frequent case
        // and cheap compared with the full gcd.
        const std::size_t tv = std::min(num_.low_degree(), den_.low_degree());
        if (tv > 0)
        {
            num_ = num_.shifted_down(tv);
            den_ = den_.shifted_down(tv);
        }
        const std::size_t qv = std::min(q_valuation(num_), q_valuation(den_));
        if (qv > 0)
        {
            num_ = q_shift_down(num_, qv);
            den_ = q_shift_down(den_, qv);
        }
        QTPoly g = gcd(num_, den_);
        if (sign_of(den_) < 0)
            g = -g;
        if (!g.is_one())
        {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }

    QTRational QTRational::operator-() const
    {
        QTRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    QTRational operator+(const QTRational &a, const QTRational &b)
    {
        if (a.is_zero())
            return b;
        if (b.is_zero())
            return a;
        QTRational r;
        if (a.den_ == b.den_)
        {
            r.num_ = a.num_ + b.num_;
            r.den_ = a.den_;
        }
        else
        {
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
        }
        r.reduce();
        return r;
    }

    QTRational operator-(const QTRational &a, const QTRational &b) { return a + (-b); }

    QTRational operator*(const QTRational &a, const QTRational &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        QTRational r;
        r.num_ = a.num_ * b.num_;
        r.den_ = a.den_ * b.den_;
        r.reduce();
        return r;
    }

    QTRational operator/(const QTRational &a, const QTRational &b)
    {
        if (b.is_zero())
            throw DivisionByZero("QTRational division by zero");
        return a * QTRational(b.den_, b.num_);
    }

    QTRational QTRational::pow(int e) const
    {
        if (e < 0)
            return QTRational(1) / pow(-e);
        QTRational r(1);
        for (int i = 0; i < e; ++i)
            r *= *this;
        return r;
    }

    QTRational QTRational::substitute(const QTRational &q_star, const QTRational &t_star) const
    {
        auto eval = [&](const QTPoly &p) {
            QTRational acc;
            const auto &tc = p.coeffs();
            for (std::size_t i = tc.size(); i-- > 0;)
            {
                QTRational inner;
                const auto &qc = tc[i].coeffs();
                for (std::size_t j = qc.size(); j-- > 0;)
                    inner = inner * q_star + QTRational(qc[j]);
                acc = acc * t_star + inner;
            }
            return acc;
        };
        const QTRational d = eval(den_);
        if (d.is_zero())
            throw SubstitutionSingular("denominator vanishes under substitution");
        return eval(num_) / d;
    }

    RationalScalar QTRational::to_v(int q_exp_v, int t_exp_v) const
    {
        auto eval = [&](const QTPoly &p) {
            LaurentScalar acc;
            const auto &tc = p.coeffs();
            for (std::size_t b = 0; b < tc.size(); ++b)
            {
                const auto &qc = tc[b].coeffs();
                for (std::size_t a = 0; a < qc.size(); ++a)
                    if (!qc[a].is_zero())
                        acc += LaurentScalar::monomial(
                            qc[a], q_exp_v * static_cast<int>(a) + t_exp_v * static_cast<int>(b));
            }
            return acc;
        };
        const LaurentScalar d = eval(den_);
        if (d.is_zero())
            throw SubstitutionSingular("denominator vanishes under q -> v^" + std::to_string(q_exp_v) +
                                       ", t -> v^" + std::to_string(t_exp_v));
        return RationalScalar(eval(num_), d);
    }

    std::string qt_poly_to_string(const QTPoly &p)
    {
        if (p.is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        const auto &tc = p.coeffs();
        for (std::size_t b = tc.size(); b-- > 0;)
        {
            const auto &qc = tc[b].coeffs();
            for (std::size_t a = qc.size(); a-- > 0;)
            {
                Integer c = qc[a];
                if (c.is_zero())
                    continue;
                if (first)
                {
                    if (c < 0)
                    {
                        os << "-";
                        c = -c;
                    }
                }
                else
                {
                    os << (c < 0 ? " - " : " + ");
                    if (c < 0)
                        c = -c;
                }
                first = false;
                std::string mono;
                if (a > 0)
                    mono += a == 1 ? "q" : "q^" + std::to_string(a);
                if (b > 0)
                    mono += std::string(mono.empty() ? "" : "*") + (b == 1 ? "t" : "t^" + std::to_string(b));
                if (mono.empty())
                    os << c;
                else if (c == 1)
                    os << mono;
                else
                    os << c << "*" << mono;
            }
        }
        return os.str();
    }

    std::string QTRational::to_string() const
    {
        if (den_.is_one())
            return qt_poly_to_string(num_);
        return "(" + qt_poly_to_string(num_) + ")/(" + qt_poly_to_string(den_) + ")";
    }

    namespace
    {
        class QTParser
        {
        public:
            explicit QTParser(const std::string &s) : s_(s) {}
            QTRational parse()
            {
                QTRational r = expr();
                skip();
                if (pos_ != s_.size())
                    fail("trailing input");
                return r;
            }

        private:
            [[noreturn]] void fail(const std::string &msg) const
            {
                throw ParseError(msg + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
            }
            void skip()
            {
                while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
            }
            bool eat(char c)
            {
                skip();
                if (pos_ < s_.size() && s_[pos_] == c)
                {
                    ++pos_;
                    return true;
                }
                return false;
            }
            int exponent()
            {
                bool paren = eat('(');
                bool neg = eat('-');
                skip();
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                if (start == pos_)
                    fail("expected exponent");
                int e = std::stoi(s_.substr(start, pos_ - start));
                if (paren && !eat(')'))
                    fail("expected ')'");
                return neg ? -e : e;
            }
            QTRational atom()
            {
                skip();
                if (pos_ >= s_.size())
                    fail("unexpected end");
                const char c = s_[pos_];
                QTRational base;
                if (c == '(')
                {
                    ++pos_;
                    base = expr();
                    if (!eat(')'))
                        fail("expected ')'");
                }
                else if (c == 'q' || c == 't')
                {
                    ++pos_;
                    base = c == 'q' ? QTRational::q() : QTRational::t();
                }
                else if (std::isdigit(static_cast<unsigned char>(c)))
                {
                    std::size_t start = pos_;
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                        ++pos_;
                    base = QTRational(Integer(s_.substr(start, pos_ - start)));
                }
                else
                    fail("unexpected character");
                if (eat('^'))
                    base = base.pow(exponent());
                return base;
            }
            QTRational term()
            {
                QTRational r = atom();
                while (true)
                {
                    if (eat('*'))
                        r *= atom();
                    else if (eat('/'))
                        r = r / atom();
                    else
                    {
                        skip();
                        if (pos_ < s_.size() && (s_[pos_] == 'q' || s_[pos_] == 't' || s_[pos_] == '('))
                            r *= atom();
                        else
                            return r;
                    }
                }
            }
            QTRational expr()
            {
                QTRational r;
                if (eat('-'))
                    r = -term();
                else
                {
                    eat('+');
                    r = term();
                }
                while (true)
                {
                    if (eat('+'))
                        r += term();
                    else if (eat('-'))
                        r -= term();
                    else
                        return r;
                }
            }

            const std::string &s_;
            std::size_t pos_ = 0;
        };
    } // namespace

    QTRational parse_qt(const std::string &text) { return QTParser(text).parse(); }

} // namespace qz
