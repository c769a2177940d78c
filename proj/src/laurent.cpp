#include "qz/laurent.hpp"

#include <cctype>
#include <sstream>

namespace qz
{

    LaurentScalar::LaurentScalar(Integer c) : body_(std::move(c)) {}

    LaurentScalar::LaurentScalar(int shift, IntPoly body) : shift_(shift), body_(std::move(body))
    {
        normalize();
    }

    LaurentScalar LaurentScalar::monomial(Integer c, int k)
    {
        LaurentScalar a;
        if (c.is_zero())
            return a;
        a.body_ = IntPoly(std::move(c));
        a.shift_ = k;
        return a;
    }

    LaurentScalar LaurentScalar::from_terms(const std::map<int, Integer> &terms)
    {
        LaurentScalar a;
        for (const auto &[k, c] : terms)
            a += monomial(c, k);
        return a;
    }

    void LaurentScalar::normalize()
    {
        if (body_.is_zero())
        {
            shift_ = 0;
            return;
        }
        const std::size_t low = body_.low_degree();
        if (low > 0)
        {
            body_ = body_.shifted_down(low);
            shift_ += static_cast<int>(low);
        }
    }

    bool LaurentScalar::is_monomial() const { return body_.size() == 1; }

    Integer LaurentScalar::coeff(int k) const
    {
        if (is_zero() || k < shift_)
            return 0;
        return body_.coeff(static_cast<std::size_t>(k - shift_));
    }

    std::size_t LaurentScalar::term_count() const
    {
        std::size_t n = 0;
        for (const auto &c : body_.coeffs())
            n += c.is_zero() ? 0 : 1;
        return n;
    }

    std::map<int, Integer> LaurentScalar::terms() const
    {
        std::map<int, Integer> out;
        const auto &c = body_.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero())
                out.emplace(shift_ + static_cast<int>(i), c[i]);
        return out;
    }

    LaurentScalar LaurentScalar::operator-() const
    {
        LaurentScalar a = *this;
        a.body_ = -a.body_;
        return a;
    }

    LaurentScalar &LaurentScalar::operator+=(const LaurentScalar &o)
    {
        if (o.is_zero())
            return *this;
        if (is_zero())
            return *this = o;
        if (o.shift_ == shift_)
            body_ += o.body_;
        else if (o.shift_ > shift_)
            body_ += o.body_.shifted_up(static_cast<std::size_t>(o.shift_ - shift_));
        else
        {
            body_ = body_.shifted_up(static_cast<std::size_t>(shift_ - o.shift_)) + o.body_;
            shift_ = o.shift_;
        }
        normalize();
        return *this;
    }

    LaurentScalar &LaurentScalar::operator-=(const LaurentScalar &o) { return *this += -o; }

    LaurentScalar operator*(const LaurentScalar &a, const LaurentScalar &b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        LaurentScalar c;
        c.body_ = a.body_ * b.body_;
        c.shift_ = a.shift_ + b.shift_;
        return c;
    }

    LaurentScalar &LaurentScalar::operator*=(const LaurentScalar &o) { return *this = *this * o; }

    LaurentScalar LaurentScalar::times_v_power(int k) const
    {
        LaurentScalar a = *this;
        if (!a.is_zero())
            a.shift_ += k;
        return a;
    }

    LaurentScalar LaurentScalar::pow(unsigned e) const
    {
        LaurentScalar result(1);
        LaurentScalar base = *this;
        while (e)
        {
            if (e & 1u)
                result *= base;
            e >>= 1u;
            if (e)
                base *= base;
        }
        return result;
    }

    LaurentScalar LaurentScalar::bar() const
    {
        if (is_zero())
            return {};
        std::vector<Integer> c(body_.coeffs().rbegin(), body_.coeffs().rend());
        return LaurentScalar(-high_exponent(), IntPoly::from_coeffs(std::move(c)));
    }

    Rational LaurentScalar::specialize(const Rational &v0) const
    {
        if (v0.is_zero())
            throw DivisionByZero("specialization at v = 0");
        Rational acc = 0;
        const auto &c = body_.coeffs();
        for (std::size_t i = c.size(); i-- > 0;)
            acc = acc * v0 + Rational(c[i]);
        Rational p = 1;
        const Rational base = shift_ >= 0 ? v0 : Rational(1) / v0;
        for (int i = 0; i < std::abs(shift_); ++i)
            p = p * base;
        return acc * p;
    }

    std::string LaurentScalar::to_string() const
    {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        const auto t = terms();
        for (auto it = t.rbegin(); it != t.rend(); ++it)
        {
            const int k = it->first;
            Integer c = it->second;
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
            if (k == 0)
            {
                os << c;
                continue;
            }
            if (c != 1)
                os << c << "*";
            os << "v";
            if (k != 1)
                os << "^" << k;
        }
        return os.str();
    }

    LaurentScalar q_int(int j)
    {
        if (j < 0)
            return -q_int(-j);
        // q^{j-1} + q^{j-3} + ... + q^{1-j}, i.e. v^{2(j-1)} + ... + v^{-2(j-1)}
        LaurentScalar s;
        for (int i = 0; i < j; ++i)
            s += LaurentScalar::v_power(2 * (j - 1) - 4 * i);
        return s;
    }

    LaurentScalar q_factorial(int k)
    {
        LaurentScalar f(1);
        for (int j = 2; j <= k; ++j)
            f *= q_int(j);
        return f;
    }

    nlohmann::json to_json(const LaurentScalar &a)
    {
        nlohmann::json j = nlohmann::json::object();
        const auto t = a.terms();
        for (auto it = t.rbegin(); it != t.rend(); ++it)
            j[std::to_string(it->first)] = it->second.str();
        return j;
    }

    LaurentScalar laurent_from_json(const nlohmann::json &j)
    {
        if (!j.is_object())
            throw ParseError("Laurent scalar must be a JSON object");
        std::map<int, Integer> terms;
        for (const auto &[k, v] : j.items())
        {
            try
            {
                std::size_t pos = 0;
                const int e = std::stoi(k, &pos);
                if (pos != k.size())
                    throw ParseError("bad exponent key '" + k + "'");
                const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
                terms[e] += Integer(s);
            }
            catch (const std::invalid_argument &)
            {
                throw ParseError("bad Laurent term '" + k + "'");
            }
            catch (const std::runtime_error &e)
            {
                throw ParseError(std::string("bad Laurent coefficient: ") + e.what());
            }
        }
        return LaurentScalar::from_terms(terms);
    }

    namespace
    {
        class LaurentParser
        {
        public:
            explicit LaurentParser(const std::string &s) : s_(s) {}

            LaurentScalar parse()
            {
                LaurentScalar r = expr();
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
            int integer_exponent()
            {
                skip();
                bool neg = false;
                if (eat('-'))
                    neg = true;
                else
                    eat('+');
                bool paren = eat('(');
                if (paren && eat('-'))
                    neg = !neg;
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
            LaurentScalar factor()
            {
                skip();
                if (pos_ >= s_.size())
                    fail("unexpected end");
                const char c = s_[pos_];
                if (c == '(')
                {
                    ++pos_;
                    LaurentScalar r = expr();
                    if (!eat(')'))
                        fail("expected ')'");
                    return power(r);
                }
                if (c == 'v' || c == 'q')
                {
                    ++pos_;
                    int e = 1;
                    if (eat('^'))
                        e = integer_exponent();
                    return LaurentScalar::v_power(c == 'v' ? e : 2 * e);
                }
                if (std::isdigit(static_cast<unsigned char>(c)))
                {
                    std::size_t start = pos_;
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                        ++pos_;
                    return LaurentScalar(Integer(s_.substr(start, pos_ - start)));
                }
                fail("unexpected character");
            }
            LaurentScalar power(LaurentScalar base)
            {
                if (!eat('^'))
                    return base;
                const int e = integer_exponent();
                if (e < 0)
                {
                    if (!base.is_monomial())
                        fail("negative power of a non-monomial");
                    if (base.coeff(base.low_exponent()) != 1 && base.coeff(base.low_exponent()) != -1)
                        fail("negative power of a non-unit");
                    return LaurentScalar::monomial(
                        (-e) % 2 ? base.coeff(base.low_exponent()) : Integer(1), base.low_exponent() * e);
                }
                return base.pow(static_cast<unsigned>(e));
            }
            LaurentScalar term()
            {
                LaurentScalar r = factor();
                while (true)
                {
                    skip();
                    if (eat('*'))
                    {
                        r *= factor();
                        continue;
                    }
                    // Juxtaposition such as "2v^3".
                    if (pos_ < s_.size() && (s_[pos_] == 'v' || s_[pos_] == 'q' || s_[pos_] == '('))
                    {
                        r *= factor();
                        continue;
                    }
                    return r;
                }
            }
            LaurentScalar expr()
            {
                LaurentScalar r;
                bool neg = false;
                if (eat('-'))
                    neg = true;
                else
                    eat('+');
                r = neg ? -term() : term();
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

    LaurentScalar parse_laurent(const std::string &text) { return LaurentParser(text).parse(); }

    Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d))
    {
        if (den_.is_zero())
            throw DivisionByZero("rational with zero denominator");
        if (den_ < 0)
        {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = gcd_of(num_, den_);
        if (g != 1 && !g.is_zero())
        {
            num_ /= g;
            den_ /= g;
        }
        if (num_.is_zero())
            den_ = 1;
    }

    Rational operator+(const Rational &a, const Rational &b)
    {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    Rational operator-(const Rational &a, const Rational &b) { return a + (-b); }
    Rational operator*(const Rational &a, const Rational &b)
    {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    Rational operator/(const Rational &a, const Rational &b)
    {
        if (b.is_zero())
            throw DivisionByZero("rational division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    std::string Rational::to_string() const
    {
        return den_ == 1 ? num_.str() : num_.str() + "/" + den_.str();
    }

} // namespace qz
