#include "qz/uq_action.hpp"

#include <cctype>
#include <sstream>
#include <unordered_map>

namespace qz
{

    const char *side_name(Side s) { return s == Side::Left ? "left" : "right"; }

    // ------------------------------------------------------------ weights

    WeightVector WeightVector::from_coords(const std::vector<int> &coords)
    {
        WeightVector w;
        for (int c : coords)
            w.doubled.push_back(2 * c);
        return w;
    }

    WeightVector WeightVector::epsilon(int N, int i)
    {
        check_index(N, i, "weight");
        WeightVector w{std::vector<int>(static_cast<std::size_t>(N), 0)};
        w.doubled[static_cast<std::size_t>(i - 1)] = 2;
        return w;
    }

    WeightVector WeightVector::alpha(int N, int k)
    {
        check_index(N - 1, k, "simple root");
        WeightVector w{std::vector<int>(static_cast<std::size_t>(N), 0)};
        w.doubled[static_cast<std::size_t>(k - 1)] = 2;
        w.doubled[static_cast<std::size_t>(k)] = -2;
        return w;
    }

    WeightVector WeightVector::fundamental(int N, int k)
    {
        check_index(N, k, "fundamental weight");
        WeightVector w{std::vector<int>(static_cast<std::size_t>(N), 0)};
        for (int i = 0; i < k; ++i)
            w.doubled[static_cast<std::size_t>(i)] = 2;
        return w;
    }

    // ------------------------------------------------------------ elements

    std::string UqAtom::to_string() const
    {
        switch (kind)
        {
        case E:
            return "e" + std::to_string(k);
        case F:
            return "f" + std::to_string(k);
        default:
        {
            std::string s = "qh[";
            for (std::size_t i = 0; i < weight.doubled.size(); ++i)
                s += (i ? "," : "") + std::to_string(weight.doubled[i]);
            return s + "]";
        }
        }
    }

    UqElement UqElement::atom(const UqAtom &a)
    {
        UqElement u;
        u.add({a}, 1);
        return u;
    }

    UqElement UqElement::scalar(const LaurentScalar &c)
    {
        UqElement u;
        u.add({}, c);
        return u;
    }

    void UqElement::add(const Word &w, const LaurentScalar &c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted)
        {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    UqElement operator+(const UqElement &a, const UqElement &b)
    {
        UqElement r = a;
        for (const auto &[w, c] : b.terms_)
            r.add(w, c);
        return r;
    }

    UqElement operator-(const UqElement &a, const UqElement &b) { return a + LaurentScalar(-1) * b; }

    UqElement operator*(const UqElement &a, const UqElement &b)
    {
        UqElement r;
        for (const auto &[wa, ca] : a.terms_)
            for (const auto &[wb, cb] : b.terms_)
            {
                UqElement::Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(w, ca * cb);
            }
        return r;
    }

    UqElement operator*(const LaurentScalar &c, const UqElement &a)
    {
        UqElement r;
        for (const auto &[w, x] : a.terms_)
            r.add(w, c * x);
        return r;
    }

    std::string UqElement::to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        bool first = true;
        for (const auto &[w, c] : terms_)
        {
            if (!first)
                s += " + ";
            first = false;
            if (!c.is_one() || w.empty())
                s += "(" + c.to_string() + ")";
            for (const auto &a : w)
                s += (s.empty() || s.back() == ' ' ? "" : " ") + a.to_string();
        }
        return s;
    }

    UqElement commutator(const UqElement &a, const UqElement &b) { return a * b - b * a; }

    UqElement composite_E(int N, int i, int j, int k)
    {
        check_index(N, i, "root vector");
        check_index(N, j, "root vector");
        if (i == j)
            throw IndexOutOfRange("E_{i,j} needs i != j");
        if (j == i + 1)
            return UqElement::e(i);
        if (i == j + 1)
            return UqElement::f(j);
        if (k == 0)
            k = std::min(i, j) + 1;
        if (k <= std::min(i, j) || k >= std::max(i, j))
            throw IndexOutOfRange("intermediate index " + std::to_string(k) + " not strictly between " +
                                  std::to_string(i) + " and " + std::to_string(j));
        const UqElement a = composite_E(N, i, k);
        const UqElement b = composite_E(N, k, j);
        return a * b - b * a;
    }

    // ------------------------------------------------------------ actions

    namespace
    {
        struct ActionKey
        {
            Monomial m;
            std::uint8_t tag; // side, kind and k packed

            friend bool operator==(const ActionKey &, const ActionKey &) = default;
        };
        struct ActionKeyHash
        {
            std::size_t operator()(const ActionKey &k) const
            {
                return static_cast<std::size_t>(k.m.hash() ^ (0x9E3779B97F4A7C15ull * (k.tag + 1u)));
            }
        };
        thread_local std::unordered_map<ActionKey, QPolynomial, ActionKeyHash> t_action_cache;

        void check_atom(const UqAtom &a, int N)
        {
            if (a.kind == UqAtom::K)
            {
                if (a.weight.size() != N)
                    throw IndexOutOfRange("weight of length " + std::to_string(a.weight.size()) + " in ambient N=" +
                                          std::to_string(N));
            }
            else if (a.k < 1 || a.k >= N)
                throw IndexOutOfRange(a.to_string() + " needs 1 <= k < " + std::to_string(N));
        }

        // e_k or f_k on a single normal monomial.
        QPolynomial act_on_monomial(Side side, const UqAtom &a, const Monomial &m, int N)
        {
            const ActionKey key{m, static_cast<std::uint8_t>((side == Side::Left ? 0 : 128) +
                                                             (a.kind == UqAtom::E ? 0 : 64) + a.k)};
            auto it = t_action_cache.find(key);
            if (it != t_action_cache.end())
                return it->second;

            const int k = a.k;
            const bool left = side == Side::Left;
            // index the action reads (column on the left, row on the right)
            auto idx = [&](const Generator &g) { return left ? g.col : g.row; };
            // source index that the operator moves, and where it moves it
            int from, to;
            if (left)
            {
                from = a.kind == UqAtom::E ? k + 1 : k;
                to = a.kind == UqAtom::E ? k : k + 1;
            }
            else
            {
                from = a.kind == UqAtom::E ? k : k + 1;
                to = a.kind == UqAtom::E ? k + 1 : k;
            }
            auto twist = [&](int c) { return (c == k ? 1 : 0) - (c == k + 1 ? 1 : 0); };

            const std::size_t n = m.size();
            std::vector<int> tw(n);
            int total = 0;
            for (std::size_t s = 0; s < n; ++s)
            {
                tw[s] = twist(idx(m.letter(s)));
                total += tw[s];
            }
            QPolynomial out(N);
            int before = 0; // sum of twists strictly left of p
            for (std::size_t p = 0; p < n; ++p)
            {
                const Generator g = m.letter(p);
                if (idx(g) == from)
                {
                    const int after = total - before - tw[p];
                    const Generator moved = left ? Generator{g.row, to} : Generator{to, g.col};
                    out += normal_form(N, m.with_letter(p, moved.code()), LaurentScalar::v_power(before - after));
                }
                before += tw[p];
            }
            t_action_cache.emplace(key, out);
            return out;
        }
    } // namespace

    void clear_action_cache() { t_action_cache.clear(); }

    QPolynomial act_generator(Side side, const UqAtom &atom, const QPolynomial &p)
    {
        const int N = p.ambient();
        check_atom(atom, N);
        if (atom.kind == UqAtom::K)
        {
            QPolynomial out(N);
            for (const auto &[m, c] : p.terms())
            {
                int e = 0;
                for (std::size_t s = 0; s < m.size(); ++s)
                {
                    const Generator g = m.letter(s);
                    e += atom.weight.doubled[static_cast<std::size_t>((side == Side::Left ? g.col : g.row) - 1)];
                }
                out.add_term(m, c.times_v_power(e));
            }
            return out;
        }
        QPolynomial out(N);
        for (const auto &[m, c] : p.terms())
        {
            const QPolynomial r = act_on_monomial(side, atom, m, N);
            for (const auto &[m2, c2] : r.terms())
                out.add_term(m2, c * c2);
        }
        return out;
    }

    QPolynomial act(Side side, const UqElement &u, const QPolynomial &p)
    {
        QPolynomial out(p.ambient());
        for (const auto &[word, c] : u.terms())
        {
            QPolynomial cur = p;
            if (side == Side::Left)
                for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it)
                    cur = act_generator(side, *it, cur);
            else
                for (auto it = word.begin(); it != word.end() && !cur.is_zero(); ++it)
                    cur = act_generator(side, *it, cur);
            out += c * cur;
        }
        return out;
    }

    // ------------------------------------------------------------ parser

    namespace
    {
        class UqParser
        {
        public:
            UqParser(const std::string &s, int N) : s_(s), n_(N) {}

            UqElement parse()
            {
                UqElement r = expr();
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
            bool at(const char *lit)
            {
                skip();
                return s_.compare(pos_, std::char_traits<char>::length(lit), lit) == 0;
            }
            bool eat(const char *lit)
            {
                if (!at(lit))
                    return false;
                pos_ += std::char_traits<char>::length(lit);
                return true;
            }
            int integer()
            {
                skip();
                bool neg = false;
                if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
                    neg = s_[pos_++] == '-';
                std::size_t start = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                if (start == pos_)
                    fail("expected integer");
                const int v = std::stoi(s_.substr(start, pos_ - start));
                return neg ? -v : v;
            }
            std::vector<int> int_list()
            {
                if (!eat("["))
                    fail("expected '['");
                std::vector<int> out;
                if (eat("]"))
                    return out;
                do
                    out.push_back(integer());
                while (eat(","));
                if (!eat("]"))
                    fail("expected ']'");
                return out;
            }
            // A scalar factor: digits, v^k / q^k (q not followed by '['), or
            // a parenthesised Laurent expression.
            bool scalar(LaurentScalar &out)
            {
                skip();
                if (pos_ >= s_.size())
                    return false;
                const char c = s_[pos_];
                if (std::isdigit(static_cast<unsigned char>(c)))
                {
                    std::size_t start = pos_;
                    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                        ++pos_;
                    out = LaurentScalar(Integer(s_.substr(start, pos_ - start)));
                    return true;
                }
                if (c == '(')
                {
                    int depth = 0;
                    std::size_t end = pos_;
                    for (; end < s_.size(); ++end)
                    {
                        depth += s_[end] == '(' ? 1 : s_[end] == ')' ? -1 : 0;
                        if (depth == 0)
                            break;
                    }
                    if (end >= s_.size())
                        fail("unbalanced '('");
                    out = parse_laurent(s_.substr(pos_ + 1, end - pos_ - 1));
                    pos_ = end + 1;
                    return true;
                }
                const bool is_v = c == 'v';
                const bool is_q = c == 'q' && !at("q[") && !at("qh[") && !at("q½[");
                if (is_v || is_q)
                {
                    ++pos_;
                    int e = 1;
                    if (eat("^"))
                    {
                        const bool paren = eat("(");
                        e = integer();
                        if (paren && !eat(")"))
                            fail("expected ')'");
                    }
                    out = LaurentScalar::v_power(is_v ? e : 2 * e);
                    return true;
                }
                return false;
            }
            bool atom(UqElement &out)
            {
                skip();
                if (pos_ >= s_.size())
                    return false;
                if (eat("qh[") || eat("q½["))
                {
                    --pos_;
                    const auto d = int_list();
                    if (static_cast<int>(d.size()) != n_)
                        fail("weight needs " + std::to_string(n_) + " coordinates");
                    out = UqElement::q_weight(WeightVector{d});
                    return true;
                }
                if (eat("q["))
                {
                    --pos_;
                    const auto d = int_list();
                    if (static_cast<int>(d.size()) != n_)
                        fail("weight needs " + std::to_string(n_) + " coordinates");
                    out = UqElement::q_weight(WeightVector::from_coords(d));
                    return true;
                }
                if (eat("E("))
                {
                    const int i = integer();
                    if (!eat(","))
                        fail("expected ','");
                    const int j = integer();
                    int k = 0;
                    if (eat(","))
                        k = integer();
                    if (!eat(")"))
                        fail("expected ')'");
                    out = composite_E(n_, i, j, k);
                    return true;
                }
                const char c = s_[pos_];
                if ((c == 'e' || c == 'f') && pos_ + 1 < s_.size() &&
                    std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))
                {
                    ++pos_;
                    const int k = integer();
                    if (k < 1 || k >= n_)
                        throw IndexOutOfRange(std::string(1, c) + std::to_string(k) + " needs 1 <= k < " +
                                              std::to_string(n_));
                    out = c == 'e' ? UqElement::e(k) : UqElement::f(k);
                    return true;
                }
                return false;
            }
            UqElement term()
            {
                LaurentScalar coeff(1);
                UqElement word = UqElement::scalar(1);
                bool any = false;
                while (true)
                {
                    LaurentScalar s;
                    UqElement a;
                    if (scalar(s))
                        coeff *= s;
                    else if (atom(a))
                        word = word * a;
                    else
                        break;
                    any = true;
                    eat("*");
                }
                if (!any)
                    fail("expected a term");
                return coeff * word;
            }
            UqElement expr()
            {
                UqElement r;
                if (eat("-"))
                    r = LaurentScalar(-1) * term();
                else
                {
                    eat("+");
                    r = term();
                }
                while (true)
                {
                    if (eat("+"))
                        r = r + term();
                    else if (eat("-"))
                        r = r - term();
                    else
                        return r;
                }
            }

            const std::string &s_;
            int n_;
            std::size_t pos_ = 0;
        };
    } // namespace

    UqElement parse_uq(const std::string &text, int N) { return UqParser(text, N).parse(); }

} // namespace qz
