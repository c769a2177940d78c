#include "qz/qmatrix.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include <omp.h>

namespace qz
{

    void check_index(int N, int i, const char *what)
    {
        if (i < 1 || i > N)
            throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(N));
    }

    int inversion_count(const std::vector<int> &w)
    {
        int n = 0;
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b)
                n += w[a] > w[b] ? 1 : 0;
        return n;
    }

    // ---------------------------------------------------------------- Monomial

    Monomial Monomial::from_codes(const std::vector<std::uint8_t> &codes)
    {
        if (codes.size() > kMaxDegree)
            throw IndexOutOfRange("monomial degree " + std::to_string(codes.size()) + " exceeds " +
                                  std::to_string(kMaxDegree));
        Monomial m;
        for (std::size_t i = 0; i < codes.size(); ++i)
        {
            if (codes[i] == 0)
                throw IndexOutOfRange("zero letter code");
            m.w_[i] = codes[i];
        }
        return m;
    }

    Monomial Monomial::from_word(const std::vector<Generator> &word)
    {
        std::vector<std::uint8_t> codes;
        codes.reserve(word.size());
        for (const auto &g : word)
        {
            if (g.row < 1 || g.row > kMaxAmbient || g.col < 1 || g.col > kMaxAmbient)
                throw IndexOutOfRange("generator x_" + std::to_string(g.row) + "," + std::to_string(g.col));
            codes.push_back(g.code());
        }
        return from_codes(codes);
    }

    Monomial Monomial::appended(std::uint8_t c) const
    {
        const std::size_t n = size();
        if (n == kMaxDegree)
            throw IndexOutOfRange("monomial degree exceeds " + std::to_string(kMaxDegree));
        Monomial m = *this;
        m.w_[n] = c;
        return m;
    }

    Monomial Monomial::without_back() const
    {
        Monomial m = *this;
        m.w_[size() - 1] = 0;
        return m;
    }

    bool Monomial::is_sorted() const
    {
        const std::size_t n = size();
        for (std::size_t i = 1; i < n; ++i)
            if (w_[i - 1] > w_[i])
                return false;
        return true;
    }

    std::vector<Generator> Monomial::word() const
    {
        std::vector<Generator> out;
        for (std::size_t i = 0; i < size(); ++i)
            out.push_back(letter(i));
        return out;
    }

    std::uint64_t Monomial::hash() const
    {
        std::uint64_t a, b;
        std::memcpy(&a, w_.data(), 8);
        std::memcpy(&b, w_.data() + 8, 8);
        // splitmix-style mixing
        std::uint64_t h = a * 0x9E3779B97F4A7C15ull ^ (b + 0x632BE59BD9B4E019ull + (a << 6) + (a >> 2));
        h ^= h >> 31;
        h *= 0xBF58476D1CE4E5B9ull;
        h ^= h >> 29;
        return h;
    }

    std::string Monomial::to_string() const
    {
        if (empty())
            return "1";
        std::string s;
        for (std::size_t i = 0; i < size(); ++i)
        {
            const Generator g = letter(i);
            if (i)
                s += "*";
            if (g.row < 10 && g.col < 10)
                s += "x" + std::to_string(g.row) + std::to_string(g.col);
            else
                s += "x{" + std::to_string(g.row) + "," + std::to_string(g.col) + "}";
        }
        return s;
    }

    BiWeight bi_weight(const Monomial &m, int N)
    {
        BiWeight w{std::vector<int>(N, 0), std::vector<int>(N, 0)};
        for (std::size_t i = 0; i < m.size(); ++i)
        {
            const Generator g = m.letter(i);
            ++w.rows[g.row - 1];
            ++w.cols[g.col - 1];
        }
        return w;
    }

    // ------------------------------------------------------------- QPolynomial

    QPolynomial::QPolynomial(int N) : n_(N)
    {
        if (N < 1 || N > kMaxAmbient)
            throw IndexOutOfRange("ambient size " + std::to_string(N) + " outside 1.." +
                                  std::to_string(kMaxAmbient));
    }

    QPolynomial QPolynomial::one(int N) { return term(N, Monomial(), 1); }

    QPolynomial QPolynomial::generator(int N, int i, int j)
    {
        check_index(N, i, "row");
        check_index(N, j, "column");
        return term(N, Monomial::from_word({{i, j}}), 1);
    }

    QPolynomial QPolynomial::term(int N, const Monomial &m, LaurentScalar c)
    {
        QPolynomial p(N);
        p.add_term(m, c);
        return p;
    }

    LaurentScalar QPolynomial::coeff(const Monomial &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? LaurentScalar() : it->second;
    }

    void QPolynomial::add_term(const Monomial &m, const LaurentScalar &c)
    {
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted)
        {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    QPolynomial QPolynomial::operator-() const
    {
        QPolynomial p = *this;
        for (auto &[m, c] : p.terms_)
            c = -c;
        return p;
    }

    QPolynomial &QPolynomial::operator+=(const QPolynomial &o)
    {
        if (o.n_ != n_)
            throw AmbientMismatch("adding polynomials over N=" + std::to_string(n_) + " and N=" +
                                  std::to_string(o.n_));
        for (const auto &[m, c] : o.terms_)
            add_term(m, c);
        return *this;
    }

    QPolynomial &QPolynomial::operator-=(const QPolynomial &o) { return *this += -o; }

    QPolynomial operator*(const LaurentScalar &c, const QPolynomial &p)
    {
        QPolynomial r(p.n_);
        if (c.is_zero())
            return r;
        for (const auto &[m, a] : p.terms_)
            r.terms_.emplace_hint(r.terms_.end(), m, c * a);
        return r;
    }

    int QPolynomial::degree() const
    {
        return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size());
    }

    bool QPolynomial::is_homogeneous() const
    {
        const int d = degree();
        for (const auto &[m, c] : terms_)
            if (static_cast<int>(m.size()) != d)
                return false;
        return true;
    }

    std::string QPolynomial::to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto &[m, c] : terms_)
        {
            if (!first)
                os << " + ";
            first = false;
            const std::string mono = m.to_string();
            if (c.is_one())
                os << mono;
            else if (m.empty())
                os << "(" << c.to_string() << ")";
            else
                os << "(" << c.to_string() << ")*" << mono;
        }
        return os.str();
    }

    // -------------------------------------------------------- straightening

    namespace
    {
        using TermList = std::vector<std::pair<Monomial, LaurentScalar>>;
        using Accum = std::unordered_map<Monomial, LaurentScalar, MonomialHash>;

        const LaurentScalar &q_inverse()
        {
            static const LaurentScalar c = LaurentScalar::q_power(-1);
            return c;
        }
        const LaurentScalar &minus_q_minus_qinv()
        {
            static const LaurentScalar c = LaurentScalar::q_power(-1) - LaurentScalar::q_power(1);
            return c;
        }

        struct InsertCache
        {
            std::unordered_map<Monomial, TermList, MonomialHash> map;
        };
        thread_local InsertCache t_cache;

        void accumulate(Accum &acc, const Monomial &m, const LaurentScalar &c)
        {
            if (c.is_zero())
                return;
            auto [it, inserted] = acc.try_emplace(m, c);
            if (!inserted)
                it->second += c;
        }

        TermList drain(Accum &acc)
        {
            TermList out;
            out.reserve(acc.size());
            for (auto &[m, c] : acc)
                if (!c.is_zero())
                    out.emplace_back(m, std::move(c));
            std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
            return out;
        }

        const TermList &insert_letter(const Monomial &m, std::uint8_t g);

        // Normal form of m * x * y for normal m.
        void insert_two(Accum &acc, const Monomial &m, std::uint8_t x, std::uint8_t y, const LaurentScalar &c)
        {
            const TermList &first = insert_letter(m, x);
            for (const auto &[t, ct] : first)
            {
                const LaurentScalar cc = c * ct;
                for (const auto &[u, cu] : insert_letter(t, y))
                    accumulate(acc, u, cc * cu);
            }
        }

        TermList compute_insert(const Monomial &m, std::uint8_t g)
        {
            const std::size_t n = m.size();
            const std::uint8_t x = m.code(n - 1);
            const Monomial rest = m.without_back();
            const Generator a = Generator::from_code(x); // x_{jl}, the larger letter
            const Generator b = Generator::from_code(g); // x_{ik}
            Accum acc;
            if (a.row == b.row || a.col == b.col)
            {
                // x_{il} x_{ik} = q^-1 x_{ik} x_{il} (k<l), x_{jk} x_{ik} = q^-1 x_{ik} x_{jk} (i<j)
                insert_two(acc, rest, g, x, q_inverse());
            }
            else if (a.col < b.col)
            {
                insert_two(acc, rest, g, x, 1);
            }
            else
            {
                // x_{jl} x_{ik} = x_{ik} x_{jl} - (q - q^-1) x_{il} x_{jk}
                insert_two(acc, rest, g, x, 1);
                const Generator il{b.row, a.col}, jk{a.row, b.col};
                insert_two(acc, rest, il.code(), jk.code(), minus_q_minus_qinv());
            }
            return drain(acc);
        }

        const TermList &insert_letter(const Monomial &m, std::uint8_t g)
        {
            const Monomial key = m.appended(g);
            auto &map = t_cache.map;
            auto it = map.find(key);
            if (it != map.end())
                return it->second;
            const std::size_t n = m.size();
            TermList result;
            if (n == 0 || m.code(n - 1) <= g)
                result.emplace_back(key, LaurentScalar(1));
            else
                result = compute_insert(m, g);
            // References into an unordered_map survive rehashing.
            return map.emplace(key, std::move(result)).first->second;
        }

        // acc += c * NF(a * b) for normal a, b.
        void multiply_monomials(Accum &acc, const Monomial &a, const Monomial &b, const LaurentScalar &c)
        {
            const std::size_t nb = b.size();
            const std::size_t na = a.size();
            if (na + nb > Monomial::kMaxDegree)
                throw IndexOutOfRange("product degree exceeds " + std::to_string(Monomial::kMaxDegree));
            if (nb == 0 || na == 0 || a.code(na - 1) <= b.code(0))
            {
                Monomial m = a;
                for (std::size_t i = 0; i < nb; ++i)
                    m = m.appended(b.code(i));
                accumulate(acc, m, c);
                return;
            }
            TermList current{{a, c}};
            for (std::size_t i = 0; i < nb; ++i)
            {
                const std::uint8_t g = b.code(i);
                if (i + 1 == nb)
                {
                    for (const auto &[t, ct] : current)
                        for (const auto &[u, cu] : insert_letter(t, g))
                            accumulate(acc, u, ct * cu);
                    return;
                }
                Accum next;
                for (const auto &[t, ct] : current)
                    for (const auto &[u, cu] : insert_letter(t, g))
                        accumulate(next, u, ct * cu);
                current = drain(next);
            }
        }

        QPolynomial to_qpoly(int N, Accum &acc)
        {
            QPolynomial p(N);
            for (auto &[m, c] : acc)
                p.add_term(m, c);
            return p;
        }

        void check_word(int N, const std::vector<Generator> &word)
        {
            for (const auto &g : word)
            {
                check_index(N, g.row, "row");
                check_index(N, g.col, "column");
            }
        }
    } // namespace

    void clear_normal_form_cache() { t_cache.map.clear(); }
    std::size_t normal_form_cache_size() { return t_cache.map.size(); }

    QPolynomial normal_form(int N, const Monomial &word, const LaurentScalar &coeff)
    {
        for (std::size_t i = 0; i < word.size(); ++i)
        {
            check_index(N, word.letter(i).row, "row");
            check_index(N, word.letter(i).col, "column");
        }
        if (word.is_sorted())
            return QPolynomial::term(N, word, coeff);
        Accum acc;
        // Split at the first descent: the prefix is already normal.
        std::size_t k = 1;
        while (word.code(k - 1) <= word.code(k))
            ++k;
        Monomial prefix, suffix;
        for (std::size_t i = 0; i < k; ++i)
            prefix = prefix.appended(word.code(i));
        for (std::size_t i = k; i < word.size(); ++i)
            suffix = suffix.appended(word.code(i));
        TermList current{{prefix, coeff}};
        for (std::size_t i = 0; i < suffix.size(); ++i)
        {
            Accum next;
            for (const auto &[t, ct] : current)
                for (const auto &[u, cu] : insert_letter(t, suffix.code(i)))
                    accumulate(next, u, ct * cu);
            current = drain(next);
        }
        QPolynomial p(N);
        for (const auto &[m, c] : current)
            p.add_term(m, c);
        return p;
    }

    QPolynomial normal_form(int N, const std::vector<Generator> &word, const LaurentScalar &coeff)
    {
        check_word(N, word);
        return normal_form(N, Monomial::from_word(word), coeff);
    }

    namespace
    {
        void bubble(std::vector<Generator> w, const LaurentScalar &c, std::map<std::vector<Generator>, LaurentScalar> &out)
        {
            if (c.is_zero())
                return;
            std::size_t p = 0;
            while (p + 1 < w.size() && !(w[p + 1] < w[p]))
                ++p;
            if (p + 1 >= w.size())
            {
                out[w] += c;
                return;
            }
            const Generator a = w[p], b = w[p + 1]; // a > b
            std::vector<Generator> swapped = w;
            std::swap(swapped[p], swapped[p + 1]);
            if (a.row == b.row || a.col == b.col)
                bubble(swapped, c * q_inverse(), out);
            else if (a.col < b.col)
                bubble(swapped, c, out);
            else
            {
                bubble(swapped, c, out);
                std::vector<Generator> other = w;
                other[p] = {b.row, a.col};
                other[p + 1] = {a.row, b.col};
                bubble(other, c * minus_q_minus_qinv(), out);
            }
        }
    } // namespace

    QPolynomial normal_form_bubble(int N, const std::vector<Generator> &word, const LaurentScalar &coeff)
    {
        check_word(N, word);
        std::map<std::vector<Generator>, LaurentScalar> out;
        bubble(word, coeff, out);
        QPolynomial p(N);
        for (const auto &[w, c] : out)
            p.add_term(Monomial::from_word(w), c);
        return p;
    }

    QPolynomial multiply_serial(const QPolynomial &a, const QPolynomial &b)
    {
        if (a.ambient() != b.ambient())
            throw AmbientMismatch("multiplying polynomials over N=" + std::to_string(a.ambient()) + " and N=" +
                                  std::to_string(b.ambient()));
        Accum acc;
        for (const auto &[ma, ca] : a.terms())
            for (const auto &[mb, cb] : b.terms())
                multiply_monomials(acc, ma, mb, ca * cb);
        return to_qpoly(a.ambient(), acc);
    }

    QPolynomial multiply(const QPolynomial &a, const QPolynomial &b)
    {
        if (a.ambient() != b.ambient())
            throw AmbientMismatch("multiplying polynomials over N=" + std::to_string(a.ambient()) + " and N=" +
                                  std::to_string(b.ambient()));
        if (a.size() * b.size() < 64 || omp_get_max_threads() == 1 || omp_in_parallel())
            return multiply_serial(a, b);
        std::vector<std::pair<Monomial, LaurentScalar>> lhs(a.terms().begin(), a.terms().end());
        const int nthreads = omp_get_max_threads();
        std::vector<Accum> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
        {
            Accum &acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
            for (std::size_t i = 0; i < lhs.size(); ++i)
                for (const auto &[mb, cb] : b.terms())
                    multiply_monomials(acc, lhs[i].first, mb, lhs[i].second * cb);
        }
        // Exact sums commute, so the merge order cannot change the result.
        QPolynomial p(a.ambient());
        for (auto &acc : partial)
            for (auto &[m, c] : acc)
                p.add_term(m, c);
        return p;
    }

    QPolynomial operator*(const QPolynomial &a, const QPolynomial &b) { return multiply(a, b); }

    QPolynomial product(const std::vector<QPolynomial> &factors, int N)
    {
        QPolynomial r = QPolynomial::one(N);
        for (const auto &f : factors)
            r = multiply(r, f);
        return r;
    }

    QPolynomial power(const QPolynomial &p, int e)
    {
        QPolynomial r = QPolynomial::one(p.ambient());
        for (int i = 0; i < e; ++i)
            r = multiply(r, p);
        return r;
    }

    QPolynomial quantum_minor(int N, const std::vector<int> &I, const std::vector<int> &J)
    {
        if (I.size() != J.size())
            throw SizeMismatch("minor with " + std::to_string(I.size()) + " rows and " + std::to_string(J.size()) +
                               " columns");
        for (std::size_t k = 0; k < I.size(); ++k)
        {
            check_index(N, I[k], "row");
            check_index(N, J[k], "column");
            if (k > 0 && (I[k] <= I[k - 1] || J[k] <= J[k - 1]))
                throw IndexOutOfRange("minor index sets must be strictly increasing");
        }
        QPolynomial p(N);
        const std::size_t r = I.size();
        std::vector<int> sigma(r);
        std::iota(sigma.begin(), sigma.end(), 0);
        do
        {
            std::vector<Generator> word(r);
            for (std::size_t k = 0; k < r; ++k)
                word[k] = {I[k], J[static_cast<std::size_t>(sigma[k])]};
            const int l = inversion_count(sigma);
            p += normal_form(N, word, LaurentScalar::monomial(l % 2 ? -1 : 1, 2 * l));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return p;
    }

    QPolynomial quantum_det(int N)
    {
        std::vector<int> all(N);
        std::iota(all.begin(), all.end(), 1);
        return quantum_minor(N, all, all);
    }

    BiWeight bi_weight(const QPolynomial &p)
    {
        if (p.is_zero())
            return {std::vector<int>(p.ambient(), 0), std::vector<int>(p.ambient(), 0)};
        const BiWeight w = bi_weight(p.terms().begin()->first, p.ambient());
        for (const auto &[m, c] : p.terms())
            if (bi_weight(m, p.ambient()) != w)
                throw Inhomogeneous("terms " + p.terms().begin()->first.to_string() + " and " + m.to_string() +
                                    " have different bi-weights");
        return w;
    }

    std::vector<Monomial> enumerate_monomials(int N, int d)
    {
        std::vector<std::uint8_t> letters;
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                letters.push_back(Generator{i, j}.code());
        std::vector<Monomial> out;
        std::vector<std::uint8_t> cur;
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (static_cast<int>(cur.size()) == d)
            {
                out.push_back(Monomial::from_codes(cur));
                return;
            }
            for (std::size_t k = start; k < letters.size(); ++k)
            {
                cur.push_back(letters[k]);
                rec(k);
                cur.pop_back();
            }
        };
        rec(0);
        return out;
    }

    nlohmann::json to_json(const QPolynomial &p)
    {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &[m, c] : p.terms())
        {
            nlohmann::json word = nlohmann::json::array();
            for (std::size_t i = 0; i < m.size(); ++i)
                word.push_back({m.letter(i).row, m.letter(i).col});
            terms.push_back({{"word", word}, {"coeff", to_json(c)}});
        }
        return {{"N", p.ambient()}, {"terms", terms}};
    }

    QPolynomial qpoly_from_json(const nlohmann::json &j)
    {
        try
        {
            const int N = j.at("N").get<int>();
            QPolynomial p(N);
            for (const auto &t : j.at("terms"))
            {
                std::vector<Generator> word;
                for (const auto &g : t.at("word"))
                    word.push_back({g.at(0).get<int>(), g.at(1).get<int>()});
                p += normal_form(N, word, laurent_from_json(t.at("coeff")));
            }
            return p;
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ParseError(std::string("polynomial JSON: ") + e.what());
        }
    }

} // namespace qz
