#include "qz/symplectic.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <sstream>

namespace qz
{

    namespace
    {
        void require_even(int N)
        {
            if (N <= 0 || N % 2 != 0)
                throw OddAmbient("N=" + std::to_string(N) + " must be positive and even");
        }

        void check_half(int N, int i, const char *what)
        {
            if (i < 1 || i > N / 2)
                throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " outside 1.." +
                                      std::to_string(N / 2));
        }

        LaurentScalar q() { return LaurentScalar::q_power(1); }
        LaurentScalar q_minus_qinv() { return LaurentScalar::q_power(1) - LaurentScalar::q_power(-1); }

        // xi^{a,b}_{c,d} = x_{ac}x_{bd} - q x_{ad}x_{bc}, any a, b.
        QPolynomial minor2(int N, int a, int b, int c, int d)
        {
            const LaurentScalar one(1);
            return normal_form(N, {{a, c}, {b, d}}, one) - normal_form(N, {{a, d}, {b, c}}, q());
        }
    } // namespace

    // ------------------------------------------------------------ sp elements

    UqElement sp_element(SpKind kind, int i, int j, int N)
    {
        require_even(N);
        check_half(N, i, "sp");
        check_half(N, j, "sp");
        const LaurentScalar tw = LaurentScalar::q_power(2 * (i - j));
        switch (kind)
        {
        case SpKind::E:
            if (i == j)
                return composite_E(N, 2 * i - 1, 2 * i);
            return composite_E(N, 2 * i - 1, 2 * j) + tw * composite_E(N, 2 * j - 1, 2 * i);
        case SpKind::F:
            if (i == j)
                return composite_E(N, 2 * i, 2 * i - 1);
            return composite_E(N, 2 * i, 2 * j - 1) + tw * composite_E(N, 2 * j, 2 * i - 1);
        case SpKind::H:
            if (i == j)
                return commutator(UqElement::e(2 * i - 1), UqElement::f(2 * i - 1));
            return composite_E(N, 2 * i - 1, 2 * j - 1) - tw * composite_E(N, 2 * j, 2 * i);
        }
        return {};
    }

    std::vector<UqElement> sp_generating_set(int N)
    {
        require_even(N);
        const int m = N / 2;
        std::vector<UqElement> out;
        for (int j = 1; j <= m; ++j)
        {
            out.push_back(sp_element(SpKind::E, j, j, N));
            out.push_back(sp_element(SpKind::F, j, j, N));
        }
        for (int i = 1; i < m; ++i)
        {
            out.push_back(sp_element(SpKind::E, i, i + 1, N));
            out.push_back(sp_element(SpKind::F, i, i + 1, N));
        }
        return out;
    }

    std::vector<UqElement> sp_full_set(int N)
    {
        require_even(N);
        std::vector<UqElement> out;
        for (int i = 1; i <= N / 2; ++i)
            for (int j = 1; j <= N / 2; ++j)
            {
                out.push_back(sp_element(SpKind::E, i, j, N));
                out.push_back(sp_element(SpKind::F, i, j, N));
            }
        return out;
    }

    // ------------------------------------------------------------ z generators

    QPolynomial z_generator(Side side, int i, int j, int N)
    {
        require_even(N);
        check_index(N, i, "z");
        check_index(N, j, "z");
        QPolynomial z(N);
        for (int k = 1; k <= N / 2; ++k)
        {
            // q^{(i+j+1-4k)/2} is v^{i+j+1-4k}
            const int e = i + j + 1 - 4 * k;
            if (side == Side::Left)
                z += LaurentScalar::v_power(e) * minor2(N, i, j, 2 * k - 1, 2 * k);
            else
            {
                // xi^{2k-1,2k}_{i,j}: rows fixed, columns i, j
                const QPolynomial x = normal_form(N, {{2 * k - 1, i}, {2 * k, j}}) -
                                      normal_form(N, {{2 * k, i}, {2 * k - 1, j}}, q());
                z += LaurentScalar::v_power(-e) * x;
            }
        }
        return z;
    }

    std::vector<RelationCheck> verify_AS_relations(Side side, int N)
    {
        require_even(N);
        std::vector<std::vector<QPolynomial>> z(static_cast<std::size_t>(N + 1));
        for (int i = 1; i <= N; ++i)
        {
            z[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(N + 1), QPolynomial(N));
            for (int j = 1; j <= N; ++j)
                z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = z_generator(side, i, j, N);
        }
        auto Z = [&](int i, int j) -> const QPolynomial & {
            return z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        };

        // Residuals are built as closures so that the instance list is fixed
        // first and then evaluated in parallel.
        struct Item
        {
            std::string relation;
            std::vector<int> idx;
            std::function<QPolynomial()> residual;
        };
        std::vector<Item> items;
        const LaurentScalar qq = q(), d = q_minus_qinv(), qinv = LaurentScalar::q_power(-1);
        for (int i = 1; i <= N; ++i)
            items.push_back({"AS9", {i, i}, [&, i] { return Z(i, i); }});
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                items.push_back({"AS1", {i, j}, [&, i, j] { return Z(i, j) + qinv * Z(j, i); }});
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                for (int k = j + 1; k <= N; ++k)
                    items.push_back({"AS3", {i, j, k}, [&, i, j, k] {
                                         return Z(i, j) * Z(i, k) - qq * (Z(i, k) * Z(i, j));
                                     }});
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                for (int k = j + 1; k <= N; ++k)
                    for (int l = k + 1; l <= N; ++l)
                    {
                        const std::vector<int> idx{i, j, k, l};
                        items.push_back({"AS2", idx, [&, i, j, k, l] {
                                             return Z(i, l) * Z(j, k) - Z(j, k) * Z(i, l);
                                         }});
                        items.push_back({"AS6", idx, [&, i, j, k, l] {
                                             return Z(i, k) * Z(j, l) - Z(j, l) * Z(i, k) - d * (Z(i, l) * Z(j, k));
                                         }});
                        items.push_back({"AS7", idx, [&, i, j, k, l] {
                                             return Z(i, j) * Z(k, l) - Z(k, l) * Z(i, j) - d * (Z(i, k) * Z(j, l)) +
                                                    (qq * d) * (Z(i, l) * Z(j, k));
                                         }});
                        items.push_back({"AS8", idx, [&, i, j, k, l] {
                                             return Z(i, j) * Z(k, l) - Z(k, l) * Z(i, j) - qq * (Z(j, l) * Z(i, k)) +
                                                    qinv * (Z(i, k) * Z(j, l));
                                         }});
                    }

        std::vector<RelationCheck> out(items.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t n = 0; n < items.size(); ++n)
        {
            const QPolynomial r = items[n].residual();
            out[n] = {items[n].relation, items[n].idx, r.is_zero(), r.size()};
        }
        return out;
    }

    nlohmann::json to_json(const std::vector<RelationCheck> &report)
    {
        nlohmann::json a = nlohmann::json::array();
        for (const auto &c : report)
            a.push_back({{"relation", c.relation},
                         {"indices", c.indices},
                         {"pass", c.pass},
                         {"residual_terms", c.residual_terms}});
        return a;
    }

    // ------------------------------------------------------------ Pfaffians

    std::vector<Matching> all_matchings(const std::vector<int> &elems)
    {
        if (elems.size() % 2 != 0)
            throw OddSubset("cannot match " + std::to_string(elems.size()) + " elements");
        std::vector<Matching> out;
        Matching cur;
        std::function<void(std::vector<int>)> rec = [&](std::vector<int> rest) {
            if (rest.empty())
            {
                out.push_back(cur);
                return;
            }
            const int a = rest.front();
            for (std::size_t k = 1; k < rest.size(); ++k)
            {
                std::vector<int> next;
                for (std::size_t t = 1; t < rest.size(); ++t)
                    if (t != k)
                        next.push_back(rest[t]);
                cur.pairs.emplace_back(a, rest[k]);
                rec(std::move(next));
                cur.pairs.pop_back();
            }
        };
        std::vector<int> s = elems;
        std::sort(s.begin(), s.end());
        rec(s);
        return out;
    }

    int matching_length(const Matching &m)
    {
        std::vector<int> w;
        for (const auto &[a, b] : m.pairs)
        {
            w.push_back(a);
            w.push_back(b);
        }
        return inversion_count(w);
    }

    namespace
    {
        std::vector<int> iota_set(int r)
        {
            std::vector<int> s;
            for (int i = 1; i <= r; ++i)
                s.push_back(i);
            return s;
        }

        QPolynomial matching_term(const Matching &m, int N)
        {
            const int l = matching_length(m);
            QPolynomial t = QPolynomial::one(N);
            for (const auto &[a, b] : m.pairs)
                t = multiply_serial(t, z_generator(Side::Left, a, b, N));
            // (-q)^l
            return LaurentScalar::monomial(l % 2 ? -1 : 1, 2 * l) * t;
        }

        QPolynomial pfaffian_over(int r, int N, bool parallel)
        {
            require_even(N);
            if (r % 2 != 0 || r < 0)
                throw OddSubset("r=" + std::to_string(r) + " must be even");
            if (r > N)
                throw IndexOutOfRange("r=" + std::to_string(r) + " exceeds N=" + std::to_string(N));
            const std::vector<Matching> ms = all_matchings(iota_set(r));
            if (!parallel)
            {
                QPolynomial p(N);
                for (const auto &m : ms)
                    p += matching_term(m, N);
                return p;
            }
            std::vector<QPolynomial> partial(static_cast<std::size_t>(omp_get_max_threads()), QPolynomial(N));
#pragma omp parallel
            {
                QPolynomial &acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 1)
                for (std::size_t n = 0; n < ms.size(); ++n)
                    acc += matching_term(ms[n], N);
            }
            QPolynomial p(N);
            for (const auto &a : partial)
                p += a;
            return p;
        }
    } // namespace

    QPolynomial quantum_pfaffian(int N) { return pfaffian_over(N, N, true); }
    QPolynomial quantum_pfaffian_serial(int N) { return pfaffian_over(N, N, false); }
    QPolynomial partial_pfaffian(int r, int N) { return pfaffian_over(r, N, true); }

    // ------------------------------------------------------------ invariants

    bool invariance_kernel_check(const QPolynomial &p, Side side, bool full_set)
    {
        const int N = p.ambient();
        require_even(N);
        for (const auto &g : full_set ? sp_full_set(N) : sp_generating_set(N))
            if (!act(side, g, p).is_zero())
                return false;
        return true;
    }

    std::vector<int> phi(const std::vector<int> &J)
    {
        std::vector<int> out;
        for (int a : J)
        {
            out.push_back(2 * a - 1);
            out.push_back(2 * a);
        }
        return out;
    }

    std::vector<std::vector<int>> subsets(int n, int r)
    {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(cur.size()) == r)
            {
                out.push_back(cur);
                return;
            }
            for (int a = from; a <= n; ++a)
            {
                cur.push_back(a);
                rec(a + 1);
                cur.pop_back();
            }
        };
        if (r >= 0 && r <= n)
            rec(1);
        return out;
    }

    namespace
    {
        int sum_of(const std::vector<int> &s)
        {
            int t = 0;
            for (int a : s)
                t += a;
            return t;
        }
    } // namespace

    QPolynomial a_R(int r, int N)
    {
        require_even(N);
        check_half(N, r, "a_R");
        const std::vector<int> rows = iota_set(2 * r);
        QPolynomial a(N);
        for (const auto &J : subsets(N / 2, r))
            a += LaurentScalar::q_power(-2 * sum_of(J)) * quantum_minor(N, rows, phi(J));
        return a;
    }

    QPolynomial a_R_lambda(const std::vector<int> &mu, int N)
    {
        require_even(N);
        if (static_cast<int>(mu.size()) > N / 2)
            throw IndexOutOfRange("partition longer than N/2");
        for (std::size_t k = 0; k < mu.size(); ++k)
            if (mu[k] < 0 || (k > 0 && mu[k] > mu[k - 1]))
                throw IndexOutOfRange("mu must be a weakly decreasing nonnegative vector");
        QPolynomial p = QPolynomial::one(N);
        for (std::size_t r = 1; r <= mu.size(); ++r)
        {
            const int mult = mu[r - 1] - (r < mu.size() ? mu[r] : 0);
            if (mult > 0)
                p = p * power(a_R(static_cast<int>(r), N), mult);
        }
        return p;
    }

    QPolynomial E_r(int r, int N)
    {
        require_even(N);
        check_half(N, r, "E_r");
        const auto S = subsets(N / 2, r);
        QPolynomial e(N);
        for (const auto &I : S)
            for (const auto &J : S)
                e += LaurentScalar::q_power(2 * (sum_of(I) - sum_of(J))) * quantum_minor(N, phi(I), phi(J));
        return e;
    }

    // ------------------------------------------------------------ restrictions

    void TorusPolynomial::add(const std::vector<int> &e, const LaurentScalar &c)
    {
        if (c.is_zero())
            return;
        auto it = terms.find(e);
        if (it == terms.end())
            terms.emplace(e, c);
        else if ((it->second += c).is_zero())
            terms.erase(it);
    }

    std::string TorusPolynomial::to_string(const char *var) const
    {
        if (terms.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        // highest exponent vectors first
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        {
            if (!first)
                os << " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < it->first.size(); ++i)
            {
                const int e = it->first[i];
                if (e == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += var + std::to_string(i + 1);
                if (e != 1)
                    mono += "^" + std::to_string(e);
            }
            if (it->second.is_one() && !mono.empty())
                os << mono;
            else if (mono.empty())
                os << "(" << it->second.to_string() << ")";
            else
                os << "(" << it->second.to_string() << ")*" << mono;
        }
        return os.str();
    }

    TorusPolynomial restrict_H(const QPolynomial &p)
    {
        TorusPolynomial t;
        t.N = p.ambient();
        for (const auto &[m, c] : p.terms())
        {
            std::vector<int> e(static_cast<std::size_t>(t.N), 0);
            bool diagonal = true;
            for (std::size_t k = 0; k < m.size() && diagonal; ++k)
            {
                const Generator g = m.letter(k);
                diagonal = g.row == g.col;
                if (diagonal)
                    ++e[static_cast<std::size_t>(g.row - 1)];
            }
            if (diagonal)
                t.add(e, c);
        }
        return t;
    }

    QPolynomial restrict_Borel(const QPolynomial &p, BorelSign sign)
    {
        QPolynomial out(p.ambient());
        for (const auto &[m, c] : p.terms())
        {
            bool keep = true;
            for (std::size_t k = 0; k < m.size() && keep; ++k)
            {
                const Generator g = m.letter(k);
                keep = sign == BorelSign::Plus ? g.row <= g.col : g.row >= g.col;
            }
            if (keep)
                out.add_term(m, c);
        }
        return out;
    }

    bool relative_invariant_check(const QPolynomial &p, const WeightVector &lambda, Coset coset)
    {
        const int N = p.ambient();
        if (lambda.size() != N)
            throw SizeMismatch("weight of length " + std::to_string(lambda.size()) + " for N=" + std::to_string(N));
        if (p.is_zero())
            return true;
        // only the weight on the acted side has to be homogeneous
        for (const auto &[m, c] : p.terms())
        {
            const BiWeight w = bi_weight(m, N);
            const std::vector<int> &have = coset == Coset::G_mod_Bplus ? w.cols : w.rows;
            for (int k = 0; k < N; ++k)
                if (2 * have[static_cast<std::size_t>(k)] != lambda.doubled[static_cast<std::size_t>(k)])
                    return false;
        }
        for (int k = 1; k < N; ++k)
        {
            const QPolynomial r = coset == Coset::G_mod_Bplus ? act(Side::Left, UqElement::e(k), p)
                                                              : act(Side::Right, UqElement::f(k), p);
            if (!r.is_zero())
                return false;
        }
        return true;
    }

} // namespace qz
