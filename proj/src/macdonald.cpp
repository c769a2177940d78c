#include "qz/macdonald.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>

#include "qz/errors.hpp"

namespace qz
{

    Partition normalize_partition(Partition p)
    {
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] < 0 || (i > 0 && p[i] > p[i - 1]))
                throw IndexOutOfRange("not a partition: " + partition_to_string(p));
        while (!p.empty() && p.back() == 0)
            p.pop_back();
        return p;
    }

    Partition parse_partition(const std::string &text)
    {
        Partition p;
        std::string cur;
        auto flush = [&] {
            if (cur.empty())
                return;
            try
            {
                p.push_back(std::stoi(cur));
            }
            catch (const std::exception &)
            {
                throw ParseError("bad partition part '" + cur + "'");
            }
            cur.clear();
        };
        for (char c : text)
        {
            if (c == ',' || c == ' ')
                flush();
            else if (c == '(' || c == ')' || c == '[' || c == ']')
                continue;
            else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-')
                cur += c;
            else
                throw ParseError("bad partition '" + text + "'");
        }
        flush();
        try
        {
            return normalize_partition(p);
        }
        catch (const IndexOutOfRange &)
        {
            throw ParseError("not a partition: '" + text + "'");
        }
    }

    std::string partition_to_string(const Partition &p)
    {
        std::string s = "(";
        for (std::size_t i = 0; i < p.size(); ++i)
            s += (i ? "," : "") + std::to_string(p[i]);
        return s + ")";
    }

    int partition_size(const Partition &p) { return std::accumulate(p.begin(), p.end(), 0); }

    bool dominates(const Partition &a, const Partition &b)
    {
        if (partition_size(a) != partition_size(b))
            return false;
        int sa = 0, sb = 0;
        for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
        {
            sa += i < a.size() ? a[i] : 0;
            sb += i < b.size() ? b[i] : 0;
            if (sa < sb)
                return false;
        }
        return true;
    }

    std::vector<Partition> partitions(int d, int n)
    {
        std::vector<Partition> out;
        Partition cur;
        auto rec = [&](auto &self, int left, int maxpart) -> void {
            if (left == 0)
            {
                out.push_back(cur);
                return;
            }
            if (static_cast<int>(cur.size()) == n)
                return;
            for (int p = std::min(left, maxpart); p >= 1; --p)
            {
                cur.push_back(p);
                self(self, left - p, p);
                cur.pop_back();
            }
        };
        rec(rec, d, d);
        return out;
    }

    // ---------------------------------------------------------------- polys

    void SymPolynomial::add(const Exponent &e, const QTRational &c)
    {
        if (c.is_zero())
            return;
        auto [it, fresh] = terms.emplace(e, c);
        if (!fresh)
        {
            it->second += c;
            if (it->second.is_zero())
                terms.erase(it);
        }
    }

    QTRational SymPolynomial::coeff(const Exponent &e) const
    {
        const auto it = terms.find(e);
        return it == terms.end() ? QTRational() : it->second;
    }

    bool SymPolynomial::check_symmetric() const
    {
        for (const auto &[e, c] : terms)
        {
            Exponent s = e;
            std::sort(s.begin(), s.end());
            do
                if (coeff(s) != c)
                    return false;
            while (std::next_permutation(s.begin(), s.end()));
        }
        return true;
    }

    MBasis SymPolynomial::to_m_basis() const
    {
        if (!check_symmetric())
            throw NonzeroRemainder("polynomial is not symmetric");
        MBasis m;
        for (const auto &[e, c] : terms)
            if (std::is_sorted(e.begin(), e.end(), std::greater<>()))
                m.emplace(normalize_partition(e), c);
        return m;
    }

    SymPolynomial SymPolynomial::from_m_basis(int n, const MBasis &m)
    {
        SymPolynomial f(n);
        for (const auto &[lam, c] : m)
        {
            const SymPolynomial ml = monomial_symmetric(lam, n);
            for (const auto &[e, one] : ml.terms)
                f.add(e, c * one);
        }
        f.symmetric = true;
        return f;
    }

    SymPolynomial operator+(const SymPolynomial &a, const SymPolynomial &b)
    {
        SymPolynomial r = a;
        for (const auto &[e, c] : b.terms)
            r.add(e, c);
        r.symmetric = a.symmetric && b.symmetric;
        return r;
    }

    SymPolynomial operator-(const SymPolynomial &a, const SymPolynomial &b)
    {
        SymPolynomial r = a;
        for (const auto &[e, c] : b.terms)
            r.add(e, -c);
        r.symmetric = a.symmetric && b.symmetric;
        return r;
    }

    SymPolynomial operator*(const SymPolynomial &a, const SymPolynomial &b)
    {
        if (a.n != b.n)
            throw AmbientMismatch("SymPolynomial in " + std::to_string(a.n) + " and " + std::to_string(b.n) +
                                  " variables");
        SymPolynomial r(a.n);
        Exponent e(static_cast<std::size_t>(a.n));
        for (const auto &[ea, ca] : a.terms)
            for (const auto &[eb, cb] : b.terms)
            {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                r.add(e, ca * cb);
            }
        r.symmetric = a.symmetric && b.symmetric;
        return r;
    }

    SymPolynomial operator*(const QTRational &c, const SymPolynomial &a)
    {
        SymPolynomial r(a.n);
        r.symmetric = a.symmetric;
        if (c.is_zero())
            return r;
        for (const auto &[e, x] : a.terms)
            r.terms.emplace(e, c * x);
        return r;
    }

    std::string SymPolynomial::to_string() const
    {
        if (terms.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        {
            if (!first)
                os << " + ";
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < it->first.size(); ++i)
            {
                const int k = it->first[i];
                if (k == 0)
                    continue;
                mono += (mono.empty() ? "" : "*") + ("x" + std::to_string(i + 1));
                if (k > 1)
                    mono += "^" + std::to_string(k);
            }
            const bool unit = it->second == QTRational(1);
            if (!unit || mono.empty())
                os << "(" << it->second.to_string() << ")" << (mono.empty() ? "" : "*");
            os << mono;
        }
        return os.str();
    }

    SymPolynomial monomial_symmetric(const Partition &lambda, int n)
    {
        const Partition lam = normalize_partition(lambda);
        if (static_cast<int>(lam.size()) > n)
            throw IndexOutOfRange("partition " + partition_to_string(lam) + " longer than n=" + std::to_string(n));
        Exponent e(static_cast<std::size_t>(n), 0);
        std::copy(lam.begin(), lam.end(), e.begin());
        std::sort(e.begin(), e.end());
        SymPolynomial f(n);
        do
            f.terms.emplace(e, QTRational(1));
        while (std::next_permutation(e.begin(), e.end()));
        f.symmetric = true;
        return f;
    }

    SymPolynomial variable(int i, int n)
    {
        if (i < 1 || i > n)
            throw IndexOutOfRange("x_" + std::to_string(i) + " with n=" + std::to_string(n));
        SymPolynomial f(n);
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        f.add(e, 1);
        return f;
    }

    SymPolynomial shift(const SymPolynomial &f, int i, const QTRational &u)
    {
        if (i < 1 || i > f.n)
            throw IndexOutOfRange("T_{u,x_" + std::to_string(i) + "} with n=" + std::to_string(f.n));
        SymPolynomial r(f.n);
        for (const auto &[e, c] : f.terms)
            r.add(e, c * u.pow(e[static_cast<std::size_t>(i - 1)]));
        return r;
    }

    namespace
    {
        SymPolynomial constant(int n, const QTRational &c)
        {
            SymPolynomial f(n);
            f.add(Exponent(static_cast<std::size_t>(n), 0), c);
            return f;
        }

        int permutation_sign(const std::vector<int> &w) { return permutation_length(w) % 2 == 0 ? 1 : -1; }

        // prod_{a<b} (x_{vars[a]} - x_{vars[b]})
        SymPolynomial vandermonde_on(const std::vector<int> &vars, int n)
        {
            SymPolynomial r = constant(n, 1);
            for (std::size_t a = 0; a < vars.size(); ++a)
                for (std::size_t b = a + 1; b < vars.size(); ++b)
                    r = r * (variable(vars[a], n) - variable(vars[b], n));
            return r;
        }

        void require_symmetric_input(const SymPolynomial &f)
        {
            if (!f.symmetric && !f.check_symmetric())
                throw NonzeroRemainder("Macdonald operator applied to a non-symmetric polynomial");
        }
    } // namespace

    SymPolynomial vandermonde(int n)
    {
        std::vector<int> vars(static_cast<std::size_t>(n));
        std::iota(vars.begin(), vars.end(), 1);
        return vandermonde_on(vars, n);
    }

    SymPolynomial divide_exact(const SymPolynomial &f, const SymPolynomial &g)
    {
        if (g.is_zero())
            throw DivisionByZero("division by the zero polynomial");
        const auto &[lg, cg] = *g.terms.rbegin();
        SymPolynomial rem = f;
        SymPolynomial quot(f.n);
        Exponent e(static_cast<std::size_t>(f.n));
        while (!rem.is_zero())
        {
            const auto [lr, cr] = *rem.terms.rbegin();
            for (std::size_t i = 0; i < e.size(); ++i)
            {
                e[i] = lr[i] - lg[i];
                if (e[i] < 0)
                    throw NonzeroRemainder("leading term not divisible");
            }
            const QTRational c = cr / cg;
            quot.add(e, c);
            Exponent s(e.size());
            for (const auto &[eg, x] : g.terms)
            {
                for (std::size_t i = 0; i < s.size(); ++i)
                    s[i] = e[i] + eg[i];
                rem.add(s, -(c * x));
            }
        }
        return quot;
    }

    SymPolynomial macdonald_D1(const SymPolynomial &f)
    {
        require_symmetric_input(f);
        const int n = f.n;
        const QTRational q = QTRational::q(), t = QTRational::t();
        SymPolynomial num(n);
        for (int i = 1; i <= n; ++i)
        {
            std::vector<int> rest;
            SymPolynomial a = constant(n, (i - 1) % 2 == 0 ? 1 : -1);
            for (int j = 1; j <= n; ++j)
                if (j != i)
                {
                    rest.push_back(j);
                    a = a * (t * variable(i, n) - variable(j, n));
                }
            num = num + a * vandermonde_on(rest, n) * shift(f, i, q);
        }
        SymPolynomial r = divide_exact(num, vandermonde(n));
        r.symmetric = true;
        return r;
    }

    SymPolynomial macdonald_Dr(const SymPolynomial &f, int r)
    {
        require_symmetric_input(f);
        const int n = f.n;
        if (r < 0 || r > n)
            throw IndexOutOfRange("D_" + std::to_string(r) + " with n=" + std::to_string(n));
        const QTRational q = QTRational::q();
        // T_S f for every r-subset S, as bitmasks
        std::map<unsigned, SymPolynomial> shifted;
        for (unsigned mask = 0; mask < (1u << n); ++mask)
        {
            if (std::popcount(mask) != r)
                continue;
            SymPolynomial g = f;
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1u)
                    g = shift(g, i + 1, q);
            shifted.emplace(mask, std::move(g));
        }
        SymPolynomial num(n);
        for (const auto &w : all_permutations(n))
        {
            // (w delta)_i = n - w_i
            Exponent wd(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                wd[static_cast<std::size_t>(i)] = n - w[static_cast<std::size_t>(i)];
            SymPolynomial inner(n);
            for (const auto &[mask, g] : shifted)
            {
                int tp = 0;
                for (int i = 0; i < n; ++i)
                    if (mask >> i & 1u)
                        tp += wd[static_cast<std::size_t>(i)];
                inner = inner + QTRational::monomial(1, 0, tp) * g;
            }
            SymPolynomial xw(n);
            xw.add(wd, permutation_sign(w));
            num = num + xw * inner;
        }
        SymPolynomial res = divide_exact(num, vandermonde(n));
        res.symmetric = true;
        return res;
    }

    std::map<Partition, MBasis> d1_matrix_serial(int d, int n)
    {
        std::map<Partition, MBasis> m;
        for (const auto &mu : partitions(d, n))
            m.emplace(mu, macdonald_D1(monomial_symmetric(mu, n)).to_m_basis());
        return m;
    }

    std::map<Partition, MBasis> d1_matrix(int d, int n)
    {
        const auto parts = partitions(d, n);
        std::vector<MBasis> cols(parts.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t k = 0; k < parts.size(); ++k)
            cols[k] = macdonald_D1(monomial_symmetric(parts[k], n)).to_m_basis();
        std::map<Partition, MBasis> m;
        for (std::size_t k = 0; k < parts.size(); ++k)
            m.emplace(parts[k], std::move(cols[k]));
        return m;
    }

    namespace
    {
        std::vector<QTRational> eigen_multiset(const Partition &lambda, int n)
        {
            const Partition lam = normalize_partition(lambda);
            if (static_cast<int>(lam.size()) > n)
                throw IndexOutOfRange("partition " + partition_to_string(lam) + " longer than n=" + std::to_string(n));
            std::vector<QTRational> xs;
            for (int i = 1; i <= n; ++i)
            {
                const int li = i <= static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(i - 1)] : 0;
                xs.push_back(QTRational::monomial(1, li, n - i));
            }
            return xs;
        }
    } // namespace

    QTRational macdonald_eigenvalue(const Partition &lambda, int n) { return macdonald_Dr_eigenvalue(lambda, n, 1); }

    QTRational macdonald_Dr_eigenvalue(const Partition &lambda, int n, int r)
    {
        const auto xs = eigen_multiset(lambda, n);
        // e_r by the usual recurrence
        std::vector<QTRational> e(static_cast<std::size_t>(n + 1));
        e[0] = 1;
        for (const auto &x : xs)
            for (std::size_t k = e.size() - 1; k >= 1; --k)
                e[k] += x * e[k - 1];
        if (r < 0 || r > n)
            throw IndexOutOfRange("e_" + std::to_string(r) + " with n=" + std::to_string(n));
        return e[static_cast<std::size_t>(r)];
    }

    MBasis macdonald_P_mbasis(const Partition &lambda, int n)
    {
        const Partition lam = normalize_partition(lambda);
        if (static_cast<int>(lam.size()) > n)
            throw IndexOutOfRange("partition " + partition_to_string(lam) + " longer than n=" + std::to_string(n));
        const int d = partition_size(lam);
        std::vector<Partition> below; // reverse lex, lam first
        for (const auto &mu : partitions(d, n))
            if (dominates(lam, mu))
                below.push_back(mu);
        std::vector<MBasis> cols(below.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t k = 0; k < below.size(); ++k)
            cols[k] = macdonald_D1(monomial_symmetric(below[k], n)).to_m_basis();

        const QTRational ev = macdonald_eigenvalue(lam, n);
        MBasis u;
        u.emplace(lam, QTRational(1));
        for (std::size_t a = 1; a < below.size(); ++a)
        {
            const Partition &nu = below[a];
            QTRational rhs;
            for (std::size_t b = 0; b < a; ++b)
            {
                const auto it = cols[b].find(nu);
                const auto ub = u.find(below[b]);
                if (it != cols[b].end() && ub != u.end())
                    rhs -= ub->second * it->second;
            }
            const auto dg = cols[a].find(nu);
            const QTRational diag = (dg == cols[a].end() ? QTRational() : dg->second) - ev;
            if (diag.is_zero())
                throw EigenvalueCollision("eigenvalues of " + partition_to_string(lam) + " and " +
                                          partition_to_string(nu) + " coincide");
            const QTRational c = rhs / diag;
            if (!c.is_zero())
                u.emplace(nu, c);
        }
        return u;
    }

    SymPolynomial macdonald_P(const Partition &lambda, int n)
    {
        return SymPolynomial::from_m_basis(n, macdonald_P_mbasis(lambda, n));
    }

    SymPolynomial specialize(const SymPolynomial &f, const QTRational &q_star, const QTRational &t_star)
    {
        SymPolynomial r(f.n);
        for (const auto &[e, c] : f.terms)
            r.add(e, c.substitute(q_star, t_star));
        r.symmetric = f.symmetric;
        return r;
    }

    nlohmann::json to_json(const SymPolynomial &f)
    {
        nlohmann::json coeffs = nlohmann::json::array();
        const MBasis m = f.to_m_basis();
        // dominance-compatible order: largest partition first
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            coeffs.push_back({{"lambda", it->first},
                              {"value",
                               {{"num", qt_poly_to_string(it->second.num())},
                                {"den", qt_poly_to_string(it->second.den())}}}});
        return {{"n", f.n}, {"basis", "monomial-symmetric"}, {"coeffs", coeffs}};
    }

    SymPolynomial sym_polynomial_from_json(const nlohmann::json &j)
    {
        try
        {
            if (j.at("basis").get<std::string>() != "monomial-symmetric")
                throw ParseError("unsupported basis " + j.at("basis").dump());
            const int n = j.at("n").get<int>();
            MBasis m;
            for (const auto &c : j.at("coeffs"))
            {
                const Partition lam = normalize_partition(c.at("lambda").get<Partition>());
                const auto &v = c.at("value");
                const QTRational num = parse_qt(v.at("num").get<std::string>());
                const QTRational den = parse_qt(v.at("den").get<std::string>());
                m[lam] += num / den;
            }
            return SymPolynomial::from_m_basis(n, m);
        }
        catch (const nlohmann::json::exception &e)
        {
            throw ParseError(std::string("SymPolynomial JSON: ") + e.what());
        }
    }

    // ------------------------------------------------------- central scalars

    LaurentScalar ck_scalar(int k, const Partition &lambda, int n)
    {
        if (k < 1 || k > n - 1)
            throw IndexOutOfRange("c_" + std::to_string(k) + " needs 1 <= k <= n-1, n=" + std::to_string(n));
        if (static_cast<int>(lambda.size()) > n)
            throw IndexOutOfRange("weight longer than n");
        std::vector<int> lam(static_cast<std::size_t>(n), 0);
        std::copy(lambda.begin(), lambda.end(), lam.begin());
        LaurentScalar sum;
        for (const auto &S : subsets(n, k))
        {
            int e = 0;
            for (int i : S)
                e += -2 * lam[static_cast<std::size_t>(i - 1)] + 2 * (i - n);
            sum += LaurentScalar::q_power(e);
        }
        const int size = std::accumulate(lam.begin(), lam.end(), 0);
        return LaurentScalar::q_power(2 * size + n * (n - 1) / 2 + k * (n - 1)) * q_factorial(k) *
               q_factorial(n - k) * sum;
    }

    LaurentScalar c1_doubled_display(const Partition &lambda, int n_half)
    {
        const int n = n_half;
        if (static_cast<int>(lambda.size()) > n)
            throw IndexOutOfRange("weight longer than n'");
        LaurentScalar sum;
        for (int i = 1; i <= n; ++i)
        {
            const int li = i <= static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(i - 1)] : 0;
            sum += LaurentScalar::q_power(-2 * li + 4 * (i - n));
        }
        const int two_n = 2 * n;
        const LaurentScalar two = q_int(2);
        return LaurentScalar::q_power(4 * partition_size(lambda) + two_n * (two_n - 1) / 2 + 2 * (two_n - 1) - 1) *
               two * two * q_factorial(two_n - 2) * sum;
    }

    Partition doubled(const Partition &lambda, int n_half)
    {
        Partition d(static_cast<std::size_t>(2 * n_half), 0);
        for (std::size_t i = 0; i < lambda.size() && i < static_cast<std::size_t>(n_half); ++i)
            d[2 * i] = d[2 * i + 1] = lambda[i];
        return d;
    }

    RationalScalar ck_eigenvalue_ratio(int kc, int ke, const Partition &lambda, int n_half)
    {
        // e_ke(Q^{l_i} T^{n'-i}) at Q = q^-2, T = q^-4, i.e. q -> v^-4, t -> v^-8
        const RationalScalar e = macdonald_Dr_eigenvalue(lambda, n_half, ke).to_v(-4, -8);
        const RationalScalar c = ck_scalar(kc, doubled(lambda, n_half), 2 * n_half);
        return c / (RationalScalar(LaurentScalar::q_power(4 * partition_size(lambda))) * e);
    }

    // ------------------------------------------------------- permutations

    int permutation_length(const std::vector<int> &w)
    {
        int inv = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j < w.size(); ++j)
                inv += w[i] > w[j];
        return inv;
    }

    std::vector<std::vector<int>> all_permutations(int n)
    {
        std::vector<int> w(static_cast<std::size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        std::vector<std::vector<int>> out;
        do
            out.push_back(w);
        while (std::next_permutation(w.begin(), w.end()));
        return out;
    }

    CosetCheck check_coset_lengths(int n, int k)
    {
        if (k < 0 || k > n)
            throw IndexOutOfRange("Young subgroup S_k x S_{n-k} with k=" + std::to_string(k));
        CosetCheck res{n, k, 0, 0};
        const auto ku = static_cast<std::size_t>(k);
        for (const auto &w : all_permutations(n))
        {
            // tau: w with each block sorted; sigma_b: relative order inside block b
            std::vector<int> tau = w;
            std::sort(tau.begin(), tau.begin() + k);
            std::sort(tau.begin() + k, tau.end());
            std::vector<int> s1(ku), s2(w.size() - ku);
            for (std::size_t i = 0; i < ku; ++i)
                s1[i] = static_cast<int>(std::find(tau.begin(), tau.begin() + k, w[i]) - tau.begin()) + 1;
            for (std::size_t i = ku; i < w.size(); ++i)
                s2[i - ku] = static_cast<int>(std::find(tau.begin() + k, tau.end(), w[i]) - (tau.begin() + k)) + 1;
            // recompose: w(i) = tau(sigma(i)), sigma = sigma_1 x sigma_2
            bool ok = true;
            for (std::size_t i = 0; i < w.size(); ++i)
            {
                const int si = i < ku ? s1[i] : s2[i - ku] + k;
                ok = ok && tau[static_cast<std::size_t>(si - 1)] == w[i];
            }
            int ltau = 0;
            for (std::size_t i = 0; i < ku; ++i)
                ltau += tau[i] - static_cast<int>(i + 1);
            ok = ok && permutation_length(tau) == ltau &&
                 permutation_length(w) == ltau + permutation_length(s1) + permutation_length(s2);
            ++res.checked;
            if (!ok)
                ++res.failures;
        }
        return res;
    }

    bool check_length_generating_function(int n)
    {
        LaurentScalar lhs;
        for (const auto &w : all_permutations(n))
            lhs += LaurentScalar::q_power(2 * permutation_length(w));
        return lhs == LaurentScalar::q_power(n * (n - 1) / 2) * q_factorial(n);
    }

    // ------------------------------------------------------- zonal comparison

    std::vector<Convention> standard_conventions()
    {
        return {{"(q^2,q^4)", 4, 8}, {"(q^2,q^-4)", 4, -8}, {"(q^-2,q^-4)", -4, -8}};
    }

    std::vector<std::string> ZonalComparison::matched() const
    {
        std::vector<std::string> out;
        for (const auto &r : results)
            if (r.matches)
                out.push_back(r.convention.label);
        return out;
    }

    ZonalComparison compare_zonal(const Partition &mu_in, int N, const std::vector<Convention> &conventions)
    {
        const Partition mu = normalize_partition(mu_in);
        ZonalComparison cmp;
        cmp.mu = mu;
        cmp.N = N;
        cmp.zonal = zonal_vector(mu, N);
        const int n = N / 2;
        for (const auto &[e, c] : cmp.zonal.restricted)
            cmp.laurent_coefficients = cmp.laurent_coefficients && c.is_laurent();
        const MBasis P = macdonald_P_mbasis(mu, n);
        std::vector<int> key(static_cast<std::size_t>(n), 0);
        std::copy(mu.begin(), mu.end(), key.begin());

        cmp.results.resize(conventions.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t k = 0; k < conventions.size(); ++k)
        {
            ConventionResult &res = cmp.results[k];
            res.convention = conventions[k];
            std::map<std::vector<int>, RationalScalar> expect;
            try
            {
                for (const auto &[lam, c] : P)
                {
                    const RationalScalar cv = c.to_v(res.convention.q_exp_v, res.convention.t_exp_v);
                    std::vector<int> e(static_cast<std::size_t>(n), 0);
                    std::copy(lam.begin(), lam.end(), e.begin());
                    std::sort(e.begin(), e.end());
                    do
                        expect.emplace(e, cv);
                    while (std::next_permutation(e.begin(), e.end()));
                }
            }
            catch (const SubstitutionSingular &err)
            {
                res.note = err.what();
                res.mismatched_terms = cmp.zonal.restricted.size();
                continue;
            }
            const auto zk = cmp.zonal.restricted.find(key);
            const RationalScalar top = zk == cmp.zonal.restricted.end() ? RationalScalar() : zk->second;
            res.constant = top / expect.at(key);
            std::map<std::vector<int>, RationalScalar> diff;
            for (const auto &[e, c] : expect)
                diff[e] -= res.constant * c;
            for (const auto &[e, c] : cmp.zonal.restricted)
                diff[e] += c;
            for (const auto &[e, c] : diff)
                res.mismatched_terms += !c.is_zero();
            res.matches = res.mismatched_terms == 0 && res.constant == RationalScalar(1);
        }
        return cmp;
    }

    void require_match(const ZonalComparison &c)
    {
        if (c.matched().empty())
            throw NoConventionMatches("no convention matches restrict_H(Z_" + partition_to_string(c.mu) + ")");
    }

    nlohmann::json to_json(const ZonalComparison &c)
    {
        nlohmann::json restricted = nlohmann::json::array();
        for (auto it = c.zonal.restricted.rbegin(); it != c.zonal.restricted.rend(); ++it)
            restricted.push_back({{"s", it->first}, {"value", it->second.to_string()}});
        nlohmann::json conv = nlohmann::json::array();
        for (const auto &r : c.results)
        {
            nlohmann::json j{{"convention", r.convention.label},
                             {"matches", r.matches},
                             {"constant", r.constant.to_string()},
                             {"mismatched_terms", r.mismatched_terms}};
            if (!r.note.empty())
                j["note"] = r.note;
            conv.push_back(j);
        }
        return {{"mu", c.mu},
                {"N", c.N},
                {"normalization", c.zonal.normalization},
                {"kernel_dim", c.zonal.kernel_dim},
                {"closure_dim", c.zonal.closure_dim},
                {"restricted", restricted},
                {"laurent_coefficients", c.laurent_coefficients},
                {"conventions", conv},
                {"matched", c.matched()}};
    }

} // namespace qz
