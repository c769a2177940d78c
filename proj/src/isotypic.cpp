#include "qz/isotypic.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

namespace qz
{

    namespace
    {
        template <class K>
        using Row = std::vector<std::pair<K, LaurentScalar>>;

        LaurentScalar lgcd(const LaurentScalar &a, const LaurentScalar &b)
        {
            return LaurentScalar(0, gcd_of(a.body(), b.body()));
        }

        LaurentScalar ldiv(const LaurentScalar &a, const LaurentScalar &g)
        {
            return LaurentScalar(a.low_exponent(), exact_div(a.body(), g.body()));
        }

        // a*r - b*p, both sorted by key
        template <class K>
        Row<K> combine(const Row<K> &r, const LaurentScalar &a, const Row<K> &p, const LaurentScalar &b)
        {
            Row<K> out;
            out.reserve(r.size() + p.size());
            std::size_t i = 0, j = 0;
            while (i < r.size() || j < p.size())
            {
                if (j == p.size() || (i < r.size() && r[i].first < p[j].first))
                {
                    out.emplace_back(r[i].first, a * r[i].second);
                    ++i;
                }
                else if (i == r.size() || p[j].first < r[i].first)
                {
                    out.emplace_back(p[j].first, -(b * p[j].second));
                    ++j;
                }
                else
                {
                    LaurentScalar c = a * r[i].second - b * p[j].second;
                    if (!c.is_zero())
                        out.emplace_back(r[i].first, std::move(c));
                    ++i;
                    ++j;
                }
            }
            return out;
        }

        // Divide by the content and fix the unit so that the first entry has
        // lowest exponent 0 and a positive leading integer coefficient.
        template <class K>
        void make_primitive(Row<K> &r)
        {
            if (r.empty())
                return;
            IntPoly g;
            for (const auto &[k, c] : r)
            {
                g = gcd_of(g, c.body());
                if (g.is_one())
                    break;
            }
            const LaurentScalar &lead = r.front().second;
            const bool flip = sign_of(lead.body().lead()) < 0;
            const int shift = lead.low_exponent();
            for (auto &[k, c] : r)
            {
                LaurentScalar x = g.is_one() ? c : ldiv(c, LaurentScalar(0, g));
                x = x.times_v_power(-shift);
                c = flip ? -x : x;
            }
        }

        // Incremental echelon over Z[v, v^-1] with distinct pivot columns.
        template <class K>
        struct Echelon
        {
            std::map<K, Row<K>> by_pivot;

            // Eliminates pivot columns of r. With full = false it stops at the
            // first entry that is not a pivot column, or at a key >= *stop.
            // Returns lambda with r_out = lambda * r_in - (combination of rows).
            LaurentScalar reduce(Row<K> &r, bool full, const K *stop = nullptr) const
            {
                LaurentScalar lambda(1);
                std::size_t idx = 0;
                while (idx < r.size())
                {
                    const K c = r[idx].first;
                    if (stop && !(c < *stop))
                        break;
                    const auto it = by_pivot.find(c);
                    if (it == by_pivot.end())
                    {
                        if (!full)
                            break;
                        ++idx;
                        continue;
                    }
                    const Row<K> &p = it->second;
                    LaurentScalar a = p.front().second, b = r[idx].second;
                    const LaurentScalar g = lgcd(a, b);
                    if (!g.is_one())
                    {
                        a = ldiv(a, g);
                        b = ldiv(b, g);
                    }
                    r = combine(r, a, p, b);
                    lambda *= a;
                }
                return lambda;
            }

            void insert(Row<K> r)
            {
                make_primitive(r);
                const K key = r.front().first;
                by_pivot.emplace(key, std::move(r));
            }

            // Back-substitution: afterwards every pivot column occurs in one row.
            std::vector<Row<K>> finalize()
            {
                std::vector<Row<K>> rows;
                for (auto &[k, r] : by_pivot)
                    rows.push_back(std::move(r));
                by_pivot.clear();
                for (std::size_t i = rows.size(); i-- > 0;)
                {
                    const K piv = rows[i].front().first;
                    for (std::size_t j = 0; j < i; ++j)
                    {
                        auto it = std::lower_bound(rows[j].begin(), rows[j].end(), piv,
                                                   [](const auto &e, const K &k) { return e.first < k; });
                        if (it == rows[j].end() || it->first != piv)
                            continue;
                        LaurentScalar a = rows[i].front().second, b = it->second;
                        const LaurentScalar g = lgcd(a, b);
                        a = ldiv(a, g);
                        b = ldiv(b, g);
                        rows[j] = combine(rows[j], a, rows[i], b);
                        make_primitive(rows[j]);
                    }
                }
                for (auto &r : rows)
                    make_primitive(r);
                return rows;
            }
        };

        Row<Monomial> to_row(const QPolynomial &p)
        {
            return Row<Monomial>(p.terms().begin(), p.terms().end());
        }

        QPolynomial from_row(int N, const Row<Monomial> &r)
        {
            QPolynomial p(N);
            for (const auto &[m, c] : r)
                p.add_term(m, c);
            return p;
        }

        std::vector<QPolynomial> canonical_rows(int N, Echelon<Monomial> &e)
        {
            std::vector<QPolynomial> out;
            for (const auto &r : e.finalize())
                out.push_back(from_row(N, r));
            return out;
        }

        // Full reduction against a canonical basis, scaled as in Echelon::reduce.
        LaurentScalar reduce_against(const SubspaceBasis &b, Row<Monomial> &r)
        {
            Echelon<Monomial> view;
            for (const auto &row : b.rows())
                view.by_pivot.emplace(row.terms().begin()->first, to_row(row));
            return view.reduce(r, true);
        }

        constexpr long kTag = 1L << 40;

        // Rows whose untagged part reduces to zero give the null combinations;
        // each returned vector maps input index -> coefficient.
        std::vector<std::map<std::size_t, LaurentScalar>> null_combinations(std::vector<Row<long>> rows)
        {
            Echelon<long> e;
            std::vector<std::map<std::size_t, LaurentScalar>> out;
            for (std::size_t i = 0; i < rows.size(); ++i)
            {
                Row<long> r = std::move(rows[i]);
                r.emplace_back(kTag + static_cast<long>(i), LaurentScalar(1));
                e.reduce(r, false, &kTag);
                if (r.front().first >= kTag)
                {
                    std::map<std::size_t, LaurentScalar> comb;
                    for (const auto &[k, c] : r)
                        comb.emplace(static_cast<std::size_t>(k - kTag), c);
                    out.push_back(std::move(comb));
                }
                else
                    e.insert(std::move(r));
            }
            return out;
        }

        std::vector<int> weight_key(const Monomial &m, int N)
        {
            const BiWeight w = bi_weight(m, N);
            std::vector<int> k = w.rows;
            k.insert(k.end(), w.cols.begin(), w.cols.end());
            return k;
        }
    } // namespace

    // ------------------------------------------------------------ components

    std::size_t component_cap()
    {
        const char *env = std::getenv("QZ_CAP");
        if (!env || !*env)
            return 100000;
        try
        {
            const long long v = std::stoll(env);
            if (v <= 0)
                throw ParseError("QZ_CAP must be positive");
            return static_cast<std::size_t>(v);
        }
        catch (const std::logic_error &)
        {
            throw ParseError(std::string("QZ_CAP is not an integer: ") + env);
        }
    }

    std::size_t graded_dimension(int N, int d)
    {
        Integer r = 1;
        for (int i = 1; i <= d; ++i)
            r = r * (N * N - 1 + i) / i;
        if (r > Integer(std::numeric_limits<std::size_t>::max() / 2))
            return std::numeric_limits<std::size_t>::max() / 2;
        return static_cast<std::size_t>(r);
    }

    GradedComponent GradedComponent::full(int N, int d)
    {
        const std::size_t dim = graded_dimension(N, d);
        if (dim > component_cap())
            throw ComponentTooLarge("N=" + std::to_string(N) + " degree " + std::to_string(d) + " has dimension " +
                                    std::to_string(dim) + " > cap " + std::to_string(component_cap()));
        return {N, d, enumerate_monomials(N, d)};
    }

    GradedComponent GradedComponent::sp_weight_zero(int N, int d, bool left, bool right)
    {
        if (N % 2 != 0)
            throw OddAmbient("N=" + std::to_string(N));
        GradedComponent all = full(N, d);
        GradedComponent out{N, d, {}};
        for (const auto &m : all.basis)
        {
            const BiWeight w = bi_weight(m, N);
            bool ok = true;
            for (int i = 0; i < N && ok; i += 2)
            {
                const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(i + 1);
                if (left && w.cols[a] != w.cols[b])
                    ok = false;
                if (right && w.rows[a] != w.rows[b])
                    ok = false;
            }
            if (ok)
                out.basis.push_back(m);
        }
        return out;
    }

    // ------------------------------------------------------------ subspaces

    SubspaceBasis SubspaceBasis::span(int N, const std::vector<QPolynomial> &vectors)
    {
        Echelon<Monomial> e;
        for (const auto &v : vectors)
        {
            if (v.ambient() != N)
                throw AmbientMismatch("vector over N=" + std::to_string(v.ambient()));
            Row<Monomial> r = to_row(v);
            e.reduce(r, false);
            if (!r.empty())
                e.insert(std::move(r));
        }
        return from_canonical(N, canonical_rows(N, e));
    }

    SubspaceBasis SubspaceBasis::from_canonical(int N, std::vector<QPolynomial> rows)
    {
        std::sort(rows.begin(), rows.end(), [](const QPolynomial &a, const QPolynomial &b) {
            return a.terms().begin()->first < b.terms().begin()->first;
        });
        SubspaceBasis s(N);
        s.rows_ = std::move(rows);
        return s;
    }

    std::vector<Monomial> SubspaceBasis::pivots() const
    {
        std::vector<Monomial> out;
        for (const auto &r : rows_)
            out.push_back(r.terms().begin()->first);
        return out;
    }

    bool SubspaceBasis::contains(const QPolynomial &p) const
    {
        Row<Monomial> r = to_row(p);
        reduce_against(*this, r);
        return r.empty();
    }

    std::vector<std::map<Monomial, RationalScalar>> SubspaceBasis::rref() const
    {
        std::vector<std::map<Monomial, RationalScalar>> out;
        for (const auto &r : rows_)
        {
            const RationalScalar lead = r.terms().begin()->second;
            std::map<Monomial, RationalScalar> row;
            for (const auto &[m, c] : r.terms())
                row.emplace(m, RationalScalar(c) / lead);
            out.push_back(std::move(row));
        }
        return out;
    }

    nlohmann::json to_json(const SubspaceBasis &b, int degree)
    {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto &r : b.rows())
            rows.push_back(to_json(r)["terms"]);
        return {{"N", b.ambient()}, {"degree", degree}, {"rank", b.rank()}, {"rows", rows}};
    }

    // ------------------------------------------------------------ kernels

    std::vector<SidedOp> sp_operators(int N, bool left, bool right)
    {
        std::vector<SidedOp> ops;
        for (Side s : {Side::Left, Side::Right})
        {
            if ((s == Side::Left && !left) || (s == Side::Right && !right))
                continue;
            for (auto &g : sp_generating_set(N))
                ops.push_back({s, std::move(g)});
        }
        return ops;
    }

    namespace
    {
        SubspaceBasis kernel_impl(const std::vector<SidedOp> &ops, const GradedComponent &comp, bool parallel)
        {
            const std::size_t n = comp.basis.size();
            std::vector<std::vector<QPolynomial>> img(n);
            auto image_of = [&](std::size_t i) {
                const QPolynomial b = QPolynomial::term(comp.N, comp.basis[i], 1);
                for (const auto &o : ops)
                    img[i].push_back(act(o.side, o.op, b));
            };
            if (parallel)
            {
#pragma omp parallel for schedule(dynamic, 8)
                for (std::size_t i = 0; i < n; ++i)
                    image_of(i);
            }
            else
                for (std::size_t i = 0; i < n; ++i)
                    image_of(i);

            std::set<std::pair<std::size_t, Monomial>> keys;
            for (const auto &v : img)
                for (std::size_t o = 0; o < v.size(); ++o)
                    for (const auto &[m, c] : v[o].terms())
                        keys.emplace(o, m);
            std::map<std::pair<std::size_t, Monomial>, long> id;
            for (const auto &k : keys)
                id.emplace(k, static_cast<long>(id.size()));

            std::vector<Row<long>> rows(n);
            for (std::size_t i = 0; i < n; ++i)
            {
                for (std::size_t o = 0; o < img[i].size(); ++o)
                    for (const auto &[m, c] : img[i][o].terms())
                        rows[i].emplace_back(id.at({o, m}), c);
                std::sort(rows[i].begin(), rows[i].end(),
                          [](const auto &a, const auto &b) { return a.first < b.first; });
            }
            std::vector<QPolynomial> kernel;
            for (const auto &comb : null_combinations(std::move(rows)))
            {
                QPolynomial p(comp.N);
                for (const auto &[i, c] : comb)
                    p.add_term(comp.basis[i], c);
                kernel.push_back(std::move(p));
            }
            return SubspaceBasis::span(comp.N, kernel);
        }
    } // namespace

    SubspaceBasis operator_kernel(const std::vector<SidedOp> &ops, const GradedComponent &component)
    {
        return kernel_impl(ops, component, true);
    }

    SubspaceBasis operator_kernel_serial(const std::vector<SidedOp> &ops, const GradedComponent &component)
    {
        return kernel_impl(ops, component, false);
    }

    // ------------------------------------------------------------ modules

    QPolynomial highest_weight_vector(const std::vector<int> &lambda, int N)
    {
        if (static_cast<int>(lambda.size()) > N)
            throw SizeMismatch("weight longer than N");
        std::vector<int> l = lambda;
        l.resize(static_cast<std::size_t>(N), 0);
        for (std::size_t k = 0; k < l.size(); ++k)
            if (l[k] < 0 || (k > 0 && l[k] > l[k - 1]))
                throw IndexOutOfRange("weight must be dominant and nonnegative");
        QPolynomial v = QPolynomial::one(N);
        for (int s = N; s >= 1; --s)
        {
            const int m = l[static_cast<std::size_t>(s - 1)] - (s < N ? l[static_cast<std::size_t>(s)] : 0);
            if (m == 0)
                continue;
            std::vector<int> I(static_cast<std::size_t>(s));
            for (int i = 0; i < s; ++i)
                I[static_cast<std::size_t>(i)] = i + 1;
            v = v * power(quantum_minor(N, I, I), m);
        }
        return v;
    }

    SubspaceBasis module_closure(const QPolynomial &seed, Sides sides)
    {
        const int N = seed.ambient();
        if (seed.is_zero())
            return SubspaceBasis(N);
        bi_weight(seed); // throws Inhomogeneous
        const std::size_t dim = graded_dimension(N, seed.degree());
        if (dim > component_cap())
            throw ComponentTooLarge("closure ambient dimension " + std::to_string(dim));

        std::vector<std::pair<Side, UqElement>> gens;
        for (Side s : {Side::Left, Side::Right})
        {
            if ((s == Side::Left && sides == Sides::Right) || (s == Side::Right && sides == Sides::Left))
                continue;
            for (int k = 1; k < N; ++k)
            {
                gens.emplace_back(s, UqElement::e(k));
                gens.emplace_back(s, UqElement::f(k));
            }
        }

        // Actions are weight-homogeneous, so each weight space gets its own echelon.
        std::map<std::vector<int>, Echelon<Monomial>> spaces;
        auto try_add = [&](const QPolynomial &p) {
            Echelon<Monomial> &e = spaces[weight_key(p.terms().begin()->first, N)];
            Row<Monomial> r = to_row(p);
            e.reduce(r, false);
            if (r.empty())
                return false;
            e.insert(std::move(r));
            return true;
        };
        std::vector<QPolynomial> frontier;
        if (try_add(seed))
            frontier.push_back(seed);
        while (!frontier.empty())
        {
            std::vector<QPolynomial> images(frontier.size() * gens.size(), QPolynomial(N));
#pragma omp parallel for schedule(dynamic, 1)
            for (std::size_t n = 0; n < images.size(); ++n)
            {
                const auto &[s, g] = gens[n % gens.size()];
                images[n] = act(s, g, frontier[n / gens.size()]);
            }
            std::vector<QPolynomial> next;
            for (auto &p : images)
                if (!p.is_zero() && try_add(p))
                    next.push_back(std::move(p));
            frontier = std::move(next);
        }
        std::vector<QPolynomial> rows;
        for (auto &[w, e] : spaces)
            for (auto &r : canonical_rows(N, e))
                rows.push_back(std::move(r));
        return SubspaceBasis::from_canonical(N, std::move(rows));
    }

    SubspaceBasis intersect(const SubspaceBasis &a, const SubspaceBasis &b)
    {
        if (a.ambient() != b.ambient())
            throw AmbientMismatch("intersecting subspaces of different ambients");
        const int N = a.ambient();
        std::vector<Row<Monomial>> resid;
        std::vector<LaurentScalar> lambda;
        for (const auto &v : a.rows())
        {
            Row<Monomial> r = to_row(v);
            lambda.push_back(reduce_against(b, r));
            resid.push_back(std::move(r));
        }
        std::set<Monomial> cols;
        for (const auto &r : resid)
            for (const auto &[m, c] : r)
                cols.insert(m);
        std::map<Monomial, long> id;
        for (const auto &m : cols)
            id.emplace(m, static_cast<long>(id.size()));
        std::vector<Row<long>> rows;
        for (const auto &r : resid)
        {
            Row<long> x;
            for (const auto &[m, c] : r)
                x.emplace_back(id.at(m), c);
            rows.push_back(std::move(x));
        }
        // sum d_i R_i = 0 with R_i = lambda_i a_i - b_i puts sum d_i lambda_i a_i in b
        std::vector<QPolynomial> out;
        for (const auto &comb : null_combinations(std::move(rows)))
        {
            QPolynomial p(N);
            for (const auto &[i, d] : comb)
                p += (d * lambda[i]) * a.rows()[i];
            out.push_back(std::move(p));
        }
        return SubspaceBasis::span(N, out);
    }

    // ------------------------------------------------------------ zonal vectors

    SPolynomial to_s_variables(const TorusPolynomial &t)
    {
        SPolynomial s;
        for (const auto &[e, c] : t.terms)
        {
            std::vector<int> k;
            for (std::size_t i = 0; i + 1 < e.size(); i += 2)
            {
                if (e[i] != e[i + 1])
                    throw Inhomogeneous("torus term is not a monomial in the s_i = t_{2i-1} t_{2i}");
                k.push_back(e[i]);
            }
            s.emplace(k, RationalScalar(c));
        }
        return s;
    }

    std::string s_poly_to_string(const SPolynomial &s)
    {
        if (s.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = s.rbegin(); it != s.rend(); ++it)
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
                mono += "s" + std::to_string(i + 1);
                if (e != 1)
                    mono += "^" + std::to_string(e);
            }
            const bool one = it->second == RationalScalar(1);
            if (one && !mono.empty())
                os << mono;
            else if (mono.empty())
                os << "(" << it->second.to_string() << ")";
            else
                os << "(" << it->second.to_string() << ")*" << mono;
        }
        return os.str();
    }

    ZonalVector zonal_vector(const std::vector<int> &mu, int N)
    {
        if (N % 2 != 0)
            throw OddAmbient("N=" + std::to_string(N));
        if (static_cast<int>(mu.size()) > N / 2)
            throw IndexOutOfRange("mu longer than N/2");
        int size = 0;
        for (std::size_t k = 0; k < mu.size(); ++k)
        {
            if (mu[k] < 0 || (k > 0 && mu[k] > mu[k - 1]))
                throw IndexOutOfRange("mu must be a partition");
            size += mu[k];
        }
        ZonalVector z;
        z.mu = mu;
        z.N = N;
        std::vector<int> key(static_cast<std::size_t>(N / 2), 0);
        std::copy(mu.begin(), mu.end(), key.begin());
        if (size == 0)
        {
            z.vector = QPolynomial::one(N);
            z.scale = 1;
            z.restricted[key] = 1;
            z.kernel_dim = z.closure_dim = 1;
            return z;
        }
        const int d = 2 * size;
        const SubspaceBasis K = operator_kernel(sp_operators(N, true, true), GradedComponent::sp_weight_zero(N, d, true, true));
        std::vector<int> doubled;
        for (int m : mu)
        {
            doubled.push_back(m);
            doubled.push_back(m);
        }
        const SubspaceBasis C = module_closure(highest_weight_vector(doubled, N), Sides::Both);
        const SubspaceBasis I = intersect(K, C);
        z.kernel_dim = K.rank();
        z.closure_dim = C.rank();
        if (I.rank() != 1)
            throw NotOneDimensional("mu intersection has dimension " + std::to_string(I.rank()) + " (kernel " +
                                    std::to_string(K.rank()) + ", closure " + std::to_string(C.rank()) + ")");
        z.vector = I.rows().front();
        const SPolynomial s = to_s_variables(restrict_H(z.vector));
        const auto it = s.find(key);
        if (it == s.end())
            throw DivisionByZero("restriction of the zonal vector has no s^mu term");
        z.scale = it->second.inverse();
        for (const auto &[e, c] : s)
            z.restricted.emplace(e, c * z.scale);
        return z;
    }

    std::size_t graded_bi_invariant_dimension(int m, int N)
    {
        if (m == 0)
            return 1;
        return operator_kernel(sp_operators(N, true, true), GradedComponent::sp_weight_zero(N, 2 * m, true, true))
            .rank();
    }

    std::size_t count_partitions(int m, int k)
    {
        // p(m, k): parts bounded by k is the same count by conjugation
        std::vector<std::size_t> p(static_cast<std::size_t>(m + 1), 0);
        p[0] = 1;
        for (int part = 1; part <= k; ++part)
            for (int s = part; s <= m; ++s)
                p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
        return p[static_cast<std::size_t>(m)];
    }

} // namespace qz
