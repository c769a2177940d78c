#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "gen.hpp"
#include "qz/qmatrix.hpp"

using namespace qz;

namespace
{
    LaurentScalar q() { return LaurentScalar::q_power(1); }
    LaurentScalar qinv() { return LaurentScalar::q_power(-1); }

    QPolynomial X(int N, int i, int j) { return QPolynomial::generator(N, i, j); }

    Monomial mono(std::initializer_list<Generator> w) { return Monomial::from_word(w); }

    // Commutative image at q = 1: sorted word -> integer coefficient.
    using Classical = std::map<std::vector<std::pair<int, int>>, Integer>;

    Classical at_q_one(const QPolynomial &p)
    {
        Classical out;
        for (const auto &[m, c] : p.terms())
        {
            std::vector<std::pair<int, int>> key;
            for (const auto &g : m.word())
                key.emplace_back(g.row, g.col);
            std::sort(key.begin(), key.end());
            const Rational r = c.specialize(1);
            REQUIRE(r.den() == 1);
            out[key] += r.num();
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second.is_zero() ? out.erase(it) : std::next(it);
        return out;
    }

    // Leibniz expansion of the ordinary minor.
    Classical classical_minor(const std::vector<int> &I, const std::vector<int> &J)
    {
        Classical out;
        std::vector<int> s(I.size());
        std::iota(s.begin(), s.end(), 0);
        do
        {
            std::vector<std::pair<int, int>> key;
            for (std::size_t k = 0; k < I.size(); ++k)
                key.emplace_back(I[k], J[static_cast<std::size_t>(s[k])]);
            std::sort(key.begin(), key.end());
            out[key] += inversion_count(s) % 2 ? -1 : 1;
        } while (std::next_permutation(s.begin(), s.end()));
        return out;
    }

    std::vector<std::vector<int>> subsets(int n, int r)
    {
        std::vector<std::vector<int>> out;
        for (int mask = 0; mask < (1 << n); ++mask)
        {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != r)
                continue;
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i))
                    s.push_back(i + 1);
            out.push_back(s);
        }
        return out;
    }

    Integer binomial(int n, int k)
    {
        Integer r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    }
} // namespace

TEST_CASE("straightening examples")
{
    CHECK(normal_form(2, {{2, 1}, {1, 2}}) == QPolynomial::term(2, mono({{1, 2}, {2, 1}}), 1));
    CHECK(normal_form(2, {{2, 2}, {1, 1}}) ==
          QPolynomial::term(2, mono({{1, 1}, {2, 2}}), 1) -
              QPolynomial::term(2, mono({{1, 2}, {2, 1}}), q() - qinv()));
    CHECK(normal_form(2, {{1, 2}, {1, 1}}) == QPolynomial::term(2, mono({{1, 1}, {1, 2}}), qinv()));
    CHECK(normal_form(2, {{2, 1}, {1, 1}}) == QPolynomial::term(2, mono({{1, 1}, {2, 1}}), qinv()));
    CHECK(normal_form(2, std::vector<Generator>{}) == QPolynomial::one(2));
    CHECK_THROWS_AS(normal_form(2, {{3, 1}}), IndexOutOfRange);
    CHECK_THROWS_AS(QPolynomial::generator(2, 0, 1), IndexOutOfRange);
}

TEST_CASE("products")
{
    const int N = 2;
    const QPolynomial one = QPolynomial::one(N);
    qzt::Gen g(5);
    const QPolynomial p = qzt::random_poly(g, N, 3);
    CHECK(one * p == p);
    CHECK(p * one == p);
    CHECK(X(N, 1, 1) * X(N, 1, 2) == QPolynomial::term(N, mono({{1, 1}, {1, 2}}), 1));
    // det_q commutes with x11, both sides expanded by the rewriter
    const QPolynomial d = X(N, 1, 1) * X(N, 2, 2) - q() * (X(N, 1, 2) * X(N, 2, 1));
    CHECK(d * X(N, 1, 1) == X(N, 1, 1) * d);
    CHECK_THROWS_AS(X(2, 1, 1) * X(3, 1, 1), AmbientMismatch);
    CHECK_THROWS_AS(X(2, 1, 1) + X(3, 1, 1), AmbientMismatch);
}

TEST_CASE("quantum minors and determinant")
{
    CHECK(quantum_minor(3, {1}, {1}) == X(3, 1, 1));
    CHECK(quantum_minor(2, {}, {}) == QPolynomial::one(2));
    const QPolynomial d2 = QPolynomial::term(2, mono({{1, 1}, {2, 2}}), 1) -
                           QPolynomial::term(2, mono({{1, 2}, {2, 1}}), q());
    CHECK(quantum_minor(2, {1, 2}, {1, 2}) == d2);
    CHECK(quantum_det(2) == d2);
    CHECK(quantum_det(1) == X(1, 1, 1));
    const QPolynomial d3 = quantum_det(3);
    CHECK(d3.size() == 6);
    for (const auto &[m, c] : d3.terms())
    {
        std::vector<int> cols;
        for (const auto &gg : m.word())
            cols.push_back(gg.col);
        const int l = inversion_count(cols);
        CHECK(c == LaurentScalar::monomial(l % 2 ? -1 : 1, 2 * l));
    }
    CHECK(at_q_one(d3) == classical_minor({1, 2, 3}, {1, 2, 3}));
    CHECK_THROWS_AS(quantum_minor(3, {1, 2}, {1}), SizeMismatch);
    CHECK_THROWS_AS(quantum_minor(3, {1, 4}, {1, 2}), IndexOutOfRange);
    CHECK_THROWS_AS(quantum_minor(3, {2, 1}, {1, 2}), IndexOutOfRange);
}

TEST_CASE("q = 1 specialization of every minor is the classical minor")
{
    for (int N = 1; N <= 4; ++N)
        for (int r = 1; r <= std::min(N, 3); ++r)
            for (const auto &I : subsets(N, r))
                for (const auto &J : subsets(N, r))
                    CHECK(at_q_one(quantum_minor(N, I, J)) == classical_minor(I, J));
}

TEST_CASE("bi-weights")
{
    const BiWeight w = bi_weight(quantum_det(2));
    CHECK(w.rows == std::vector<int>{1, 1});
    CHECK(w.cols == std::vector<int>{1, 1});
    const BiWeight w2 = bi_weight(X(2, 1, 1) * X(2, 1, 2));
    CHECK(w2.rows == std::vector<int>{2, 0});
    CHECK(w2.cols == std::vector<int>{1, 1});
    CHECK_THROWS_AS(bi_weight(X(2, 1, 1) + X(2, 2, 2)), Inhomogeneous);
}

TEST_CASE("confluence: insertion, bubble and divide-and-merge agree")
{
    qzt::Gen g(1234);
    for (int it = 0; it < 400; ++it)
    {
        const int N = g.uniform(2, 4);
        const int len = g.uniform(0, 6);
        const auto w = qzt::random_word(g, N, len);
        const QPolynomial a = normal_form(N, w);
        CHECK(a == normal_form_bubble(N, w));
        const std::size_t cut = static_cast<std::size_t>(g.uniform(0, len));
        const std::vector<Generator> left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(cut));
        const std::vector<Generator> right(w.begin() + static_cast<std::ptrdiff_t>(cut), w.end());
        CHECK(a == multiply_serial(normal_form(N, left), normal_form(N, right)));
        for (const auto &[m, c] : a.terms())
            CHECK(m.is_sorted());
    }
}

TEST_CASE("associativity and bi-weight additivity")
{
    qzt::Gen g(77);
    for (int it = 0; it < 60; ++it)
    {
        const int N = g.uniform(2, 4);
        const QPolynomial a = qzt::random_poly(g, N, g.uniform(0, 2), 2);
        const QPolynomial b = qzt::random_poly(g, N, g.uniform(0, 1), 2);
        const QPolynomial c = qzt::random_poly(g, N, g.uniform(0, 1), 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        // monomial products have well-defined bi-weights
        const auto wa = qzt::random_word(g, N, g.uniform(0, 4));
        const auto wb = qzt::random_word(g, N, g.uniform(0, 4));
        const QPolynomial pa = normal_form(N, wa), pb = normal_form(N, wb);
        const QPolynomial pab = pa * pb;
        if (pab.is_zero())
            continue;
        const BiWeight s = bi_weight(pab), x = bi_weight(pa), y = bi_weight(pb);
        for (int k = 0; k < N; ++k)
        {
            CHECK(s.rows[k] == x.rows[k] + y.rows[k]);
            CHECK(s.cols[k] == x.cols[k] + y.cols[k]);
        }
    }
}

TEST_CASE("parallel product matches serial product")
{
    qzt::Gen g(31);
    for (int it = 0; it < 10; ++it)
    {
        const QPolynomial a = qzt::random_poly(g, 4, 3, 12);
        const QPolynomial b = qzt::random_poly(g, 4, 3, 12);
        CHECK(multiply(a, b) == multiply_serial(a, b));
    }
}

TEST_CASE("PBW monomial count")
{
    for (int N = 2; N <= 3; ++N)
        for (int d = 0; d <= 4; ++d)
        {
            const auto basis = enumerate_monomials(N, d);
            CHECK(Integer(basis.size()) == binomial(N * N + d - 1, d));
            // brute force: distinct multisets among all words
            std::set<std::vector<int>> seen;
            std::vector<int> w(static_cast<std::size_t>(d), 0);
            const int L = N * N;
            std::function<void(int)> rec = [&](int pos) {
                if (pos == d)
                {
                    std::vector<int> s = w;
                    std::sort(s.begin(), s.end());
                    seen.insert(s);
                    return;
                }
                for (int x = 0; x < L; ++x)
                {
                    w[static_cast<std::size_t>(pos)] = x;
                    rec(pos + 1);
                }
            };
            rec(0);
            CHECK(seen.size() == basis.size());
            CHECK(std::is_sorted(basis.begin(), basis.end()));
        }
}

TEST_CASE("det_q is central")
{
    for (int N = 2; N <= 3; ++N)
    {
        const QPolynomial d = quantum_det(N);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                CHECK(d * X(N, i, j) == X(N, i, j) * d);
    }
}

TEST_CASE("polynomial JSON")
{
    const auto j = to_json(quantum_det(2));
    CHECK(j.dump() ==
          R"({"N":2,"terms":[{"coeff":{"0":"1"},"word":[[1,1],[2,2]]},{"coeff":{"2":"-1"},"word":[[1,2],[2,1]]}]})");
    CHECK(qpoly_from_json(j) == quantum_det(2));
    const auto raw = nlohmann::json::parse(R"({"N":2,"terms":[{"word":[[2,2],[1,1]],"coeff":{"0":"1"}}]})");
    CHECK(qpoly_from_json(raw) == normal_form(2, {{2, 2}, {1, 1}}));
    CHECK_THROWS_AS(qpoly_from_json(nlohmann::json::parse(R"({"terms":[]})")), ParseError);
}
