#include "doctest.h"

#include <algorithm>
#include <functional>

#include "gen.hpp"
#include "qz/isotypic.hpp"

using namespace qz;

namespace
{
    QPolynomial X(int N, int i, int j) { return QPolynomial::generator(N, i, j); }

    // Brute-force partition count: nonincreasing sequences of length <= k.
    std::size_t partitions_oracle(int m, int k)
    {
        std::size_t count = 0;
        std::function<void(int, int, int)> rec = [&](int left, int maxpart, int parts) {
            if (left == 0)
            {
                ++count;
                return;
            }
            if (parts == k)
                return;
            for (int p = std::min(left, maxpart); p >= 1; --p)
                rec(left - p, p, parts + 1);
        };
        rec(m, m, 0);
        return count;
    }

    // Weyl dimension formula for GL_n.
    std::size_t weyl_dim(const std::vector<int> &lambda)
    {
        const int n = static_cast<int>(lambda.size());
        Integer num = 1, den = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
            {
                num *= lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i;
                den *= j - i;
            }
        return static_cast<std::size_t>(Integer(num / den));
    }
} // namespace

TEST_CASE("graded components")
{
    CHECK(GradedComponent::full(2, 1).basis.size() == 4);
    CHECK(graded_dimension(4, 4) == 3876);
    CHECK(graded_dimension(6, 4) == 82251);
    const auto z = GradedComponent::sp_weight_zero(4, 2, true, true);
    CHECK(z.basis.size() == 8);
    CHECK(GradedComponent::sp_weight_zero(4, 2, true, false).basis.size() == 32);
    CHECK(GradedComponent::sp_weight_zero(4, 4, true, true).basis.size() == 60);
    CHECK_THROWS_AS(GradedComponent::full(8, 6), ComponentTooLarge);
    CHECK_THROWS_AS(GradedComponent::sp_weight_zero(3, 1, true, true), OddAmbient);
}

TEST_CASE("subspace bases are canonical")
{
    qzt::Gen g(8);
    for (int it = 0; it < 20; ++it)
    {
        const int N = 2;
        std::vector<QPolynomial> v;
        for (int k = 0; k < 3; ++k)
            v.push_back(qzt::random_poly(g, N, 2, 4));
        const SubspaceBasis a = SubspaceBasis::span(N, v);
        // a different generating set of the same span
        std::vector<QPolynomial> w{v[0] + v[1], g.laurent(1, 3, 3) * v[2] + v[0], v[1] - v[2], v[0]};
        const SubspaceBasis b = SubspaceBasis::span(N, w);
        const bool same = SubspaceBasis::span(N, {w[0], w[1], w[2], w[3]}).rank() == a.rank();
        if (same)
            CHECK(a == b);
        for (const auto &x : v)
            CHECK(a.contains(x));
        const auto rr = a.rref();
        for (std::size_t i = 0; i < rr.size(); ++i)
        {
            CHECK(rr[i].begin()->second == RationalScalar(1));
            // pivot columns appear only in their own row
            for (std::size_t j = 0; j < rr.size(); ++j)
                if (j != i)
                    CHECK(rr[j].count(rr[i].begin()->first) == 0);
        }
    }
    CHECK(SubspaceBasis::span(2, {X(2, 1, 1), X(2, 1, 1) + X(2, 1, 2), X(2, 1, 2)}).rank() == 2);
    CHECK_FALSE(SubspaceBasis::span(2, {X(2, 1, 1)}).contains(X(2, 1, 2)));
}

TEST_CASE("operator kernels")
{
    // left e_1 kills the column-1 generators
    const SubspaceBasis k = operator_kernel({{Side::Left, UqElement::e(1)}}, GradedComponent::full(2, 1));
    CHECK(k == SubspaceBasis::span(2, {X(2, 1, 1), X(2, 2, 1)}));
    // left sp kernel at N = 4, degree 2 holds all z^L
    const SubspaceBasis kl =
        operator_kernel(sp_operators(4, true, false), GradedComponent::sp_weight_zero(4, 2, true, false));
    std::vector<QPolynomial> zs;
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
        {
            zs.push_back(z_generator(Side::Left, i, j, 4));
            CHECK(kl.contains(zs.back()));
        }
    CHECK(SubspaceBasis::span(4, zs).rank() == 6);
    // the block restriction loses nothing: same kernel on the full component
    CHECK(operator_kernel(sp_operators(4, true, false), GradedComponent::full(4, 2)) == kl);
    CHECK(operator_kernel_serial(sp_operators(4, true, false), GradedComponent::full(4, 2)) == kl);
    const SubspaceBasis kb =
        operator_kernel(sp_operators(4, true, true), GradedComponent::sp_weight_zero(4, 2, true, true));
    CHECK(kb.rank() == 1);
    CHECK(kb == SubspaceBasis::span(4, {E_r(1, 4)}));
}

TEST_CASE("highest weight vectors")
{
    CHECK(highest_weight_vector({1, 1, 0, 0}, 4) == quantum_minor(4, {1, 2}, {1, 2}));
    CHECK(highest_weight_vector({1, 1, 1, 1}, 4) == quantum_det(4));
    CHECK(highest_weight_vector({2, 2}, 4) == power(quantum_minor(4, {1, 2}, {1, 2}), 2));
    CHECK(highest_weight_vector({2, 1}, 4) == quantum_minor(4, {1, 2}, {1, 2}) * X(4, 1, 1));
    CHECK(highest_weight_vector({}, 4) == QPolynomial::one(4));
    CHECK_THROWS_AS(highest_weight_vector({1, 2}, 4), IndexOutOfRange);
    for (const auto &lam : std::vector<std::vector<int>>{{1, 1, 0, 0}, {2, 1, 0, 0}, {2, 2, 1, 1}})
    {
        const QPolynomial v = highest_weight_vector(lam, 4);
        CHECK(relative_invariant_check(v, WeightVector::from_coords(lam), Coset::G_mod_Bplus));
        CHECK(relative_invariant_check(v, WeightVector::from_coords(lam), Coset::Bminus_mod_G));
    }
}

TEST_CASE("module closures")
{
    CHECK(module_closure(quantum_det(4), Sides::Both).rank() == 1);
    CHECK(module_closure(X(2, 1, 1), Sides::Left) == SubspaceBasis::span(2, {X(2, 1, 1), X(2, 1, 2)}));
    const std::size_t d6 = weyl_dim({1, 1, 0, 0});
    CHECK(d6 == 6);
    const SubspaceBasis c = module_closure(quantum_minor(4, {1, 2}, {1, 2}), Sides::Both);
    CHECK(c.rank() == d6 * d6);
    CHECK(module_closure(quantum_minor(4, {1, 2}, {1, 2}), Sides::Left).rank() == d6);
    CHECK(module_closure(highest_weight_vector({2, 1, 0, 0}, 4), Sides::Right).rank() == weyl_dim({2, 1, 0, 0}));
    // idempotence: closing any member again stays inside with no larger rank
    const QPolynomial member = c.rows()[c.rank() / 2];
    const SubspaceBasis again = module_closure(member, Sides::Both);
    CHECK(again.rank() <= c.rank());
    for (const auto &r : again.rows())
        CHECK(c.contains(r));
    CHECK(intersect(c, again) == again);
    CHECK_THROWS_AS(module_closure(X(2, 1, 1) + X(2, 2, 2), Sides::Both), Inhomogeneous);
}

TEST_CASE("bi-invariant dimensions")
{
    for (int m = 1; m <= 3; ++m)
    {
        CHECK(count_partitions(m, 2) == partitions_oracle(m, 2));
        CHECK(graded_bi_invariant_dimension(m, 4) == partitions_oracle(m, 2));
    }
    for (int m = 1; m <= 2; ++m)
        CHECK(graded_bi_invariant_dimension(m, 6) == partitions_oracle(m, 3));
    const QPolynomial e1 = E_r(1, 4);
    const SubspaceBasis k4 =
        operator_kernel(sp_operators(4, true, true), GradedComponent::sp_weight_zero(4, 4, true, true));
    CHECK(k4 == SubspaceBasis::span(4, {e1 * e1, E_r(2, 4)}));
}

TEST_CASE("zonal vectors")
{
    const ZonalVector z1 = zonal_vector({1}, 4);
    CHECK(SubspaceBasis::span(4, {z1.vector}) == SubspaceBasis::span(4, {E_r(1, 4)}));
    CHECK(s_poly_to_string(z1.restricted) == "s1 + s2");

    const ZonalVector z11 = zonal_vector({1, 1}, 4);
    CHECK(SubspaceBasis::span(4, {z11.vector}) == SubspaceBasis::span(4, {quantum_det(4)}));
    CHECK(s_poly_to_string(z11.restricted) == "s1*s2");

    for (const auto &mu : std::vector<std::vector<int>>{{2}, {2, 1}})
    {
        const ZonalVector z = zonal_vector(mu, 4);
        CHECK(invariance_kernel_check(z.vector, Side::Left));
        CHECK(invariance_kernel_check(z.vector, Side::Right));
        std::vector<int> doubled;
        for (int m : mu)
            doubled.insert(doubled.end(), {m, m});
        CHECK(module_closure(highest_weight_vector(doubled, 4), Sides::Both).contains(z.vector));
        // symmetric in s1, s2
        for (const auto &[e, c] : z.restricted)
        {
            const std::vector<int> sw{e[1], e[0]};
            REQUIRE(z.restricted.count(sw) == 1);
            CHECK(z.restricted.at(sw) == c);
        }
        std::vector<int> key = mu;
        key.resize(2, 0);
        CHECK(z.restricted.at(key) == RationalScalar(1));
        MESSAGE("restrict_H Z_", (mu.size() == 1 ? "(2)" : "(2,1)"), " = ", s_poly_to_string(z.restricted));
    }
    CHECK(zonal_vector({}, 4).vector == QPolynomial::one(4));
    CHECK_THROWS_AS(zonal_vector({1}, 3), OddAmbient);
}
