// Serial reference vs OpenMP kernel, same inputs. Run with
// OMP_NUM_THREADS set to compare scaling.

#include <benchmark/benchmark.h>

#include "qz/isotypic.hpp"
#include "qz/macdonald.hpp"
#include "qz/symplectic.hpp"

using namespace qz;

namespace
{

    QPolynomial big_factor(int N)
    {
        // a degree-2 element with many terms
        QPolynomial p(N);
        for (int i = 1; i <= N; ++i)
            for (int j = 1; j <= N; ++j)
                p += QPolynomial::generator(N, i, j) * QPolynomial::generator(N, j, i);
        return p;
    }

    void BM_multiply(benchmark::State &st)
    {
        const QPolynomial a = quantum_det(4), b = big_factor(4);
        for (auto _ : st)
        {
            clear_normal_form_cache();
            benchmark::DoNotOptimize(multiply(a, b));
        }
    }

    void BM_multiply_serial(benchmark::State &st)
    {
        const QPolynomial a = quantum_det(4), b = big_factor(4);
        for (auto _ : st)
        {
            clear_normal_form_cache();
            benchmark::DoNotOptimize(multiply_serial(a, b));
        }
    }

    void BM_pfaffian(benchmark::State &st)
    {
        const int N = static_cast<int>(st.range(0));
        for (auto _ : st)
            benchmark::DoNotOptimize(quantum_pfaffian(N));
    }

    void BM_pfaffian_serial(benchmark::State &st)
    {
        const int N = static_cast<int>(st.range(0));
        for (auto _ : st)
            benchmark::DoNotOptimize(quantum_pfaffian_serial(N));
    }

    void BM_kernel(benchmark::State &st)
    {
        const auto ops = sp_operators(4, true, false);
        const GradedComponent c = GradedComponent::sp_weight_zero(4, 4, true, false);
        for (auto _ : st)
            benchmark::DoNotOptimize(operator_kernel(ops, c));
    }

    void BM_kernel_serial(benchmark::State &st)
    {
        const auto ops = sp_operators(4, true, false);
        const GradedComponent c = GradedComponent::sp_weight_zero(4, 4, true, false);
        for (auto _ : st)
            benchmark::DoNotOptimize(operator_kernel_serial(ops, c));
    }

    void BM_d1_matrix(benchmark::State &st)
    {
        for (auto _ : st)
            benchmark::DoNotOptimize(d1_matrix(5, 3));
    }

    void BM_d1_matrix_serial(benchmark::State &st)
    {
        for (auto _ : st)
            benchmark::DoNotOptimize(d1_matrix_serial(5, 3));
    }

} // namespace

BENCHMARK(BM_multiply)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multiply_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pfaffian)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_pfaffian_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kernel_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_d1_matrix)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_d1_matrix_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
