// qz: command-line front end for the quantum-matrix / symplectic engine.
//
// Exit codes: 0 every check passed, 1 usage or input error, 2 a check failed.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>

#include "CLI11.hpp"
#include "json.hpp"

#include "qz/errors.hpp"
#include "qz/isotypic.hpp"
#include "qz/macdonald.hpp"
#include "qz/symplectic.hpp"

#ifndef QZ_VERSION
#define QZ_VERSION "dev"
#endif

using nlohmann::json;
using namespace qz;

namespace
{

    struct Check
    {
        std::string name;
        bool pass = false;
        std::size_t residual_terms = 0;
    };

    struct Report
    {
        std::string verb;
        json inputs = json::object();
        std::vector<Check> checks;
        json result = json::object();
        std::vector<std::string> text; // lines for --format text

        bool pass() const
        {
            return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
        }
    };

    struct Options
    {
        std::string format = "text";
        bool no_timing = false;
        bool verbose = false;
    };

    class UsageError : public std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    void require_even(int N)
    {
        if (N < 2 || N % 2 != 0)
            throw UsageError("--N must be a positive even integer, got " + std::to_string(N));
    }

    void require_positive(int N)
    {
        if (N < 1)
            throw UsageError("--N must be positive, got " + std::to_string(N));
    }

    int emit(const Report &r, const Options &o, double ms)
    {
        if (o.format == "json")
        {
            json checks = json::array();
            for (const auto &c : r.checks)
                checks.push_back({{"name", c.name}, {"pass", c.pass}, {"residual_terms", c.residual_terms}});
            json j{{"verb", r.verb},
                   {"engine_version", QZ_VERSION},
                   {"inputs", r.inputs},
                   {"checks", checks},
                   {"pass", r.pass()},
                   {"result", r.result}};
            if (!o.no_timing)
                j["timing_ms"] = ms;
            std::cout << j.dump(2) << "\n";
        }
        else
        {
            for (const auto &line : r.text)
                std::cout << line << "\n";
            std::size_t failed = 0;
            for (const auto &c : r.checks)
            {
                failed += !c.pass;
                if (!c.pass || o.verbose)
                    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (residual " << c.residual_terms
                              << " terms)\n";
            }
            if (!r.checks.empty())
                std::cout << r.verb << ": " << (r.checks.size() - failed) << "/" << r.checks.size()
                          << " checks passed\n";
            if (!o.no_timing)
                std::cout << "time: " << ms << " ms\n";
        }
        return r.pass() ? 0 : 2;
    }

    // ------------------------------------------------------------------ verbs

    Report cmd_detq(int N)
    {
        require_positive(N);
        Report r;
        r.verb = "detq";
        r.inputs = {{"N", N}};
        const QPolynomial d = quantum_det(N);
        r.result = {{"terms", d.size()}, {"polynomial", to_json(d)}};
        r.text.push_back("det_q (N=" + std::to_string(N) + "): " + std::to_string(d.size()) + " terms");
        r.text.push_back(d.to_string());
        return r;
    }

    Report cmd_pfaffian(int N, bool verify)
    {
        require_even(N);
        Report r;
        r.verb = "pfaffian";
        r.inputs = {{"N", N}, {"verify", verify}};
        const QPolynomial pf = quantum_pfaffian(N);
        std::vector<int> all(static_cast<std::size_t>(N));
        std::iota(all.begin(), all.end(), 1);
        r.result = {{"terms", pf.size()}, {"matchings", all_matchings(all).size()}};
        r.text.push_back("Pf_q (N=" + std::to_string(N) + "): " + std::to_string(pf.size()) + " terms");
        if (verify)
        {
            const QPolynomial diff = pf - quantum_det(N);
            r.checks.push_back({"Pf_q = det_q", diff.is_zero(), diff.size()});
            r.result["residual_terms"] = diff.size();
        }
        else
        {
            r.result["polynomial"] = to_json(pf);
            if (N <= 4)
                r.text.push_back(pf.to_string());
        }
        return r;
    }

    std::string indices_string(const std::vector<int> &v)
    {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    }

    void suite_relations(Report &r, int N)
    {
        for (Side side : {Side::Left, Side::Right})
        {
            const auto rep = verify_AS_relations(side, N);
            for (const auto &c : rep)
                r.checks.push_back({std::string(c.relation) + " " + side_name(side) + " " + indices_string(c.indices),
                                    c.pass, c.residual_terms});
            r.result["relations"][side_name(side)] = to_json(rep);
        }
    }

    void suite_invariance(Report &r, int N, int deg)
    {
        struct Job
        {
            std::string name;
            std::function<bool()> run;
        };
        std::vector<Job> jobs;
        const int h = N / 2;
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
            {
                jobs.push_back({"z^L_" + std::to_string(i) + std::to_string(j) + " left",
                                [=] { return invariance_kernel_check(z_generator(Side::Left, i, j, N), Side::Left); }});
                jobs.push_back({"z^R_" + std::to_string(i) + std::to_string(j) + " right", [=] {
                                    return invariance_kernel_check(z_generator(Side::Right, i, j, N), Side::Right);
                                }});
            }
        for (int k = 1; k <= h && 2 * k <= deg; ++k)
        {
            jobs.push_back({"a^R_" + std::to_string(k) + " left",
                            [=] { return invariance_kernel_check(a_R(k, N), Side::Left); }});
            for (Side s : {Side::Left, Side::Right})
                jobs.push_back({"E_" + std::to_string(k) + " " + side_name(s),
                                [=] { return invariance_kernel_check(E_r(k, N), s); }});
        }
        // products of at least two E_r with total degree <= deg
        std::vector<std::vector<int>> prods;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int left, int maxr) {
            if (cur.size() >= 2)
                prods.push_back(cur);
            for (int k = std::min(maxr, left / 2); k >= 1; --k)
            {
                cur.push_back(k);
                rec(left - 2 * k, k);
                cur.pop_back();
            }
        };
        rec(deg, h);
        for (const auto &p : prods)
        {
            std::string name = "E";
            for (int k : p)
                name += "_" + std::to_string(k);
            for (Side s : {Side::Left, Side::Right})
                jobs.push_back({name + " " + side_name(s), [=] {
                                    QPolynomial x = QPolynomial::one(N);
                                    for (int k : p)
                                        x = x * E_r(k, N);
                                    return invariance_kernel_check(x, s);
                                }});
        }
        if (N == 4)
        {
            for (Side s : {Side::Left, Side::Right})
            {
                jobs.push_back({std::string("E_1 full sp set ") + side_name(s),
                                [=] { return invariance_kernel_check(E_r(1, N), s, true); }});
                jobs.push_back({std::string("E_2 full sp set ") + side_name(s),
                                [=] { return invariance_kernel_check(E_r(2, N), s, true); }});
            }
            jobs.push_back({"z^L_12 full sp set left",
                            [=] { return invariance_kernel_check(z_generator(Side::Left, 1, 2, N), Side::Left, true); }});
            jobs.push_back({"z^R_12 full sp set right", [=] {
                                return invariance_kernel_check(z_generator(Side::Right, 1, 2, N), Side::Right, true);
                            }});
        }
        // partial Pfaffians: killed by every right f_k and by right e_k, k < r
        for (int rr = 2; rr < N; rr += 2)
        {
            for (int k = 1; k < N; ++k)
                jobs.push_back({"Pf^[1.." + std::to_string(rr) + "] right f_" + std::to_string(k),
                                [=] { return act(Side::Right, UqElement::f(k), partial_pfaffian(rr, N)).is_zero(); }});
            for (int k = 1; k < rr; ++k)
                jobs.push_back({"Pf^[1.." + std::to_string(rr) + "] right e_" + std::to_string(k),
                                [=] { return act(Side::Right, UqElement::e(k), partial_pfaffian(rr, N)).is_zero(); }});
        }

        std::vector<char> ok(jobs.size(), 0);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < jobs.size(); ++i)
            ok[i] = jobs[i].run() ? 1 : 0;
        for (std::size_t i = 0; i < jobs.size(); ++i)
            r.checks.push_back({jobs[i].name, ok[i] != 0, 0});
        r.result["invariance_checks"] = jobs.size();
    }

    void suite_dimensions(Report &r, int N, int deg)
    {
        json dims = json::array();
        for (int m = 1; 2 * m <= deg; ++m)
        {
            std::size_t got = 0;
            try
            {
                got = graded_bi_invariant_dimension(m, N);
            }
            catch (const ComponentTooLarge &e)
            {
                // over the cap: reported, not counted as a check
                dims.push_back({{"m", m}, {"skipped", e.what()}});
                r.text.push_back("m=" + std::to_string(m) + ": skipped, " + e.what() + " (raise QZ_CAP)");
                continue;
            }
            const std::size_t want = count_partitions(m, N / 2);
            r.checks.push_back({"dim A_ZP," + std::to_string(2 * m) + " = p_" + std::to_string(N / 2) + "(" +
                                    std::to_string(m) + ")",
                                got == want, 0});
            dims.push_back({{"m", m}, {"dimension", got}, {"partitions", want}});
            r.text.push_back("m=" + std::to_string(m) + ": dim " + std::to_string(got) + ", p_" +
                             std::to_string(N / 2) + "(m) = " + std::to_string(want));
        }
        r.result["dimensions"] = dims;
    }

    Report cmd_verify(const std::string &suite, int N, int deg)
    {
        require_even(N);
        if (deg < 0)
            throw UsageError("--deg must be nonnegative");
        Report r;
        r.verb = "verify";
        r.inputs = {{"suite", suite}, {"N", N}, {"deg", deg}};
        if (suite == "relations" || suite == "all")
            suite_relations(r, N);
        if (suite == "invariance" || suite == "all")
            suite_invariance(r, N, deg);
        if (suite == "dimensions" || suite == "all")
            suite_dimensions(r, N, deg);
        return r;
    }

    Report cmd_zonal(const std::string &mu_text, int N, bool compare)
    {
        require_even(N);
        const Partition mu = parse_partition(mu_text);
        Report r;
        r.verb = "zonal";
        r.inputs = {{"mu", mu}, {"N", N}, {"compare", compare}};
        ZonalVector z;
        ZonalComparison cmp;
        if (compare)
        {
            cmp = compare_zonal(mu, N);
            z = cmp.zonal;
        }
        else
            z = zonal_vector(mu, N);
        r.checks.push_back({"intersection is one-dimensional", true, 0});
        r.result = {{"vector", to_json(z.vector)},
                    {"scale", z.scale.to_string()},
                    {"restricted", s_poly_to_string(z.restricted)},
                    {"normalization", z.normalization},
                    {"kernel_dim", z.kernel_dim},
                    {"closure_dim", z.closure_dim}};
        r.text.push_back("Z_" + partition_to_string(mu) + " (N=" + std::to_string(N) + "): " +
                         std::to_string(z.vector.size()) + " terms, scale " + z.scale.to_string());
        r.text.push_back("restrict_H(Z) = " + s_poly_to_string(z.restricted));
        if (compare)
        {
            r.result["comparison"] = to_json(cmp);
            for (const auto &c : cmp.results)
                r.text.push_back("  P(s; " + c.convention.label + "): " + (c.matches ? "match" : "no match") +
                                 (c.note.empty() ? "" : " [" + c.note + "]"));
            const auto m = cmp.matched();
            r.checks.push_back({"some convention matches", !m.empty(), 0});
            std::string names;
            for (const auto &s : m)
                names += (names.empty() ? "" : ", ") + s;
            r.text.push_back("matching conventions: " + (names.empty() ? std::string("none") : names));
        }
        return r;
    }

    Report cmd_macdonald(const std::string &lambda_text, int n, const std::string &qs, const std::string &ts)
    {
        require_positive(n);
        const Partition lam = parse_partition(lambda_text);
        Report r;
        r.verb = "macdonald";
        r.inputs = {{"lambda", lam}, {"n", n}, {"q", qs}, {"t", ts}};
        SymPolynomial P = macdonald_P(lam, n);
        if (qs != "q" || ts != "t")
            P = specialize(P, parse_qt(qs), parse_qt(ts));
        r.result = to_json(P);
        r.text.push_back("P_" + partition_to_string(lam) + "(x; " + qs + ", " + ts + "), n=" + std::to_string(n) + ":");
        const MBasis m = P.to_m_basis();
        for (auto it = m.rbegin(); it != m.rend(); ++it)
            r.text.push_back("  m_" + partition_to_string(it->first) + ": " + it->second.to_string());
        return r;
    }

    Report cmd_act(const std::string &side_text, const std::string &op, const std::string &path)
    {
        Side side;
        if (side_text == "left")
            side = Side::Left;
        else if (side_text == "right")
            side = Side::Right;
        else
            throw UsageError("--side must be left or right");
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open " + path);
        json j;
        try
        {
            in >> j;
        }
        catch (const json::exception &e)
        {
            throw ParseError(std::string("input JSON: ") + e.what());
        }
        const QPolynomial p = qpoly_from_json(j);
        const UqElement u = parse_uq(op, p.ambient());
        const QPolynomial out = act(side, u, p);
        Report r;
        r.verb = "act";
        r.inputs = {{"side", side_text}, {"op", op}, {"input", path}};
        r.result = {{"terms", out.size()}, {"polynomial", to_json(out)}};
        r.text.push_back(out.to_string());
        return r;
    }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"qz: exact computations in the quantum matrix algebra and its symplectic invariants"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--no-timing", opt.no_timing, "Omit timings so output is byte-reproducible");
    app.add_flag("-v,--verbose", opt.verbose, "List passing checks too");

    int N = 4, deg = 4, n = 2;
    bool verify = false, compare = false;
    std::string suite = "all", mu = "1", lambda = "1", qs = "q", ts = "t", side = "left", op, input;

    auto *detq = app.add_subcommand("detq", "Quantum determinant");
    detq->add_option("--N", N, "Matrix size")->required();

    auto *pf = app.add_subcommand("pfaffian", "Quantum Pfaffian of the z^L matrix");
    pf->add_option("--N", N, "Matrix size (even)")->required();
    pf->add_flag("--verify", verify, "Check Pf_q = det_q exactly");

    auto *ver = app.add_subcommand("verify", "Run invariant suites");
    ver->add_option("--suite", suite, "Suite")->check(CLI::IsMember({"relations", "invariance", "dimensions", "all"}));
    ver->add_option("--N", N, "Matrix size (even)")->required();
    ver->add_option("--deg", deg, "Degree cap");

    auto *zon = app.add_subcommand("zonal", "q-zonal vector Z_mu");
    zon->add_option("--mu", mu, "Partition, e.g. 2,1")->required();
    zon->add_option("--N", N, "Matrix size (even)")->required();
    zon->add_flag("--compare", compare, "Compare the restriction with P_mu under each convention");

    auto *mac = app.add_subcommand("macdonald", "Macdonald polynomial P_lambda in the m-basis");
    mac->add_option("--lambda", lambda, "Partition")->required();
    mac->add_option("--n", n, "Number of variables")->required();
    mac->add_option("--q", qs, "Value substituted for q");
    mac->add_option("--t", ts, "Value substituted for t");

    auto *actc = app.add_subcommand("act", "Apply a U_q element to a polynomial read from JSON");
    actc->add_option("--side", side, "left or right");
    actc->add_option("--op", op, "Element, e.g. 'e1 f2' or 'E(1,3)'")->required();
    actc->add_option("--in", input, "Polynomial JSON file")->required()->check(CLI::ExistingFile);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    const auto t0 = std::chrono::steady_clock::now();
    try
    {
        Report r;
        if (*detq)
            r = cmd_detq(N);
        else if (*pf)
            r = cmd_pfaffian(N, verify);
        else if (*ver)
            r = cmd_verify(suite, N, deg);
        else if (*zon)
            r = cmd_zonal(mu, N, compare);
        else if (*mac)
            r = cmd_macdonald(lambda, n, qs, ts);
        else
            r = cmd_act(side, op, input);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return emit(r, opt, ms);
    }
    catch (const UsageError &e)
    {
        std::cerr << "qz: " << e.what() << "\n";
        return 1;
    }
    catch (const NotOneDimensional &e)
    {
        std::cerr << "qz: " << e.what() << "\n";
        return 2;
    }
    catch (const NoConventionMatches &e)
    {
        std::cerr << "qz: " << e.what() << "\n";
        return 2;
    }
    catch (const Error &e)
    {
        // input errors: bad partition, odd ambient, caps, parse failures
        std::cerr << "qz: " << e.what() << "\n";
        return 1;
    }
}
