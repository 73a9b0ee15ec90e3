#include "capelli/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <thread>

#include "capelli/fusion.hpp"
#include "capelli/weyl.hpp"
#include "capelli/yangian.hpp"

namespace capelli::verify {

namespace {

using Clock = std::chrono::steady_clock;

// Runs fn(k) for k in [0, count) on a worker pool; results land in
// per-case slots so the merge is deterministic.
void parallel_cases(int count, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || count <= 1) {
        for (int k = 0; k < count; ++k) fn(k);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    int workers = std::min(jobs, count);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&]() {
            while (true) {
                int k = next.fetch_add(1);
                if (k >= count) return;
                fn(k);
            }
        });
    for (auto& th : pool) th.join();
}

std::vector<YoungDiagram> shapes_up_to(int max_boxes) {
    std::vector<YoungDiagram> shapes;
    for (int n = 1; n <= max_boxes; ++n)
        for (auto& s : YoungDiagram::all_with_boxes(n)) shapes.push_back(std::move(s));
    return shapes;
}

// First differing term of two group-algebra elements, for failure reports.
std::string first_diff(const GroupAlgebraElement<Rational>& got,
                       const GroupAlgebraElement<Rational>& want) {
    for (const auto& [p, c] : want.terms()) {
        Rational g = got.coefficient(p);
        if (g != c) return "at " + p.str() + ": got " + g.str() + ", want " + c.str();
    }
    for (const auto& [p, c] : got.terms()) {
        if (want.coefficient(p) != c) return "extra term at " + p.str() + ": " + c.str();
    }
    return "no difference";
}

std::string first_diff(const WeylElement& got, const WeylElement& want) {
    WeylElement d = got - want;
    if (d.is_zero()) return "no difference";
    const auto& [key, coeff] = *d.terms().begin();
    std::string label = "x[";
    for (size_t p = 0; p < key.x.size(); ++p) label += (p ? "," : "") + std::to_string(key.x[p]);
    label += "] d[";
    for (size_t p = 0; p < key.d.size(); ++p) label += (p ? "," : "") + std::to_string(key.d[p]);
    label += "]";
    return "coefficient differs by " + coeff.str() + " at " + label;
}

CriterionResult timed(int id, const std::string& name,
                      const std::function<std::pair<bool, std::string>()>& body) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    auto start = Clock::now();
    auto [ok, detail] = body();
    r.passed = ok;
    r.detail = detail;
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

CriterionResult fusion_theorem(const SweepConfig& cfg) {
    return timed(1, "fusion theorem: limit equals the matrix element", [&] {
        for (const auto& shape : shapes_up_to(cfg.max_fusion_boxes)) {
            GroupAlgebraElement<Rational> got = fusion_limit(shape);
            GroupAlgebraElement<Rational> want = symmetrizers(shape).Phi;
            if (got != want)
                return std::pair{false, "shape " + shape.str() + ", " + first_diff(got, want)};
        }
        return std::pair{true, std::string("all partitions with n <= ") +
                                   std::to_string(cfg.max_fusion_boxes)};
    });
}

CriterionResult upsilon_equals_qp(const SweepConfig& cfg) {
    return timed(2, "upsilon limit equals Q*P", [&] {
        for (const auto& shape : shapes_up_to(cfg.max_fusion_boxes)) {
            Symmetrizers sym = symmetrizers(shape);
            GroupAlgebraElement<Rational> got = upsilon_limit(shape);
            GroupAlgebraElement<Rational> want = sym.Q * sym.P;
            if (got != want)
                return std::pair{false, "shape " + shape.str() + ", " + first_diff(got, want)};
        }
        return std::pair{true, std::string("all partitions with n <= ") +
                                   std::to_string(cfg.max_fusion_boxes)};
    });
}

CriterionResult identity_coefficient_and_idempotency(const SweepConfig& cfg) {
    return timed(3, "identity coefficient 1 and idempotency", [&] {
        for (const auto& shape : shapes_up_to(cfg.max_fusion_boxes)) {
            Symmetrizers sym = symmetrizers(shape);
            Rational id_coeff = sym.Phi.coefficient(Permutation(shape.size()));
            if (!id_coeff.is_one())
                return std::pair{false, "identity coefficient " + id_coeff.str() + ", shape " +
                                            shape.str()};
            GroupAlgebraElement<Rational> e = y_coefficients(shape);
            if (e * e != e)
                return std::pair{false,
                                 "idempotency, shape " + shape.str() + ", " + first_diff(e * e, e)};
        }
        return std::pair{true, std::string("all partitions with n <= ") +
                                   std::to_string(cfg.max_fusion_boxes)};
    });
}

CriterionResult local_identities(const SweepConfig&) {
    return timed(4, "local rational-function identities", [&] {
        LocalIdentityReport rep = verify_local_identities();
        return std::pair{rep.ok, rep.ok ? std::string("3 samples each + symbolic line")
                                        : rep.failure};
    });
}

CriterionResult one_row_extension(const SweepConfig& cfg) {
    return timed(5, "one-row extension identity", [&] {
        for (const auto& shape : shapes_up_to(cfg.max_fusion_boxes)) {
            if (!verify_one_row_extension(shape)) return std::pair{false, "shape " + shape.str()};
        }
        return std::pair{true, std::string("all partitions with n <= ") +
                                   std::to_string(cfg.max_fusion_boxes)};
    });
}

CriterionResult pole_bounds(const SweepConfig& cfg) {
    return timed(6, "pole order bounds for the two-diagram product", [&] {
        std::vector<YoungDiagram> left = shapes_up_to(cfg.max_pair_n);
        std::vector<YoungDiagram> right = shapes_up_to(cfg.max_pair_m);
        int count = static_cast<int>(left.size() * right.size());
        std::vector<std::string> failures(count);
        parallel_cases(count, resolve_jobs(cfg.jobs), [&](int k) {
            const YoungDiagram& la = left[k / right.size()];
            const YoungDiagram& mu = right[k % right.size()];
            int pole = pole_order_phi(la, mu);
            int bound = la.rank() - (la.contained_in(mu) ? 0 : 1);
            if (pole > bound)
                failures[k] = "lambda=" + la.str() + " mu=" + mu.str() +
                              " pole=" + std::to_string(pole) +
                              " bound=" + std::to_string(bound);
        });
        for (const auto& f : failures)
            if (!f.empty()) return std::pair{false, f};
        return std::pair{true, std::to_string(count) + " pairs"};
    });
}

CriterionResult rtt(const SweepConfig& cfg) {
    return timed(7, "RTT relation under the evaluation map", [&] {
        for (int N = 1; N <= cfg.max_gl_n; ++N)
            if (!verify_rtt_evaluation(N)) return std::pair{false, "N=" + std::to_string(N)};
        return std::pair{true, "N <= " + std::to_string(cfg.max_gl_n)};
    });
}

CriterionResult projected_action(const SweepConfig& cfg) {
    return timed(8, "evaluation action on the projected subspace", [&] {
        struct Case {
            YoungDiagram shape;
            int N;
        };
        std::vector<Case> cases;
        for (const auto& shape : shapes_up_to(4))
            for (int N = 1; N <= cfg.max_gl_n; ++N)
                if (shape.rows() <= N) cases.push_back({shape, N});
        std::vector<std::string> failures(cases.size());
        parallel_cases(static_cast<int>(cases.size()), resolve_jobs(cfg.jobs), [&](int k) {
            if (!verify_projected_action(cases[k].shape, cases[k].N))
                failures[k] = "shape " + cases[k].shape.str() + " N=" + std::to_string(cases[k].N);
        });
        for (const auto& f : failures)
            if (!f.empty()) return std::pair{false, f};
        return std::pair{true, std::to_string(cases.size()) + " cases (n <= 4)"};
    });
}

CriterionResult qdet(const SweepConfig& cfg) {
    return timed(9, "quantum determinant centrality and divisibility", [&] {
        for (int N = 1; N <= cfg.max_gl_n; ++N) {
            QuantumDeterminant qd = quantum_determinant(N);
            for (int k = 0; k < N; ++k)
                if (!qd.coefficients[k].is_central())
                    return std::pair{false,
                                     "pi(D_" + std::to_string(k + 1) + ") not central, N=" +
                                         std::to_string(N)};
            if (!verify_qdet_divisibility(N))
                return std::pair{false, "divisibility, N=" + std::to_string(N)};
        }
        return std::pair{true, "N <= " + std::to_string(cfg.max_gl_n)};
    });
}

CriterionResult central_coefficients(const SweepConfig& cfg) {
    return timed(10, "centrality and leading term of the trace polynomial", [&] {
        for (const auto& shape : shapes_up_to(3))
            for (int N = 1; N <= cfg.max_gl_n; ++N) {
                UglPoly p = e_lambda_poly(shape, N);
                for (int k = 0; k <= p.degree(); ++k)
                    if (!p.coeff(k).is_central())
                        return std::pair{false, "z-coefficient " + std::to_string(k) +
                                                    ", shape " + shape.str() +
                                                    " N=" + std::to_string(N)};
                UglElement lead = p.coeff(shape.size());
                UglElement expect(f_projector(shape, N).trace());
                if (!(lead - expect).is_zero())
                    return std::pair{false,
                                     "leading term, shape " + shape.str() + " N=" + std::to_string(N)};
            }
        return std::pair{true, "n <= 3, N <= " + std::to_string(cfg.max_gl_n)};
    });
}

CriterionResult vanishing(const SweepConfig& cfg) {
    return timed(11, "vanishing on smaller diagrams", [&] {
        struct Case {
            YoungDiagram lambda, mu;
            int N;
        };
        std::vector<Case> cases;
        for (int n = 2; n <= 3; ++n)
            for (const auto& la : YoungDiagram::all_with_boxes(n))
                for (int m = 1; m < n; ++m)
                    for (const auto& mu : YoungDiagram::all_with_boxes(m))
                        for (int N = 1; N <= cfg.max_gl_n; ++N)
                            if (mu.rows() <= N) cases.push_back({la, mu, N});
        std::vector<std::string> failures(cases.size());
        parallel_cases(static_cast<int>(cases.size()), resolve_jobs(cfg.jobs), [&](int k) {
            if (!verify_vanishing(cases[k].lambda, cases[k].mu, cases[k].N))
                failures[k] = "lambda=" + cases[k].lambda.str() + " mu=" + cases[k].mu.str() +
                              " N=" + std::to_string(cases[k].N);
        });
        for (const auto& f : failures)
            if (!f.empty()) return std::pair{false, f};
        return std::pair{true, std::to_string(cases.size()) + " cases"};
    });
}

std::vector<std::tuple<YoungDiagram, int, int>> capelli_cases(const SweepConfig& cfg) {
    std::vector<std::tuple<YoungDiagram, int, int>> cases;
    for (const auto& shape : shapes_up_to(3))
        for (int N = 1; N <= cfg.max_gl_n; ++N)
            for (int M = 1; M <= cfg.max_gl_m; ++M) cases.emplace_back(shape, N, M);
    if (cfg.max_gl_n >= 2 && cfg.max_gl_m >= 2)
        for (const auto& shape : YoungDiagram::all_with_boxes(4)) cases.emplace_back(shape, 2, 2);
    return cases;
}

CriterionResult capelli_identities(const SweepConfig& cfg) {
    return timed(12, "higher Capelli identities", [&] {
        auto cases = capelli_cases(cfg);
        std::vector<std::string> failures(cases.size());
        parallel_cases(static_cast<int>(cases.size()), resolve_jobs(cfg.jobs), [&](int k) {
            const auto& [shape, N, M] = cases[k];
            if (!verify_capelli_identity(shape, N, M)) {
                WeylElement image = ugl_to_weyl(e_lambda(shape, N, Rational(0)), M);
                WeylElement direct = c_lambda(shape, N, M);
                WeylElement ordered = capelli_product(shape, N, M);
                std::string diff = image != direct ? "image vs (1.1): " + first_diff(image, direct)
                                                   : "(1.1) vs (1.3): " + first_diff(direct, ordered);
                failures[k] = "shape " + shape.str() + " N=" + std::to_string(N) +
                              " M=" + std::to_string(M) + ", " + diff;
            }
        });
        for (const auto& f : failures)
            if (!f.empty()) return std::pair{false, f};
        return std::pair{true, std::to_string(cases.size()) + " cases"};
    });
}

CriterionResult invariance(const SweepConfig& cfg) {
    return timed(13, "invariance of the Capelli operators", [&] {
        auto cases = capelli_cases(cfg);
        std::vector<std::string> failures(cases.size());
        parallel_cases(static_cast<int>(cases.size()), resolve_jobs(cfg.jobs), [&](int k) {
            const auto& [shape, N, M] = cases[k];
            if (!verify_invariance(shape, N, M))
                failures[k] = "shape " + shape.str() + " N=" + std::to_string(N) +
                              " M=" + std::to_string(M);
        });
        for (const auto& f : failures)
            if (!f.empty()) return std::pair{false, f};
        return std::pair{true, std::to_string(cases.size()) + " cases"};
    });
}

CriterionResult cross_oracles(const SweepConfig& cfg) {
    return timed(14, "cross-oracle checks", [&] {
        // Characters: recursion vs coefficient extraction, n <= 4.
        for (int n = 1; n <= 4; ++n)
            for (const auto& shape : YoungDiagram::all_with_boxes(n)) {
                std::vector<int> img(n);
                for (int k = 0; k < n; ++k) img[k] = k + 1;
                do {
                    Permutation sigma = Permutation::from_images(img);
                    if (character(shape, sigma) != character_via_matrix_element(shape, sigma))
                        return std::pair{false, "character mismatch, shape " + shape.str() +
                                                    " sigma " + sigma.str()};
                } while (std::next_permutation(img.begin(), img.end()));
            }
        // Dimensions: enumeration vs hooks (checked inside dimension()),
        // plus the sum-of-squares identity, n <= 6.
        for (int n = 1; n <= 6; ++n) {
            long total = 0;
            for (const auto& shape : YoungDiagram::all_with_boxes(n)) {
                long d = dimension(shape);
                total += d * d;
            }
            long fact = 1;
            for (int k = 2; k <= n; ++k) fact *= k;
            if (total != fact)
                return std::pair{false, "sum of squared dimensions, n=" + std::to_string(n)};
        }
        // The coordinate realization is an algebra map: images of PBW
        // products match products of images, on seeded pseudo-random
        // low-degree elements.
        unsigned long seed = 0x5DEECE66DULL;
        auto next = [&seed](int bound) {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            return static_cast<int>((seed >> 33) % bound);
        };
        for (int N = 1; N <= cfg.max_gl_n; ++N)
            for (int trial = 0; trial < 6; ++trial) {
                auto random_element = [&]() {
                    UglElement x = UglElement::zero(N);
                    for (int t = 0; t < 3; ++t) {
                        UglElement mono = UglElement(Rational(next(7) - 3));
                        int deg = 1 + next(2);
                        for (int d = 0; d < deg; ++d)
                            mono = mono * UglElement::generator(N, next(N) + 1, next(N) + 1);
                        x = x + mono;
                    }
                    return x;
                };
                UglElement a = random_element(), b = random_element();
                if (ugl_to_weyl(a * b, N) != ugl_to_weyl(a, N) * ugl_to_weyl(b, N))
                    return std::pair{false, "coordinate realization not multiplicative, N=" +
                                                std::to_string(N)};
            }
        return std::pair{true, std::string("characters, dimensions, algebra map")};
    });
}

}  // namespace

int resolve_jobs(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CAPELLI_JOBS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<std::pair<std::string, Criterion>> all_criteria() {
    return {
        {"fusion", fusion_theorem},
        {"fusion", upsilon_equals_qp},
        {"fusion", identity_coefficient_and_idempotency},
        {"fusion", local_identities},
        {"fusion", one_row_extension},
        {"pole", pole_bounds},
        {"rtt", rtt},
        {"rtt", projected_action},
        {"rtt", qdet},
        {"rtt", central_coefficients},
        {"rtt", vanishing},
        {"capelli", capelli_identities},
        {"capelli", invariance},
        {"capelli", cross_oracles},
    };
}

std::vector<std::pair<std::string, Criterion>> suite(const std::string& name) {
    if (name == "all") return all_criteria();
    std::vector<std::pair<std::string, Criterion>> out;
    for (auto& [tag, fn] : all_criteria())
        if (tag == name) out.emplace_back(tag, fn);
    if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'");
    return out;
}

bool run(const std::vector<std::pair<std::string, Criterion>>& criteria, const SweepConfig& cfg,
         std::ostream& out) {
    bool all_ok = true;
    for (const auto& [tag, fn] : criteria) {
        CriterionResult r = fn(cfg);
        all_ok = all_ok && r.passed;
        out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " ("
            << r.detail << ") [" << std::fixed << std::setprecision(1) << r.seconds << "s]\n";
        out.flush();
    }
    return all_ok;
}

}  // namespace capelli::verify
