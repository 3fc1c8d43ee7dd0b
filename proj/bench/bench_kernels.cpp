// Times the OpenMP kernels against the serial reference drivers and checks
// that both produce the same result.
//
//   torus_git_bench [repeats]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>

#include <omp.h>

#include "torus_git/polarization.hpp"
#include "torus_git/stability.hpp"

using namespace torus_git;

namespace {

double best_ms(int repeats, const std::function<void()>& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool same_cells(const stability::CellSweep& a, const stability::CellSweep& b) {
    if (a.cells.size() != b.cells.size() || a.support != b.support) return false;
    for (std::size_t k = 0; k < a.cells.size(); ++k) {
        const auto& x = a.cells[k].generic_verdict;
        const auto& y = b.cells[k].generic_verdict;
        if (x.kind != y.kind || x.hull != y.hull || x.directions != y.directions || x.destabilizer != y.destabilizer ||
            x.supporting != y.supporting)
            return false;
    }
    return true;
}

void row(const std::string& name, double par, double ser, bool agree) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed << std::setprecision(2)
              << std::setw(12) << par << std::setw(12) << ser << std::setw(9) << ser / par << "x"
              << "  " << (agree ? "agree" : "DISAGREE") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
    std::cout << "threads: " << omp_get_max_threads() << ", repeats: " << repeats << "\n";
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "omp ms" << std::setw(12)
              << "serial ms" << std::setw(10) << "speedup" << "\n";
    bool ok = true;

    const auto a3 = weyl::WeylGroup::enumerate(rootsys::build_root_datum(rootsys::SimpleType::A, 3));
    const auto a4 = weyl::WeylGroup::enumerate(rootsys::build_root_datum(rootsys::SimpleType::A, 4));
    const auto e6 = weyl::WeylGroup::enumerate(rootsys::build_root_datum(rootsys::SimpleType::E, 6));

    {
        const rootsys::Weight chi = rootsys::two_rho(e6.datum());
        polarization::ChiCertificate p, s;
        const double tp = best_ms(repeats, [&] { p = polarization::check_lemma1(e6, chi); });
        const double ts = best_ms(repeats, [&] { s = polarization::reference::check_lemma1(e6, chi); });
        const bool agree = p.passes() == s.passes() && p.failure.has_value() == s.failure.has_value();
        ok &= agree;
        row("check_lemma1 E6 2rho", tp, ts, agree);
    }
    for (const auto& [g, bound] : {std::pair{&a3, std::size_t{20}}, std::pair{&a4, std::size_t{30}}}) {
        std::vector<rootsys::Weight> p, s;
        const double tp = best_ms(repeats, [&] { p = polarization::search_chi(*g, bound); });
        const double ts = best_ms(repeats, [&] { s = polarization::reference::search_chi(*g, bound); });
        ok &= p == s;
        row("search_chi " + g->datum().label() + " bound " + std::to_string(bound), tp, ts, p == s);
    }
    for (const auto& [g, chi] : {std::pair{&a3, rootsys::Weight{{3, 3, 1}}}, std::pair{&a4, rootsys::Weight{{1, 2, 3, 4}}}}) {
        stability::CellSweep p, s;
        const int reps = g == &a4 ? 1 : repeats;
        const double tp = best_ms(reps, [&] { p = stability::classify_cells(*g, chi); });
        const double ts = best_ms(reps, [&] { s = stability::reference::classify_cells(*g, chi); });
        const bool agree = same_cells(p, s);
        ok &= agree;
        row("classify_cells " + g->datum().label(), tp, ts, agree);
    }
    return ok ? 0 : 1;
}
