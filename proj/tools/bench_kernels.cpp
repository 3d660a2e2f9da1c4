// Benchmark harness for the three scan kernels, comparing the serial
// reference implementations against their OpenMP variants and insisting on
// identical results before reporting any timing.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "nubar/errors.hpp"
#include "nubar/kernels.hpp"

using namespace nubar;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-28s serial %10.2f ms   parallel %10.2f ms   speedup %5.2fx\n",
                name.c_str(), serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main() {
    std::printf("openmp: %s\n", kernels::openmp_enabled() ? "enabled" : "disabled");

    {
        MonomialIdeal ideal =
            MonomialIdeal::normalize(3, {{4, 0, 0}, {0, 5, 0}, {0, 0, 6}, {1, 2, 1}});
        long long k = 24;
        long long serial_count = 0, parallel_count = 0;
        double s = time_ms([&] { serial_count = kernels::colength_closure_serial(ideal, k); });
        double par =
            time_ms([&] { parallel_count = kernels::colength_closure_parallel(ideal, k); });
        check(serial_count == parallel_count, "colength kernels agree");
        std::printf("colength(I, %lld) = %lld\n", k, serial_count);
        report("colength_closure", s, par);
    }

    {
        MonomialIdeal ideal =
            MonomialIdeal::normalize(3, {{3, 0, 0}, {0, 4, 0}, {0, 0, 5}, {1, 1, 2}});
        int bound = 12;
        kernels::GapScan a, b;
        double s = time_ms([&] { a = kernels::izumi_scan_serial(ideal, bound); });
        double par = time_ms([&] { b = kernels::izumi_scan_parallel(ideal, bound); });
        check(a.max_gap == b.max_gap && a.argmax == b.argmax &&
                  a.per_degree_max == b.per_degree_max,
              "gap-scan kernels agree");
        std::printf("max gap through degree %d: %s at %s\n", bound,
                    a.max_gap.str().c_str(),
                    monomial_str(a.argmax, default_vars(3)).c_str());
        report("izumi_scan", s, par);
    }

    {
        long long b0 = 12, bg = 60;
        kernels::BranchScan a, b;
        double s = time_ms([&] { a = kernels::branch_scan_serial(b0, bg); });
        double par = time_ms([&] { b = kernels::branch_scan_parallel(b0, bg); });
        check(a.sequence_count == b.sequence_count && a.delta_sum == b.delta_sum &&
                  a.conductor_sum == b.conductor_sum &&
                  a.closure_checksum == b.closure_checksum,
              "branch-scan kernels agree");
        std::printf("branches(beta0 <= %lld, betag <= %lld): %lld sequences, "
                    "delta sum %lld\n",
                    b0, bg, a.sequence_count, a.delta_sum);
        report("branch_scan", s, par);
    }

    std::printf("all kernel pairs agree\n");
    return 0;
}
