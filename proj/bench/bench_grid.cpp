// Timing comparison of the serial reference against the OpenMP grid map for
// the three evaluation-heavy kernels, with a bitwise equality check between
// the two paths.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "abp/grid.hpp"
#include "abp/resolvent.hpp"
#include "abp/scattering.hpp"

using namespace abp;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

template <class T, class F>
void run_case(const char* name, std::size_t n, F&& f) {
    const double t0 = now_ms();
    const auto serial = grid::map_serial<T>(n, f);
    const double t1 = now_ms();
    const auto parallel = grid::map_parallel<T>(n, f, 0);
    const double t2 = now_ms();

    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < n; ++i) identical = serial[i] == parallel[i];

    std::printf("%-28s %8zu pts   serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n",
                name, n, t1 - t0, t2 - t1, (t1 - t0) / std::max(1e-9, t2 - t1),
                identical ? "bitwise-identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP with up to %d threads\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both paths run serially\n");
#endif

    const FluxAlpha flux(0.3);
    const auto ext = ExtensionParam::theta(M_PI_2 * Matrix4::Identity());

    {
        const WaveVector kv(2.0, 0.4);
        const std::size_t nr = 96, nt = 32;
        run_case<cplx>("theta eigenfunction grid", nr * nt, [&](std::size_t i) {
            const double r = 0.05 + 30.0 * (double)(i / nt) / (nr - 1);
            const double th = 2.0 * M_PI * (double)(i % nt) / nt;
            return theta_eigenfunction(flux, ext, Spin::up, kv, Side::minus, PolarPoint(r, th),
                                       1e-12)(0);
        });
    }

    {
        const SpectralPoint z(cplx(-0.8, 1.3));
        const PolarPoint xp(1.0, 0.0);
        const std::size_t nr = 96, nt = 16;
        run_case<cplx>("krein resolvent kernel grid", nr * nt, [&](std::size_t i) {
            const double r = 2.0 + 28.0 * (double)(i / nt) / (nr - 1);
            const double th = 2.0 * M_PI * (double)(i % nt) / nt;
            return krein_kernel(flux, ext, z, PolarPoint(r, th), xp, 1e-12)(0, 0);
        });
    }

    {
        const WaveVector kv(1.0, 0.0);
        const std::size_t n = 4096;
        run_case<cplx>("scattering amplitude table", n, [&](std::size_t i) {
            const double w = 1e-3 + (2.0 * M_PI - 2e-3) * (double)i / (n - 1);
            return theta_amplitude(flux, ext, kv, Side::minus, Spin::up, Spin::up, w);
        });
    }
    return 0;
}
