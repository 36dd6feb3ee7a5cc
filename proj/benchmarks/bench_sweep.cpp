// Times the parallel grid kernels against their serial references and
// confirms the outputs are bit-identical.  Build with OpenMP to see the
// speedup; without it both rows time the same code path.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "lwz/catalog.hpp"
#include "lwz/grid.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn&& fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* kernel, const char* surface, int nx, int ny,
            double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-10s  %-18s  %4dx%-4d  serial %8.1f ms  parallel %8.1f ms"
                "  speedup %5.2fx  %s\n",
                kernel, surface, nx, ny, serial_ms, parallel_ms,
                serial_ms / parallel_ms,
                identical ? "bit-identical" : "MISMATCH");
}

} // namespace

int main() {
    int failures = 0;

    {
        const auto entry = lwz::catalog_entry("enneper");
        const lwz::GridSpec grid{{-1.2, 1.2, -1.2, 1.2}, 513, 513};
        const lwz::Surface s{entry.data};
        std::vector<lwz::Vec3> serial, parallel;
        const double ts = time_ms(
            [&] { serial = lwz::sweep_positions_serial(s, grid); });
        const double tp =
            time_ms([&] { parallel = lwz::sweep_positions(s, grid); });
        const bool same =
            serial.size() == parallel.size() &&
            std::memcmp(serial.data(), parallel.data(),
                        serial.size() * sizeof(lwz::Vec3)) == 0;
        failures += !same;
        report("positions", entry.name.c_str(), grid.nx, grid.ny, ts, tp,
               same);
    }

    {
        const auto entry = lwz::catalog_entry("elliptic-catenoid");
        const lwz::GridSpec grid{{-0.7, 0.7, -0.7, 0.7}, 385, 385};
        std::vector<lwz::SurfaceJet> serial, parallel;
        const double ts = time_ms(
            [&] { serial = lwz::sweep_curvature_serial(entry.data, grid); });
        const double tp = time_ms(
            [&] { parallel = lwz::sweep_curvature(entry.data, grid); });
        bool same = serial.size() == parallel.size();
        if (same)
            for (std::size_t i = 0; i < serial.size(); ++i)
                same = same && serial[i].lambda == parallel[i].lambda &&
                       serial[i].K == parallel[i].K &&
                       serial[i].Q == parallel[i].Q &&
                       serial[i].R == parallel[i].R &&
                       serial[i].cls == parallel[i].cls;
        failures += !same;
        report("curvature", entry.name.c_str(), grid.nx, grid.ny, ts, tp,
               same);
    }

    {
        const auto entry = lwz::catalog_entry("flat-bscroll");
        const lwz::GridSpec grid{{-1.0, 1.0, -1.0, 1.0}, 513, 257};
        const lwz::Surface s{entry.data};
        std::vector<lwz::Vec3> serial, parallel;
        const double ts = time_ms(
            [&] { serial = lwz::sweep_positions_serial(s, grid); });
        const double tp =
            time_ms([&] { parallel = lwz::sweep_positions(s, grid); });
        const bool same =
            serial.size() == parallel.size() &&
            std::memcmp(serial.data(), parallel.data(),
                        serial.size() * sizeof(lwz::Vec3)) == 0;
        failures += !same;
        report("positions", entry.name.c_str(), grid.nx, grid.ny, ts, tp,
               same);
    }

    return failures == 0 ? 0 : 1;
}
