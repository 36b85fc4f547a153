// Timing comparison between the OpenMP kernels and their serial reference
// implementations: structure enumeration and the simplicity sweep.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "verlie/classify.hpp"
#include "verlie/liealg.hpp"

using namespace verlie;

namespace {

template <typename F>
double time_ms(F&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-34s %12s %12s %8s\n", "kernel", "serial ms", "parallel ms", "match");

    const Field& f2 = Field::gf(1);

    {
        Ver4Object x = make_object(1, 1);
        std::vector<BracketStructure> a, b;
        double ts = time_ms([&] { a = enumerate_structures_serial(x, f2); });
        double tp = time_ms([&] { b = enumerate_structures(x, f2); });
        std::printf("%-34s %12.2f %12.2f %8s\n", "enumerate (1,1)/gf2", ts, tp,
                    a == b ? "yes" : "NO");
    }
    {
        Ver4Object x = make_object(0, 2);
        std::vector<BracketStructure> a, b;
        double ts = time_ms([&] { a = enumerate_structures_serial(x, f2); });
        double tp = time_ms([&] { b = enumerate_structures(x, f2); });
        std::printf("%-34s %12.2f %12.2f %8s\n", "enumerate (0,2)/gf2", ts, tp,
                    a == b ? "yes" : "NO");
    }
    {
        GlAlgebra gl = make_gl(make_object(2, 1), f2);
        SubAlgebra psl = make_psl(gl);
        bool a = false, b = false;
        double ts = time_ms([&] { a = is_simple_lie_serial(psl.structure); });
        double tp = time_ms([&] { b = is_simple_lie(psl.structure); });
        std::printf("%-34s %12.2f %12.2f %8s\n", "simplicity psl(2*1+P)/gf2", ts, tp,
                    a == b ? "yes" : "NO");
    }
    return 0;
}
