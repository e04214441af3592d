// Compares the OpenMP kernels against their serial references on a
// synthetic panel and reports wall times plus the observed speedup.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fxnet/pipeline.hpp"
#include "fxnet/returns.hpp"
#include "fxnet/serial_ref.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, seconds_since(start));
    }
    return best;
}

}  // namespace

int main() {
    const int assets = 120;
    const int days = 2500;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("panel: %d assets x %d days\n\n", assets, days);

    std::istringstream csv(fxnet::generate_fixture(7, assets, days));
    const auto records = fxnet::parse_price_records(csv);
    const auto panel = fxnet::align_panel(records, fxnet::MissingPolicy::DropDate);
    const auto returns = fxnet::panel_returns(panel);

    fxnet::SimilarityMatrix sim_serial, sim_parallel;
    const double t_sim_serial =
        time_best_of(3, [&] { sim_serial = fxnet::serial::build_similarity_matrix(returns); });
    const double t_sim_parallel =
        time_best_of(3, [&] { sim_parallel = fxnet::build_similarity_matrix(returns); });
    double max_diff = 0.0;
    for (std::size_t i = 0; i < sim_serial.rv.data.size(); ++i)
        max_diff = std::max(max_diff,
                            std::fabs(sim_serial.rv.data[i] - sim_parallel.rv.data[i]));
    std::printf("similarity matrix  serial %8.4fs  parallel %8.4fs  speedup %5.2fx  max|diff| %g\n",
                t_sim_serial, t_sim_parallel, t_sim_serial / t_sim_parallel, max_diff);

    const auto tree = fxnet::kruskal_mst(sim_parallel);

    fxnet::CentralityScores close_serial, close_parallel;
    const double t_close_serial =
        time_best_of(5, [&] { close_serial = fxnet::serial::closeness_centrality(tree); });
    const double t_close_parallel =
        time_best_of(5, [&] { close_parallel = fxnet::closeness_centrality(tree); });
    max_diff = 0.0;
    for (std::size_t i = 0; i < close_serial.values.size(); ++i)
        max_diff = std::max(max_diff,
                            std::fabs(close_serial.values[i] - close_parallel.values[i]));
    std::printf("closeness          serial %8.4fs  parallel %8.4fs  speedup %5.2fx  max|diff| %g\n",
                t_close_serial, t_close_parallel, t_close_serial / t_close_parallel, max_diff);

    fxnet::CentralityScores btw_serial, btw_parallel;
    const double t_btw_serial =
        time_best_of(5, [&] { btw_serial = fxnet::serial::betweenness_centrality(tree); });
    const double t_btw_parallel =
        time_best_of(5, [&] { btw_parallel = fxnet::betweenness_centrality(tree); });
    max_diff = 0.0;
    for (std::size_t i = 0; i < btw_serial.values.size(); ++i)
        max_diff =
            std::max(max_diff, std::fabs(btw_serial.values[i] - btw_parallel.values[i]));
    std::printf("betweenness        serial %8.4fs  parallel %8.4fs  speedup %5.2fx  max|diff| %g\n",
                t_btw_serial, t_btw_parallel, t_btw_serial / t_btw_parallel, max_diff);

    return 0;
}
