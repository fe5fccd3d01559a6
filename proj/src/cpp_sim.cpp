#include "cpcop/cpp_sim.hpp"

#include <cmath>
#include <stdexcept>

#include "cpcop/parallel.hpp"
#include "cpcop/poisson.hpp"

namespace cpcop {

void validate(const CppParams& params) {
    if (!(params.intensity > 0.0) || !std::isfinite(params.intensity)) {
        throw std::domain_error("CppParams: intensity must be positive and finite");
    }
    if (!(params.jumps.shift_x >= 0.0) || !std::isfinite(params.jumps.shift_x) ||
        !(params.jumps.shift_y >= 0.0) || !std::isfinite(params.jumps.shift_y)) {
        throw std::domain_error("CppParams: shifts must be finite and non-negative");
    }
}

CppSample sample_cpp(const CppParams& params, Rng& rng) {
    validate(params);
    const std::uint64_t k = sample_poisson(params.intensity, rng);
    double sx = 0.0, sy = 0.0;
    for (std::uint64_t j = 0; j < k; ++j) {
        const UnitPoint p = sample_copula(params.jumps.copula, rng);
        sx += p.u;
        sy += p.v;
    }
    // Per-jump shift added once as k*(c,d); identical to shifting each jump.
    const double kd = static_cast<double>(k);
    return {sx + kd * params.jumps.shift_x, sy + kd * params.jumps.shift_y, k};
}

std::vector<CppSample> cpp_sample_batch(const CppParams& params, std::size_t n,
                                        RngState base, std::size_t chunk_size) {
    if (n == 0) throw std::invalid_argument("cpp_sample_batch: n must be >= 1");
    validate(params);
    std::vector<CppSample> out(n);
    parallel_chunks(n, chunk_size, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
        Rng rng(base.seed, base.stream + chunk);
        for (std::size_t i = begin; i < end; ++i) out[i] = sample_cpp(params, rng);
    });
    return out;
}

}  // namespace cpcop
