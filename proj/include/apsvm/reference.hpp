#pragma once

// Serial reference versions of the OpenMP-parallel kernels. Tests compare the
// parallel paths against these; the benchmark target times both.

#include "apsvm/diagnostics.hpp"
#include "apsvm/experiments.hpp"
#include "apsvm/rkhs.hpp"

namespace apsvm::reference {

Matrix gram_matrix(const KernelSpec& spec, const SampleMatrix& a, const SampleMatrix& b);

/// Plain triple loops over K_s and the explicit pseudo-inverse (no factored form).
Matrix indirect_gram(const IndirectKernelContext& ctx, const SampleMatrix& a);

HeterogeneityReport heterogeneity_check(const SampleMatrix& normals, const SampleMatrix& anomalous, const KernelSpec& spec,
                                        std::size_t m, std::size_t n_draws, std::uint64_t seed, double ridge = kLogDetRidge);

ExperimentReport benchmark(const BenchmarkConfig& config);

} // namespace apsvm::reference
