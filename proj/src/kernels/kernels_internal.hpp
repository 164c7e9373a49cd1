#pragma once

#include "swim/kernels/kernels.hpp"

namespace swim::kernels {

double weighted_popcount_scalar(const std::uint64_t* a, std::size_t n, const double* weights);

#if defined(SWIM_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace swim::kernels
