#pragma once

#include <complex>
#include <cstdint>

namespace qho {

using cplx = std::complex<double>;

}  // namespace qho
