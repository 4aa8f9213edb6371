#pragma once

#include "gysin/geometry.hpp"
#include "gysin/tpoly.hpp"

#include <string>
#include <vector>

namespace gysin {

// Everything the coefficient extraction needs: the expanded kernel
// polynomial, the exponent vector, and the Segre bundle per variable.
struct KernelSpec {
    TPoly kernel;
    std::vector<int> exponents;
    std::vector<std::string> assign;
    bool halvable = false;

    KernelSpec() : kernel(0) {}
};

// prod_{i<j} (t_i - t_j), expanded.
TPoly kernel_a(int d, long long term_ceiling = kTermCeiling);

// prod_{i<j} (c_1(L) + t_i + t_j)(t_i - t_j); twist zero drops c_1(L), so
// each pair contributes t_i^2 - t_j^2.
TPoly kernel_c(int d, Twist twist, long long term_ceiling = kTermCeiling);

// kernel_c times prod_i (2 t_i + c_1(L)).
TPoly kernel_bd(int d, Twist twist, long long term_ceiling = kTermCeiling);

// Vandermonde times (c_1(L) + t_i + t_j) over the pairs with
// mu_i + mu_j > 2n + 1 only.
TPoly kernel_klc(const StrictPartition& mu, int n, Twist twist,
                 long long term_ceiling = kTermCeiling);

// "E_<k>"; KL geometries assign the flag member E_{mu_i} to t_i.
std::string kl_bundle_name(int k);

KernelSpec build_kernel_spec(const FlagGeometry& g,
                             long long term_ceiling = kTermCeiling);

}  // namespace gysin
