// Copyright 2026 The Doily Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doily/counting.h"

#include <stdexcept>

#include "doily/pauli.h"

namespace doily::counting {

namespace {

BigCount power(int base, int exponent) {
    if (exponent < 0) {
        throw std::domain_error("negative exponent in an integer count");
    }
    BigCount r = 1;
    for (int i = 0; i < exponent; ++i) {
        r *= base;
    }
    return r;
}

BigCount pow2(int exponent) { return power(2, exponent); }

BigCount exact_div(const BigCount& numerator, const BigCount& denominator, const char* what) {
    BigCount q, r;
    boost::multiprecision::divide_qr(numerator, denominator, q, r);
    if (r != 0) {
        throw InvariantViolation(std::string("inexact division in ") + what);
    }
    return q;
}

// prod_{i=1}^{count} (2^(top+1-i) + 1)
BigCount plus_one_product(int top, int count) {
    BigCount r = 1;
    for (int i = 1; i <= count; ++i) {
        r *= pow2(top + 1 - i) + 1;
    }
    return r;
}

void require_qubits(int qubits, int minimum) {
    if (qubits < minimum) {
        throw std::invalid_argument("qubit count must be at least " + std::to_string(minimum) +
                                    ", got " + std::to_string(qubits));
    }
}

// Gaussian binomial that is zero outside 0 <= k <= n, as the counting
// formulas use it for ranks below the subspace dimension.
BigCount gaussian_or_zero(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    return gaussian_binomial(n, k, 2);
}

// Totally isotropic vector k-spaces of a 2n-dimensional symplectic space.
BigCount isotropic_or_zero(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    return gaussian_binomial(n, k, 2) * plus_one_product(n, k);
}

}  // namespace

std::string to_decimal(const BigCount& value) { return value.str(); }

BigCount gaussian_binomial(int n, int k, int q) {
    if (q < 2) {
        throw std::invalid_argument("field order must be at least 2");
    }
    if (k < 0 || k > n) {
        throw std::invalid_argument("gaussian_binomial requires 0 <= k <= n");
    }
    BigCount numerator = 1;
    BigCount denominator = 1;
    for (int i = 1; i <= k; ++i) {
        numerator *= power(q, n - k + i) - 1;
        denominator *= power(q, i) - 1;
    }
    return exact_div(numerator, denominator, "gaussian_binomial");
}

BigCount subspaces_through_fixed(int n, int k, int l, int q) {
    if (l < 0 || l > k || k > n) {
        throw std::invalid_argument("subspaces_through_fixed requires 0 <= l <= k <= n");
    }
    return gaussian_binomial(n - l, k - l, q);
}

BigCount ti_subspaces(int qubits, int k) {
    require_qubits(qubits, 1);
    if (k < -1 || k > qubits - 1) {
        throw std::invalid_argument("totally isotropic dimension out of range");
    }
    return gaussian_binomial(qubits, k + 1, 2) * plus_one_product(qubits, k + 1);
}

BigCount ti_through_fixed(int qubits, int k, int m) {
    require_qubits(qubits, 1);
    if (m < -1 || m > k || k > qubits - 1) {
        throw std::invalid_argument("ti_through_fixed requires -1 <= m <= k <= N-1");
    }
    BigCount r = gaussian_binomial(qubits - m - 1, k - m, 2);
    for (int i = 1; i <= k - m; ++i) {
        r *= pow2(qubits - m - i) + 1;
    }
    return r;
}

BigCount count_linear(int qubits) {
    require_qubits(qubits, 2);
    const int n = qubits;
    BigCount all_solids = gaussian_binomial(2 * n, 4, 2);
    BigCount ti_solids = isotropic_or_zero(n, 4);
    BigCount ti_planes = gaussian_or_zero(n, 3);
    BigCount with_ti_plane = 0;
    if (ti_planes != 0) {
        // Each such solid carries exactly three totally isotropic planes.
        with_ti_plane = exact_div(7 * ti_planes * pow2(2 * n - 6) * plus_one_product(n, 3), 3,
                                  "count_linear");
    }
    return all_solids - ti_solids - with_ti_plane;
}

BigCount count_quadratic(int qubits) {
    require_qubits(qubits, 2);
    const int n = qubits;
    BigCount all_spaces = gaussian_or_zero(2 * n, 5);
    BigCount ti_spaces = isotropic_or_zero(n, 5);
    BigCount ti_solids = gaussian_or_zero(n, 4);
    BigCount with_ti_solid = 0;
    if (ti_solids != 0) {
        with_ti_solid = exact_div(15 * ti_solids * pow2(2 * n - 8) * plus_one_product(n, 4), 3,
                                  "count_quadratic");
    }
    return 16 * (all_spaces - ti_spaces - with_ti_solid);
}

BigCount count_total(int qubits) { return count_linear(qubits) + count_quadratic(qubits); }

BigCount theta2(int qubits) {
    require_qubits(qubits, 2);
    const int n = qubits;
    // (1/16) 2^(2N) * (2^(N-1)-1)(2^N-1)/((2-1)(4-1)) * (2^N+1)(2^(N-1)+1)
    BigCount numerator = pow2(2 * n - 4) * (pow2(n - 1) - 1) * (pow2(n) - 1) * plus_one_product(n, 2);
    return exact_div(numerator, 3, "theta2");
}

BigCount theta3(int qubits) {
    require_qubits(qubits, 3);
    const int n = qubits;
    // (7/3) 2^(2N-6) * prod_{i=1}^{3} (2^(N-3+i)-1)/(2^i-1) * prod_{i=1}^{3} (2^(N+1-i)+1)
    BigCount numerator = 7 * pow2(2 * n - 6) * (pow2(n - 2) - 1) * (pow2(n - 1) - 1) * (pow2(n) - 1) *
                         plus_one_product(n, 3);
    return exact_div(numerator, 3 * 1 * 3 * 7, "theta3");
}

BigCount count_linear_compact(int qubits) {
    require_qubits(qubits, 3);
    return exact_div(4 * power(4, qubits - 3) * theta2(qubits), 15, "count_linear_compact");
}

BigCount count_quadratic_compact(int qubits) {
    require_qubits(qubits, 3);
    return exact_div(48 * power(4, qubits - 3) * theta3(qubits), 15, "count_quadratic_compact");
}

}  // namespace doily::counting
