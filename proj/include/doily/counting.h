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

#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

// Closed-form subspace and doily counts over GF(2). All dimensions passed to
// the ti_* functions are projective; gaussian_binomial takes vector dimensions.
namespace doily::counting {

using BigCount = boost::multiprecision::cpp_int;

std::string to_decimal(const BigCount& value);

/// Number of k-dimensional subspaces of GF(q)^n.
BigCount gaussian_binomial(int n, int k, int q = 2);

/// Number of k-dimensional subspaces of GF(q)^n containing a fixed l-dimensional one.
BigCount subspaces_through_fixed(int n, int k, int l, int q = 2);

/// Totally isotropic projective k-spaces of W(2N-1, 2), -1 <= k <= N-1.
BigCount ti_subspaces(int qubits, int k);

/// Totally isotropic projective k-spaces of W(2N-1, 2) through a fixed
/// totally isotropic m-space, -1 <= m <= k <= N-1.
BigCount ti_through_fixed(int qubits, int k, int m);

/// Doilies spanning a PG(3,2).
BigCount count_linear(int qubits);
/// Doilies spanning a PG(4,2); zero for two qubits.
BigCount count_quadratic(int qubits);
BigCount count_total(int qubits);

/// PG(2,2)s of PG(2N-1,2) carrying exactly three totally isotropic lines.
BigCount theta2(int qubits);
/// PG(3,2)s of PG(2N-1,2) carrying exactly three totally isotropic planes.
BigCount theta3(int qubits);

/// (4/15) 4^(N-3) theta2(N), N >= 3.
BigCount count_linear_compact(int qubits);
/// (48/15) 4^(N-3) theta3(N), N >= 3.
BigCount count_quadratic_compact(int qubits);

}  // namespace doily::counting
