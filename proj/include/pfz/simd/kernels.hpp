// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors
#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace pfz::simd {

using cplx = std::complex<double>;

// Low-level statevector gate kernels.  Qubit 0 is the most significant bit of
// the amplitude index, so qubit q of an n-qubit register owns bit
// (n - 1 - q) and has stride 1 << (n - 1 - q).
//
// Matrices are row-major over the target bits: for one-qubit kernels the
// basis is {|0>, |1>} of the target; for two-qubit kernels it is
// {|00>, |01>, |10>, |11>} where the first bit belongs to the first target
// argument.  Diagonal kernels take just the diagonal entries.
struct KernelSet {
  const char* name;
  void (*apply_1q)(cplx* amps, int n_qubits, int target, const cplx* m2x2);
  void (*apply_1q_diag)(cplx* amps, int n_qubits, int target, cplx d0, cplx d1);
  void (*apply_2q)(cplx* amps, int n_qubits, int q0, int q1, const cplx* m4x4);
  void (*apply_2q_diag)(cplx* amps, int n_qubits, int q0, int q1, const cplx* d4);
  double (*norm_sq)(const cplx* amps, std::size_t n);
  // <sigma_z> of `target`: bit 0 counts +1, bit 1 counts -1.
  double (*expect_z)(const cplx* amps, int n_qubits, int target);
};

const KernelSet& scalar_kernels();

// Present on every build; whether the accelerated paths are usable is a
// runtime question answered by *_available().
const KernelSet& avx2_kernels();
bool avx2_available();
const KernelSet& neon_kernels();
bool neon_available();

// Runtime selection: PFZ_SIMD=scalar|avx2|neon|auto (default auto) read once;
// force_kernels() overrides for tests and the CLI flag.
const KernelSet& active_kernels();
void force_kernels(const std::string& name);  // "" or "auto" resets

}  // namespace pfz::simd
