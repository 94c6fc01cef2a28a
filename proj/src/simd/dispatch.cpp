// SPDX-License-Identifier: MIT
// Copyright (c) 2026 The pfzeros Authors

#include <cstdlib>
#include <mutex>
#include <string>

#include "pfz/simd/kernels.hpp"

namespace pfz::simd {

namespace {

std::mutex g_mutex;
const KernelSet* g_forced = nullptr;

const KernelSet& pick_auto() {
  if (avx2_available()) return avx2_kernels();
  if (neon_available()) return neon_kernels();
  return scalar_kernels();
}

const KernelSet& pick_named(const std::string& name) {
  if (name == "scalar") return scalar_kernels();
  if (name == "avx2" && avx2_available()) return avx2_kernels();
  if (name == "neon" && neon_available()) return neon_kernels();
  // Unknown or unavailable requests degrade to the portable path rather than
  // aborting a run on foreign hardware.
  if (name == "avx2" || name == "neon") return scalar_kernels();
  return pick_auto();
}

const KernelSet& pick_env() {
  const char* env = std::getenv("PFZ_SIMD");
  if (env == nullptr || *env == '\0') return pick_auto();
  return pick_named(env);
}

}  // namespace

const KernelSet& active_kernels() {
  static const KernelSet& env_choice = pick_env();
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_forced ? *g_forced : env_choice;
}

void force_kernels(const std::string& name) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (name.empty() || name == "auto") {
    g_forced = nullptr;
  } else {
    g_forced = &pick_named(name);
  }
}

}  // namespace pfz::simd
