#include "bnls/kernels.hpp"

#include <cstdlib>

#include "bnls/errors.hpp"

namespace bnls::kern {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

const KernelTable* pick_initial() {
  if (const char* env = std::getenv("BNLS_KERNEL_ISA")) {
    std::string want(env);
    if (want == "scalar") return &scalar_table;
    if (want == "avx2" && cpu_has_avx2()) return &avx2_table;
  }
  return cpu_has_avx2() ? &avx2_table : &scalar_table;
}

const KernelTable*& slot() {
  static const KernelTable* t = pick_initial();
  return t;
}

}  // namespace

const KernelTable& active() { return *slot(); }

void force(const std::string& name) {
  if (name == "scalar") {
    slot() = &scalar_table;
  } else if (name == "avx2") {
    if (!cpu_has_avx2()) throw ConfigError("avx2 kernels not supported on this cpu");
    slot() = &avx2_table;
  } else {
    throw ConfigError("unknown kernel isa: " + name);
  }
}

}  // namespace bnls::kern
