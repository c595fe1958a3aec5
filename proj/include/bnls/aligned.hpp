#pragma once

#include <cstdlib>
#include <new>
#include <vector>

namespace bnls {

// 32-byte aligned allocator: keeps complex arrays on AVX2 register boundaries
// and in a single FFTW alignment class, so plans built once work on every
// buffer we hand them.
template <class T>
struct AlignedAlloc {
  using value_type = T;
  static constexpr std::size_t alignment = 32;

  AlignedAlloc() = default;
  template <class U>
  AlignedAlloc(const AlignedAlloc<U>&) {}

  T* allocate(std::size_t n) {
    void* p = std::aligned_alloc(alignment, round_up(n * sizeof(T)));
    if (!p) throw std::bad_alloc();
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t) noexcept { std::free(p); }

  friend bool operator==(const AlignedAlloc&, const AlignedAlloc&) { return true; }

 private:
  static std::size_t round_up(std::size_t bytes) {
    return (bytes + alignment - 1) / alignment * alignment;
  }
};

template <class T>
using aligned_vector = std::vector<T, AlignedAlloc<T>>;

}  // namespace bnls
