#include <atomic>
#include <stdexcept>

#include "bettikit/kernels.hpp"

namespace bettikit::kernels {

namespace {

Backend detect() { return avx2::supported() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "unknown";
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2::supported()) throw std::runtime_error("CPU does not support AVX2");
  current().store(b, std::memory_order_relaxed);
}

void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p) {
  if (active_backend() == Backend::avx2 && p < avx2::kModulusLimit)
    avx2::axpy(dst, src, c, p);
  else
    scalar::axpy(dst, src, c, p);
}

void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  if (active_backend() == Backend::avx2 && p < avx2::kModulusLimit)
    avx2::scale(dst, c, p);
  else
    scalar::scale(dst, c, p);
}

}  // namespace bettikit::kernels
