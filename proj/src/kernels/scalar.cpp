#include <cassert>

#include "bettikit/kernels.hpp"

namespace bettikit::kernels::scalar {

void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p) {
  assert(dst.size() == src.size());
  for (std::size_t i = 0; i < dst.size(); ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(c) * src[i]) % p);
}

void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p) {
  for (auto& x : dst) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * x % p);
}

}  // namespace bettikit::kernels::scalar
