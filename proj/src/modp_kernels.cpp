#include "prymcalc/modp_kernels.hpp"

#include <atomic>

namespace prymcalc::kernels {

namespace scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(s) * src[i]) % p);
  }
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t s, std::uint32_t p) {
  for (auto& d : dst) d = static_cast<std::uint32_t>(static_cast<std::uint64_t>(s) * d % p);
}

}  // namespace scalar

namespace {

Isa probe() {
#if defined(__x86_64__) || defined(__i386__)
  if (avx2::supported()) return Isa::avx2;
#endif
  return Isa::scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{probe()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2:
      return "avx2";
    case Isa::scalar:
      break;
  }
  return "scalar";
}

Isa detected_isa() { return probe(); }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2::supported()) isa = Isa::scalar;
  active().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p) {
  if (active_isa() == Isa::avx2) {
    avx2::axpy_mod(dst, src, s, p);
  } else {
    scalar::axpy_mod(dst, src, s, p);
  }
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t s, std::uint32_t p) {
  if (active_isa() == Isa::avx2) {
    avx2::scale_mod(dst, s, p);
  } else {
    scalar::scale_mod(dst, s, p);
  }
}

}  // namespace prymcalc::kernels
