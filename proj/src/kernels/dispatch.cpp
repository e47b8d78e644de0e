#include <atomic>
#include <cstdlib>

#include "orthopoly/kernels.hpp"

namespace orthopoly::kernels {

namespace {

Isa probe() noexcept {
#if defined(ORTHOPOLY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  if (__builtin_cpu_supports("avx2")) return Isa::avx2;
#endif
#if defined(ORTHOPOLY_HAVE_NEON)
  return Isa::neon;
#endif
  return Isa::scalar;
}

Isa initial_isa() noexcept {
  const Isa best = probe();
  const char* env = std::getenv("ORTHOPOLY_ISA");
  if (env == nullptr) return best;
  for (Isa candidate : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (to_string(candidate) == env && isa_supported(candidate)) return candidate;
  }
  return best;
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

Isa detected_isa() noexcept {
  static const Isa isa = probe();
  return isa;
}

bool isa_supported(Isa isa) noexcept {
  if (isa == Isa::scalar) return true;
  return isa == detected_isa();
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

bool set_active_isa(Isa isa) noexcept {
  if (!isa_supported(isa)) return false;
  active().store(isa, std::memory_order_relaxed);
  return true;
}

ClassifyRowFn classify_row_for(Isa isa) {
  switch (isa) {
#if defined(ORTHOPOLY_HAVE_AVX2)
    case Isa::avx2: return classify_row_avx2;
#endif
#if defined(ORTHOPOLY_HAVE_NEON)
    case Isa::neon: return classify_row_neon;
#endif
    default: return classify_row_scalar;
  }
}

CountMarkedFn count_marked_for(Isa isa) {
  switch (isa) {
#if defined(ORTHOPOLY_HAVE_AVX2)
    case Isa::avx2: return count_marked_avx2;
#endif
#if defined(ORTHOPOLY_HAVE_NEON)
    case Isa::neon: return count_marked_neon;
#endif
    default: return count_marked_scalar;
  }
}

CountVerticesFn count_vertices_for(Isa isa) {
  switch (isa) {
#if defined(ORTHOPOLY_HAVE_AVX2)
    case Isa::avx2: return count_vertices_avx2;
#endif
#if defined(ORTHOPOLY_HAVE_NEON)
    case Isa::neon: return count_vertices_neon;
#endif
    default: return count_vertices_scalar;
  }
}

ClassifyRowFn classify_row() { return classify_row_for(active_isa()); }
CountMarkedFn count_marked() { return count_marked_for(active_isa()); }
CountVerticesFn count_vertices() { return count_vertices_for(active_isa()); }

}  // namespace orthopoly::kernels
