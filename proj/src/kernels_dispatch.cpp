#include "gcdvss/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace gcdvss::kernels {

#if defined(GCDVSS_HAVE_AVX2)
const KernelTable& avx2_table() noexcept;
#endif

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable* table_for(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return &scalar_table();
    case Isa::avx2:
#if defined(GCDVSS_HAVE_AVX2)
      if (__builtin_cpu_supports("avx2")) return &avx2_table();
#endif
      return nullptr;
  }
  return nullptr;
}

std::vector<const KernelTable*> available_tables() {
  std::vector<const KernelTable*> out;
  for (Isa isa : {Isa::scalar, Isa::avx2})
    if (const KernelTable* t = table_for(isa)) out.push_back(t);
  return out;
}

namespace {

const KernelTable& select() noexcept {
  if (const char* env = std::getenv("GCDVSS_SIMD")) {
    const std::string_view want{env};
    if (want == "scalar") return scalar_table();
    if (want == "avx2")
      if (const KernelTable* t = table_for(Isa::avx2)) return *t;
  }
  if (const KernelTable* t = table_for(Isa::avx2)) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable& active() noexcept {
  static const KernelTable& table = select();
  return table;
}

}  // namespace gcdvss::kernels
