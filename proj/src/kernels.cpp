/**
 * Copyright 2026 The noonsim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "noon/kernels.hpp"

namespace noon::kernels {

#if NOON_HAVE_AVX_KERNELS
namespace detail {
const Ops* avx_ops();
}
#endif

bool avx_supported() {
#if NOON_HAVE_AVX_KERNELS && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Ops& active() {
#if NOON_HAVE_AVX_KERNELS
    static const Ops& picked = avx_supported() ? *detail::avx_ops() : scalar();
    return picked;
#else
    return scalar();
#endif
}

const Ops* by_name(std::string_view name) {
    if (name == "scalar") return &scalar();
#if NOON_HAVE_AVX_KERNELS
    if (name == "avx" && avx_supported()) return detail::avx_ops();
#endif
    return nullptr;
}

} // namespace noon::kernels
