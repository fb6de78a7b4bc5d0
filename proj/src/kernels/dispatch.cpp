// Copyright 2026 The QRW Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "qrw/kernels/kernels.hpp"

namespace qrw::kernels {

#if defined(QRW_HAVE_AVX2)
const KernelSet &avx2_kernel_table();
#endif

const KernelSet *avx2_kernels() {
#if defined(QRW_HAVE_AVX2)
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &avx2_kernel_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelSet &active_kernels() {
    static const KernelSet &chosen = [] () -> const KernelSet & {
        const char *forced = std::getenv("QRW_KERNELS");
        if (forced != nullptr && std::string_view(forced) == "scalar") {
            return scalar_kernels();
        }
        const KernelSet *vector = avx2_kernels();
        return vector != nullptr ? *vector : scalar_kernels();
    }();
    return chosen;
}

}  // namespace qrw::kernels
