/**
 * Copyright 2026 The fdtsc Authors
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
 *
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fdtsc/core.hpp"

namespace fdtsc {

class CodecError : public DataError {
public:
    using DataError::DataError;
};

struct RleRun {
    std::size_t count;
    Trit value;

    RleRun(std::size_t count, Trit value);
    bool operator==(const RleRun&) const = default;
};

/// Maximal runs of v.
std::vector<RleRun> rle_runs(const FdVector& v);

/// "count#value" tokens joined by commas, e.g. "7#1,7#0,9#-1".
std::string rle_encode(const FdVector& v);

/// Accepts non-maximal runs ("3#1,2#1"). The expanded length must equal
/// expected_source_length - window + 1.
FdVector rle_decode(std::string_view text, std::size_t expected_source_length, std::size_t window);

// .fdt binary layout (little-endian):
//   "FDT1" | u32 trit count L | u32 source length n | ceil(L/4) payload bytes
// Trit k sits in bits 2*(k%4)..2*(k%4)+1 of payload byte k/4:
//   00 -> 0, 01 -> +1, 10 -> -1, 11 invalid. Unused trailing bits are 00.

inline constexpr std::size_t kPackHeaderSize = 12;

std::vector<std::uint8_t> pack_trits(const FdVector& v);

/// Exact inverse of pack_trits. Throws CodecError for bad magic, a payload
/// that is too short or too long, a 11 pattern, or nonzero padding bits.
FdVector unpack_trits(std::span<const std::uint8_t> bytes);

/// Decodes one record from the front of `bytes` and reports how many bytes it
/// used, so concatenated records can be read back one after another.
FdVector unpack_trits_prefix(std::span<const std::uint8_t> bytes, std::size_t& consumed);

}  // namespace fdtsc
