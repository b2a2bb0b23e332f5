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

#include "fdtsc/codec.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace fdtsc {

namespace {

constexpr std::uint8_t kMagic[4] = {'F', 'D', 'T', '1'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
}

std::uint32_t get_u32(std::span<const std::uint8_t> b) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        v |= static_cast<std::uint32_t>(b[static_cast<std::size_t>(i)]) << (8 * i);
    }
    return v;
}

std::uint8_t trit_code(Trit t) noexcept {
    switch (t) {
        case Trit::Pos: return 0b01;
        case Trit::Neg: return 0b10;
        default: return 0b00;
    }
}

std::string_view trit_text(Trit t) noexcept {
    switch (t) {
        case Trit::Pos: return "1";
        case Trit::Neg: return "-1";
        default: return "0";
    }
}

}  // namespace

RleRun::RleRun(std::size_t count_, Trit value_) : count(count_), value(value_) {
    if (count == 0) {
        throw InvalidArgument("RLE run count must be >= 1");
    }
}

std::vector<RleRun> rle_runs(const FdVector& v) {
    std::vector<RleRun> runs;
    const auto t = v.trits();
    std::size_t start = 0;
    for (std::size_t i = 1; i <= t.size(); ++i) {
        if (i == t.size() || t[i] != t[start]) {
            runs.emplace_back(i - start, t[start]);
            start = i;
        }
    }
    return runs;
}

std::string rle_encode(const FdVector& v) {
    std::string out;
    for (const auto& run : rle_runs(v)) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(run.count);
        out += '#';
        out += trit_text(run.value);
    }
    return out;
}

FdVector rle_decode(std::string_view text, std::size_t expected_source_length, std::size_t window) {
    if (window < 1 || window > expected_source_length) {
        throw InvalidArgument("window does not fit the expected source length");
    }
    std::vector<Trit> trits;
    std::size_t token_index = 0;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        const auto where = "RLE token " + std::to_string(token_index + 1);

        const auto hash = token.find('#');
        if (hash == std::string_view::npos || hash == 0 || hash + 1 == token.size()) {
            throw CodecError(where + ": malformed token '" + std::string(token) + "'");
        }
        const auto count_text = token.substr(0, hash);
        const auto value_text = token.substr(hash + 1);

        std::size_t count = 0;
        auto [end, ec] = std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
        if (ec != std::errc{} || end != count_text.data() + count_text.size()) {
            throw CodecError(where + ": malformed count '" + std::string(count_text) + "'");
        }
        if (count == 0) {
            throw CodecError(where + ": zero count");
        }

        Trit value;
        if (value_text == "1") {
            value = Trit::Pos;
        } else if (value_text == "0") {
            value = Trit::Zero;
        } else if (value_text == "-1") {
            value = Trit::Neg;
        } else {
            throw CodecError(where + ": value outside alphabet '" + std::string(value_text) + "'");
        }

        if (count > expected_source_length || trits.size() + count > expected_source_length) {
            throw CodecError("RLE expands beyond the expected length");
        }
        trits.insert(trits.end(), count, value);

        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
        ++token_index;
    }
    const std::size_t expected = expected_source_length - window + 1;
    if (trits.size() != expected) {
        throw CodecError("RLE length mismatch: decoded " + std::to_string(trits.size()) + " trits, expected " +
                         std::to_string(expected));
    }
    return FdVector(std::move(trits), expected_source_length);
}

std::vector<std::uint8_t> pack_trits(const FdVector& v) {
    constexpr auto kMax = std::numeric_limits<std::uint32_t>::max();
    if (v.size() > kMax || v.source_length() > kMax) {
        throw InvalidArgument("FD vector too long for the 32-bit .fdt header");
    }
    std::vector<std::uint8_t> out(std::begin(kMagic), std::end(kMagic));
    out.reserve(kPackHeaderSize + (v.size() + 3) / 4);
    put_u32(out, static_cast<std::uint32_t>(v.size()));
    put_u32(out, static_cast<std::uint32_t>(v.source_length()));
    const auto t = v.trits();
    for (std::size_t k = 0; k < t.size(); k += 4) {
        std::uint8_t byte = 0;
        for (std::size_t j = 0; j < 4 && k + j < t.size(); ++j) {
            byte |= static_cast<std::uint8_t>(trit_code(t[k + j]) << (2 * j));
        }
        out.push_back(byte);
    }
    return out;
}

FdVector unpack_trits_prefix(std::span<const std::uint8_t> bytes, std::size_t& consumed) {
    if (bytes.size() < kPackHeaderSize) {
        throw CodecError("payload too short: missing .fdt header");
    }
    if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
        throw CodecError("bad magic: not an .fdt record");
    }
    const std::size_t count = get_u32(bytes.subspan(4, 4));
    const std::size_t source_length = get_u32(bytes.subspan(8, 4));
    if (count == 0 || count > source_length) {
        throw CodecError("inconsistent header: trit count " + std::to_string(count) + ", source length " +
                         std::to_string(source_length));
    }
    const std::size_t payload = (count + 3) / 4;
    if (bytes.size() - kPackHeaderSize < payload) {
        throw CodecError("payload too short: need " + std::to_string(payload) + " bytes, have " +
                         std::to_string(bytes.size() - kPackHeaderSize));
    }
    std::vector<Trit> trits(count);
    for (std::size_t k = 0; k < payload * 4; ++k) {
        const auto code = (bytes[kPackHeaderSize + k / 4] >> (2 * (k % 4))) & 0b11;
        if (k >= count) {
            if (code != 0) {
                throw CodecError("nonzero padding bits");
            }
            continue;
        }
        switch (code) {
            case 0b00: trits[k] = Trit::Zero; break;
            case 0b01: trits[k] = Trit::Pos; break;
            case 0b10: trits[k] = Trit::Neg; break;
            default: throw CodecError("invalid trit encoding at position " + std::to_string(k));
        }
    }
    consumed = kPackHeaderSize + payload;
    return FdVector(std::move(trits), source_length);
}

FdVector unpack_trits(std::span<const std::uint8_t> bytes) {
    std::size_t consumed = 0;
    auto v = unpack_trits_prefix(bytes, consumed);
    if (consumed != bytes.size()) {
        throw CodecError("declared count inconsistent with payload size: " +
                         std::to_string(bytes.size() - consumed) + " trailing bytes");
    }
    return v;
}

}  // namespace fdtsc
