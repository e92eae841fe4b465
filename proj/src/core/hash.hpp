/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace nomenflow {

// FNV-1a, 64-bit. Feature strings are hashed with this before the bucket
// modulo, so the function is part of the model file contract.
inline uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// CRC-32 (IEEE 802.3, reflected 0xEDB88320). Pass the previous value to
// continue a running checksum.
uint32_t crc32(const void* data, size_t len, uint32_t crc = 0);

}  // namespace nomenflow
