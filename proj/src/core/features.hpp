/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace nomenflow {

struct FeatureConfig {
    int min_n = 2;
    int max_n = 5;
    uint32_t bucket_count = 1u << 21;
    bool include_tokens = true;

    // 1 <= min_n <= max_n and bucket_count a power of two >= 2^16
    void validate() const;

    bool operator==(const FeatureConfig&) const = default;
};

// Hashed feature ids for a clean name: every token is wrapped in `<`...`>`
// boundary markers, all character n-grams with min_n <= length <= max_n are
// emitted, and the bare token is added as a whole-token feature when
// include_tokens is set. Duplicates are kept (multiset semantics). Each
// feature string is FNV-1a-64 hashed modulo bucket_count.
std::vector<uint32_t> extract_features(std::string_view clean_name, const FeatureConfig& config);

}  // namespace nomenflow
