/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "features.hpp"

#include "error.hpp"
#include "hash.hpp"

namespace nomenflow {

void FeatureConfig::validate() const {
    if (min_n < 1 || max_n < min_n) {
        fail(ErrorCode::config_error, "need 1 <= min_n <= max_n");
    }
    if (bucket_count < (1u << 16) || (bucket_count & (bucket_count - 1)) != 0) {
        fail(ErrorCode::config_error, "bucket_count must be a power of two >= 65536");
    }
}

std::vector<uint32_t> extract_features(std::string_view clean_name,
                                       const FeatureConfig& config) {
    std::vector<uint32_t> ids;
    const uint32_t mask = config.bucket_count - 1;
    std::string wrapped;
    size_t start = 0;
    while (start < clean_name.size()) {
        while (start < clean_name.size() && clean_name[start] == ' ') ++start;
        size_t end = start;
        while (end < clean_name.size() && clean_name[end] != ' ') ++end;
        if (end > start) {
            std::string_view token = clean_name.substr(start, end - start);
            wrapped.clear();
            wrapped.push_back('<');
            wrapped.append(token);
            wrapped.push_back('>');
            for (size_t len = static_cast<size_t>(config.min_n);
                 len <= static_cast<size_t>(config.max_n) && len <= wrapped.size(); ++len) {
                for (size_t i = 0; i + len <= wrapped.size(); ++i) {
                    ids.push_back(static_cast<uint32_t>(
                        fnv1a64(std::string_view(wrapped).substr(i, len)) & mask));
                }
            }
            if (config.include_tokens) {
                ids.push_back(static_cast<uint32_t>(fnv1a64(token) & mask));
            }
        }
        start = end;
    }
    return ids;
}

}  // namespace nomenflow
