/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "features.hpp"

namespace nomenflow {

struct Prediction {
    std::vector<double> probabilities;  // simplex over the label table
    uint32_t top_index = 0;
    double top_probability = 0.0;
};

// Averaged-embedding linear-softmax classifier over hashed character
// n-grams. Values are doubles in memory and float32 on disk. Immutable once
// trained or loaded; concurrent readers are safe.
struct NgramModel {
    FeatureConfig features;
    int level = 3;                      // taxonomy level this model predicts
    uint32_t dim = 100;                 // embedding width
    std::vector<std::string> labels;    // index -> label, sorted and unique
    std::vector<double> embeddings;     // bucket_count x dim, row-major
    std::vector<double> weights;        // L x dim, row-major
    std::vector<double> bias;           // L

    size_t label_count() const { return labels.size(); }

    double* embedding_row(uint32_t bucket) { return embeddings.data() + size_t(bucket) * dim; }
    const double* embedding_row(uint32_t bucket) const {
        return embeddings.data() + size_t(bucket) * dim;
    }
    double* weight_row(size_t label) { return weights.data() + label * dim; }
    const double* weight_row(size_t label) const { return weights.data() + label * dim; }

    // -1 when absent
    int label_index(std::string_view label) const;

    // dimension consistency and finiteness; throws Error(data_error)
    void validate() const;
};

// Mean of feature embeddings into W.h + b, softmax'd. Ties in the argmax go
// to the lowest label index. An empty feature set yields the bias-only
// logits.
Prediction forward(const NgramModel& model, std::span<const uint32_t> feature_ids);

Prediction predict(const NgramModel& model, std::string_view clean_name);

// Order-preserving; identical to mapping predict over the names.
std::vector<Prediction> predict_batch(const NgramModel& model,
                                      const std::vector<std::string>& clean_names);

}  // namespace nomenflow
