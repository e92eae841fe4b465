/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "model.hpp"
#include "taxonomy.hpp"

namespace nomenflow {

struct TrainConfig {
    double learning_rate = 0.1;
    int epochs = 5;
    uint64_t seed = 42;
    // scale the step linearly to zero over all updates instead of holding it
    bool linear_decay = false;

    void validate() const;
};

struct TrainResult {
    NgramModel model;
    std::vector<double> epoch_loss;  // mean cross-entropy per epoch, natural log
    std::vector<std::string> warnings;
};

// Single-example SGD on softmax cross-entropy. Labels come from rolling the
// row's country up to `level`; the label table is the sorted set of observed
// labels. Example order is reshuffled every epoch from config.seed, and runs
// are bit-reproducible given the seed. Only W, b, and the embedding rows of
// touched features change in a step.
TrainResult train(const Corpus& corpus, const Taxonomy& taxonomy, int level,
                  const FeatureConfig& features, const TrainConfig& config);

// Max relative error between analytic gradients and central finite
// differences over every parameter the example touches. Intended for small
// models (the cost is one forward pass per parameter and direction).
double gradient_check(const NgramModel& model, std::span<const uint32_t> feature_ids,
                      uint32_t true_label, double epsilon = 1e-3);

}  // namespace nomenflow
