/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "model.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"

namespace nomenflow {

int NgramModel::label_index(std::string_view label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it != labels.end() && *it == label) {
        return static_cast<int>(it - labels.begin());
    }
    return -1;
}

void NgramModel::validate() const {
    features.validate();
    const size_t L = labels.size();
    if (L == 0) fail(ErrorCode::data_error, "model has no labels");
    if (!std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
        fail(ErrorCode::data_error, "label table must be sorted and unique");
    }
    if (dim == 0) fail(ErrorCode::data_error, "embedding dimension is zero");
    if (embeddings.size() != size_t(features.bucket_count) * dim ||
        weights.size() != L * dim || bias.size() != L) {
        fail(ErrorCode::data_error, "model matrix dimensions are inconsistent");
    }
    auto finite = [](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
    };
    if (!finite(embeddings) || !finite(weights) || !finite(bias)) {
        fail(ErrorCode::data_error, "model contains non-finite values");
    }
}

Prediction forward(const NgramModel& model, std::span<const uint32_t> feature_ids) {
    const size_t d = model.dim;
    const size_t L = model.label_count();

    std::vector<double> hidden(d, 0.0);
    if (!feature_ids.empty()) {
        for (uint32_t id : feature_ids) {
            const double* row = model.embedding_row(id);
            for (size_t k = 0; k < d; ++k) hidden[k] += row[k];
        }
        const double inv = 1.0 / static_cast<double>(feature_ids.size());
        for (double& h : hidden) h *= inv;
    }

    Prediction pred;
    pred.probabilities.resize(L);
    double max_logit = -HUGE_VAL;
    for (size_t l = 0; l < L; ++l) {
        const double* w = model.weight_row(l);
        double z = model.bias[l];
        for (size_t k = 0; k < d; ++k) z += w[k] * hidden[k];
        pred.probabilities[l] = z;
        max_logit = std::max(max_logit, z);
    }
    double sum = 0.0;
    for (double& p : pred.probabilities) {
        p = std::exp(p - max_logit);
        sum += p;
    }
    uint32_t top = 0;
    for (size_t l = 0; l < L; ++l) {
        pred.probabilities[l] /= sum;
        if (pred.probabilities[l] > pred.probabilities[top]) {
            top = static_cast<uint32_t>(l);  // strict > keeps the lowest index on ties
        }
    }
    pred.top_index = top;
    pred.top_probability = pred.probabilities[top];
    return pred;
}

Prediction predict(const NgramModel& model, std::string_view clean_name) {
    return forward(model, extract_features(clean_name, model.features));
}

std::vector<Prediction> predict_batch(const NgramModel& model,
                                      const std::vector<std::string>& clean_names) {
    std::vector<Prediction> out;
    out.reserve(clean_names.size());
    for (const auto& name : clean_names) {
        out.push_back(predict(model, name));
    }
    return out;
}

}  // namespace nomenflow
