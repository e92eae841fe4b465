/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "train.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "error.hpp"
#include "rng.hpp"

namespace nomenflow {

void TrainConfig::validate() const {
    if (learning_rate <= 0) fail(ErrorCode::config_error, "learning_rate must be positive");
    if (epochs < 1) fail(ErrorCode::config_error, "epochs must be at least 1");
}

namespace {

// softmax probabilities and the mean-of-embeddings hidden vector
void forward_raw(const NgramModel& model, std::span<const uint32_t> ids,
                 std::vector<double>& hidden, std::vector<double>& probs) {
    const size_t d = model.dim;
    const size_t L = model.label_count();
    hidden.assign(d, 0.0);
    for (uint32_t id : ids) {
        const double* row = model.embedding_row(id);
        for (size_t k = 0; k < d; ++k) hidden[k] += row[k];
    }
    if (!ids.empty()) {
        const double inv = 1.0 / static_cast<double>(ids.size());
        for (double& h : hidden) h *= inv;
    }
    probs.assign(L, 0.0);
    double max_logit = -HUGE_VAL;
    for (size_t l = 0; l < L; ++l) {
        const double* w = model.weight_row(l);
        double z = model.bias[l];
        for (size_t k = 0; k < d; ++k) z += w[k] * hidden[k];
        probs[l] = z;
        max_logit = std::max(max_logit, z);
    }
    double sum = 0.0;
    for (double& p : probs) {
        p = std::exp(p - max_logit);
        sum += p;
    }
    for (double& p : probs) p /= sum;
}

double example_loss(const NgramModel& model, std::span<const uint32_t> ids, uint32_t label) {
    std::vector<double> hidden, probs;
    forward_raw(model, ids, hidden, probs);
    return -std::log(std::max(probs[label], 1e-300));
}

}  // namespace

TrainResult train(const Corpus& corpus, const Taxonomy& taxonomy, int level,
                  const FeatureConfig& features, const TrainConfig& config) {
    features.validate();
    config.validate();
    if (corpus.empty()) fail(ErrorCode::data_error, "cannot train on an empty corpus");

    TrainResult result;
    NgramModel& model = result.model;
    model.features = features;
    model.level = level;

    // label table: sorted distinct rolled-up labels
    std::map<std::string, uint32_t> label_ids;
    for (const auto& row : corpus) {
        label_ids.emplace(taxonomy.rollup(row.country, level), 0);
    }
    uint32_t next = 0;
    for (auto& [label, id] : label_ids) {
        id = next++;
        model.labels.push_back(label);
    }
    const size_t L = model.labels.size();
    if (L == 1) {
        result.warnings.push_back("degenerate_single_label: every example is " +
                                  model.labels.front());
    }

    // features and label per example, hashed once up front
    std::vector<std::vector<uint32_t>> ids(corpus.size());
    std::vector<uint32_t> labels(corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i) {
        ids[i] = extract_features(corpus[i].name, features);
        labels[i] = label_ids[taxonomy.rollup(corpus[i].country, level)];
    }

    Rng rng(config.seed);
    const size_t d = model.dim;
    model.embeddings.resize(size_t(features.bucket_count) * d);
    for (double& e : model.embeddings) {
        e = rng.uniform(-1.0, 1.0) / static_cast<double>(d);
    }
    model.weights.assign(L * d, 0.0);
    model.bias.assign(L, 0.0);

    std::vector<size_t> order(corpus.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;

    std::vector<double> hidden, probs, grad_hidden(d);
    std::unordered_map<uint32_t, uint32_t> feature_counts;
    const double total_steps = static_cast<double>(config.epochs) *
                               static_cast<double>(corpus.size());
    size_t step = 0;

    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        rng.shuffle(order);
        double loss_sum = 0.0;
        for (size_t i : order) {
            const auto& feats = ids[i];
            const uint32_t y = labels[i];
            forward_raw(model, feats, hidden, probs);
            loss_sum += -std::log(std::max(probs[y], 1e-300));

            double lr = config.learning_rate;
            if (config.linear_decay) {
                lr *= 1.0 - static_cast<double>(step) / total_steps;
            }
            ++step;

            // grad_hidden uses the pre-update weights
            std::fill(grad_hidden.begin(), grad_hidden.end(), 0.0);
            for (size_t l = 0; l < L; ++l) {
                const double g = probs[l] - (l == y ? 1.0 : 0.0);
                const double* w = model.weight_row(l);
                for (size_t k = 0; k < d; ++k) grad_hidden[k] += g * w[k];
            }
            for (size_t l = 0; l < L; ++l) {
                const double g = probs[l] - (l == y ? 1.0 : 0.0);
                double* w = model.weight_row(l);
                for (size_t k = 0; k < d; ++k) w[k] -= lr * g * hidden[k];
                model.bias[l] -= lr * g;
            }
            if (!feats.empty()) {
                feature_counts.clear();
                for (uint32_t id : feats) ++feature_counts[id];
                const double inv = 1.0 / static_cast<double>(feats.size());
                for (const auto& [id, count] : feature_counts) {
                    const double scale = lr * static_cast<double>(count) * inv;
                    double* row = model.embedding_row(id);
                    for (size_t k = 0; k < d; ++k) row[k] -= scale * grad_hidden[k];
                }
            }
        }
        result.epoch_loss.push_back(loss_sum / static_cast<double>(corpus.size()));
    }
    return result;
}

double gradient_check(const NgramModel& model, std::span<const uint32_t> feature_ids,
                      uint32_t true_label, double epsilon) {
    const size_t d = model.dim;
    const size_t L = model.label_count();

    std::vector<double> hidden, probs;
    forward_raw(model, feature_ids, hidden, probs);

    // analytic gradients
    std::vector<double> grad_w(L * d), grad_b(L), grad_hidden(d, 0.0);
    for (size_t l = 0; l < L; ++l) {
        const double g = probs[l] - (l == true_label ? 1.0 : 0.0);
        grad_b[l] = g;
        for (size_t k = 0; k < d; ++k) {
            grad_w[l * d + k] = g * hidden[k];
            grad_hidden[k] += g * model.weight_row(l)[k];
        }
    }
    std::unordered_map<uint32_t, uint32_t> feature_counts;
    for (uint32_t id : feature_ids) ++feature_counts[id];

    NgramModel probe = model;
    double max_rel = 0.0;
    auto check = [&](double* param, double analytic) {
        const double saved = *param;
        *param = saved + epsilon;
        const double up = example_loss(probe, feature_ids, true_label);
        *param = saved - epsilon;
        const double down = example_loss(probe, feature_ids, true_label);
        *param = saved;
        const double numeric = (up - down) / (2.0 * epsilon);
        const double rel = std::abs(analytic - numeric) /
                           std::max({std::abs(analytic), std::abs(numeric), 1e-4});
        max_rel = std::max(max_rel, rel);
    };

    for (size_t l = 0; l < L; ++l) {
        check(&probe.bias[l], grad_b[l]);
        for (size_t k = 0; k < d; ++k) {
            check(&probe.weights[l * d + k], grad_w[l * d + k]);
        }
    }
    const double inv = feature_ids.empty() ? 0.0 : 1.0 / static_cast<double>(feature_ids.size());
    for (const auto& [id, count] : feature_counts) {
        const double scale = static_cast<double>(count) * inv;
        for (size_t k = 0; k < d; ++k) {
            check(&probe.embeddings[size_t(id) * d + k], scale * grad_hidden[k]);
        }
    }
    return max_rel;
}

}  // namespace nomenflow
