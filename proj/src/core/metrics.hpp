/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "taxonomy.hpp"

namespace nomenflow {

struct PerLabelMetrics {
    std::string label;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    size_t support = 0;  // true-label count
};

struct ConfusionMatrix {
    std::vector<std::string> labels;           // sorted union of observed labels
    std::vector<std::vector<size_t>> counts;   // rows = true, columns = predicted

    size_t total() const;
    // rows with support scaled to sum to 1; zero-support rows stay zero
    std::vector<std::vector<double>> row_normalized() const;
    std::string to_csv() const;
};

struct EvalReport {
    double accuracy = 0.0;
    double macro_f1 = 0.0;     // unweighted mean over observed labels
    double weighted_f1 = 0.0;  // support-weighted mean
    std::vector<PerLabelMetrics> per_label;
    ConfusionMatrix confusion;
    size_t total = 0;

    std::string to_json() const;
    std::string to_text() const;  // aligned columns for terminals
};

// Per-label precision/recall/F1 with the zero-when-undefined convention.
// Labels are averaged over the union observed in truths and predictions.
// Throws Error(invalid_argument) on empty or length-mismatched input.
EvalReport evaluate(const std::vector<std::string>& truths,
                    const std::vector<std::string>& predictions);

ConfusionMatrix confusion(const std::vector<std::string>& truths,
                          const std::vector<std::string>& predictions);

struct ConsistencyReport {
    size_t total = 0;
    size_t consistent = 0;
    double fraction = 0.0;
    // rolled-up level-3 prediction -> (total, consistent)
    std::map<std::string, std::pair<size_t, size_t>> per_group;

    std::string to_json() const;
};

// Fraction of examples whose level-3 prediction rolls up to the coarse
// model's prediction at coarse_level (1 or 2), with a per-group breakdown.
ConsistencyReport hierarchy_consistency(const std::vector<std::string>& level3_predictions,
                                        const std::vector<std::string>& coarse_predictions,
                                        const Taxonomy& taxonomy, int coarse_level);

}  // namespace nomenflow
