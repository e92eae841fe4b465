/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "error.hpp"

#include <nlohmann/json.hpp>

namespace nomenflow {

size_t ConfusionMatrix::total() const {
    size_t n = 0;
    for (const auto& row : counts) {
        for (size_t c : row) n += c;
    }
    return n;
}

std::vector<std::vector<double>> ConfusionMatrix::row_normalized() const {
    std::vector<std::vector<double>> out(counts.size(),
                                         std::vector<double>(labels.size(), 0.0));
    for (size_t i = 0; i < counts.size(); ++i) {
        size_t support = 0;
        for (size_t c : counts[i]) support += c;
        if (support == 0) continue;
        for (size_t j = 0; j < counts[i].size(); ++j) {
            out[i][j] = static_cast<double>(counts[i][j]) / static_cast<double>(support);
        }
    }
    return out;
}

std::string ConfusionMatrix::to_csv() const {
    std::string out = "true\\predicted";
    for (const auto& l : labels) out += "," + l;
    out += "\n";
    for (size_t i = 0; i < labels.size(); ++i) {
        out += labels[i];
        for (size_t j = 0; j < labels.size(); ++j) {
            out += "," + std::to_string(counts[i][j]);
        }
        out += "\n";
    }
    return out;
}

namespace {

void check_inputs(const std::vector<std::string>& truths,
                  const std::vector<std::string>& predictions) {
    if (truths.size() != predictions.size()) {
        fail(ErrorCode::invalid_argument, "truths and predictions differ in length");
    }
    if (truths.empty()) {
        fail(ErrorCode::invalid_argument, "nothing to evaluate");
    }
}

}  // namespace

ConfusionMatrix confusion(const std::vector<std::string>& truths,
                          const std::vector<std::string>& predictions) {
    check_inputs(truths, predictions);
    std::set<std::string> observed(truths.begin(), truths.end());
    observed.insert(predictions.begin(), predictions.end());

    ConfusionMatrix cm;
    cm.labels.assign(observed.begin(), observed.end());
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < cm.labels.size(); ++i) index[cm.labels[i]] = i;
    cm.counts.assign(cm.labels.size(), std::vector<size_t>(cm.labels.size(), 0));
    for (size_t i = 0; i < truths.size(); ++i) {
        ++cm.counts[index[truths[i]]][index[predictions[i]]];
    }
    return cm;
}

EvalReport evaluate(const std::vector<std::string>& truths,
                    const std::vector<std::string>& predictions) {
    EvalReport report;
    report.confusion = confusion(truths, predictions);
    report.total = truths.size();

    const auto& cm = report.confusion;
    const size_t L = cm.labels.size();
    size_t correct = 0;
    double macro_sum = 0.0;
    double weighted_sum = 0.0;

    for (size_t i = 0; i < L; ++i) {
        const size_t tp = cm.counts[i][i];
        size_t support = 0, predicted = 0;
        for (size_t j = 0; j < L; ++j) {
            support += cm.counts[i][j];
            predicted += cm.counts[j][i];
        }
        correct += tp;

        PerLabelMetrics m;
        m.label = cm.labels[i];
        m.support = support;
        m.precision = predicted ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
        m.recall = support ? static_cast<double>(tp) / static_cast<double>(support) : 0.0;
        m.f1 = (m.precision + m.recall) > 0.0
                   ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                   : 0.0;
        macro_sum += m.f1;
        weighted_sum += m.f1 * static_cast<double>(support);
        report.per_label.push_back(std::move(m));
    }

    report.accuracy = static_cast<double>(correct) / static_cast<double>(report.total);
    report.macro_f1 = macro_sum / static_cast<double>(L);
    report.weighted_f1 = weighted_sum / static_cast<double>(report.total);
    return report;
}

std::string EvalReport::to_json() const {
    nlohmann::json j;
    j["accuracy"] = accuracy;
    j["macro_f1"] = macro_f1;
    j["weighted_f1"] = weighted_f1;
    j["total"] = total;
    auto& labels = j["per_label"] = nlohmann::json::array();
    for (const auto& m : per_label) {
        labels.push_back({{"label", m.label},
                          {"precision", m.precision},
                          {"recall", m.recall},
                          {"f1", m.f1},
                          {"support", m.support}});
    }
    j["confusion"] = {{"labels", confusion.labels}, {"counts", confusion.counts}};
    return j.dump(2);
}

std::string EvalReport::to_text() const {
    size_t width = 5;
    for (const auto& m : per_label) width = std::max(width, m.label.size());
    char line[256];
    std::string out;
    std::snprintf(line, sizeof(line), "%-*s %9s %9s %9s %9s\n", static_cast<int>(width),
                  "label", "precision", "recall", "f1", "support");
    out += line;
    for (const auto& m : per_label) {
        std::snprintf(line, sizeof(line), "%-*s %9.4f %9.4f %9.4f %9zu\n",
                      static_cast<int>(width), m.label.c_str(), m.precision, m.recall, m.f1,
                      m.support);
        out += line;
    }
    std::snprintf(line, sizeof(line),
                  "\naccuracy %.6f  macro_f1 %.6f  weighted_f1 %.6f  (n=%zu)\n", accuracy,
                  macro_f1, weighted_f1, total);
    out += line;
    return out;
}

ConsistencyReport hierarchy_consistency(const std::vector<std::string>& level3_predictions,
                                        const std::vector<std::string>& coarse_predictions,
                                        const Taxonomy& taxonomy, int coarse_level) {
    if (level3_predictions.size() != coarse_predictions.size()) {
        fail(ErrorCode::invalid_argument, "prediction lists differ in length");
    }
    if (coarse_level != 1 && coarse_level != 2) {
        fail(ErrorCode::invalid_argument, "coarse level must be 1 or 2");
    }
    ConsistencyReport report;
    report.total = level3_predictions.size();
    for (size_t i = 0; i < level3_predictions.size(); ++i) {
        const std::string& rolled = taxonomy.rollup(level3_predictions[i], coarse_level);
        auto& [group_total, group_consistent] = report.per_group[rolled];
        ++group_total;
        if (rolled == coarse_predictions[i]) {
            ++group_consistent;
            ++report.consistent;
        }
    }
    report.fraction = report.total
                          ? static_cast<double>(report.consistent) /
                                static_cast<double>(report.total)
                          : 0.0;
    return report;
}

std::string ConsistencyReport::to_json() const {
    nlohmann::json j;
    j["total"] = total;
    j["consistent"] = consistent;
    j["fraction"] = fraction;
    auto& groups = j["per_group"] = nlohmann::json::object();
    for (const auto& [label, pair] : per_group) {
        groups[label] = {{"total", pair.first},
                         {"consistent", pair.second},
                         {"fraction", pair.first ? static_cast<double>(pair.second) /
                                                       static_cast<double>(pair.first)
                                                 : 0.0}};
    }
    return j.dump(2);
}

}  // namespace nomenflow
