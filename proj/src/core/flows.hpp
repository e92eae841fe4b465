/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iso3166.hpp"
#include "metrics.hpp"
#include "model.hpp"
#include "taxonomy.hpp"
#include "timeline.hpp"

namespace nomenflow {

enum class MoveClass { emigration, return_migration };
enum class OriginDef { academic, name };

const char* to_string(MoveClass c);
const char* to_string(OriginDef d);

struct Period {
    int start = 0;
    int end = 0;  // inclusive

    bool contains(int year) const { return year >= start && year <= end; }
    std::string label() const { return std::to_string(start) + "-" + std::to_string(end); }
};

// "1998:2007,2008:2017" -> two periods; throws Error(config_error)
std::vector<Period> parse_periods(std::string_view spec);

struct FlowKey {
    std::string source;
    std::string destination;
    std::string period;
    MoveClass classification = MoveClass::emigration;
    OriginDef origin_def = OriginDef::academic;

    auto operator<=>(const FlowKey&) const = default;
};

struct FlowTable {
    std::map<FlowKey, size_t> counts;

    void add(const FlowKey& key, size_t n = 1) { counts[key] += n; }
    std::string to_csv() const;

    bool operator==(const FlowTable&) const = default;
};

// return migration iff the destination is the origin country
MoveClass classify_event(const MigrationEvent& event, std::string_view origin);

struct OriginAssignment {
    std::string academic_origin;
    std::string name_origin_l3;
    double name_confidence_l3 = 0.0;
    std::string name_origin_l2;  // from the level-2 model, or the level-3 rollup
    double name_confidence_l2 = 0.0;
};

// Normalizes the record's name and predicts its origin; academic origin
// comes from the supplied (already trimmed) timeline. Throws
// Error(name_rejected) when the name does not survive preprocessing.
OriginAssignment assign_name_origin(const AuthorRecord& record, const CareerTimeline& timeline,
                                    const NgramModel& level3_model,
                                    const NgramModel* level2_model, const Taxonomy& taxonomy);

struct GenderKey {
    std::string source;
    std::string period;
    MoveClass classification = MoveClass::emigration;
    OriginDef origin_def = OriginDef::academic;
    Gender gender = Gender::unknown;

    auto operator<=>(const GenderKey&) const = default;
};

struct AnalyzeOptions {
    std::vector<Period> periods;  // empty: one period spanning the range
    int range_start = 0;          // 0/0: derive the range from the data
    int range_end = 0;
    int trim_margin = 2;
    int persistence = 2;
    bool level2_return = false;  // match returns on level-2 rollups when possible
    bool academic = true;
    bool name = true;
    size_t top_k = 5;
};

struct AnalysisResult {
    FlowTable flows;
    std::map<GenderKey, size_t> gender_counts;
    // affiliation country -> level-2 name-origin label -> distinct authors
    std::map<std::string, std::map<std::string, size_t>> composition;
    ConsistencyReport l2_consistency;  // filled when a level-2 model is given

    int range_start = 0;
    int range_end = 0;
    size_t authors_total = 0;
    size_t authors_active = 0;  // non-empty timeline after trimming
    size_t name_rejected = 0;
    size_t events_total = 0;
    size_t events_outside_periods = 0;

    // proportions, top-k destination lists, composition, counters
    std::string summary_json(const Taxonomy& taxonomy, size_t top_k = 5) const;
};

// Full migration pipeline over author records: timeline, censor trim, origin
// assignment, move detection, classification under the requested origin
// definitions, aggregation. level2_model may be null.
AnalysisResult analyze(const std::vector<AuthorRecord>& records,
                       const NgramModel* level3_model, const NgramModel* level2_model,
                       const Taxonomy& taxonomy, const AnalyzeOptions& options);

struct RecordsLoadResult {
    std::vector<AuthorRecord> records;
    size_t dropped_observations = 0;  // unknown-country observations
};

// JSON-lines author records:
//   {"author_id": "...", "name": "...", "gender"?: "female|male|unknown",
//    "observations": [{"year": 2001, "country": "DE"}, ...]}
// Structural problems raise ValidationError(data_error) listing every bad
// line; unknown observation countries are dropped and counted instead.
RecordsLoadResult load_records(const std::string& path, const CountryResolver& resolver);

// taxonomy continent when available, ISO continent otherwise
std::string_view continent_of(std::string_view country, const Taxonomy& taxonomy);

}  // namespace nomenflow
