/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "timeline.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"

namespace nomenflow {

const char* to_string(Gender gender) {
    switch (gender) {
        case Gender::female: return "female";
        case Gender::male: return "male";
        case Gender::unknown: return "unknown";
    }
    return "unknown";
}

Gender gender_from_string(std::string_view s) {
    if (s == "female" || s == "f") return Gender::female;
    if (s == "male" || s == "m") return Gender::male;
    return Gender::unknown;
}

CareerTimeline build_timeline(const AuthorRecord& record) {
    std::map<int, std::map<std::string, size_t>> by_year;
    for (const auto& obs : record.observations) {
        ++by_year[obs.year][obs.country];
    }
    CareerTimeline timeline;
    timeline.years.reserve(by_year.size());
    const std::string* previous = nullptr;
    for (const auto& [year, counts] : by_year) {
        size_t best = 0;
        for (const auto& [country, n] : counts) best = std::max(best, n);
        const std::string* chosen = nullptr;
        for (const auto& [country, n] : counts) {
            if (n != best) continue;
            if (previous && country == *previous) {  // tie-break: stay put
                chosen = &country;
                break;
            }
            if (!chosen) chosen = &country;  // map order = lexicographic fallback
        }
        timeline.years.emplace_back(year, *chosen);
        previous = &timeline.years.back().second;
    }
    return timeline;
}

CareerTimeline censor_trim(const CareerTimeline& timeline, int range_start, int range_end,
                           int margin) {
    if (range_end < range_start) {
        fail(ErrorCode::invalid_argument, "dataset year range is reversed");
    }
    if (margin < 0) fail(ErrorCode::invalid_argument, "trim margin must be non-negative");
    CareerTimeline out;
    for (const auto& [year, country] : timeline.years) {
        if (year < range_start + margin || year > range_end - margin) continue;
        out.years.emplace_back(year, country);
    }
    return out;
}

std::string detect_academic_origin(const CareerTimeline& timeline) {
    if (timeline.empty()) fail(ErrorCode::data_error, "empty timeline");
    return timeline.years.front().second;
}

std::vector<MigrationEvent> detect_moves(const CareerTimeline& timeline,
                                         const std::string& author_id, int persistence) {
    if (persistence < 1) fail(ErrorCode::invalid_argument, "persistence must be at least 1");
    std::vector<MigrationEvent> events;
    const auto& years = timeline.years;
    if (years.size() < 2) return events;

    std::string residence = years.front().second;
    for (size_t i = 1; i < years.size(); ++i) {
        const std::string& candidate = years[i].second;
        if (candidate == residence) continue;
        // length of the run of the candidate country starting here
        size_t run = 1;
        while (i + run < years.size() && years[i + run].second == candidate) ++run;
        const bool holds_to_end = i + run == years.size();
        if (run >= static_cast<size_t>(persistence) || holds_to_end) {
            events.push_back({author_id, years[i].first, residence, candidate});
            residence = candidate;
        }
        // a shorter excursion is transient: skip it without moving residence
        i += run - 1;
    }
    return events;
}

}  // namespace nomenflow
