/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <vector>

namespace nomenflow {

enum class Gender { female, male, unknown };

const char* to_string(Gender gender);
Gender gender_from_string(std::string_view s);  // unrecognized -> unknown

struct Observation {
    int year = 0;
    std::string country;  // alpha-2
};

struct AuthorRecord {
    std::string author_id;
    std::string name;  // raw, normalized downstream
    Gender gender = Gender::unknown;
    std::vector<Observation> observations;
};

// One resolved country per year, strictly increasing years, gaps allowed.
struct CareerTimeline {
    std::vector<std::pair<int, std::string>> years;

    bool empty() const { return years.empty(); }
};

struct MigrationEvent {
    std::string author_id;
    int year = 0;  // first year at the destination
    std::string source;
    std::string destination;
};

// Modal country per observed year. A tie goes to the country of the most
// recent resolved year if it is among the tied set, otherwise to the
// lexicographically smallest code.
CareerTimeline build_timeline(const AuthorRecord& record);

// Drops the first `margin` and last `margin` years of the declared dataset
// range to blunt left/right censoring. Run before any detection.
CareerTimeline censor_trim(const CareerTimeline& timeline, int range_start, int range_end,
                           int margin = 2);

// Country of the earliest resolved year; throws Error(data_error) when the
// timeline is empty.
std::string detect_academic_origin(const CareerTimeline& timeline);

// A change of residence A->B at year t counts as a move when B holds for at
// least `persistence` consecutive resolved years starting at t, or through
// the last resolved year. Shorter excursions that revert are ignored.
// Events are chronological and chainable (A->B then B->C).
std::vector<MigrationEvent> detect_moves(const CareerTimeline& timeline,
                                         const std::string& author_id, int persistence = 2);

}  // namespace nomenflow
