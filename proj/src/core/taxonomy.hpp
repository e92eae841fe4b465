/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nomenflow {

// Countries excluded from classifier training. They stay valid as
// affiliation countries in the migration analysis.
struct ExclusionPolicy {
    std::vector<std::string> excluded_countries;
    size_t min_class_size = 100;

    static ExclusionPolicy defaults();  // {US, CA, AU, NZ, ZA}, 100
};

// Three-level nationality taxonomy: country (level 3) -> group (level 2) ->
// family (level 1). Immutable after load; safe to share across threads.
class Taxonomy {
public:
    // Throws ValidationError listing every violation. A `#!expect` directive
    // in the file pins the label counts the validator enforces.
    static Taxonomy load(const std::string& path);

    bool contains(std::string_view country) const;

    // level 3 returns the country itself; levels 2 and 1 return the parent
    // labels. Throws Error(unknown_country).
    const std::string& rollup(std::string_view country, int level) const;

    // level-1 parent of a level-2 label; throws Error(unknown_country)
    const std::string& parent_of(std::string_view level2_label) const;

    // continent from the config row; throws Error(unknown_country)
    const std::string& continent(std::string_view country) const;

    const std::vector<std::string>& countries() const { return countries_; }
    const std::vector<std::string>& level2_labels() const { return level2_labels_; }
    const std::vector<std::string>& level1_labels() const { return level1_labels_; }

    // the twelve label names level-1 entries must come from
    static const std::vector<std::string>& canonical_level1_labels();

private:
    struct Node {
        std::string level2;
        std::string level1;
        std::string continent;
    };

    std::map<std::string, Node, std::less<>> nodes_;
    std::map<std::string, std::string, std::less<>> level2_to_level1_;
    std::vector<std::string> countries_;
    std::vector<std::string> level2_labels_;
    std::vector<std::string> level1_labels_;
};

}  // namespace nomenflow
