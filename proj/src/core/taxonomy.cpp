/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "taxonomy.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "error.hpp"
#include "iso3166.hpp"
#include "text_io.hpp"

namespace nomenflow {

namespace {

const std::set<std::string_view> kContinents = {"Africa", "Americas", "Antarctica",
                                                "Asia",   "Europe",   "Oceania"};

struct ExpectedCounts {
    std::optional<size_t> countries, level2, level1;
};

// `#!expect countries=175 level2=30 level1=12`
ExpectedCounts parse_expect(std::string_view line) {
    ExpectedCounts expect;
    auto fields = split_tab(line);
    for (const auto& field : fields) {
        std::string_view f = trim(field);
        auto eq = f.find('=');
        if (eq == std::string_view::npos) continue;
        std::string_view key = f.substr(0, eq);
        size_t value = 0;
        for (char c : f.substr(eq + 1)) {
            if (c < '0' || c > '9') return expect;
            value = value * 10 + static_cast<size_t>(c - '0');
        }
        if (key == "countries") expect.countries = value;
        if (key == "level2") expect.level2 = value;
        if (key == "level1") expect.level1 = value;
    }
    return expect;
}

}  // namespace

ExclusionPolicy ExclusionPolicy::defaults() {
    return ExclusionPolicy{{"US", "CA", "AU", "NZ", "ZA"}, 100};
}

const std::vector<std::string>& Taxonomy::canonical_level1_labels() {
    static const std::vector<std::string> labels = {
        "African", "East Asian", "English",       "German",  "Greek",  "Hispanic",
        "Jewish",  "Muslim",     "Nordic-Baltic", "Romance", "Slavic", "South Asian"};
    return labels;
}

Taxonomy Taxonomy::load(const std::string& path) {
    Taxonomy tax;
    std::vector<std::string> violations;
    ExpectedCounts expect;
    size_t rows = 0;

    const auto& canon = canonical_level1_labels();

    for_each_line(path, [&](size_t lineno, std::string_view line) {
        std::string_view t = trim(line);
        if (t.empty()) return;
        if (t.rfind("#!expect", 0) == 0) {
            expect = parse_expect(t.substr(8));
            return;
        }
        if (t.front() == '#') return;
        auto loc = [&] { return path + ":" + std::to_string(lineno); };
        auto fields = split_tab(t);
        if (fields.size() != 4) {
            violations.push_back("parse_error: " + loc() + ": expected 4 tab-separated columns");
            return;
        }
        ++rows;
        const std::string& country = fields[0];
        const std::string& level2 = fields[1];
        const std::string& level1 = fields[2];
        const std::string& continent = fields[3];

        if (!iso_valid(country)) {
            violations.push_back("unknown_country: " + loc() + ": " + country);
            return;
        }
        if (tax.nodes_.count(country)) {
            violations.push_back("duplicate_country: " + loc() + ": " + country);
            return;
        }
        if (level2.empty() || level1.empty()) {
            violations.push_back("missing_parent: " + loc() + ": " + country +
                                 " lacks a level-2 or level-1 label");
            return;
        }
        if (std::find(canon.begin(), canon.end(), level1) == canon.end()) {
            violations.push_back("unknown_level1_label: " + loc() + ": " + level1);
            return;
        }
        if (!kContinents.count(continent)) {
            violations.push_back("parse_error: " + loc() + ": unknown continent " + continent);
            return;
        }
        auto [it, inserted] = tax.level2_to_level1_.emplace(level2, level1);
        if (!inserted && it->second != level1) {
            violations.push_back("missing_parent: " + loc() + ": level-2 label " + level2 +
                                 " maps to both " + it->second + " and " + level1);
            return;
        }
        tax.nodes_.emplace(country, Node{level2, level1, continent});
    });

    if (rows == 0) {
        violations.push_back("parse_error: " + path + ": no taxonomy rows");
    }

    for (const auto& [country, node] : tax.nodes_) {
        tax.countries_.push_back(country);
    }
    std::set<std::string> l2s, l1s;
    for (const auto& [l2, l1] : tax.level2_to_level1_) {
        l2s.insert(l2);
        l1s.insert(l1);
    }
    tax.level2_labels_.assign(l2s.begin(), l2s.end());
    tax.level1_labels_.assign(l1s.begin(), l1s.end());

    auto check_count = [&](std::optional<size_t> want, size_t got, const char* what) {
        if (want && *want != got) {
            violations.push_back("count_mismatch: expected " + std::to_string(*want) + " " +
                                 what + ", found " + std::to_string(got));
        }
    };
    check_count(expect.countries, tax.countries_.size(), "countries");
    check_count(expect.level2, tax.level2_labels_.size(), "level-2 labels");
    check_count(expect.level1, tax.level1_labels_.size(), "level-1 labels");

    if (!violations.empty()) {
        std::string msg = path + ": " + std::to_string(violations.size()) + " violation(s):";
        for (const auto& v : violations) msg += "\n  " + v;
        throw ValidationError(ErrorCode::parse_error, msg, std::move(violations));
    }
    return tax;
}

bool Taxonomy::contains(std::string_view country) const {
    return nodes_.find(country) != nodes_.end();
}

const std::string& Taxonomy::rollup(std::string_view country, int level) const {
    auto it = nodes_.find(country);
    if (it == nodes_.end()) {
        fail(ErrorCode::unknown_country, "country not in taxonomy: " + std::string(country));
    }
    switch (level) {
        case 3: return it->first;
        case 2: return it->second.level2;
        case 1: return it->second.level1;
        default: fail(ErrorCode::invalid_argument, "taxonomy level must be 1, 2, or 3");
    }
}

const std::string& Taxonomy::parent_of(std::string_view level2_label) const {
    auto it = level2_to_level1_.find(level2_label);
    if (it == level2_to_level1_.end()) {
        fail(ErrorCode::unknown_country, "not a level-2 label: " + std::string(level2_label));
    }
    return it->second;
}

const std::string& Taxonomy::continent(std::string_view country) const {
    auto it = nodes_.find(country);
    if (it == nodes_.end()) {
        fail(ErrorCode::unknown_country, "country not in taxonomy: " + std::string(country));
    }
    return it->second.continent;
}

}  // namespace nomenflow
