/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace nomenflow {

struct IsoEntry {
    const char* code;       // alpha-2
    const char* name;       // short English name
    const char* continent;  // UN M49 continental region
};

// nullptr when the code is not an assigned ISO 3166-1 alpha-2 code
const IsoEntry* iso_find(std::string_view alpha2);

bool iso_valid(std::string_view alpha2);

// Throws Error(unknown_country) for unassigned codes.
std::string_view iso_continent(std::string_view alpha2);

// Maps country-name variants to alpha-2 codes. Canonical ISO names and the
// codes themselves are built in; alias config files add more spellings.
// Matching is insensitive to case, punctuation, and diacritics.
class CountryResolver {
public:
    CountryResolver();

    // alias file rows: alias<TAB>code, `#` comments
    void load_aliases(const std::string& path);

    std::optional<std::string> resolve(std::string_view raw) const;

    // resolve() that throws Error(unknown_country) instead
    std::string resolve_or_throw(std::string_view raw) const;

private:
    std::unordered_map<std::string, std::string> by_key_;
};

}  // namespace nomenflow
