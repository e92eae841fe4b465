/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "iso3166.hpp"

#include <algorithm>

#include "error.hpp"
#include "normalizer.hpp"
#include "text_io.hpp"

namespace nomenflow {

namespace {

#include "iso3166_table.inc"

// Shared key form for name matching: diacritics folded, punctuation to
// space, lowercase, single spaces.
std::string alias_key(std::string_view raw) {
    std::string folded = fold_unicode(raw);
    std::string key;
    key.reserve(folded.size());
    bool pending_space = false;
    for (char c : folded) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
            if (pending_space && !key.empty()) key.push_back(' ');
            pending_space = false;
            key.push_back(c);
        } else {
            pending_space = true;
        }
    }
    return key;
}

}  // namespace

const IsoEntry* iso_find(std::string_view alpha2) {
    if (alpha2.size() != 2) return nullptr;
    char code[3] = {alpha2[0], alpha2[1], '\0'};
    for (char& c : code) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    const IsoEntry* begin = kIsoTable;
    const IsoEntry* end = kIsoTable + kIsoTableSize;
    const IsoEntry* it = std::lower_bound(
        begin, end, std::string_view(code, 2),
        [](const IsoEntry& e, std::string_view v) { return std::string_view(e.code) < v; });
    if (it != end && std::string_view(it->code) == std::string_view(code, 2)) return it;
    return nullptr;
}

bool iso_valid(std::string_view alpha2) { return iso_find(alpha2) != nullptr; }

std::string_view iso_continent(std::string_view alpha2) {
    const IsoEntry* e = iso_find(alpha2);
    if (!e) fail(ErrorCode::unknown_country, "not an ISO 3166 code: " + std::string(alpha2));
    return e->continent;
}

CountryResolver::CountryResolver() {
    for (size_t i = 0; i < kIsoTableSize; ++i) {
        by_key_[alias_key(kIsoTable[i].name)] = kIsoTable[i].code;
    }
    // codes resolve to themselves, after names so that degenerate two-letter
    // name collisions cannot shadow a code
    for (size_t i = 0; i < kIsoTableSize; ++i) {
        char lc[3] = {kIsoTable[i].code[0], kIsoTable[i].code[1], '\0'};
        for (char& c : lc) {
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        }
        by_key_[lc] = kIsoTable[i].code;
    }
}

void CountryResolver::load_aliases(const std::string& path) {
    for_each_line(path, [&](size_t lineno, std::string_view line) {
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') return;
        auto fields = split_tab(t);
        if (fields.size() != 2) {
            fail(ErrorCode::parse_error,
                 path + ":" + std::to_string(lineno) + ": expected alias<TAB>code");
        }
        const IsoEntry* e = iso_find(fields[1]);
        if (!e) {
            fail(ErrorCode::parse_error, path + ":" + std::to_string(lineno) +
                                             ": not an ISO 3166 code: " + fields[1]);
        }
        by_key_[alias_key(fields[0])] = e->code;
    });
}

std::optional<std::string> CountryResolver::resolve(std::string_view raw) const {
    std::string key = alias_key(raw);
    if (key.empty()) return std::nullopt;
    auto it = by_key_.find(key);
    if (it != by_key_.end()) return it->second;
    return std::nullopt;
}

std::string CountryResolver::resolve_or_throw(std::string_view raw) const {
    auto code = resolve(raw);
    if (!code) fail(ErrorCode::unknown_country, "unknown country: " + std::string(raw));
    return *code;
}

}  // namespace nomenflow
