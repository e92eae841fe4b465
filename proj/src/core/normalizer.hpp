/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nomenflow {

enum class NameStatus { ok, invalid_chars, empty_after_cleaning };

const char* to_string(NameStatus status);

struct NormalizationOutcome {
    NameStatus status = NameStatus::empty_after_cleaning;
    std::string text;  // clean name when status == ok, empty otherwise

    bool ok() const { return status == NameStatus::ok; }
};

// Honorifics stripped from token boundaries. The built-in lists are small on
// purpose; load() replaces them from a `prefix<TAB>token` / `suffix<TAB>token`
// config file.
struct AffixConfig {
    std::vector<std::string> prefixes;
    std::vector<std::string> suffixes;

    static AffixConfig defaults();
    static AffixConfig load(const std::string& path);
};

// Drops parenthesized/bracketed segments and paired-quote segments, then
// truncates at the first comma, semicolon, or slash. Unpaired quotes stay;
// an unclosed bracket drops the rest of the string.
std::string strip_metadata(std::string_view raw);

// Repairs UTF-8-as-Latin-1/cp1252 mojibake digraphs, applies the NFKD fold
// table, and deletes whatever is still non-ASCII. Characters without an
// ASCII decomposition (ø, ł, đ) are deleted, not transliterated.
std::string fold_unicode(std::string_view raw);

// Expects lowercased, space-separated input. Removes leading prefix tokens
// and trailing suffix tokens, repeatedly.
std::string strip_affixes(std::string_view lowercased, const AffixConfig& affixes);

// Full pipeline: strip_metadata -> fold_unicode -> lowercase -> punctuation
// to space -> strip_affixes -> whitespace collapse -> validation.
NormalizationOutcome preprocess(std::string_view raw,
                                const AffixConfig& affixes = AffixConfig::defaults());

// True when s matches [a-z]+( [a-z]+)* exactly.
bool is_clean_name(std::string_view s);

}  // namespace nomenflow
