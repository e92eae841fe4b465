/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "normalizer.hpp"

#include <algorithm>
#include <cstring>

#include "error.hpp"
#include "text_io.hpp"

namespace nomenflow {

namespace {

struct FoldEntry {
    char32_t cp;
    char ascii[6];
};

#include "fold_table.inc"

// Lenient UTF-8 decode: an invalid byte is taken as its Latin-1 code point,
// which both salvages genuine Latin-1 input and feeds the mojibake repair.
std::vector<char32_t> decode_utf8_lenient(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        unsigned char b0 = static_cast<unsigned char>(s[i]);
        size_t len = 0;
        char32_t cp = 0;
        if (b0 < 0x80) {
            len = 1;
            cp = b0;
        } else if ((b0 >> 5) == 0x6) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 >> 4) == 0xE) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 >> 3) == 0x1E) {
            len = 4;
            cp = b0 & 0x07;
        }
        bool valid = len > 0 && i + len <= s.size();
        for (size_t k = 1; valid && k < len; ++k) {
            unsigned char bk = static_cast<unsigned char>(s[i + k]);
            if ((bk >> 6) != 0x2) {
                valid = false;
            } else {
                cp = (cp << 6) | (bk & 0x3F);
            }
        }
        if (valid && len == 2 && cp < 0x80) valid = false;        // overlong
        if (valid && len == 3 && cp < 0x800) valid = false;
        if (valid && len == 4 && cp < 0x10000) valid = false;
        if (valid && (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) valid = false;
        if (valid) {
            out.push_back(cp);
            i += len;
        } else {
            out.push_back(b0);  // Latin-1 fallback
            i += 1;
        }
    }
    return out;
}

// Inverse of the Windows-1252 decoding for the 0x80..0x9F gap; code points at
// or below 0xFF map to themselves. Returns 0 when the character cannot have
// come from a single Latin-1/cp1252 byte.
unsigned cp1252_byte(char32_t cp) {
    if (cp <= 0xFF) return static_cast<unsigned>(cp);
    switch (cp) {
        case 0x20AC: return 0x80;
        case 0x201A: return 0x82;
        case 0x0192: return 0x83;
        case 0x201E: return 0x84;
        case 0x2026: return 0x85;
        case 0x2020: return 0x86;
        case 0x2021: return 0x87;
        case 0x02C6: return 0x88;
        case 0x2030: return 0x89;
        case 0x0160: return 0x8A;
        case 0x2039: return 0x8B;
        case 0x0152: return 0x8C;
        case 0x017D: return 0x8E;
        case 0x2018: return 0x91;
        case 0x2019: return 0x92;
        case 0x201C: return 0x93;
        case 0x201D: return 0x94;
        case 0x2022: return 0x95;
        case 0x2013: return 0x96;
        case 0x2014: return 0x97;
        case 0x02DC: return 0x98;
        case 0x2122: return 0x99;
        case 0x0161: return 0x9A;
        case 0x203A: return 0x9B;
        case 0x0153: return 0x9C;
        case 0x017E: return 0x9E;
        case 0x0178: return 0x9F;
        default: return 0;
    }
}

// One repair pass over the two-byte UTF-8 confusion family: a character pair
// whose Latin-1/cp1252 bytes form a valid two-byte UTF-8 sequence is replaced
// by the sequence's code point (handles JÃ¼rgen -> Jürgen). Longer sequences
// would only decode to non-Latin scripts, which the fold deletes anyway.
bool repair_mojibake_pass(std::vector<char32_t>& cps) {
    std::vector<char32_t> out;
    out.reserve(cps.size());
    bool changed = false;
    size_t i = 0;
    while (i < cps.size()) {
        if (i + 1 < cps.size()) {
            unsigned b1 = cp1252_byte(cps[i]);
            unsigned b2 = cp1252_byte(cps[i + 1]);
            if (b1 >= 0xC2 && b1 <= 0xDF && b2 >= 0x80 && b2 <= 0xBF) {
                out.push_back(static_cast<char32_t>(((b1 & 0x1F) << 6) | (b2 & 0x3F)));
                changed = true;
                i += 2;
                continue;
            }
        }
        out.push_back(cps[i]);
        ++i;
    }
    cps.swap(out);
    return changed;
}

const char* fold_lookup(char32_t cp) {
    const FoldEntry* begin = kFoldTable;
    const FoldEntry* end = kFoldTable + kFoldTableSize;
    const FoldEntry* it = std::lower_bound(
        begin, end, cp, [](const FoldEntry& e, char32_t v) { return e.cp < v; });
    if (it != end && it->cp == cp) return it->ascii;
    return nullptr;
}

bool is_open_bracket(char32_t cp) {
    return cp == U'(' || cp == U'[' || cp == U'{' || cp == u'（' || cp == u'［';
}

char32_t closing_bracket(char32_t open) {
    switch (open) {
        case U'(': return U')';
        case U'[': return U']';
        case U'{': return U'}';
        case u'（': return u'）';
        default: return u'］';
    }
}

// Paired quote styles whose contents are dropped. The ASCII apostrophe is
// deliberately not here: it appears inside names (o'brien) far more often
// than around nicknames.
char32_t closing_quote(char32_t open) {
    switch (open) {
        case U'"': return U'"';
        case u'“': return u'”';
        case u'‘': return u'’';
        case u'«': return u'»';
        default: return 0;
    }
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) append_utf8(out, cp);
    return out;
}

std::vector<std::string> tokenize(std::string_view s) {
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && s[i] == ' ') ++i;
        size_t start = i;
        while (i < s.size() && s[i] != ' ') ++i;
        if (i > start) tokens.emplace_back(s.substr(start, i - start));
    }
    return tokens;
}

std::string join(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out.push_back(' ');
        out += t;
    }
    return out;
}

}  // namespace

const char* to_string(NameStatus status) {
    switch (status) {
        case NameStatus::ok: return "ok";
        case NameStatus::invalid_chars: return "invalid_chars";
        case NameStatus::empty_after_cleaning: return "empty_after_cleaning";
    }
    return "unknown";
}

AffixConfig AffixConfig::defaults() {
    return AffixConfig{{"dr", "prof", "sir", "mr", "mrs", "ms", "rev"},
                       {"jr", "sr", "ii", "iii", "iv", "phd", "md"}};
}

AffixConfig AffixConfig::load(const std::string& path) {
    AffixConfig cfg;
    for_each_line(path, [&](size_t lineno, std::string_view line) {
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '#') return;
        auto fields = split_tab(t);
        if (fields.size() != 2 || fields[1].empty()) {
            fail(ErrorCode::parse_error,
                 path + ":" + std::to_string(lineno) + ": expected kind<TAB>token");
        }
        if (fields[0] == "prefix") {
            cfg.prefixes.push_back(fields[1]);
        } else if (fields[0] == "suffix") {
            cfg.suffixes.push_back(fields[1]);
        } else {
            fail(ErrorCode::parse_error,
                 path + ":" + std::to_string(lineno) + ": kind must be prefix or suffix");
        }
    });
    return cfg;
}

std::string strip_metadata(std::string_view raw) {
    std::vector<char32_t> cps = decode_utf8_lenient(raw);

    // bracketed segments, nesting-aware; an unclosed bracket eats the tail
    std::vector<char32_t> pass1;
    std::vector<char32_t> stack;
    for (char32_t cp : cps) {
        if (is_open_bracket(cp)) {
            stack.push_back(closing_bracket(cp));
            continue;
        }
        if (!stack.empty()) {
            if (cp == stack.back()) stack.pop_back();
            continue;
        }
        pass1.push_back(cp);
    }

    // paired quotes; an unpaired quote character is kept
    std::vector<char32_t> pass2;
    for (size_t i = 0; i < pass1.size();) {
        char32_t close = closing_quote(pass1[i]);
        if (close != 0) {
            auto it = std::find(pass1.begin() + static_cast<ptrdiff_t>(i) + 1, pass1.end(), close);
            if (it != pass1.end()) {
                i = static_cast<size_t>(it - pass1.begin()) + 1;
                continue;
            }
        }
        pass2.push_back(pass1[i]);
        ++i;
    }

    // everything after the first comma, semicolon, or slash is metadata
    auto cut = std::find_if(pass2.begin(), pass2.end(), [](char32_t cp) {
        return cp == U',' || cp == U';' || cp == U'/';
    });
    pass2.erase(cut, pass2.end());

    return encode_utf8(pass2);
}

std::string fold_unicode(std::string_view raw) {
    std::vector<char32_t> cps = decode_utf8_lenient(raw);
    for (int pass = 0; pass < 4 && repair_mojibake_pass(cps); ++pass) {
    }
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (const char* repl = fold_lookup(cp)) {
            out += repl;
        }
    }
    return out;
}

std::string strip_affixes(std::string_view lowercased, const AffixConfig& affixes) {
    std::vector<std::string> tokens = tokenize(lowercased);
    auto in = [](const std::vector<std::string>& list, const std::string& tok) {
        return std::find(list.begin(), list.end(), tok) != list.end();
    };
    size_t lo = 0, hi = tokens.size();
    while (lo < hi && in(affixes.prefixes, tokens[lo])) ++lo;
    while (hi > lo && in(affixes.suffixes, tokens[hi - 1])) --hi;
    return join({tokens.begin() + static_cast<ptrdiff_t>(lo),
                 tokens.begin() + static_cast<ptrdiff_t>(hi)});
}

NormalizationOutcome preprocess(std::string_view raw, const AffixConfig& affixes) {
    std::string s = fold_unicode(strip_metadata(raw));

    for (char& c : s) {
        if (c >= 'A' && c <= 'Z') {
            c = static_cast<char>(c - 'A' + 'a');
        } else if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'))) {
            c = ' ';  // punctuation to space; digits survive to validation
        }
    }

    std::string joined = strip_affixes(s, affixes);

    if (joined.empty()) return {NameStatus::empty_after_cleaning, {}};
    for (char c : joined) {
        if (!(c >= 'a' && c <= 'z') && c != ' ') {
            return {NameStatus::invalid_chars, {}};
        }
    }
    return {NameStatus::ok, std::move(joined)};
}

bool is_clean_name(std::string_view s) {
    if (s.empty() || s.front() == ' ' || s.back() == ' ') return false;
    char prev = ' ';
    for (char c : s) {
        bool lower = c >= 'a' && c <= 'z';
        if (!lower && c != ' ') return false;
        if (c == ' ' && prev == ' ') return false;
        prev = c;
    }
    return true;
}

}  // namespace nomenflow
