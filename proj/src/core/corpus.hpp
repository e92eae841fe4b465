/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "iso3166.hpp"
#include "normalizer.hpp"
#include "taxonomy.hpp"

namespace nomenflow {

struct LabeledName {
    std::string name;     // clean name
    std::string country;  // alpha-2

    bool operator==(const LabeledName&) const = default;
};

using Corpus = std::vector<LabeledName>;

struct SplitSpec {
    double train_frac = 0.65;
    double val_frac = 0.15;
    double test_frac = 0.20;
    uint64_t seed = 0;

    void validate() const;  // positive fractions summing to 1 within 1e-9
};

// Row accounting across ingest and exclusion. Every ingested row lands in
// exactly one bucket: kept + duplicates + rejected() + excluded() == ingested.
struct CorpusStats {
    size_t ingested = 0;
    size_t kept = 0;
    size_t duplicates = 0;
    size_t rejected_invalid_name = 0;
    size_t rejected_unknown_country = 0;
    size_t rejected_malformed = 0;
    size_t excluded_policy = 0;
    size_t excluded_not_in_taxonomy = 0;
    size_t excluded_small_class = 0;
    std::map<std::string, size_t> per_country;  // kept rows per country

    size_t rejected() const {
        return rejected_invalid_name + rejected_unknown_country + rejected_malformed;
    }
    size_t excluded() const {
        return excluded_policy + excluded_not_in_taxonomy + excluded_small_class;
    }
    bool reconciles() const {
        return kept + duplicates + rejected() + excluded() == ingested;
    }
    std::string to_json() const;
};

// Reads `name<TAB>country` TSV files (optional `name\tcountry` header rows
// are skipped), normalizes both columns, and drops exact duplicate pairs.
// Row-level problems are counted in stats, never fatal; an unreadable file
// throws Error(io_error).
Corpus ingest(const std::vector<std::string>& paths, const CountryResolver& resolver,
              CorpusStats& stats, const AffixConfig& affixes = AffixConfig::defaults());

// Drops rows whose country is policy-excluded, absent from the taxonomy, or
// below min_class_size. Order-stable and idempotent.
Corpus apply_exclusions(const Corpus& corpus, const Taxonomy& taxonomy,
                        const ExclusionPolicy& policy, CorpusStats& stats);

struct SplitResult {
    Corpus train, val, test;
    std::vector<std::string> warnings;  // class_too_small notes
};

// Per-country stratified split with largest-remainder rounding. When a
// country has at least as many rows as splits, every split receives at least
// one row. Deterministic given spec.seed.
SplitResult split(const Corpus& corpus, const SplitSpec& spec);

struct EntropyOptions {
    int n = 3;
    bool pad = true;               // wrap each token in ^...$
    bool global_vocab_norm = false;  // normalize by the global distinct count
};

// Shannon entropy of the country's character n-gram distribution, scaled to
// [0,1] by log of the distinct n-gram count (0 when only one distinct n-gram
// exists). Throws Error(data_error) when the country has no names and
// Error(invalid_argument) when n < 1.
double ngram_entropy(const Corpus& corpus, std::string_view country,
                     const EntropyOptions& options = {});

std::map<std::string, double> ngram_entropy_all(const Corpus& corpus,
                                                const EntropyOptions& options = {});

void save_corpus(const Corpus& corpus, const std::string& path);
Corpus load_corpus(const std::string& path);  // pre-cleaned name<TAB>code rows

}  // namespace nomenflow
