/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include "corpus.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"
#include "hash.hpp"
#include "rng.hpp"
#include "text_io.hpp"

#include <nlohmann/json.hpp>

namespace nomenflow {

void SplitSpec::validate() const {
    if (train_frac <= 0 || val_frac <= 0 || test_frac <= 0) {
        fail(ErrorCode::invalid_argument, "split fractions must be positive");
    }
    if (std::abs(train_frac + val_frac + test_frac - 1.0) > 1e-9) {
        fail(ErrorCode::invalid_argument, "split fractions must sum to 1");
    }
}

std::string CorpusStats::to_json() const {
    nlohmann::json j;
    j["ingested"] = ingested;
    j["kept"] = kept;
    j["duplicates"] = duplicates;
    j["rejected"] = {{"invalid_name", rejected_invalid_name},
                     {"unknown_country", rejected_unknown_country},
                     {"malformed", rejected_malformed},
                     {"total", rejected()}};
    j["excluded"] = {{"policy", excluded_policy},
                     {"not_in_taxonomy", excluded_not_in_taxonomy},
                     {"small_class", excluded_small_class},
                     {"total", excluded()}};
    j["per_country"] = per_country;
    j["reconciles"] = reconciles();
    return j.dump(2);
}

Corpus ingest(const std::vector<std::string>& paths, const CountryResolver& resolver,
              CorpusStats& stats, const AffixConfig& affixes) {
    Corpus corpus;
    std::unordered_set<std::string> seen;  // "name\tcountry"
    for (const auto& path : paths) {
        for_each_line(path, [&](size_t lineno, std::string_view line) {
            if (trim(line).empty()) return;
            auto fields = split_tab(line);
            if (fields.size() != 2) {
                ++stats.ingested;
                ++stats.rejected_malformed;
                return;
            }
            if (lineno == 1 && fields[0] == "name" && fields[1] == "country") return;
            ++stats.ingested;
            NormalizationOutcome outcome = preprocess(fields[0], affixes);
            if (!outcome.ok()) {
                ++stats.rejected_invalid_name;
                return;
            }
            auto code = resolver.resolve(fields[1]);
            if (!code) {
                ++stats.rejected_unknown_country;
                return;
            }
            std::string key = outcome.text + "\t" + *code;
            if (!seen.insert(key).second) {
                ++stats.duplicates;
                return;
            }
            ++stats.kept;
            ++stats.per_country[*code];
            corpus.push_back({std::move(outcome.text), std::move(*code)});
        });
    }
    return corpus;
}

Corpus apply_exclusions(const Corpus& corpus, const Taxonomy& taxonomy,
                        const ExclusionPolicy& policy, CorpusStats& stats) {
    if (policy.min_class_size < 1) {
        fail(ErrorCode::invalid_argument, "min_class_size must be at least 1");
    }
    std::set<std::string_view> excluded(policy.excluded_countries.begin(),
                                        policy.excluded_countries.end());
    std::unordered_map<std::string, size_t> counts;
    for (const auto& row : corpus) ++counts[row.country];

    Corpus out;
    out.reserve(corpus.size());
    for (const auto& row : corpus) {
        size_t* bucket = nullptr;
        if (excluded.count(row.country)) {
            bucket = &stats.excluded_policy;
        } else if (!taxonomy.contains(row.country)) {
            bucket = &stats.excluded_not_in_taxonomy;
        } else if (counts[row.country] < policy.min_class_size) {
            bucket = &stats.excluded_small_class;
        }
        if (bucket) {
            ++*bucket;
            if (stats.kept > 0) --stats.kept;
            auto it = stats.per_country.find(row.country);
            if (it != stats.per_country.end() && it->second > 0 && --it->second == 0) {
                stats.per_country.erase(it);
            }
            continue;
        }
        out.push_back(row);
    }
    return out;
}

SplitResult split(const Corpus& corpus, const SplitSpec& spec) {
    spec.validate();
    if (corpus.empty()) fail(ErrorCode::data_error, "cannot split an empty corpus");

    std::map<std::string, std::vector<size_t>> by_country;
    for (size_t i = 0; i < corpus.size(); ++i) {
        by_country[corpus[i].country].push_back(i);
    }

    SplitResult result;
    const double fracs[3] = {spec.train_frac, spec.val_frac, spec.test_frac};
    std::vector<size_t> members[3];

    for (auto& [country, indices] : by_country) {
        Rng rng(spec.seed * 0x9e3779b97f4a7c15ULL ^ fnv1a64(country));
        rng.shuffle(indices);

        const size_t n = indices.size();
        size_t alloc[3];
        double remainder[3];
        size_t assigned = 0;
        for (int k = 0; k < 3; ++k) {
            double quota = static_cast<double>(n) * fracs[k];
            alloc[k] = static_cast<size_t>(quota);
            remainder[k] = quota - static_cast<double>(alloc[k]);
            assigned += alloc[k];
        }
        // largest remainder gets the leftover rows; ties favor earlier splits
        while (assigned < n) {
            int best = 0;
            for (int k = 1; k < 3; ++k) {
                if (remainder[k] > remainder[best]) best = k;
            }
            ++alloc[best];
            remainder[best] = -1;
            ++assigned;
        }
        // guarantee one row per split when the country is large enough
        bool adjusted = false;
        for (int k = 0; k < 3; ++k) {
            if (alloc[k] > 0) continue;
            int donor = 0;
            for (int j = 1; j < 3; ++j) {
                if (alloc[j] > alloc[donor]) donor = j;
            }
            if (alloc[donor] >= 2) {
                --alloc[donor];
                ++alloc[k];
                adjusted = true;
            }
        }
        if (adjusted || alloc[0] == 0 || alloc[1] == 0 || alloc[2] == 0) {
            result.warnings.push_back("class_too_small: " + country + " has " +
                                      std::to_string(n) + " rows");
        }

        size_t offset = 0;
        for (int k = 0; k < 3; ++k) {
            for (size_t i = 0; i < alloc[k]; ++i) {
                members[k].push_back(indices[offset + i]);
            }
            offset += alloc[k];
        }
    }

    Corpus* outs[3] = {&result.train, &result.val, &result.test};
    for (int k = 0; k < 3; ++k) {
        std::sort(members[k].begin(), members[k].end());  // keep input order
        outs[k]->reserve(members[k].size());
        for (size_t i : members[k]) outs[k]->push_back(corpus[i]);
    }
    return result;
}

namespace {

void count_ngrams(std::string_view name, int n, bool pad,
                  std::unordered_map<std::string, size_t>& counts, size_t& total) {
    size_t start = 0;
    while (start < name.size()) {
        while (start < name.size() && name[start] == ' ') ++start;
        size_t end = start;
        while (end < name.size() && name[end] != ' ') ++end;
        if (end > start) {
            std::string token;
            if (pad) token.push_back('^');
            token.append(name.substr(start, end - start));
            if (pad) token.push_back('$');
            if (token.size() >= static_cast<size_t>(n)) {
                for (size_t i = 0; i + static_cast<size_t>(n) <= token.size(); ++i) {
                    ++counts[token.substr(i, static_cast<size_t>(n))];
                    ++total;
                }
            }
        }
        start = end;
    }
}

double entropy_from_counts(const std::unordered_map<std::string, size_t>& counts,
                           size_t total, size_t norm_vocab) {
    if (total == 0 || counts.size() <= 1 || norm_vocab <= 1) return 0.0;
    double h = 0.0;
    for (const auto& [gram, count] : counts) {
        double p = static_cast<double>(count) / static_cast<double>(total);
        h -= p * std::log(p);
    }
    double value = h / std::log(static_cast<double>(norm_vocab));
    return std::clamp(value, 0.0, 1.0);
}

}  // namespace

double ngram_entropy(const Corpus& corpus, std::string_view country,
                     const EntropyOptions& options) {
    if (options.n < 1) fail(ErrorCode::invalid_argument, "n-gram length must be at least 1");
    std::unordered_map<std::string, size_t> counts;
    std::unordered_set<std::string> global_vocab;
    size_t total = 0;
    bool found = false;
    for (const auto& row : corpus) {
        if (options.global_vocab_norm) {
            std::unordered_map<std::string, size_t> tmp;
            size_t ignored = 0;
            count_ngrams(row.name, options.n, options.pad, tmp, ignored);
            for (const auto& [gram, _] : tmp) global_vocab.insert(gram);
        }
        if (row.country != country) continue;
        found = true;
        count_ngrams(row.name, options.n, options.pad, counts, total);
    }
    if (!found) {
        fail(ErrorCode::data_error, "no names for country " + std::string(country));
    }
    size_t norm = options.global_vocab_norm ? global_vocab.size() : counts.size();
    return entropy_from_counts(counts, total, norm);
}

std::map<std::string, double> ngram_entropy_all(const Corpus& corpus,
                                                const EntropyOptions& options) {
    if (options.n < 1) fail(ErrorCode::invalid_argument, "n-gram length must be at least 1");
    std::map<std::string, std::unordered_map<std::string, size_t>> counts;
    std::map<std::string, size_t> totals;
    std::unordered_set<std::string> global_vocab;
    for (const auto& row : corpus) {
        count_ngrams(row.name, options.n, options.pad, counts[row.country],
                     totals[row.country]);
    }
    if (options.global_vocab_norm) {
        for (const auto& [country, grams] : counts) {
            for (const auto& [gram, _] : grams) global_vocab.insert(gram);
        }
    }
    std::map<std::string, double> out;
    for (const auto& [country, grams] : counts) {
        size_t norm = options.global_vocab_norm ? global_vocab.size() : grams.size();
        out[country] = entropy_from_counts(grams, totals[country], norm);
    }
    return out;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::string content;
    content.reserve(corpus.size() * 24);
    for (const auto& row : corpus) {
        content += row.name;
        content.push_back('\t');
        content += row.country;
        content.push_back('\n');
    }
    write_file(path, content);
}

Corpus load_corpus(const std::string& path) {
    Corpus corpus;
    for_each_line(path, [&](size_t lineno, std::string_view line) {
        if (trim(line).empty()) return;
        auto fields = split_tab(line);
        if (fields.size() != 2) {
            fail(ErrorCode::parse_error,
                 path + ":" + std::to_string(lineno) + ": expected name<TAB>country");
        }
        if (lineno == 1 && fields[0] == "name" && fields[1] == "country") return;
        corpus.push_back({std::move(fields[0]), std::move(fields[1])});
    });
    return corpus;
}

}  // namespace nomenflow
