/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <string>

#include "model.hpp"

namespace nomenflow {

// Model file layout (all integers little-endian):
//   magic "NGNM"
//   u32 format version (currently 1)
//   u32 x6: bucket_count, dim, label_count, min_n, max_n, flags
//     flags bit 0: include_tokens; bits 8..9: taxonomy level
//   label table: label_count strings, each u32 byte length + UTF-8 bytes
//   embeddings, weights, bias as f32 row-major
//   u32 CRC-32 of every preceding byte
//
// Parameters are doubles in memory; the f32 on disk halves the file size at
// the cost of rounding, so load(save(m)) equals m exactly once m has been
// through one save/load cycle.

void save_model(const NgramModel& model, const std::string& path);

// Throws Error with code io_error, bad_magic, version_unsupported,
// checksum_mismatch (also covers truncation), or data_error for dimension
// or finiteness violations behind a valid checksum.
NgramModel load_model(const std::string& path);

}  // namespace nomenflow
