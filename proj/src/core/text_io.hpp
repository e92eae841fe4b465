/*
 * Copyright (C) 2026 The nomenflow authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace nomenflow {

std::vector<std::string> split_tab(std::string_view line);

std::string_view trim(std::string_view s);

// Calls fn(1-based line number, line without trailing \r\n) for every line.
// Throws Error(io_error) when the file cannot be opened.
void for_each_line(const std::string& path,
                   const std::function<void(size_t, std::string_view)>& fn);

void write_file(const std::string& path, std::string_view content);

}  // namespace nomenflow
