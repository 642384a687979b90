// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// MGF1 binary and index/value CSV serialization of grid functions.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "morrey/grid.hpp"

namespace morrey {

enum class FileFormat { binary, csv };

/// csv for a ".csv" suffix, binary otherwise.
FileFormat format_from_path(std::string_view path);

std::string encode_binary(const GridFunction& f);
GridFunction decode_binary(std::string_view bytes);

/// Header `index0,...,index{n-1},value`, one row per masked point.
std::string encode_csv(const GridFunction& f);

/// The CSV rows carry no spacing or origin. With a layout, the rows must
/// name exactly its masked points. Without one, the layout is the
/// cell-centred unit box spanned by the largest index on each axis, masked
/// where a row is present.
GridFunction decode_csv(std::string_view text,
                        const std::optional<GridDomain>& layout = std::nullopt);

GridFunction read_function(const std::string& path, FileFormat format,
                           const std::optional<GridDomain>& layout = std::nullopt);
void write_function(const GridFunction& f, const std::string& path,
                    FileFormat format);

/// Whole file as bytes; throws ParseError naming the path if unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

}  // namespace morrey
