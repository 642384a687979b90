// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/grid_io.hpp"

#include <algorithm>
#include <bit>
#include <cerrno>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace morrey {

namespace {

constexpr char kMagic[4] = {'M', 'G', 'F', '1'};

void put_u64(std::string& out, std::uint64_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
  }
}

void put_f64(std::string& out, double v) {
  put_u64(out, std::bit_cast<std::uint64_t>(v), 8);
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  std::uint64_t uint(int width) {
    need(width);
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes_[pos_ + i]))
           << (8 * i);
    }
    pos_ += width;
    return v;
  }
  double f64() { return std::bit_cast<double>(uint(8)); }
  std::string_view take(std::size_t n) {
    need(n);
    auto s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == bytes_.size(); }

 private:
  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) throw ParseError("MGF1: truncated payload");
  }
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::int64_t parse_int(std::string_view s, std::size_t line) {
  std::string t(trim(s));
  char* end = nullptr;
  errno = 0;
  long long v = std::strtoll(t.c_str(), &end, 10);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE) {
    throw ParseError("CSV line " + std::to_string(line) + ": bad index '" + t + "'");
  }
  return v;
}

double parse_value(std::string_view s, std::size_t line) {
  std::string t(trim(s));
  char* end = nullptr;
  double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size()) {
    throw ParseError("CSV line " + std::to_string(line) + ": bad value '" + t + "'");
  }
  if (!std::isfinite(v)) {
    throw ValidationError("CSV line " + std::to_string(line) + ": non-finite value");
  }
  return v;
}

}  // namespace

FileFormat format_from_path(std::string_view path) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    return FileFormat::csv;
  }
  return FileFormat::binary;
}

std::string encode_binary(const GridFunction& f) {
  const auto& d = f.domain();
  std::string out(kMagic, 4);
  put_u64(out, d.dim(), 4);
  for (auto s : d.shape()) put_u64(out, s, 8);
  put_f64(out, d.spacing());
  for (double o : d.origin()) put_f64(out, o);
  if (d.is_full()) {
    out.push_back(0);
  } else {
    out.push_back(1);
    for (auto m : d.mask()) out.push_back(static_cast<char>(m));
  }
  for (double v : f.values()) put_f64(out, v);
  return out;
}

GridFunction decode_binary(std::string_view bytes) {
  Reader r(bytes);
  if (r.take(4) != std::string_view(kMagic, 4)) {
    throw ParseError("MGF1: bad magic");
  }
  auto n = r.uint(4);
  if (n == 0 || n > 16) throw ParseError("MGF1: unsupported dimension");
  std::vector<std::size_t> shape(n);
  std::size_t total = 1;
  for (auto& s : shape) {
    auto v = r.uint(8);
    if (v == 0) throw ParseError("MGF1: zero shape entry");
    if (v > (std::uint64_t{1} << 40) / total) throw ParseError("MGF1: shape too large");
    s = static_cast<std::size_t>(v);
    total *= s;
  }
  double h = r.f64();
  std::vector<double> origin(n);
  for (auto& o : origin) o = r.f64();
  if (!(h > 0.0) || !std::isfinite(h)) throw ParseError("MGF1: bad spacing");
  for (double o : origin) {
    if (!std::isfinite(o)) throw ParseError("MGF1: bad origin");
  }
  auto flag = r.uint(1);
  std::vector<std::uint8_t> mask;
  if (flag == 1) {
    auto raw = r.take(total);
    mask.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
      auto b = static_cast<unsigned char>(raw[i]);
      if (b > 1) throw ParseError("MGF1: mask bytes must be 0 or 1");
      mask[i] = b;
    }
  } else if (flag != 0) {
    throw ParseError("MGF1: bad mask flag");
  }
  GridDomain domain(shape, h, origin, mask);
  std::vector<double> values(domain.masked_count());
  for (auto& v : values) v = r.f64();
  if (!r.done()) throw ParseError("MGF1: trailing bytes");
  return GridFunction(std::move(domain), std::move(values));
}

std::string encode_csv(const GridFunction& f) {
  const auto& d = f.domain();
  std::string out;
  for (std::size_t a = 0; a < d.dim(); ++a) out += "index" + std::to_string(a) + ",";
  out += "value\n";
  const auto& pts = d.masked_points();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    for (auto c : d.unravel(pts[k])) out += std::to_string(c) + ",";
    out += format_double(f.values()[k]) + "\n";
  }
  return out;
}

GridFunction decode_csv(std::string_view text,
                        const std::optional<GridDomain>& layout) {
  std::vector<std::string_view> lines;
  for (auto l : split(text, '\n')) {
    if (!trim(l).empty()) lines.push_back(l);
  }
  if (lines.empty()) throw ParseError("CSV: missing header");
  auto header = split(lines[0], ',');
  if (header.size() < 2 || trim(header.back()) != "value") {
    throw ParseError("CSV: header must be index0,...,value");
  }
  const std::size_t n = header.size() - 1;
  for (std::size_t a = 0; a < n; ++a) {
    if (trim(header[a]) != "index" + std::to_string(a)) {
      throw ParseError("CSV: header must be index0,...,value");
    }
  }
  if (layout && layout->dim() != n) throw ParseError("CSV: dimension mismatch");

  std::map<Index, double> rows;
  std::vector<std::int64_t> hi(n, -1);
  for (std::size_t li = 1; li < lines.size(); ++li) {
    auto cells = split(lines[li], ',');
    if (cells.size() != n + 1) {
      throw ParseError("CSV line " + std::to_string(li + 1) + ": wrong column count");
    }
    Index idx(n);
    for (std::size_t a = 0; a < n; ++a) {
      idx[a] = parse_int(cells[a], li + 1);
      if (idx[a] < 0) throw ParseError("CSV: negative index");
      hi[a] = std::max(hi[a], idx[a]);
    }
    double v = parse_value(cells[n], li + 1);
    if (!rows.emplace(idx, v).second) throw ParseError("CSV: duplicate index");
  }
  if (rows.empty()) throw ParseError("CSV: no data rows");

  GridDomain domain;
  if (layout) {
    domain = *layout;
    if (rows.size() != domain.masked_count()) {
      throw ParseError("CSV: rows do not match the layout's masked points");
    }
  } else {
    std::vector<std::size_t> shape(n);
    for (std::size_t a = 0; a < n; ++a) shape[a] = static_cast<std::size_t>(hi[a] + 1);
    double h = 1.0 / static_cast<double>(shape[0]);
    GridDomain probe(shape, h, std::vector<double>(n, h / 2));
    std::vector<std::uint8_t> mask(probe.total_points(), 0);
    for (const auto& [idx, v] : rows) mask[probe.ravel(idx)] = 1;
    domain = probe.with_mask(std::move(mask));
  }
  std::vector<double> values;
  values.reserve(rows.size());
  for (auto lin : domain.masked_points()) {
    auto it = rows.find(domain.unravel(lin));
    if (it == rows.end()) throw ParseError("CSV: masked point missing a row");
    values.push_back(it->second);
  }
  return GridFunction(std::move(domain), std::move(values));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("write failed for '" + path + "'");
}

GridFunction read_function(const std::string& path, FileFormat format,
                           const std::optional<GridDomain>& layout) {
  auto bytes = read_file(path);
  return format == FileFormat::binary ? decode_binary(bytes)
                                      : decode_csv(bytes, layout);
}

void write_function(const GridFunction& f, const std::string& path,
                    FileFormat format) {
  write_file(path, format == FileFormat::binary ? encode_binary(f) : encode_csv(f));
}

}  // namespace morrey
