// Copyright 2026 The OntoMesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ontomesh/archive.h"

#include <unistd.h>
#include <zlib.h>

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <set>

#include "ontomesh/error.h"
#include "ontomesh/file_util.h"

namespace fs = std::filesystem;

namespace ontomesh {
namespace {

constexpr std::size_t kBlock = 512;

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kExtraction, "archive: " + what);
}

// Normalises an entry path; rejects absolute paths and parent references.
// Returns empty for entries that name the archive root itself.
std::string SanitizePath(std::string_view raw) {
  std::string out;
  std::size_t pos = 0;
  if (!raw.empty() && raw[0] == '/') Bad("absolute entry path '" + std::string(raw) + "'");
  while (pos <= raw.size()) {
    auto next = raw.find('/', pos);
    if (next == std::string_view::npos) next = raw.size();
    const std::string_view part = raw.substr(pos, next - pos);
    pos = next + 1;
    if (part.empty() || part == ".") continue;
    if (part == "..") Bad("entry path escapes the archive root: '" + std::string(raw) + "'");
    if (!out.empty()) out += '/';
    out += part;
  }
  return out;
}

std::string Gunzip(std::string_view bytes) {
  z_stream zs{};
  if (inflateInit2(&zs, 16 + MAX_WBITS) != Z_OK) Bad("cannot initialise gzip decoder");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(bytes.data()));
  zs.avail_in = static_cast<uInt>(bytes.size());
  std::string out;
  char buf[1 << 15];
  int rc = Z_OK;
  while (rc == Z_OK) {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    rc = inflate(&zs, Z_NO_FLUSH);
    out.append(buf, sizeof(buf) - zs.avail_out);
    if (rc == Z_BUF_ERROR && zs.avail_in == 0) break;
  }
  inflateEnd(&zs);
  if (rc != Z_STREAM_END) Bad("gzip stream is truncated or corrupt");
  return out;
}

std::string InflateRaw(std::string_view bytes, std::size_t expected) {
  z_stream zs{};
  if (inflateInit2(&zs, -MAX_WBITS) != Z_OK) Bad("cannot initialise deflate decoder");
  std::string out(expected, '\0');
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(bytes.data()));
  zs.avail_in = static_cast<uInt>(bytes.size());
  zs.next_out = reinterpret_cast<Bytef*>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const std::size_t produced = out.size() - zs.avail_out;
  inflateEnd(&zs);
  if (rc != Z_STREAM_END || produced != expected) Bad("deflate stream is truncated or corrupt");
  return out;
}

std::uint64_t ParseOctal(std::string_view field) {
  std::uint64_t value = 0;
  for (char c : field) {
    if (c == '\0' || c == ' ') {
      if (value != 0) break;
      continue;
    }
    if (c < '0' || c > '7') Bad("invalid octal field in tar header");
    value = value * 8 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

std::string CString(std::string_view field) {
  const auto nul = field.find('\0');
  return std::string(field.substr(0, nul));
}

bool IsZeroBlock(std::string_view block) {
  return std::all_of(block.begin(), block.end(), [](char c) { return c == '\0'; });
}

// Value of "path=" in a pax extended header, or empty.
std::string PaxPath(std::string_view data) {
  while (!data.empty()) {
    const auto space = data.find(' ');
    if (space == std::string_view::npos) break;
    std::size_t len = 0;
    for (char c : data.substr(0, space)) {
      if (c < '0' || c > '9') Bad("malformed pax header");
      len = len * 10 + static_cast<std::size_t>(c - '0');
    }
    if (len == 0 || len > data.size()) Bad("malformed pax header");
    std::string_view record = data.substr(space + 1, len - space - 1);
    if (!record.empty() && record.back() == '\n') record.remove_suffix(1);
    if (record.starts_with("path=")) return std::string(record.substr(5));
    data.remove_prefix(len);
  }
  return {};
}

std::vector<ArchiveEntry> ReadTar(std::string_view bytes) {
  std::vector<ArchiveEntry> entries;
  std::string long_name;
  std::size_t pos = 0;
  bool finished = false;
  while (pos + kBlock <= bytes.size()) {
    const std::string_view header = bytes.substr(pos, kBlock);
    pos += kBlock;
    if (IsZeroBlock(header)) {
      finished = true;
      break;
    }
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < kBlock; ++i) {
      sum += (i >= 148 && i < 156) ? static_cast<unsigned char>(' ')
                                   : static_cast<unsigned char>(header[i]);
    }
    if (sum != ParseOctal(header.substr(148, 8))) Bad("tar header checksum mismatch");

    const std::uint64_t size = ParseOctal(header.substr(124, 12));
    const char type = header[156];
    const std::size_t padded = static_cast<std::size_t>((size + kBlock - 1) / kBlock * kBlock);
    if (size > bytes.size() || pos + padded > bytes.size()) Bad("tar entry data is truncated");
    const std::string_view data = bytes.substr(pos, static_cast<std::size_t>(size));
    pos += padded;

    if (type == 'L') {
      long_name = CString(data);
      continue;
    }
    if (type == 'x') {
      long_name = PaxPath(data);
      continue;
    }
    if (type == 'g') continue;

    std::string name = CString(header.substr(0, 100));
    if (header.substr(257, 5) == "ustar") {
      const std::string prefix = CString(header.substr(345, 155));
      if (!prefix.empty()) name = prefix + "/" + name;
    }
    if (!long_name.empty()) {
      name = std::move(long_name);
      long_name.clear();
    }
    const bool is_dir = type == '5';
    const bool is_file = type == '0' || type == '\0' || type == '7';
    if (!is_dir && !is_file) continue;  // links and devices are not corpus content
    std::string clean = SanitizePath(name);
    if (clean.empty()) continue;
    entries.push_back(ArchiveEntry{std::move(clean), is_dir, is_dir ? "" : std::string(data)});
  }
  if (!finished) Bad("tar archive is truncated (no end-of-archive marker)");
  return entries;
}

std::uint32_t Le32(std::string_view b, std::size_t at) {
  if (at + 4 > b.size()) Bad("zip structure is truncated");
  return static_cast<std::uint32_t>(static_cast<unsigned char>(b[at])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(b[at + 3])) << 24;
}

std::uint16_t Le16(std::string_view b, std::size_t at) {
  if (at + 2 > b.size()) Bad("zip structure is truncated");
  return static_cast<std::uint16_t>(static_cast<unsigned char>(b[at]) |
                                    static_cast<unsigned char>(b[at + 1]) << 8);
}

std::vector<ArchiveEntry> ReadZip(std::string_view bytes) {
  constexpr std::uint32_t kEocd = 0x06054b50, kCentral = 0x02014b50, kLocal = 0x04034b50;
  if (bytes.size() < 22) Bad("zip archive is truncated");
  std::size_t eocd = std::string_view::npos;
  const std::size_t lowest = bytes.size() > 22 + 0xffff ? bytes.size() - 22 - 0xffff : 0;
  for (std::size_t i = bytes.size() - 22 + 1; i-- > lowest;) {
    if (Le32(bytes, i) == kEocd) {
      eocd = i;
      break;
    }
  }
  if (eocd == std::string_view::npos) Bad("zip archive is truncated (no end of central directory)");

  const std::size_t count = Le16(bytes, eocd + 10);
  std::size_t cd = Le32(bytes, eocd + 16);
  std::vector<ArchiveEntry> entries;
  for (std::size_t i = 0; i < count; ++i) {
    if (Le32(bytes, cd) != kCentral) Bad("corrupt zip central directory");
    const std::uint16_t method = Le16(bytes, cd + 10);
    const std::uint32_t crc = Le32(bytes, cd + 16);
    const std::uint32_t csize = Le32(bytes, cd + 20);
    const std::uint32_t usize = Le32(bytes, cd + 24);
    const std::uint16_t name_len = Le16(bytes, cd + 28);
    const std::uint16_t extra_len = Le16(bytes, cd + 30);
    const std::uint16_t comment_len = Le16(bytes, cd + 32);
    const std::uint32_t local = Le32(bytes, cd + 42);
    if (cd + 46 + name_len > bytes.size()) Bad("zip structure is truncated");
    const std::string name(bytes.substr(cd + 46, name_len));
    cd += 46 + name_len + extra_len + comment_len;

    if (Le32(bytes, local) != kLocal) Bad("corrupt zip local header");
    const std::size_t data_at = local + 30 + Le16(bytes, local + 26) + Le16(bytes, local + 28);
    if (data_at + csize > bytes.size()) Bad("zip entry data is truncated");
    const std::string_view raw = bytes.substr(data_at, csize);

    const bool is_dir = !name.empty() && name.back() == '/';
    std::string clean = SanitizePath(name);
    if (clean.empty()) continue;
    std::string data;
    if (!is_dir) {
      if (method == 0) {
        data = std::string(raw);
      } else if (method == 8) {
        data = InflateRaw(raw, usize);
      } else {
        Bad("unsupported zip compression method " + std::to_string(method));
      }
      const auto actual = static_cast<std::uint32_t>(
          crc32(0L, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
      if (actual != crc) Bad("zip entry '" + clean + "' fails its CRC check");
    }
    entries.push_back(ArchiveEntry{std::move(clean), is_dir, std::move(data)});
  }
  return entries;
}

}  // namespace

std::vector<ArchiveEntry> ReadArchive(std::string_view bytes) {
  if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0x1f &&
      static_cast<unsigned char>(bytes[1]) == 0x8b) {
    const std::string tar = Gunzip(bytes);
    return ReadTar(tar);
  }
  if (bytes.size() >= 4 && bytes.substr(0, 4) == std::string_view("PK\x03\x04", 4)) {
    return ReadZip(bytes);
  }
  if (bytes.size() >= kBlock && bytes.substr(257, 5) == "ustar") return ReadTar(bytes);
  if (bytes.size() >= 4 && (bytes.substr(0, 4) == std::string_view("PK\x05\x06", 4))) {
    return {};  // empty zip
  }
  Bad("unrecognised archive format");
}

fs::path ExtractArchive(std::string_view bytes, const fs::path& target) {
  std::error_code ec;
  if (fs::exists(target, ec)) Bad("extraction target '" + target.string() + "' already exists");
  const auto entries = ReadArchive(bytes);
  if (entries.empty()) Bad("archive contains no entries");

  fs::path staging = target;
  staging += ".partial-" + std::to_string(::getpid());
  fs::remove_all(staging, ec);
  try {
    fs::create_directories(staging);
    for (const auto& e : entries) {
      const fs::path out = staging / fs::path(e.path);
      if (e.is_directory) {
        fs::create_directories(out);
      } else {
        fs::create_directories(out.parent_path());
        WriteFileBytes(out, e.data);
      }
    }
    fs::create_directories(target.parent_path().empty() ? fs::path(".") : target.parent_path());
    fs::rename(staging, target);
  } catch (const fs::filesystem_error& e) {
    fs::remove_all(staging, ec);
    throw Error(ErrorCode::kIo, std::string("extraction failed: ") + e.what());
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }

  std::set<std::string> top;
  bool all_nested = true;
  for (const auto& e : entries) {
    const auto slash = e.path.find('/');
    top.insert(e.path.substr(0, slash));
    if (slash == std::string::npos && !e.is_directory) all_nested = false;
  }
  if (top.size() == 1 && all_nested && fs::is_directory(target / *top.begin())) {
    return target / *top.begin();
  }
  return target;
}

}  // namespace ontomesh
