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

#include "ontomesh/fetch.h"

#include <algorithm>
#include <cctype>
#include <cstring>

#include "httplib.h"
#include "ontomesh/archive.h"
#include "ontomesh/error.h"
#include "ontomesh/file_util.h"
#include "ontomesh/hash.h"

namespace fs = std::filesystem;

namespace ontomesh {
namespace {

struct ParsedUrl {
  std::string scheme;
  std::string origin;  // scheme://host[:port]
  std::string target;  // path and query
};

ParsedUrl SplitUrl(const std::string& url) {
  const auto sep = url.find("://");
  if (sep == std::string::npos) {
    throw Error(ErrorCode::kInvalidArgument, "not a URL: '" + url + "'");
  }
  ParsedUrl out;
  out.scheme = url.substr(0, sep);
  std::transform(out.scheme.begin(), out.scheme.end(), out.scheme.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto path_at = url.find('/', sep + 3);
  out.origin = url.substr(0, path_at);
  out.target = path_at == std::string::npos ? "/" : url.substr(path_at);
  return out;
}

std::string Download(const ParsedUrl& url) {
  if (url.scheme == "file") {
    return ReadFileBytes(fs::path(url.target));
  }
  if (url.scheme != "http" && url.scheme != "https") {
    throw Error(ErrorCode::kInvalidArgument, "unsupported URL scheme '" + url.scheme + "'");
  }
  httplib::Client client(url.origin);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(120);
  auto res = client.Get(url.target);
  if (!res) {
    throw FetchError("fetch " + url.origin + url.target + " failed: " +
                         httplib::to_string(res.error()),
                     0);
  }
  if (res->status < 200 || res->status >= 300) {
    throw FetchError("fetch " + url.origin + url.target + " returned HTTP " +
                         std::to_string(res->status),
                     res->status);
  }
  return std::move(res->body);
}

std::string ArchiveFileName(const ParsedUrl& url) {
  std::string path = url.target.substr(0, url.target.find_first_of("?#"));
  while (!path.empty() && path.back() == '/') path.pop_back();
  std::string name = path.substr(path.find_last_of('/') + 1);
  if (name.empty()) name = "snapshot.archive";
  return name;
}

std::string StripArchiveSuffix(const std::string& name) {
  for (const char* suffix : {".tar.gz", ".tgz", ".tar", ".zip"}) {
    if (name.size() > std::strlen(suffix) && name.ends_with(suffix)) {
      return name.substr(0, name.size() - std::strlen(suffix));
    }
  }
  return name + ".d";
}

}  // namespace

FetchResult FetchSnapshot(const std::string& url, const fs::path& dest,
                          const std::optional<std::string>& expected_sha256) {
  const ParsedUrl parsed = SplitUrl(url);
  const std::string bytes = Download(parsed);

  FetchResult result;
  result.sha256 = Sha256Hex(bytes);
  if (expected_sha256) {
    std::string expected = *expected_sha256;
    std::transform(expected.begin(), expected.end(), expected.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (expected != result.sha256) {
      throw Error(ErrorCode::kIntegrity, "checksum mismatch for " + url + ": expected " +
                                             expected + ", got " + result.sha256);
    }
  }

  std::error_code ec;
  fs::create_directories(dest, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create '" + dest.string() + "'");
  const std::string name = ArchiveFileName(parsed);
  result.archive = dest / name;
  WriteFileAtomic(result.archive, bytes);
  WriteFileAtomic(fs::path(result.archive.string() + ".sha256"),
                  result.sha256 + "  " + name + "\n");
  result.root = ExtractArchive(bytes, dest / StripArchiveSuffix(name));
  return result;
}

}  // namespace ontomesh
