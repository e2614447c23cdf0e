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

#include "ontomesh/ingest.h"

#include <fnmatch.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>
#include <tuple>

#include "ontomesh/error.h"
#include "ontomesh/hash.h"
#include "ontomesh/schema_parser.h"

namespace fs = std::filesystem;

namespace ontomesh {
namespace {

bool IsHidden(const fs::path& p) {
  const auto name = p.filename().string();
  return !name.empty() && name[0] == '.';
}

std::vector<fs::path> SortedSubdirectories(const fs::path& dir, bool skip_hidden) {
  std::vector<fs::path> out;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
    if (skip_hidden && IsHidden(it->path())) continue;
    std::error_code type_ec;
    if (it->is_directory(type_ec)) out.push_back(it->path());
  }
  if (ec) throw Error(ErrorCode::kIo, "cannot list directory '" + dir.string() + "'");
  std::sort(out.begin(), out.end());
  return out;
}

// Schema files below a model directory, sorted by relative path.
std::vector<fs::path> SchemaFiles(const fs::path& model_dir, const LayoutConfig& layout) {
  std::vector<fs::path> out;
  std::error_code ec;
  fs::recursive_directory_iterator it(model_dir, ec), end;
  for (; !ec && it != end; it.increment(ec)) {
    if (layout.skip_hidden && IsHidden(it->path())) {
      if (it->is_directory()) it.disable_recursion_pending();
      continue;
    }
    const int depth = it.depth() + 1;
    if (it->is_directory()) {
      if (layout.max_depth >= 0 && depth >= layout.max_depth) {
        it.disable_recursion_pending();
      }
      continue;
    }
    if (!it->is_regular_file()) continue;
    if (layout.max_depth >= 0 && depth > layout.max_depth) continue;
    const std::string name = it->path().filename().string();
    if (fnmatch(layout.schema_pattern.c_str(), name.c_str(), 0) == 0) {
      out.push_back(it->path());
    }
  }
  if (ec) {
    throw Error(ErrorCode::kIo, "cannot walk directory '" + model_dir.string() + "'");
  }
  std::sort(out.begin(), out.end(), [&](const fs::path& a, const fs::path& b) {
    return a.lexically_relative(model_dir).generic_string() <
           b.lexically_relative(model_dir).generic_string();
  });
  return out;
}

bool ReadFile(const fs::path& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return false;
  out = std::move(buf).str();
  return true;
}

// A schema file's type name when it has no "title": the file stem, or the
// parent directory for the upstream "<Entity>/schema.json" convention.
std::string FallbackTypeName(const fs::path& file, const fs::path& model_dir,
                             const std::string& model_id) {
  const std::string stem = file.stem().string();
  if (stem != "schema") return stem;
  if (file.parent_path() == model_dir) return model_id;
  return file.parent_path().filename().string();
}

class SnapshotBuilder {
 public:
  SnapshotBuilder(const LayoutConfig& layout, Diagnostics* diag)
      : layout_(layout), diag_(diag) {}

  // Reports a skipped input, or throws in strict mode.
  void Reject(const std::string& source, const std::string& message) {
    if (layout_.strict) throw Error(ErrorCode::kData, source + ": " + message);
    Warn(diag_, source, message + "; skipped");
  }

  // Returns the number of types accepted from this file.
  std::size_t Add(const ParsedSchema& parsed, const std::string& domain,
                  const std::string& source) {
    std::size_t accepted = 0;
    for (const auto& type : parsed.types) {
      auto [seen_it, fresh] = type_domains_.try_emplace(type.type_id);
      if (!fresh && seen_it->second.contains(domain)) {
        Reject(source, "duplicate type '" + type.type_id + "' in domain '" +
                           domain + "'");
        continue;
      }
      seen_it->second.insert(domain);

      auto [type_it, inserted] = types_.try_emplace(type.type_id, type);
      if (!inserted) {
        // Same model and type seen under another domain: union attributes.
        auto& names = type_it->second.attribute_names;
        for (const auto& a : type.attribute_names) {
          if (std::find(names.begin(), names.end(), a) == names.end()) {
            names.push_back(a);
          }
        }
      }
      for (const auto& occ : parsed.occurrences) {
        if (occ.type_id != type.type_id) continue;
        occurrences_.try_emplace(
            std::make_tuple(occ.type_id, occ.domain_id, occ.attribute_name), occ);
      }
      ++accepted;
    }
    return accepted;
  }

  CorpusSnapshot Finish(std::map<std::string, DataModelRecord> models,
                        std::vector<DomainRecord> domains) {
    CorpusSnapshot snap;
    snap.domains = std::move(domains);
    for (auto& [id, m] : models) snap.models.push_back(std::move(m));
    for (auto& [id, t] : types_) snap.types.push_back(std::move(t));
    for (auto& [key, o] : occurrences_) snap.occurrences.push_back(std::move(o));
    Canonicalize(snap);
    return snap;
  }

 private:
  const LayoutConfig& layout_;
  Diagnostics* diag_;
  std::map<std::string, std::set<std::string>> type_domains_;
  std::map<std::string, TypeRecord> types_;
  std::map<std::tuple<std::string, std::string, std::string>, AttributeOccurrence>
      occurrences_;
};

}  // namespace

CorpusSnapshot IngestCorpus(const fs::path& root, const LayoutConfig& layout,
                            Diagnostics* diagnostics) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::kIo, "cannot read corpus root '" + root.string() + "'");
  }

  Sha256 content_hash;
  SnapshotBuilder builder(layout, diagnostics);
  std::map<std::string, DataModelRecord> models;
  std::vector<DomainRecord> domains;

  for (const auto& domain_dir : SortedSubdirectories(root, layout.skip_hidden)) {
    const std::string domain_id = domain_dir.filename().string();
    bool domain_has_model = false;

    for (const auto& model_dir : SortedSubdirectories(domain_dir, layout.skip_hidden)) {
      const std::string dir_name = model_dir.filename().string();
      std::string model_id = dir_name;
      if (!layout.model_prefix.empty() && dir_name.starts_with(layout.model_prefix) &&
          dir_name.size() > layout.model_prefix.size()) {
        model_id = dir_name.substr(layout.model_prefix.size());
      }

      std::size_t model_types = 0;
      for (const auto& file : SchemaFiles(model_dir, layout)) {
        const std::string rel = file.lexically_relative(root).generic_string();
        std::string bytes;
        if (!ReadFile(file, bytes)) {
          if (layout.strict) {
            throw Error(ErrorCode::kIo, "cannot read schema file '" + file.string() + "'");
          }
          Warn(diagnostics, rel, "unreadable file; skipped");
          continue;
        }
        content_hash.Update(rel);
        content_hash.Update(std::string_view("\0", 1));
        content_hash.Update(std::to_string(bytes.size()));
        content_hash.Update(std::string_view("\0", 1));
        content_hash.Update(bytes);

        SchemaContext ctx{domain_id, model_id,
                          FallbackTypeName(file, model_dir, model_id), rel};
        ParsedSchema parsed;
        try {
          Diagnostics file_diag;
          parsed = ParseSchemaFile(bytes, ctx, &file_diag);
          if (diagnostics != nullptr) diagnostics->Append(file_diag);
        } catch (const ParseError& e) {
          std::string_view message = e.what();
          if (message.starts_with(rel + ": ")) message.remove_prefix(rel.size() + 2);
          builder.Reject(rel, std::string(message));
          continue;
        }
        model_types += builder.Add(parsed, domain_id, rel);
      }

      if (model_types == 0) {
        Warn(diagnostics, domain_id + "/" + dir_name, "model directory yields no types");
        continue;
      }
      auto [it, inserted] = models.try_emplace(model_id);
      if (inserted) {
        it->second.model_id = model_id;
        it->second.display_name = dir_name;
      }
      it->second.domain_ids.insert(domain_id);
      domain_has_model = true;
    }

    if (domain_has_model) {
      domains.push_back(DomainRecord{domain_id, domain_id});
    } else {
      Warn(diagnostics, domain_id, "domain directory yields no data models");
    }
  }

  if (domains.empty()) {
    throw Error(ErrorCode::kEmptyCorpus,
                "empty corpus: no domain with schema files under '" + root.string() + "'");
  }

  CorpusSnapshot snap = builder.Finish(std::move(models), std::move(domains));
  snap.source_uri = root.lexically_normal().generic_string();
  while (snap.source_uri.size() > 1 && snap.source_uri.back() == '/') {
    snap.source_uri.pop_back();
  }
  snap.content_hash = content_hash.HexDigest();
  ValidateSnapshot(snap);
  return snap;
}

}  // namespace ontomesh
