#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "artgraph/diagnostics.hpp"
#include "artgraph/types.hpp"

namespace artgraph::corpus {

class CorpusError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ProgramArtifact {
    std::string path;  ///< relative to the corpus root, forward slashes
    Language language = Language::C;
    std::optional<Category> category;
    std::optional<Variant> variant;
    std::string source;

    bool operator==(const ProgramArtifact&) const = default;
};

/// Every file under `root` with the extension of `language`, sorted by
/// relative path. Category and variant are taken from directory components
/// that spell one of the known names exactly.
///
/// Throws CorpusError when `root` is missing. Files that cannot be read are
/// skipped and reported through `diag` with code "unreadable-file".
std::vector<ProgramArtifact> scan_corpus(const std::filesystem::path& root, Language language,
                                         Diagnostics* diag = nullptr);

/// `dst_root / artifact_path` with the extension replaced by `new_extension`.
/// Pure path algebra; `src_root` is accepted for symmetry with callers that
/// hold both roots and is not consulted.
std::filesystem::path mirror_path(const std::filesystem::path& src_root,
                                  const std::filesystem::path& dst_root,
                                  const std::string& artifact_path,
                                  const std::string& new_extension);

/// Writes `content` to `path`, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& content);

/// Reads a whole file as sanitized UTF-8. Throws CorpusError on failure.
std::string read_file(const std::filesystem::path& path);

/// Identity of the base program an instance derives from: the relative path
/// with its variant directory component removed and the extension dropped.
std::string base_program_key(const ProgramArtifact& artifact);

/// Stem of `path` turned into a valid class identifier: characters outside
/// [A-Za-z0-9_] become '_', a leading digit gets a '_' prefix, and reserved
/// words get a '_' suffix.
std::string sanitize_class_name(const std::string& stem);

}  // namespace artgraph::corpus
