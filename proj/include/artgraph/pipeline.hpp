#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "artgraph/diagnostics.hpp"
#include "artgraph/embed.hpp"
#include "artgraph/types.hpp"

namespace artgraph::pipeline {

namespace fs = std::filesystem;

enum class Stage { Acsl, Java, Jml, CSharp, Dafny, Graphs, Embed, Match, Report };

std::string_view to_string(Stage stage);
std::optional<Stage> stage_from_name(std::string_view name);
/// Comma separated names; "all" expands to every stage. Throws ConfigError.
std::vector<Stage> parse_stages(std::string_view list);

enum class ProviderKind { Structural, Service };

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PipelineConfig {
    fs::path corpus_root;
    fs::path out_root;
    ProviderKind provider = ProviderKind::Structural;
    std::optional<std::string> service_endpoint;
    std::size_t embed_dim = 256;
    std::vector<Stage> stages;
    unsigned jobs = 1;
};

/// Throws ConfigError for a missing endpoint, zero dim or jobs, repeated
/// stages, or stages out of dependency order.
void validate(const PipelineConfig& config);

struct Failure {
    std::string stage;
    std::string path;
    std::string error;
};

struct StageResult {
    std::string stage;
    std::size_t inputs = 0;
    std::size_t outputs = 0;
    std::size_t failures = 0;
    double seconds = 0.0;
    bool fatal = false;
    std::string fatal_error;
    std::vector<Failure> failed;
    Diagnostics diag;

    /// Fatal, or inputs were present and none succeeded.
    bool failed_overall() const { return fatal || (inputs > 0 && outputs == 0); }
};

/// Per-file status lines go to `log` when it is not null.
StageResult gen_acsl_dir(const fs::path& in, const fs::path& out, unsigned jobs, std::ostream* log);
StageResult to_java_dir(const fs::path& in, const fs::path& out, unsigned jobs, std::ostream* log);
StageResult gen_jml_dir(const fs::path& in, const fs::path& out, unsigned jobs, std::ostream* log);
StageResult to_csharp_dir(const fs::path& in, const fs::path& out, unsigned jobs, std::ostream* log);
StageResult gen_dafny_dir(const fs::path& in, const fs::path& out, unsigned jobs, std::ostream* log);

/// One .graphml per source file of `language` (C, Java or Dafny). Clauses
/// come from extract_annotations for C and Java, from parse_dafny for Dafny.
StageResult build_graphs_dir(const fs::path& in, const fs::path& out, Language language, unsigned jobs,
                             std::ostream* log);

/// Embeds every .graphml under `graphs_root`; keys are paths relative to it.
StageResult embed_dir(const fs::path& graphs_root, const fs::path& out_file, const embed::EmbeddingProvider& provider,
                      unsigned jobs, std::ostream* log);

StageResult match_file(const fs::path& embeddings, const fs::path& out_file, unsigned jobs, std::ostream* log);

/// Writes report.txt, report.json and neighbors.dot into `out_dir`.
StageResult report_file(const fs::path& matches, const fs::path& out_dir, std::size_t neighbors, std::ostream* log);

std::unique_ptr<embed::EmbeddingProvider> make_provider(ProviderKind kind, std::size_t dim,
                                                        const std::optional<std::string>& endpoint);

struct RunManifest {
    std::vector<StageResult> stages;
    std::vector<std::pair<std::string, std::string>> input_hashes;  ///< corpus path, FNV-1a 64 hex
    bool fatal = false;

    std::size_t warning_count() const;
    std::string to_json(const PipelineConfig& config) const;
};

/// Runs the configured stages in order under `config.out_root`:
/// acsl/, java/, jml/, csharp/, dafny/, graphs/<c|java|dafny>/, embeddings.json,
/// matches.json, report.*, plus manifest.json and warnings.jsonl.
RunManifest run_pipeline(const PipelineConfig& config, std::ostream* log);

}  // namespace artgraph::pipeline
