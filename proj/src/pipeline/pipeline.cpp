#include "artgraph/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <functional>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "artgraph/corpus.hpp"
#include "artgraph/frontends.hpp"
#include "artgraph/graph.hpp"
#include "artgraph/match.hpp"
#include "artgraph/simd.hpp"
#include "artgraph/specgen.hpp"
#include "artgraph/text_util.hpp"
#include "artgraph/transpile.hpp"

namespace artgraph::pipeline {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::array<std::pair<Stage, std::string_view>, 9> kStageNames{{
    {Stage::Acsl, "acsl"},
    {Stage::Java, "java"},
    {Stage::Jml, "jml"},
    {Stage::CSharp, "csharp"},
    {Stage::Dafny, "dafny"},
    {Stage::Graphs, "graphs"},
    {Stage::Embed, "embed"},
    {Stage::Match, "match"},
    {Stage::Report, "report"},
}};

/// (producer, consumer) pairs: when both are requested the producer must come first.
constexpr std::array<std::pair<Stage, Stage>, 8> kDependencies{{
    {Stage::Java, Stage::Jml},
    {Stage::CSharp, Stage::Dafny},
    {Stage::Acsl, Stage::Graphs},
    {Stage::Jml, Stage::Graphs},
    {Stage::Dafny, Stage::Graphs},
    {Stage::Graphs, Stage::Embed},
    {Stage::Embed, Stage::Match},
    {Stage::Match, Stage::Report},
}};

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn)
{
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++)
                fn(i);
        });
    for (auto& th : pool)
        th.join();
}

double since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct FileOutcome {
    bool ok = false;
    std::string error;
    Diagnostics diag;
};

/// Runs `convert` on every artifact of `language` under `in`, writing the
/// result to the mirrored path with `extension`. Results are merged in path
/// order, so logs and warnings do not depend on scheduling.
StageResult convert_dir(std::string name, const fs::path& in, const fs::path& out, Language language,
                        const std::string& extension, unsigned jobs, std::ostream* log,
                        const std::function<std::string(const corpus::ProgramArtifact&, Diagnostics&)>& convert)
{
    StageResult r;
    r.stage = std::move(name);
    auto start = Clock::now();
    std::vector<corpus::ProgramArtifact> arts;
    try {
        arts = corpus::scan_corpus(in, language, &r.diag);
    } catch (const corpus::CorpusError& e) {
        r.fatal = true;
        r.fatal_error = e.what();
        r.seconds = since(start);
        if (log)
            *log << r.stage << ": " << e.what() << "\n";
        return r;
    }
    r.inputs = arts.size();
    std::vector<FileOutcome> outcomes(arts.size());
    parallel_for(arts.size(), jobs, [&](std::size_t i) {
        FileOutcome& o = outcomes[i];
        try {
            std::string text = convert(arts[i], o.diag);
            corpus::write_file(corpus::mirror_path(in, out, arts[i].path, extension), text);
            o.ok = true;
        } catch (const std::exception& e) {
            o.error = e.what();
        }
    });
    for (std::size_t i = 0; i < arts.size(); ++i) {
        r.diag.merge(outcomes[i].diag, arts[i].path);
        if (outcomes[i].ok) {
            ++r.outputs;
            if (log)
                *log << "ok    " << r.stage << " " << arts[i].path << "\n";
        } else {
            ++r.failures;
            r.failed.push_back({r.stage, arts[i].path, outcomes[i].error});
            if (log)
                *log << "FAIL  " << r.stage << " " << arts[i].path << ": " << outcomes[i].error << "\n";
        }
    }
    r.seconds = since(start);
    if (log)
        *log << r.stage << ": " << r.outputs << " ok, " << r.failures << " failed\n";
    return r;
}

std::string class_name_for(const std::string& path)
{
    return corpus::sanitize_class_name(fs::path(path).stem().string());
}

std::vector<std::string> files_with_extension(const fs::path& root, const std::string& ext)
{
    std::vector<std::string> out;
    if (!fs::is_directory(root))
        throw corpus::CorpusError("directory '" + root.string() + "' does not exist");
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (e.is_regular_file() && e.path().extension() == ext)
            out.push_back(fs::relative(e.path(), root).generic_string());
    }
    std::sort(out.begin(), out.end());
    return out;
}

json stage_json(const StageResult& s)
{
    json j;
    j["stage"] = s.stage;
    j["inputs"] = s.inputs;
    j["outputs"] = s.outputs;
    j["failures"] = s.failures;
    j["warnings"] = s.diag.size();
    j["seconds"] = s.seconds;
    if (s.fatal)
        j["fatal"] = s.fatal_error;
    json f = json::array();
    for (const auto& x : s.failed)
        f.push_back({{"path", x.path}, {"error", x.error}});
    j["failed"] = f;
    return j;
}

}  // namespace

std::string_view to_string(Stage stage)
{
    for (const auto& [s, n] : kStageNames)
        if (s == stage)
            return n;
    return "?";
}

std::optional<Stage> stage_from_name(std::string_view name)
{
    for (const auto& [s, n] : kStageNames)
        if (n == name)
            return s;
    return std::nullopt;
}

std::vector<Stage> parse_stages(std::string_view list)
{
    std::vector<Stage> out;
    std::string_view rest = list;
    while (!rest.empty()) {
        std::size_t comma = rest.find(',');
        std::string_view item = text::trim(rest.substr(0, comma));
        rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
        if (item.empty())
            continue;
        if (item == "all") {
            for (const auto& [s, n] : kStageNames)
                out.push_back(s);
            continue;
        }
        auto s = stage_from_name(item);
        if (!s)
            throw ConfigError("unknown stage '" + std::string(item) + "'");
        out.push_back(*s);
    }
    return out;
}

void validate(const PipelineConfig& c)
{
    if (c.provider == ProviderKind::Service && (!c.service_endpoint || c.service_endpoint->empty()))
        throw ConfigError("provider 'service' needs an endpoint");
    if (c.embed_dim == 0)
        throw ConfigError("dim must be positive");
    if (c.jobs == 0)
        throw ConfigError("jobs must be positive");
    if (!c.stages.empty() && c.out_root.empty())
        throw ConfigError("an output directory is required");
    auto pos = [&](Stage s) -> std::ptrdiff_t {
        auto it = std::find(c.stages.begin(), c.stages.end(), s);
        return it == c.stages.end() ? -1 : it - c.stages.begin();
    };
    for (const auto& [s, n] : kStageNames)
        if (std::count(c.stages.begin(), c.stages.end(), s) > 1)
            throw ConfigError("stage '" + std::string(n) + "' is listed twice");
    for (const auto& [producer, consumer] : kDependencies) {
        auto p = pos(producer);
        auto q = pos(consumer);
        if (p >= 0 && q >= 0 && q < p)
            throw ConfigError("stage '" + std::string(to_string(consumer)) + "' must come after '" +
                              std::string(to_string(producer)) + "'");
    }
}

StageResult gen_acsl_dir(const fs::path& in, const fs::path& out, unsigned jobs, std::ostream* log)
{
    return convert_dir("acsl", in, out, Language::C, ".c", jobs, log,
                       [](const corpus::ProgramArtifact& a, Diagnostics& d) { return specgen::gen_acsl(a.source, &d).text; });
}

StageResult to_java_dir(const fs::path& in, const fs::path& out, unsigned jobs, std::ostream* log)
{
    return convert_dir("java", in, out, Language::C, ".java", jobs, log,
                       [](const corpus::ProgramArtifact& a, Diagnostics& d) {
                           return transpile::c_to_java(a.source, class_name_for(a.path), &d);
                       });
}

StageResult gen_jml_dir(const fs::path& in, const fs::path& out, unsigned jobs, std::ostream* log)
{
    return convert_dir("jml", in, out, Language::Java, ".java", jobs, log,
                       [](const corpus::ProgramArtifact& a, Diagnostics& d) { return specgen::gen_jml(a.source, &d).text; });
}

StageResult to_csharp_dir(const fs::path& in, const fs::path& out, unsigned jobs, std::ostream* log)
{
    return convert_dir("csharp", in, out, Language::C, ".cs", jobs, log,
                       [](const corpus::ProgramArtifact& a, Diagnostics& d) {
                           return transpile::c_to_csharp(a.source, class_name_for(a.path), &d);
                       });
}

StageResult gen_dafny_dir(const fs::path& in, const fs::path& out, unsigned jobs, std::ostream* log)
{
    return convert_dir("dafny", in, out, Language::CSharp, ".dfy", jobs, log,
                       [](const corpus::ProgramArtifact& a, Diagnostics& d) { return specgen::gen_dafny(a.source, &d); });
}

StageResult build_graphs_dir(const fs::path& in, const fs::path& out, Language language, unsigned jobs,
                             std::ostream* log)
{
    std::string name = "graphs-" + std::string(to_string(language));
    return convert_dir(name, in, out, language, ".graphml", jobs, log,
                       [language](const corpus::ProgramArtifact& a, Diagnostics& d) {
                           graph::ArtifactGraph g;
                           switch (language) {
                           case Language::C:
                               g = graph::build_graph(frontend::parse_c(a.source, &d),
                                                      frontend::extract_annotations(a.source, Dialect::ACSL, &d), a.path);
                               break;
                           case Language::Java:
                               g = graph::build_graph(frontend::parse_java(a.source, &d),
                                                      frontend::extract_annotations(a.source, Dialect::JML, &d), a.path);
                               break;
                           case Language::Dafny:
                               g = graph::build_dafny_graph(a.source, a.path, &d);
                               break;
                           case Language::CSharp:
                               throw std::runtime_error("no graph builder for C#");
                           }
                           return graph::write_graphml(g);
                       });
}

StageResult embed_dir(const fs::path& graphs_root, const fs::path& out_file, const embed::EmbeddingProvider& provider,
                      unsigned jobs, std::ostream* log)
{
    StageResult r;
    r.stage = "embed";
    auto start = Clock::now();
    std::vector<std::string> paths;
    try {
        paths = files_with_extension(graphs_root, ".graphml");
    } catch (const std::exception& e) {
        r.fatal = true;
        r.fatal_error = e.what();
        if (log)
            *log << "embed: " << e.what() << "\n";
        return r;
    }
    r.inputs = paths.size();

    std::vector<std::string> texts(paths.size());
    std::vector<std::string> errors(paths.size());
    parallel_for(paths.size(), jobs, [&](std::size_t i) {
        try {
            texts[i] = graph::linearize(graph::read_graphml(corpus::read_file(graphs_root / paths[i])));
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });

    embed::EmbeddingStore store;
    store.provider = provider.id();
    store.dim = provider.dim();
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (errors[i].empty())
            ready.push_back(i);

    // one provider call per chunk so a failing batch costs only its own files
    const std::size_t chunk = 64;
    std::vector<std::vector<std::size_t>> chunks;
    for (std::size_t b = 0; b < ready.size(); b += chunk)
        chunks.emplace_back(ready.begin() + static_cast<std::ptrdiff_t>(b),
                            ready.begin() + static_cast<std::ptrdiff_t>(std::min(ready.size(), b + chunk)));
    std::vector<std::vector<embed::EmbeddingVector>> results(chunks.size());
    parallel_for(chunks.size(), jobs, [&](std::size_t c) {
        std::vector<std::string> batch;
        std::vector<std::string> origins;
        for (std::size_t i : chunks[c]) {
            batch.push_back(texts[i]);
            origins.push_back(paths[i]);
        }
        try {
            results[c] = embed::embed_texts(provider, batch, origins);
        } catch (const std::exception& e) {
            for (std::size_t i : chunks[c])
                errors[i] = e.what();
        }
    });
    for (std::size_t c = 0; c < chunks.size(); ++c)
        for (std::size_t j = 0; j < results[c].size(); ++j)
            store.vectors.emplace(paths[chunks[c][j]], std::move(results[c][j]));

    for (std::size_t i = 0; i < paths.size(); ++i) {
        if (errors[i].empty()) {
            ++r.outputs;
            if (log)
                *log << "ok    embed " << paths[i] << "\n";
        } else {
            ++r.failures;
            r.failed.push_back({"embed", paths[i], errors[i]});
            if (log)
                *log << "FAIL  embed " << paths[i] << ": " << errors[i] << "\n";
        }
    }
    try {
        store.save(out_file);
    } catch (const std::exception& e) {
        r.fatal = true;
        r.fatal_error = e.what();
    }
    r.seconds = since(start);
    if (log)
        *log << "embed: " << r.outputs << " ok, " << r.failures << " failed\n";
    return r;
}

StageResult match_file(const fs::path& embeddings, const fs::path& out_file, unsigned jobs, std::ostream* log)
{
    StageResult r;
    r.stage = "match";
    auto start = Clock::now();
    try {
        auto store = embed::EmbeddingStore::load(embeddings);
        r.inputs = store.vectors.size();
        auto records = match::match_all(store.vectors, jobs);
        corpus::write_file(out_file, match::matches_json(records));
        r.outputs = store.vectors.size();
        if (log)
            *log << "match: " << records.size() << " pairs over " << store.vectors.size() << " vectors\n";
    } catch (const std::exception& e) {
        r.fatal = true;
        r.fatal_error = e.what();
        if (log)
            *log << "match: " << e.what() << "\n";
    }
    r.seconds = since(start);
    return r;
}

StageResult report_file(const fs::path& matches, const fs::path& out_dir, std::size_t neighbors, std::ostream* log)
{
    StageResult r;
    r.stage = "report";
    auto start = Clock::now();
    try {
        auto records = match::parse_matches_json(corpus::read_file(matches));
        r.inputs = records.size();
        auto summary = match::report_distribution(records);
        std::string text = match::report_text(summary);
        corpus::write_file(out_dir / "report.txt", text);
        corpus::write_file(out_dir / "report.json", match::report_json(summary));
        corpus::write_file(out_dir / "neighbors.dot", match::neighborhood_dot(records, neighbors));
        r.outputs = records.size();
        if (log)
            *log << text;
    } catch (const std::exception& e) {
        r.fatal = true;
        r.fatal_error = e.what();
        if (log)
            *log << "report: " << e.what() << "\n";
    }
    r.seconds = since(start);
    return r;
}

std::unique_ptr<embed::EmbeddingProvider> make_provider(ProviderKind kind, std::size_t dim,
                                                        const std::optional<std::string>& endpoint)
{
    if (kind == ProviderKind::Structural)
        return std::make_unique<embed::StructuralEmbedder>(dim);
    embed::ServiceConfig cfg;
    cfg.endpoint = endpoint.value_or("");
    return std::make_unique<embed::ServiceClient>(cfg);
}

std::size_t RunManifest::warning_count() const
{
    std::size_t n = 0;
    for (const auto& s : stages)
        n += s.diag.size();
    return n;
}

std::string RunManifest::to_json(const PipelineConfig& config) const
{
    json doc;
    std::time_t now = std::time(nullptr);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    doc["generated_at"] = stamp;
    json cfg;
    cfg["corpus"] = config.corpus_root.generic_string();
    cfg["out"] = config.out_root.generic_string();
    cfg["provider"] = config.provider == ProviderKind::Structural ? "structural" : "service";
    if (config.service_endpoint)
        cfg["endpoint"] = *config.service_endpoint;
    cfg["dim"] = config.embed_dim;
    cfg["jobs"] = config.jobs;
    json stage_names = json::array();
    for (Stage s : config.stages)
        stage_names.push_back(std::string(pipeline::to_string(s)));
    cfg["stages"] = stage_names;
    doc["config"] = cfg;
    doc["simd"] = std::string(simd::to_string(simd::active().isa));
    json inputs = json::object();
    for (const auto& [p, h] : input_hashes)
        inputs[p] = h;
    doc["inputs"] = inputs;
    json st = json::array();
    for (const auto& s : stages)
        st.push_back(stage_json(s));
    doc["stages"] = st;
    doc["warnings"] = warning_count();
    doc["fatal"] = fatal;
    return doc.dump(2) + "\n";
}

RunManifest run_pipeline(const PipelineConfig& config, std::ostream* log)
{
    validate(config);
    RunManifest m;
    const fs::path& out = config.out_root;

    if (!config.corpus_root.empty() && fs::is_directory(config.corpus_root)) {
        Diagnostics scan_diag;
        for (const auto& a : corpus::scan_corpus(config.corpus_root, Language::C, &scan_diag))
            m.input_hashes.emplace_back(a.path, text::hex64(text::fnv1a64(a.source)));
    }

    std::unique_ptr<embed::EmbeddingProvider> provider;
    for (Stage s : config.stages) {
        StageResult r;
        switch (s) {
        case Stage::Acsl:
            r = gen_acsl_dir(config.corpus_root, out / "acsl", config.jobs, log);
            break;
        case Stage::Java:
            r = to_java_dir(config.corpus_root, out / "java", config.jobs, log);
            break;
        case Stage::Jml:
            r = gen_jml_dir(out / "java", out / "jml", config.jobs, log);
            break;
        case Stage::CSharp:
            r = to_csharp_dir(config.corpus_root, out / "csharp", config.jobs, log);
            break;
        case Stage::Dafny:
            r = gen_dafny_dir(out / "csharp", out / "dafny", config.jobs, log);
            break;
        case Stage::Graphs: {
            auto start = Clock::now();
            r.stage = "graphs";
            std::vector<std::pair<fs::path, Language>> sources;
            sources.emplace_back(fs::is_directory(out / "acsl") ? out / "acsl" : config.corpus_root, Language::C);
            if (fs::is_directory(out / "jml"))
                sources.emplace_back(out / "jml", Language::Java);
            else if (fs::is_directory(out / "java"))
                sources.emplace_back(out / "java", Language::Java);
            if (fs::is_directory(out / "dafny"))
                sources.emplace_back(out / "dafny", Language::Dafny);
            for (const auto& [dir, lang] : sources) {
                std::string sub = lang == Language::C ? "c" : lang == Language::Java ? "java" : "dafny";
                StageResult part = build_graphs_dir(dir, out / "graphs" / sub, lang, config.jobs, log);
                r.inputs += part.inputs;
                r.outputs += part.outputs;
                r.failures += part.failures;
                r.failed.insert(r.failed.end(), part.failed.begin(), part.failed.end());
                r.diag.merge(part.diag);
                if (part.fatal) {
                    r.fatal = true;
                    r.fatal_error = part.fatal_error;
                }
            }
            r.seconds = since(start);
            break;
        }
        case Stage::Embed:
            if (!provider) {
                try {
                    provider = make_provider(config.provider, config.embed_dim, config.service_endpoint);
                } catch (const std::exception& e) {
                    r.stage = "embed";
                    r.fatal = true;
                    r.fatal_error = e.what();
                    if (log)
                        *log << "embed: " << e.what() << "\n";
                    break;
                }
            }
            r = embed_dir(out / "graphs", out / "embeddings.json", *provider, config.jobs, log);
            break;
        case Stage::Match:
            r = match_file(out / "embeddings.json", out / "matches.json", config.jobs, log);
            break;
        case Stage::Report:
            r = report_file(out / "matches.json", out, 3, log);
            break;
        }
        m.fatal = m.fatal || r.failed_overall();
        m.stages.push_back(std::move(r));
    }

    if (!out.empty()) {
        Diagnostics all;
        for (const auto& s : m.stages)
            all.merge(s.diag);
        corpus::write_file(out / "warnings.jsonl", all.to_jsonl());
        corpus::write_file(out / "manifest.json", m.to_json(config));
    }
    return m;
}

}  // namespace artgraph::pipeline
