#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "artgraph/pipeline.hpp"
#include "artgraph/simd.hpp"

namespace pl = artgraph::pipeline;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kFatal = 1;
constexpr int kConfig = 2;

struct Options {
    std::string corpus;
    std::string out;
    std::string stages = "all";
    std::string provider = "structural";
    std::string endpoint;
    std::size_t dim = 256;
    unsigned jobs = 1;
    std::string in;
    std::string lang = "c";
    std::string embeddings;
    std::string matches;
    std::size_t neighbors = 3;
};

const std::map<std::string, pl::ProviderKind> kProviders{
    {"structural", pl::ProviderKind::Structural},
    {"service", pl::ProviderKind::Service},
};

const std::map<std::string, artgraph::Language> kGraphLanguages{
    {"c", artgraph::Language::C},
    {"java", artgraph::Language::Java},
    {"dafny", artgraph::Language::Dafny},
};

int finish(const pl::StageResult& r)
{
    if (r.fatal)
        std::cerr << r.stage << ": fatal: " << r.fatal_error << "\n";
    std::cout << "summary: " << r.inputs << " inputs, " << r.outputs << " ok, " << r.failures << " failed, "
              << r.diag.size() << " warnings\n";
    return r.failed_overall() ? kFatal : kOk;
}

pl::PipelineConfig to_config(const Options& o)
{
    pl::PipelineConfig c;
    c.corpus_root = o.corpus;
    c.out_root = o.out;
    c.provider = kProviders.at(o.provider);
    if (!o.endpoint.empty())
        c.service_endpoint = o.endpoint;
    c.embed_dim = o.dim;
    c.stages = pl::parse_stages(o.stages);
    c.jobs = o.jobs;
    return c;
}

/// Fills top-level options that neither a flag nor an environment variable set.
void apply_config_file(CLI::App& app, const std::string& path)
{
    for (const auto& item : CLI::ConfigTOML().from_file(path)) {
        if (!item.parents.empty())
            throw CLI::ConfigError::Extras(item.fullname());
        CLI::Option* opt = app.get_option_no_throw("--" + item.name);
        if (!opt || item.name == "config")
            throw CLI::ConfigError::Extras(item.name);
        if (opt->count() > 0)
            continue;
        opt->add_result(item.inputs);
        opt->run_callback();
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"artgraph: multi-language artifact generation, graph construction and similarity matching"};
    std::string config_file;
    app.add_option("--config", config_file, "TOML/INI configuration file; flags and ARTGRAPH_* variables override it")
        ->check(CLI::ExistingFile);
    app.require_subcommand(0, 1);
    Options o;

    auto provider_opts = [&](CLI::App* a) {
        a->add_option("--provider", o.provider, "Embedding provider")
            ->envname("ARTGRAPH_PROVIDER")
            ->transform(CLI::IsMember(kProviders));
        a->add_option("--endpoint", o.endpoint, "Embedding service URL")->envname("ARTGRAPH_ENDPOINT");
        a->add_option("--dim", o.dim, "Embedding dimension")->envname("ARTGRAPH_DIM")->check(CLI::PositiveNumber);
    };
    auto jobs_opt = [&](CLI::App* a) {
        a->add_option("--jobs", o.jobs, "Worker threads per stage")->envname("ARTGRAPH_JOBS")->check(CLI::PositiveNumber);
    };

    app.add_option("--corpus", o.corpus, "Corpus root of C programs")->envname("ARTGRAPH_CORPUS");
    app.add_option("--out", o.out, "Output root")->envname("ARTGRAPH_OUT");
    app.add_option("--stages", o.stages, "Comma separated stages or 'all'")->envname("ARTGRAPH_STAGES");
    provider_opts(&app);
    jobs_opt(&app);

    auto dir_command = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--in", o.in, "Input root")->required();
        sub->add_option("--out", o.out, "Output root")->required();
        jobs_opt(sub);
        return sub;
    };
    CLI::App* acsl = dir_command("gen-acsl", "Annotate C files with ACSL contracts");
    CLI::App* java = dir_command("to-java", "Transpile C files to Java");
    CLI::App* jml = dir_command("gen-jml", "Annotate Java files with JML contracts");
    CLI::App* csharp = dir_command("to-csharp", "Transpile C files to C#");
    CLI::App* dafny = dir_command("gen-dafny", "Generate Dafny from C# files");
    CLI::App* graphs = dir_command("build-graphs", "Build GraphML files from annotated sources");
    graphs->add_option("--lang", o.lang, "Source language")->transform(CLI::IsMember(kGraphLanguages));

    CLI::App* embed = app.add_subcommand("embed", "Embed every GraphML file under --in");
    embed->add_option("--in", o.in, "GraphML root")->required();
    embed->add_option("--out", o.out, "Embeddings JSON file")->required();
    provider_opts(embed);
    jobs_opt(embed);

    CLI::App* match = app.add_subcommand("match", "Pairwise similarity over an embeddings file");
    match->add_option("--embeddings,--in", o.embeddings, "Embeddings JSON file")->required();
    match->add_option("--out", o.out, "matches.json path")->required();
    jobs_opt(match);

    CLI::App* report = app.add_subcommand("report", "Similarity distribution report");
    report->add_option("--matches,--in", o.matches, "matches.json path")->required();
    report->add_option("--out", o.out, "Report directory")->required();
    report->add_option("--neighbors", o.neighbors, "Neighbours per file in the DOT export")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (!config_file.empty())
            apply_config_file(app, config_file);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfig;
    }

    std::ostream* log = &std::cout;
    try {
        if (*acsl)
            return finish(pl::gen_acsl_dir(o.in, o.out, o.jobs, log));
        if (*java)
            return finish(pl::to_java_dir(o.in, o.out, o.jobs, log));
        if (*jml)
            return finish(pl::gen_jml_dir(o.in, o.out, o.jobs, log));
        if (*csharp)
            return finish(pl::to_csharp_dir(o.in, o.out, o.jobs, log));
        if (*dafny)
            return finish(pl::gen_dafny_dir(o.in, o.out, o.jobs, log));
        if (*graphs)
            return finish(pl::build_graphs_dir(o.in, o.out, kGraphLanguages.at(o.lang), o.jobs, log));
        if (*embed) {
            pl::PipelineConfig c = to_config(o);
            c.stages.clear();
            c.out_root = fs::path(o.out).parent_path();
            pl::validate(c);
            auto provider = pl::make_provider(c.provider, c.embed_dim, c.service_endpoint);
            return finish(pl::embed_dir(o.in, o.out, *provider, o.jobs, log));
        }
        if (*match)
            return finish(pl::match_file(o.embeddings, o.out, o.jobs, log));
        if (*report)
            return finish(pl::report_file(o.matches, o.out, o.neighbors, log));

        pl::PipelineConfig config = to_config(o);
        if (!config.stages.empty() && config.corpus_root.empty())
            throw pl::ConfigError("--corpus is required");
        auto manifest = pl::run_pipeline(config, log);
        std::cout << "simd: " << artgraph::simd::to_string(artgraph::simd::active().isa) << "\n";
        for (const auto& s : manifest.stages)
            std::cout << "stage " << s.stage << ": " << s.outputs << "/" << s.inputs << " ok, " << s.failures
                      << " failed" << (s.failed_overall() ? " (fatal)" : "") << "\n";
        std::cout << "warnings: " << manifest.warning_count() << "\n";
        return manifest.fatal ? kFatal : kOk;
    } catch (const pl::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return kFatal;
    }
}
