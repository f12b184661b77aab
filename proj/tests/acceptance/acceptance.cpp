// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "artgraph/corpus.hpp"
#include "artgraph/embed.hpp"
#include "artgraph/frontends.hpp"
#include "artgraph/graph.hpp"
#include "artgraph/match.hpp"
#include "artgraph/pipeline.hpp"
#include "artgraph/specgen.hpp"
#include "artgraph/transpile.hpp"

namespace fs = std::filesystem;
using namespace artgraph;
using Clock = std::chrono::steady_clock;

namespace {

const fs::path kData = ARTGRAPH_TEST_DATA;

struct Failed {
    std::string why;
};

void require(bool ok, const std::string& why)
{
    if (!ok)
        throw Failed{why};
}

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class ScratchDir {
public:
    ScratchDir()
    {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("artgraph-accept-" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~ScratchDir()
    {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    const fs::path& path() const { return path_; }

private:
    fs::path path_;
};

std::size_t count_kind(const std::vector<SpecClause>& clauses, ClauseKind kind)
{
    std::size_t n = 0;
    for (const auto& c : clauses)
        n += c.kind == kind;
    return n;
}

std::string corpus_arithmetic()
{
    auto start = Clock::now();
    auto artifacts = corpus::scan_corpus(kData / "fixtures/corpus", Language::C);
    double t = seconds_since(start);
    std::set<std::string> base;
    std::map<std::string, std::size_t> per_variant;
    for (const auto& a : artifacts) {
        require(a.variant.has_value() && a.category.has_value(), a.path + " lacks variant or category");
        base.insert(fs::path(a.path).filename().string());
        ++per_variant[std::string(to_string(*a.variant))];
    }
    require(base.size() == 56, std::to_string(base.size()) + " base programs");
    require(per_variant.size() == 3, std::to_string(per_variant.size()) + " variants");
    for (const auto& [v, n] : per_variant)
        require(n == 56, v + " holds " + std::to_string(n));
    require(artifacts.size() == 168, std::to_string(artifacts.size()) + " instances");
    require(t < 5.0, "scan took " + std::to_string(t) + " s");
    return "56 base programs, 168 instances in " + std::to_string(t) + " s";
}

std::string graph_counts()
{
    fs::path dir = kData / "fixtures/graphs";
    std::ifstream expected(dir / "expected.tsv");
    std::string line;
    std::size_t files = 0;
    while (std::getline(expected, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream row(line);
        std::string file;
        std::size_t tree_nodes = 0;
        std::size_t clauses = 0;
        row >> file >> tree_nodes >> clauses;
        std::string src = corpus::read_file(dir / file);
        auto tree = frontend::parse_c(src);
        auto cs = frontend::extract_annotations(src, Dialect::ACSL);
        require(tree.node_count() == tree_nodes, file + ": tree nodes " + std::to_string(tree.node_count()));
        require(cs.size() == clauses, file + ": clauses " + std::to_string(cs.size()));
        auto g = graph::build_graph(tree, cs, file);
        require(g.nodes().size() == tree_nodes + clauses, file + ": node count");
        require(g.count_edges(graph::EdgeLabel::AstChild) == tree_nodes - 1, file + ": AST_CHILD count");
        require(g.count_edges(graph::EdgeLabel::Spec) == clauses, file + ": SPEC count");
        ++files;
    }
    require(files == 10, std::to_string(files) + " fixture rows");
    return "10 fixture graphs match hand counts";
}

std::string graphml_fixpoint()
{
    std::vector<graph::ArtifactGraph> graphs;
    for (const auto& a : corpus::scan_corpus(kData / "fixtures/graphs", Language::C))
        graphs.push_back(graph::build_graph(frontend::parse_c(a.source),
                                            frontend::extract_annotations(a.source, Dialect::ACSL), a.path));
    for (const auto& a : corpus::scan_corpus(kData / "fixtures/acceptance/dual", Language::C)) {
        auto gen = specgen::gen_acsl(a.source);
        graphs.push_back(graph::build_graph(frontend::parse_c(gen.text),
                                            frontend::extract_annotations(gen.text, Dialect::ACSL), a.path));
    }
    auto start = Clock::now();
    for (const auto& g : graphs) {
        auto first = graph::write_graphml(g);
        auto second = graph::write_graphml(graph::read_graphml(first));
        require(first == second, g.origin + " is not a fixpoint");
    }
    std::string golden = corpus::read_file(kData / "golden/graphml/two_node.graphml");
    require(graph::write_graphml(graph::read_graphml(golden)) == golden, "two_node golden is not a fixpoint");
    double t = seconds_since(start);
    require(t < 1.0, "round trips took " + std::to_string(t) + " s");
    return std::to_string(graphs.size() + 1) + " documents in " + std::to_string(t) + " s";
}

std::string dual_postconditions()
{
    auto artifacts = corpus::scan_corpus(kData / "fixtures/acceptance/dual", Language::C);
    require(artifacts.size() == 5, std::to_string(artifacts.size()) + " fixtures");
    for (const auto& a : artifacts) {
        auto gen = specgen::gen_acsl(a.source);
        std::vector<SpecClause> ensures;
        for (const auto& c : gen.all_clauses())
            if (c.kind == ClauseKind::Ensures)
                ensures.push_back(c);
        require(ensures.size() == 2, a.path + ": " + std::to_string(ensures.size()) + " ensures");
        const std::string& pos = ensures[0].text;
        const std::string& neg = ensures[1].text;
        auto arrow = pos.find(") ==> \\result == ");
        require(pos.front() == '(' && arrow != std::string::npos, a.path + ": unexpected form '" + pos + "'");
        std::string cond = pos.substr(0, arrow + 1);
        require(neg.starts_with("!" + cond + " ==> \\result == "), a.path + ": unexpected form '" + neg + "'");

        auto back = frontend::extract_annotations(gen.text, Dialect::ACSL);
        std::vector<std::string> recovered;
        for (const auto& c : back)
            if (c.kind == ClauseKind::Ensures)
                recovered.push_back(c.text);
        require(recovered == std::vector<std::string>{pos, neg}, a.path + ": round trip lost ensures");
    }
    return "5 functions, 2 ensures each, recovered by the annotation parser";
}

std::string jml_heuristics()
{
    auto gen = specgen::gen_jml(corpus::read_file(kData / "fixtures/acceptance/jml/Account.java"));
    auto clauses = frontend::extract_annotations(gen.text, Dialect::JML);
    std::size_t inv = count_kind(clauses, ClauseKind::Invariant);
    std::size_t req = count_kind(clauses, ClauseKind::Requires);
    std::size_t asg = count_kind(clauses, ClauseKind::Assignable);
    std::string counts = std::to_string(inv) + " invariants, " + std::to_string(req) + " requires, " +
                         std::to_string(asg) + " assignable";
    require(inv == 3 && req == 1 && asg == 1 && clauses.size() == 5, counts + " of " + std::to_string(clauses.size()));
    return counts;
}

std::string dafny_generation()
{
    auto max = frontend::parse_dafny(specgen::gen_dafny(corpus::read_file(kData / "fixtures/acceptance/dafny/Max.cs")));
    require(count_kind(max.clauses, ClauseKind::Ensures) == 2 && max.clauses.size() == 2,
            "Max: " + std::to_string(max.clauses.size()) + " clauses");
    auto count =
        frontend::parse_dafny(specgen::gen_dafny(corpus::read_file(kData / "fixtures/acceptance/dafny/Count.cs")));
    require(count_kind(count.clauses, ClauseKind::Invariant) == 1, "while: invariant count");
    require(count_kind(count.clauses, ClauseKind::Decreases) == 1, "while: decreases count");
    require(count.clauses.size() == 2, "while: " + std::to_string(count.clauses.size()) + " clauses");
    return "Max: 2 ensures; while: 1 invariant, 1 decreases";
}

std::string transpile_goldens()
{
    fs::path dir = kData / "golden/transpile";
    std::size_t checked = 0;
    for (const auto& a : corpus::scan_corpus(dir, Language::C)) {
        std::string cls = corpus::sanitize_class_name(fs::path(a.path).stem().string());
        fs::path base = dir / fs::path(a.path).replace_extension();
        auto java = transpile::c_to_java(a.source, cls);
        auto cs = transpile::c_to_csharp(a.source, cls);
        require(java == corpus::read_file(base.string() + ".java"), a.path + ": Java differs from golden");
        require(cs == corpus::read_file(base.string() + ".cs"), a.path + ": C# differs from golden");
        ++checked;
    }
    require(checked == 10, std::to_string(checked) + " fixtures");
    return "10 fixtures byte-exact in Java and C#";
}

std::string similarity_properties()
{
    require(std::abs(match::cosine({1, 2, 2}, {2, 2, 1}) - 8.0 / 9.0) <= 1e-9, "hand pair");
    embed::StructuralEmbedder provider;
    std::map<std::string, embed::EmbeddingVector> vecs;
    for (const auto& a : corpus::scan_corpus(kData / "fixtures/corpus/correct", Language::C)) {
        auto g = graph::build_graph(frontend::parse_c(a.source), {}, a.path);
        vecs[a.path] = embed::embed_graph(provider, g);
    }
    std::size_t n = vecs.size();
    for (const auto& [p, v] : vecs)
        require(std::abs(match::similarity(v, v) - 1.0) <= 1e-6, p + ": self-similarity");
    for (const auto& [p, v] : vecs)
        for (const auto& [q, w] : vecs)
            require(match::similarity(v, w) == match::similarity(w, v), p + " / " + q + ": asymmetric");
    auto records = match::match_all(vecs, 2);
    require(records.size() == n * (n - 1) / 2, std::to_string(records.size()) + " records");
    for (const auto& r : records)
        require(r.similarity >= 0.0 && r.similarity <= 1.0, r.file1 + " / " + r.file2 + ": out of range");
    return std::to_string(n) + " vectors, " + std::to_string(records.size()) + " pairs";
}

std::string qualitative_ordering()
{
    auto start = Clock::now();
    ScratchDir tmp;
    fs::path triples = kData / "fixtures/triples";
    auto g = pipeline::build_graphs_dir(triples, tmp.path() / "graphs", Language::C, 1, nullptr);
    require(!g.failed_overall() && g.failures == 0, "graph build failed");
    embed::StructuralEmbedder provider;
    auto e = pipeline::embed_dir(tmp.path() / "graphs", tmp.path() / "embeddings.json", provider, 1, nullptr);
    require(!e.failed_overall(), "embedding failed");
    auto m = pipeline::match_file(tmp.path() / "embeddings.json", tmp.path() / "matches.json", 1, nullptr);
    require(!m.failed_overall(), "matching failed");
    auto records = match::parse_matches_json(corpus::read_file(tmp.path() / "matches.json"));
    auto sim = [&](const std::string& a, const std::string& b) {
        for (const auto& r : records)
            if ((r.file1 == a && r.file2 == b) || (r.file1 == b && r.file2 == a))
                return r.similarity;
        throw Failed{"no record for " + a + " / " + b};
    };
    std::size_t triples_seen = 0;
    std::ostringstream detail;
    for (const auto& entry : fs::directory_iterator(triples)) {
        if (!entry.is_directory())
            continue;
        std::string name = entry.path().filename().string();
        double variant = sim(name + "/original.graphml", name + "/renamed.graphml");
        double unrelated = sim(name + "/original.graphml", name + "/unrelated.graphml");
        require(variant > unrelated, name + ": variant " + std::to_string(variant) + " <= unrelated " +
                                         std::to_string(unrelated));
        ++triples_seen;
    }
    require(triples_seen >= 5, std::to_string(triples_seen) + " triples");
    double t = seconds_since(start);
    require(t < 10.0, "took " + std::to_string(t) + " s");
    detail << triples_seen << " triples ordered, " << t << " s";
    return detail.str();
}

std::map<std::string, std::string> artefacts_of(const fs::path& root)
{
    std::map<std::string, std::string> out;
    for (const auto& e : fs::recursive_directory_iterator(root)) {
        if (!e.is_regular_file())
            continue;
        auto rel = fs::relative(e.path(), root).generic_string();
        if (e.path().extension() == ".graphml" || rel == "embeddings.json" || rel == "matches.json")
            out[rel] = corpus::read_file(e.path());
    }
    return out;
}

std::string determinism()
{
    ScratchDir tmp;
    std::map<std::string, std::string> runs[2];
    for (int i = 0; i < 2; ++i) {
        pipeline::PipelineConfig c;
        c.corpus_root = kData / "fixtures/corpus";
        c.out_root = tmp.path() / ("run" + std::to_string(i));
        c.stages = pipeline::parse_stages("all");
        c.jobs = i == 0 ? 1 : 4;
        auto manifest = pipeline::run_pipeline(c, nullptr);
        require(!manifest.fatal, "run " + std::to_string(i) + " was fatal");
        runs[i] = artefacts_of(c.out_root);
    }
    require(runs[0].contains("embeddings.json") && runs[0].contains("matches.json"), "outputs missing");
    require(runs[0].size() == runs[1].size(), "file sets differ");
    for (const auto& [rel, bytes] : runs[0]) {
        auto it = runs[1].find(rel);
        require(it != runs[1].end() && it->second == bytes, rel + " differs between runs");
    }
    return std::to_string(runs[0].size()) + " files byte-identical across two runs";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<std::string()>>> criteria{
        {"corpus arithmetic", corpus_arithmetic},
        {"graph construction counts", graph_counts},
        {"graphml round trip", graphml_fixpoint},
        {"dual postconditions", dual_postconditions},
        {"jml heuristics", jml_heuristics},
        {"dafny generation", dafny_generation},
        {"transpilation goldens", transpile_goldens},
        {"similarity properties", similarity_properties},
        {"qualitative ordering", qualitative_ordering},
        {"determinism", determinism},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        try {
            std::string detail = check();
            std::cout << "PASS  " << name << ": " << detail << "\n";
        } catch (const Failed& f) {
            ++failures;
            std::cout << "FAIL  " << name << ": " << f.why << "\n";
        } catch (const std::exception& e) {
            ++failures;
            std::cout << "FAIL  " << name << ": exception: " << e.what() << "\n";
        }
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures == 0 ? 0 : 1;
}
