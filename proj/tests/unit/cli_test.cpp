#include <sys/wait.h>

#include <cstdlib>

#include <gtest/gtest.h>
#include <json.hpp>

#include "artgraph/corpus.hpp"
#include "artgraph/match.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace artgraph;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args, const artgraph::testing::TempDir& tmp, const std::string& env = "")
{
    fs::path log = tmp / "cli.log";
    std::string cmd = env + " '" + std::string(ARTGRAPH_CLI) + "' " + args + " > '" + log.string() + "' 2>&1";
    int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = corpus::read_file(log);
    return r;
}

void two_c_files(const fs::path& root)
{
    corpus::write_file(root / "correct/basic/a.c", "int a(int x) { return x * 2; }\n");
    corpus::write_file(root / "correct/basic/b.c", "int b(int x) { if (x < 0) return -x; return x; }\n");
}

}  // namespace

TEST(Cli, HelpExitsZero)
{
    artgraph::testing::TempDir tmp;
    auto r = cli("--help", tmp);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("build-graphs"), std::string::npos);
}

TEST(Cli, BuildGraphsWritesOnePerFile)
{
    artgraph::testing::TempDir tmp;
    two_c_files(tmp / "in");
    auto r = cli("build-graphs --in '" + (tmp / "in").string() + "' --out '" + (tmp / "g").string() + "' --lang c", tmp);
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(fs::exists(tmp / "g/correct/basic/a.graphml"));
    EXPECT_TRUE(fs::exists(tmp / "g/correct/basic/b.graphml"));
    EXPECT_NE(r.out.find("summary: 2 inputs, 2 ok, 0 failed"), std::string::npos) << r.out;
}

TEST(Cli, EmbedHonoursDim)
{
    artgraph::testing::TempDir tmp;
    two_c_files(tmp / "in");
    ASSERT_EQ(cli("build-graphs --in '" + (tmp / "in").string() + "' --out '" + (tmp / "g").string() + "'", tmp).code, 0);
    auto r = cli("embed --in '" + (tmp / "g").string() + "' --out '" + (tmp / "e.json").string() + "' --dim 256", tmp);
    ASSERT_EQ(r.code, 0) << r.out;
    auto store = embed::EmbeddingStore::load(tmp / "e.json");
    EXPECT_EQ(store.dim, 256u);
    EXPECT_EQ(store.vectors.begin()->second.dim(), 256u);

    r = cli("match --embeddings '" + (tmp / "e.json").string() + "' --out '" + (tmp / "m.json").string() + "'", tmp);
    ASSERT_EQ(r.code, 0) << r.out;
    auto records = match::parse_matches_json(corpus::read_file(tmp / "m.json"));
    ASSERT_EQ(records.size(), 1u);
    EXPECT_LT(records[0].file1, records[0].file2);
}

TEST(Cli, EnvironmentSuppliesDefaults)
{
    artgraph::testing::TempDir tmp;
    two_c_files(tmp / "in");
    std::string env = "ARTGRAPH_CORPUS='" + (tmp / "in").string() + "' ARTGRAPH_OUT='" + (tmp / "o").string() +
                      "' ARTGRAPH_STAGES=graphs,embed ARTGRAPH_DIM=32";
    auto r = cli("", tmp, env);
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(embed::EmbeddingStore::load(tmp / "o/embeddings.json").dim, 32u);
    r = cli("--dim 16", tmp, env);
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(embed::EmbeddingStore::load(tmp / "o/embeddings.json").dim, 16u);
}

TEST(Cli, ConfigFileBelowFlagsAndEnvironment)
{
    artgraph::testing::TempDir tmp;
    two_c_files(tmp / "in");
    corpus::write_file(tmp / "run.toml", "corpus = \"" + (tmp / "in").string() + "\"\nout = \"" +
                                            (tmp / "o").string() + "\"\nstages = \"graphs,embed\"\ndim = 24\n");
    std::string cfg = "--config '" + (tmp / "run.toml").string() + "'";
    ASSERT_EQ(cli(cfg, tmp).code, 0);
    EXPECT_EQ(embed::EmbeddingStore::load(tmp / "o/embeddings.json").dim, 24u);
    ASSERT_EQ(cli(cfg, tmp, "ARTGRAPH_DIM=20").code, 0);
    EXPECT_EQ(embed::EmbeddingStore::load(tmp / "o/embeddings.json").dim, 20u);
    ASSERT_EQ(cli(cfg + " --dim 12", tmp, "ARTGRAPH_DIM=20").code, 0);
    EXPECT_EQ(embed::EmbeddingStore::load(tmp / "o/embeddings.json").dim, 12u);
}

TEST(Cli, ConfigErrorsExitTwo)
{
    artgraph::testing::TempDir tmp;
    two_c_files(tmp / "in");
    std::string io = "--corpus '" + (tmp / "in").string() + "' --out '" + (tmp / "o").string() + "'";
    EXPECT_EQ(cli(io + " --stages embed,graphs", tmp).code, 2);
    EXPECT_EQ(cli(io + " --stages nonsense", tmp).code, 2);
    EXPECT_EQ(cli(io + " --provider service", tmp).code, 2);
    EXPECT_EQ(cli("--no-such-flag", tmp).code, 2);
    EXPECT_EQ(cli(io + " --stages graphs --jobs 0", tmp).code, 2);
    corpus::write_file(tmp / "bad.toml", "bogus = 1\n");
    EXPECT_EQ(cli(io + " --config '" + (tmp / "bad.toml").string() + "'", tmp).code, 2);
    EXPECT_EQ(cli(io + " --config '" + (tmp / "missing.toml").string() + "'", tmp).code, 2);
}

TEST(Cli, NothingSucceededExitsOne)
{
    artgraph::testing::TempDir tmp;
    corpus::write_file(tmp / "in/correct/basic/bad.c", "int f( {\n");
    auto r = cli("build-graphs --in '" + (tmp / "in").string() + "' --out '" + (tmp / "o").string() + "'", tmp);
    EXPECT_EQ(r.code, 1) << r.out;
    EXPECT_NE(r.out.find("FAIL"), std::string::npos) << r.out;
}

TEST(Cli, GeneratorSkipsBrokenFunctionWithWarning)
{
    artgraph::testing::TempDir tmp;
    corpus::write_file(tmp / "in/correct/basic/bad.c", "int f( {\n");
    auto r = cli("gen-acsl --in '" + (tmp / "in").string() + "' --out '" + (tmp / "o").string() + "'", tmp);
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("1 ok, 0 failed, 1 warnings"), std::string::npos) << r.out;
}

TEST(Cli, PartialFailureStillSucceeds)
{
    artgraph::testing::TempDir tmp;
    two_c_files(tmp / "in");
    corpus::write_file(tmp / "in/correct/basic/bad.c", "int f( {\n");
    auto r = cli("build-graphs --in '" + (tmp / "in").string() + "' --out '" + (tmp / "o").string() + "'", tmp);
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("3 inputs, 2 ok, 1 failed"), std::string::npos) << r.out;
}
