/*
    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License.
*/

#include "support/fixtures.hpp"

#include "cli.hpp"

#include <hills/json_io.hpp>
#include <hills/linker.hpp>
#include <hills/report.hpp>

#include <gtest/gtest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hills;
namespace fs = std::filesystem;

namespace
{

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, cli::RunOptions options = {})
{
    args.insert(args.begin(), "hills");
    std::ostringstream out, err;
    int code = cli::run(args, out, err, options);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test
{
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("hills-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "-"
                                            + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const
    {
        auto path = (dir_ / name).string();
        std::ofstream(path, std::ios::binary) << text;
        return path;
    }

    fs::path dir_;
    const std::string corpus_ = test::data_path("solitude.hills");
    const std::string net_ = test::data_path("example-net.json");
};

}

TEST_F(Cli, ValidateCorpus)
{
    auto r = run({"validate", corpus_});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "OK: 0 violations\n");
    EXPECT_EQ(r.err, "");
}

TEST_F(Cli, ValidateReportsDiagnosticsWithLines)
{
    auto path = write("bad.hills", "[levels]\n1 | System\n[nodes]\nn | 4 | component | N\n");
    auto r = run({"validate", path});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find(path + ":4:"), std::string::npos) << r.err;
    EXPECT_NE(r.out.find("FAILED"), std::string::npos);
}

TEST_F(Cli, WorksheetLevelOneCsvIsTheSystemTable)
{
    auto r = run({"worksheet", corpus_, "--level", "1", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, emit_worksheet(test::load_corpus(), 1, ReportFormat::Csv));
    EXPECT_NE(r.out.find("\"Erratic trajectory\",\"No data from sensor (transient)\",\"Acoustic guidance system\""), std::string::npos);
}

TEST_F(Cli, WorksheetDefaultsToAllLevelsInOrder)
{
    auto r = run({"worksheet", corpus_});
    ASSERT_EQ(r.code, 0) << r.err;
    auto sys = r.out.find("## System level analysis (level 1)");
    auto ml = r.out.find("## ML-Lifecycle level analysis (level 2)");
    auto inner = r.out.find("## Inner-ML level analysis (level 3)");
    ASSERT_NE(sys, std::string::npos);
    ASSERT_NE(ml, std::string::npos);
    ASSERT_NE(inner, std::string::npos);
    EXPECT_LT(sys, ml);
    EXPECT_LT(ml, inner);

    auto stopped = run({"worksheet", corpus_, "--stop-at-level", "2"});
    EXPECT_EQ(stopped.out.find("Inner-ML"), std::string::npos);
    EXPECT_NE(stopped.out.find("ML-Lifecycle"), std::string::npos);

    auto json = run({"worksheet", corpus_, "--format", "json"});
    ASSERT_EQ(json.code, 0);
    auto doc = nlohmann::json::parse(json.out);
    ASSERT_EQ(doc["worksheets"].size(), 3u);
    EXPECT_EQ(doc["worksheets"][2]["level_rank"], 3);
}

TEST_F(Cli, OutWritesFileAndLeavesStdoutEmpty)
{
    auto out = (dir_ / "ws.md").string();
    auto r = run({"worksheet", corpus_, "--level", "3", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "");
    EXPECT_NE(test::read_file(out).find("Dying ReLU problem"), std::string::npos);
}

TEST_F(Cli, UsageErrorsExitTwo)
{
    auto unknown_flag = run({"worksheet", corpus_, "--colour"});
    EXPECT_EQ(unknown_flag.code, 2);
    EXPECT_NE(unknown_flag.err.find("Usage:"), std::string::npos);
    EXPECT_EQ(run({"worksheet", corpus_, "--format", "pdf"}).code, 2);
    EXPECT_EQ(run({"validate", (dir_ / "missing.hills").string()}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bn"}).code, 2);
    EXPECT_EQ(run({"query", corpus_, "--bn", net_}).code, 2);
    EXPECT_EQ(run({"query", corpus_, "--bn", net_, "--target", "T2.1", "--evidence", "C2.a"}).code, 2);
    EXPECT_EQ(run({"bn", "skeleton", corpus_, "--root-prior", "0.3", "--no-root-prior"}).code, 2);
    EXPECT_EQ(run({"bn", "skeleton", corpus_, "--root-prior", "3"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, WorksheetUnknownLevelIsAnError)
{
    auto r = run({"worksheet", corpus_, "--level", "7"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("UnknownLevel"), std::string::npos);
}

TEST_F(Cli, LinkReport)
{
    auto r = run({"link", corpus_, "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, emit_link_report(test::load_corpus(), derive_links(test::load_corpus(), default_relations()), ReportFormat::Csv));
    EXPECT_NE(r.out.find("\"swx-e1-e18\",\"same_word_cross_level\""), std::string::npos);

    auto top = run({"link", corpus_, "--format", "csv", "--stop-at-level", "1"});
    EXPECT_EQ(top.out.find("\"2\""), std::string::npos);

    auto extra = write("extra.hills", "[relations]\nsimilar | Wrong | Imprecise\n");
    auto more = run({"link", corpus_, "--format", "csv", "--relations", extra});
    ASSERT_EQ(more.code, 0) << more.err;
    EXPECT_NE(more.out.find("\"sim-e8-e22\",\"similarity\""), std::string::npos);

    auto cyclic = write("cyclic.hills", "[relations]\nincludes | Part of | No\n");
    EXPECT_EQ(run({"link", corpus_, "--relations", cyclic}).code, 1);
    auto broken = write("broken.hills", "[relations]\nincludes | No\n");
    EXPECT_EQ(run({"link", corpus_, "--relations", broken}).code, 1);
}

TEST_F(Cli, BnSkeletonFromConfirmedLinks)
{
    auto study = test::load_corpus();
    Link manual;
    manual.id = "manual-e12-e22";
    manual.first = {2, "e12"};
    manual.second = {3, "e22"};
    manual.status = LinkStatus::Confirmed;
    manual.direction = LinkDirection::HigherExplainsLower;
    auto links = derive_links(study, default_relations());
    links.push_back(manual);
    auto links_path = write("links.json", links_to_json(links));

    auto r = run({"bn", "skeleton", corpus_, "--links", links_path});
    ASSERT_EQ(r.code, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    ASSERT_EQ(doc["variables"].size(), 5u);
    EXPECT_EQ(doc["variables"][0]["id"], "T2.1");
    EXPECT_EQ(doc["variables"][0]["cpt"]["rows"][0], nlohmann::json::array({1.0, 0.0}));
    EXPECT_TRUE(doc["variables"][1]["cpt"].is_null());

    auto custom = nlohmann::json::parse(run({"bn", "skeleton", corpus_, "--links", links_path, "--root-prior", "0.25"}).out);
    EXPECT_EQ(custom["variables"][0]["cpt"]["rows"][0], nlohmann::json::array({0.25, 0.75}));
    auto none = nlohmann::json::parse(run({"bn", "skeleton", corpus_, "--links", links_path, "--no-root-prior"}).out);
    EXPECT_TRUE(none["variables"][0]["cpt"].is_null());

    auto skeleton_path = write("skeleton.json", r.out);
    auto check = run({"bn", "check", corpus_, "--bn", skeleton_path});
    EXPECT_EQ(check.code, 1);
    EXPECT_NE(check.out.find("INCOMPLETE"), std::string::npos);

    auto empty = run({"bn", "skeleton", corpus_});
    ASSERT_EQ(empty.code, 0);
    EXPECT_TRUE(nlohmann::json::parse(empty.out)["variables"].empty());
}

TEST_F(Cli, BnSkeletonReportsSkippedAndUndirectedLinks)
{
    auto study = test::load_corpus();
    LinkSet set(derive_links(study, default_relations()));
    set = set_link_status(set, "swx-e1-e18", LinkStatus::Confirmed);
    auto skipped = run({"bn", "skeleton", corpus_, "--links", write("a.json", links_to_json(set.links()))});
    EXPECT_EQ(skipped.code, 0);
    EXPECT_NE(skipped.err.find("skipped swx-e1-e18"), std::string::npos) << skipped.err;

    set = set_link_status(set, "swi-e8-e14", LinkStatus::Confirmed);
    auto undirected = run({"bn", "skeleton", corpus_, "--links", write("b.json", links_to_json(set.links()))});
    EXPECT_EQ(undirected.code, 1);
    EXPECT_NE(undirected.err.find("UndirectedLink"), std::string::npos);
}

TEST_F(Cli, BnCheckShippedNet)
{
    auto r = run({"bn", "check", corpus_, "--bn", net_});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "OK: 5 variables, 4 edges, 5/5 CPTs filled\n");
    auto cyclic = write("cyclic.json", R"({"variables": [{"id": "A"}, {"id": "B"}], "edges": [["A", "B"], ["B", "A"]]})");
    auto bad = run({"bn", "check", corpus_, "--bn", cyclic});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("CycleDetected"), std::string::npos);
}

TEST_F(Cli, QueryRootThreat)
{
    auto r = run({"query", corpus_, "--bn", net_, "--target", "T2.1", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "\"Target\",\"Evidence\",\"Posterior\"\n\"T2.1\",\"\",\"present=1.000000; absent=0.000000\"\n");

    auto md = run({"query", corpus_, "--bn", net_, "--target", "M2.a", "--evidence", "C2.b=absent,C3.a=present"});
    ASSERT_EQ(md.code, 0);
    EXPECT_NE(md.out.find("| M2.a | C2.b=absent; C3.a=present | present=0.590000; absent=0.410000 |"), std::string::npos) << md.out;

    auto zero = run({"query", corpus_, "--bn", net_, "--target", "C2.a", "--evidence", "T2.1=absent"});
    EXPECT_EQ(zero.code, 1);
    EXPECT_NE(zero.err.find("ZeroProbabilityEvidence"), std::string::npos);
    EXPECT_EQ(run({"query", corpus_, "--bn", net_, "--target", "X9"}).code, 1);
}

TEST_F(Cli, OutputIsDeterministicAndInputsUntouched)
{
    auto before = test::read_file(corpus_);
    for (auto args : std::vector<std::vector<std::string>>{{"validate", corpus_},
                                                            {"worksheet", corpus_},
                                                            {"link", corpus_, "--format", "json"},
                                                            {"bn", "skeleton", corpus_},
                                                            {"query", corpus_, "--bn", net_, "--target", "M2.a"}})
    {
        auto a = run(args);
        auto b = run(args);
        EXPECT_EQ(a.code, b.code);
        EXPECT_EQ(a.out, b.out);
    }
    EXPECT_EQ(test::read_file(corpus_), before);
}

TEST_F(Cli, ColourOnlyWhenAsked)
{
    EXPECT_EQ(run({"validate", corpus_}).out.find('\x1b'), std::string::npos);
    EXPECT_NE(run({"validate", corpus_}, cli::RunOptions{true}).out.find("\x1b[32m"), std::string::npos);
}
