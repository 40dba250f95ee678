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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include "cli.hpp"

#include <hills/bayes_net.hpp>
#include <hills/error.hpp>
#include <hills/bn_links.hpp>
#include <hills/linker.hpp>
#include <hills/study.hpp>
#include <hills/study_format.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hills;

namespace
{

using Clock = std::chrono::steady_clock;

/// Collects failure details for one criterion.
struct Check
{
    std::vector<std::string> failures;

    void expect(bool condition, const std::string& what)
    {
        if (!condition)
        {
            failures.push_back(what);
        }
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string run_cli(std::vector<std::string> args, int& code)
{
    args.insert(args.begin(), "hills");
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str() + (code == 0 ? "" : err.str());
}

bool csv_has_row(const std::string& csv, const std::vector<std::string>& needles)
{
    for (const auto& row : oracle::parse_csv(csv))
    {
        if (std::ranges::all_of(needles, [&](const std::string& n) { return std::ranges::find(row, n) != row.end(); }))
        {
            return true;
        }
    }
    return false;
}

void corpus_fidelity(Check& c)
{
    auto start = Clock::now();
    const auto corpus = test::data_path("solitude.hills");
    std::vector<std::string> sheets;
    for (int level = 1; level <= 3; ++level)
    {
        int code = 0;
        auto csv = run_cli({"worksheet", corpus, "--level", std::to_string(level), "--format", "csv"}, code);
        c.expect(code == 0, "worksheet --level " + std::to_string(level) + " exited " + std::to_string(code));
        auto expected = test::read_file(std::string(HILLS_TEST_DATA_DIR) + "/expected_level" + std::to_string(level) + ".csv");
        c.expect(csv == expected, "level " + std::to_string(level) + " CSV differs from the transcribed table");
        sheets.push_back(csv);
    }
    auto elapsed = seconds_since(start);
    c.expect(elapsed < 1.0, "worksheet emission took " + std::to_string(elapsed) + " s");

    c.expect(csv_has_row(sheets[0], {"Erratic trajectory", "Acoustic guidance system"}), "level 1 spot row missing");
    c.expect(csv_has_row(sheets[1], {"Data Poisoning"}), "Data Poisoning row missing");
    c.expect(csv_has_row(sheets[1], {"Backdoor"}), "Backdoor row missing");
    c.expect(csv_has_row(sheets[2], {"Dying ReLU problem"}), "Dying ReLU row missing");

    auto study = test::load_corpus();
    const std::vector<std::pair<int, std::string>> nodes{
        {1, "User"}, {1, "Hardware components"}, {1, "Data transmission"}, {2, "Data collection"}, {2, "Labeling"},
        {2, "Data preprocessing"}, {2, "Hyperparameter setting"}, {2, "Model deployment"}, {3, "Feature extracting"},
        {3, "Object Detection"}, {2, "Localisation"}};
    c.expect(study.nodes().size() == nodes.size(), "expected 11 nodes, got " + std::to_string(study.nodes().size()));
    for (std::size_t i = 0; i < std::min(nodes.size(), study.nodes().size()); ++i)
    {
        const auto& n = study.nodes()[i];
        c.expect(n.level_rank == nodes[i].first && n.name == nodes[i].second, "node " + std::to_string(i + 1) + " is " + n.name);
    }
}

void guide_word_registry(Check& c)
{
    struct Expected
    {
        std::string word;
        std::string meaning;
        std::optional<std::string> original;
        Provenance provenance;
    };
    const std::vector<Expected> words{
        {"Part of", "Incomplete structure, definition or setting", "There is a qualitative modification", Provenance::Redefined},
        {"Less", "A less amount of data", "Too little water or additive volume added", Provenance::Redefined},
        {"More", "A large amount of data", "Too much water or additive volume added", Provenance::Redefined},
        {"Wrong", "Wrong setting or data value", std::nullopt, Provenance::New},
        {"Invalid", "Invalid data value or data flow, possibly conflicting with other components", std::nullopt, Provenance::New},
        {"Incomplete", "Incomplete data value", std::nullopt, Provenance::New},
        {"Perturbed", "Data was perturbed by external attackers", std::nullopt, Provenance::New},
        {"Incapable", "Part of data can not be labeled", std::nullopt, Provenance::New},
    };
    auto registry = default_guide_words();
    for (const auto& e : words)
    {
        auto it = std::ranges::find_if(registry, [&](const GuideWord& g) { return g.word == e.word; });
        if (it == registry.end())
        {
            c.expect(false, "missing default word " + e.word);
            continue;
        }
        c.expect(it->meaning == e.meaning, e.word + " meaning is '" + it->meaning + "'");
        c.expect(it->original_meaning == e.original, e.word + " original meaning differs");
        c.expect(it->provenance == e.provenance, e.word + " provenance differs");
    }
    auto perturbed = std::ranges::find_if(registry, [](const GuideWord& g) { return g.word == "Perturbed"; });
    c.expect(perturbed != registry.end() && perturbed->applicable_level_ranks == std::set<int>{2, 3},
             "Perturbed must apply at ranks 2-3 only");

    // The applicability rule is enforced, not just recorded.
    try
    {
        test::fixture_study({{1, "Data transmission", "Perturbed", "action"}});
        c.expect(false, "Perturbed accepted at rank 1");
    }
    catch (const Error& e)
    {
        c.expect(e.code() == ErrorCode::GuideWordNotApplicable, std::string("unexpected error ") + e.what());
    }
}

void linker(Check& c)
{
    auto only = [&](const std::vector<test::FixtureRow>& rows, LinkRule rule, const std::string& id) {
        auto links = derive_links(test::fixture_study(rows), default_relations());
        c.expect(links.size() == 1, id + ": expected exactly one link, got " + std::to_string(links.size()));
        if (!links.empty())
        {
            c.expect(links[0].rule == rule && links[0].id == id, "got " + links[0].id);
        }
    };
    only({{1, "Data transmission", "No", "action"}, {2, "Localisation", "No", "Localisation"}}, LinkRule::SameWordCrossLevel,
         "swx-e1-e2");
    only({{1, "Data transmission", "No", "action"}, {2, "Hyperparameter setting", "Part of", "definition"}}, LinkRule::Inclusion,
         "inc-e1-e2");
    only({{2, "Localisation", "No", "Localisation"}, {2, "Labeling", "No", "label"}}, LinkRule::SameWordIntraLevel, "swi-e1-e2");

    test::Rng rng(20240601);
    for (int i = 0; i < 100; ++i)
    {
        auto study = test::random_study(rng, {.max_levels = 3, .max_entries = 50, .hostile_text = true});
        auto relations = test::random_relations(rng, study);
        std::vector<oracle::LinkKey> got;
        for (const auto& l : derive_links(study, relations))
        {
            got.push_back(oracle::key_of(l));
        }
        auto want = oracle::brute_force_links(study, relations);
        std::ranges::sort(got);
        std::ranges::sort(want);
        c.expect(got == want, "random study " + std::to_string(i) + ": " + std::to_string(got.size()) + " links vs "
                                  + std::to_string(want.size()) + " from the pair scan");
    }
}

void bn_oracle(Check& c)
{
    auto start = Clock::now();
    test::Rng rng(8128);
    double worst = 0.0;
    double worst_order = 0.0;
    int nets = 0;
    while (nets < 250)
    {
        auto spec = test::random_dag(rng, {.min_variables = 1, .max_variables = 8, .max_states = 2});
        auto bn = build_bn(spec);
        const auto joint = enumerate_joint(bn);
        ++nets;
        for (int q = 0; q < 4; ++q)
        {
            auto target = static_cast<std::size_t>(rng() % bn.size());
            // Evidence drawn from a forward sample always has positive probability.
            auto sample = test::forward_sample(rng, bn);
            Evidence evidence;
            for (std::size_t v = 0; v < bn.size(); ++v)
            {
                if (v != target && rng() % 3 == 0)
                {
                    evidence[bn.variable(v).id] = bn.variable(v).states[sample[v]];
                }
            }
            // Posterior straight from enumerate_joint.
            std::vector<double> want(bn.variable(target).cardinality(), 0.0);
            for (std::size_t row = 0; row < joint.probabilities.size(); ++row)
            {
                auto a = joint.assignment(row);
                bool consistent = std::ranges::all_of(evidence, [&](const auto& e) {
                    auto v = bn.require(e.first);
                    return bn.variable(v).states[a[v]] == e.second;
                });
                if (consistent)
                {
                    want[a[target]] += joint.probabilities[row];
                }
            }
            auto z = std::accumulate(want.begin(), want.end(), 0.0);
            if (z <= 0.0)
            {
                continue;
            }
            auto got = marginal(bn, bn.variable(target).id, evidence);
            for (std::size_t s = 0; s < want.size(); ++s)
            {
                worst = std::max(worst, std::abs(got.probabilities[s] - want[s] / z));
            }
            auto order = min_degree_order(bn, target, evidence);
            std::ranges::reverse(order);
            auto reversed = marginal(bn, bn.variable(target).id, evidence, order);
            std::shuffle(order.begin(), order.end(), rng);
            auto shuffled = marginal(bn, bn.variable(target).id, evidence, order);
            for (std::size_t s = 0; s < want.size(); ++s)
            {
                worst_order = std::max({worst_order, std::abs(reversed.probabilities[s] - got.probabilities[s]),
                                        std::abs(shuffled.probabilities[s] - got.probabilities[s])});
            }
        }
    }
    auto elapsed = seconds_since(start);
    c.expect(nets >= 200, "only " + std::to_string(nets) + " nets");
    c.expect(worst <= 1e-9, "max abs error vs enumerate_joint " + std::to_string(worst));
    c.expect(worst_order <= 1e-9, "elimination orders disagree by " + std::to_string(worst_order));
    c.expect(elapsed < 30.0, "took " + std::to_string(elapsed) + " s");
}

void d_separation(Check& c)
{
    auto dsep = [](const BayesNet& bn, std::vector<std::string> x, std::vector<std::string> y, std::vector<std::string> z) {
        return d_separated(bn, x, y, z);
    };
    auto chain = build_bn(test::chain_skeleton());
    c.expect(!dsep(chain, {"A"}, {"C"}, {}) && dsep(chain, {"A"}, {"C"}, {"B"}), "chain");
    auto fork = build_bn(test::fork_skeleton());
    c.expect(!dsep(fork, {"B"}, {"C"}, {}) && dsep(fork, {"B"}, {"C"}, {"A"}), "fork");
    auto collider = build_bn(test::collider_skeleton());
    c.expect(dsep(collider, {"A"}, {"B"}, {}) && !dsep(collider, {"A"}, {"B"}, {"C"}), "collider");

    auto fragment = build_bn(test::fragment_skeleton());
    c.expect(dsep(fragment, {"C2.a"}, {"C3.a"}, {"T2.1"}) && !dsep(fragment, {"C2.a"}, {"C3.a"}, {}), "common parent threat");
    c.expect(dsep(fragment, {"C2.a"}, {"C2.b"}, {}) && !dsep(fragment, {"C2.a"}, {"C2.b"}, {"M2.a"}), "common child mitigation");

    test::Rng rng(4096);
    int checked = 0;
    double worst = 0.0;
    for (int n = 0; n < 150; ++n)
    {
        auto spec = test::random_dag(rng, {.min_variables = 3, .max_variables = 7, .max_states = 2});
        auto bn = build_bn(spec);
        for (int t = 0; t < 15; ++t)
        {
            std::vector<std::size_t> order(bn.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<std::size_t> x{order[0]}, y{order[1]}, z;
            for (std::size_t k = 2; k < order.size(); ++k)
            {
                if (rng() % 3 == 0)
                {
                    z.push_back(order[k]);
                }
            }
            if (!d_separated(bn, x, y, z))
            {
                continue;
            }
            for (int draw = 0; draw < 5; ++draw)
            {
                auto fresh = spec;
                test::randomize_cpts(rng, fresh);
                worst = std::max(worst, oracle::conditional_mutual_information(build_bn(fresh), x, y, z));
                ++checked;
            }
        }
    }
    c.expect(checked > 200, "only " + std::to_string(checked) + " separated triples checked");
    c.expect(worst <= 1e-9, "conditional mutual information " + std::to_string(worst) + " on a separated triple");
}

void root_threat_prior(Check& c)
{
    auto study = test::load_corpus();
    std::vector<BnLink> links{{ElementId::parse("T2.1"), ElementId::parse("C2.a")},
                              {ElementId::parse("T2.1"), ElementId::parse("C3.a")},
                              {ElementId::parse("C2.a"), ElementId::parse("M2.a")},
                              {ElementId::parse("C2.b"), ElementId::parse("M2.a")}};
    auto table_of = [](const BayesNet& bn, std::string_view id) { return bn.variable(bn.require(id)).table; };

    auto by_default = bn_from_links(study, links);
    c.expect(table_of(by_default, "T2.1") == std::vector<double>{1.0, 0.0}, "default root threat prior is not 1.0");
    for (const char* id : {"C2.a", "C3.a", "C2.b", "M2.a"})
    {
        c.expect(table_of(by_default, id).empty(), std::string(id) + " should stay unfilled");
    }
    auto overridden = bn_from_links(study, links, {.root_threat_prior = 0.25});
    c.expect(table_of(overridden, "T2.1") == std::vector<double>{0.25, 0.75}, "override 0.25 ignored");
    auto disabled = bn_from_links(study, links, {.root_threat_prior = std::nullopt});
    c.expect(table_of(disabled, "T2.1").empty(), "disabled prior still filled");
}

std::vector<std::string> split_lines(const std::string& text)
{
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
    {
        lines.push_back(line);
    }
    return lines;
}

std::string join_lines(const std::vector<std::string>& lines)
{
    std::string out;
    for (const auto& l : lines)
    {
        out += l + "\n";
    }
    return out;
}

void parser_round_trip(Check& c)
{
    auto text = test::read_file(test::data_path("solitude.hills"));
    auto corpus = parse_study(text, "solitude.hills");
    c.expect(corpus.ok(), "corpus does not parse");
    if (corpus.ok())
    {
        auto canonical = serialize_study(*corpus.study);
        auto again = parse_study(canonical, "canonical");
        c.expect(again.ok() && *again.study == *corpus.study, "corpus changes through serialize/parse");
        c.expect(again.ok() && serialize_study(*again.study) == canonical, "corpus serialization is not a fixed point");
    }

    test::Rng rng(1618);
    for (int i = 0; i < 100; ++i)
    {
        auto study = test::random_study(rng);
        auto serialized = serialize_study(study);
        auto doc = parse_study(serialized, "random");
        c.expect(doc.ok() && *doc.study == study, "random study " + std::to_string(i) + " does not round-trip");

        // Damage one record line at a time; the diagnostic must name that line.
        auto lines = split_lines(serialized);
        for (std::size_t k = 0; k < lines.size(); ++k)
        {
            if (lines[k].empty() || lines[k][0] == '#' || lines[k][0] == '[' || rng() % 4 != 0)
            {
                continue;
            }
            auto broken = lines;
            broken[k] += " \\q";
            auto bad = parse_study(join_lines(broken), "corrupt");
            int line_no = static_cast<int>(k) + 1;
            bool pinned = std::ranges::any_of(bad.diagnostics, [&](const Diagnostic& d) { return d.line == line_no; });
            c.expect(!bad.ok() && pinned && bad.diagnostics.front().line == line_no,
                     "random study " + std::to_string(i) + ": damage at line " + std::to_string(line_no) + " not reported there");
        }
    }
}

}

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"corpus fidelity", corpus_fidelity},
        {"guide-word registry", guide_word_registry},
        {"linker rules and pair-scan equivalence", linker},
        {"BN oracle equivalence", bn_oracle},
        {"d-separation", d_separation},
        {"root-threat prior", root_threat_prior},
        {"parser round-trip", parser_round_trip},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria)
    {
        Check check;
        try
        {
            run(check);
        }
        catch (const std::exception& e)
        {
            check.failures.push_back(std::string("threw: ") + e.what());
        }
        if (check.failures.empty())
        {
            std::cout << "PASS " << name << "\n";
            continue;
        }
        ++failed;
        std::cout << "FAIL " << name << "\n";
        for (std::size_t i = 0; i < std::min<std::size_t>(check.failures.size(), 10); ++i)
        {
            std::cout << "    " << check.failures[i] << "\n";
        }
    }
    return failed == 0 ? 0 : 1;
}
