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

#include <hills/report.hpp>
#include <hills/study_format.hpp>

#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace
{

std::string corpus_text()
{
    std::ifstream in(std::string(HILLS_DATA_DIR) + "/solitude.hills", std::ios::binary);
    if (!in)
    {
        throw std::runtime_error("corpus not found");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void BM_ParseCorpus(benchmark::State& state)
{
    auto text = corpus_text();
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(hills::parse_study(text, "solitude.hills"));
    }
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseCorpus);

void BM_SerializeCorpus(benchmark::State& state)
{
    auto study = *hills::parse_study(corpus_text()).study;
    for (auto _ : state)
    {
        benchmark::DoNotOptimize(hills::serialize_study(study));
    }
}
BENCHMARK(BM_SerializeCorpus);

void BM_WorksheetCsv(benchmark::State& state)
{
    auto study = *hills::parse_study(corpus_text()).study;
    for (auto _ : state)
    {
        for (int level = 1; level <= 3; ++level)
        {
            benchmark::DoNotOptimize(hills::emit_worksheet(study, level, hills::ReportFormat::Csv));
        }
    }
}
BENCHMARK(BM_WorksheetCsv);

}
