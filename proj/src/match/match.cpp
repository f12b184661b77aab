#include "artgraph/match.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <thread>

#include <json.hpp>

#include "artgraph/simd.hpp"

namespace artgraph::match {

namespace {

using json = nlohmann::json;

std::string fixed6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string quoted(const std::string& s)
{
    return json(s).dump();
}

bool by_similarity_desc(const MatchRecord& a, const MatchRecord& b)
{
    if (a.similarity != b.similarity)
        return a.similarity > b.similarity;
    return std::tie(a.file1, a.file2) < std::tie(b.file1, b.file2);
}

}  // namespace

double cosine(const std::vector<double>& a, const std::vector<double>& b)
{
    if (a.size() != b.size())
        throw MatchError("cosine of vectors with dims " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
    const auto& k = simd::active();
    double na = k.squared_norm(a.data(), a.size());
    double nb = k.squared_norm(b.data(), b.size());
    if (na == 0.0 || nb == 0.0)
        return 0.0;
    double c = k.dot(a.data(), b.data(), a.size()) / (std::sqrt(na) * std::sqrt(nb));
    return std::clamp(c, -1.0, 1.0);
}

double cosine(const embed::EmbeddingVector& a, const embed::EmbeddingVector& b)
{
    return cosine(a.values, b.values);
}

double similarity(const std::vector<double>& a, const std::vector<double>& b)
{
    return std::max(0.0, cosine(a, b));
}

double similarity(const embed::EmbeddingVector& a, const embed::EmbeddingVector& b)
{
    return similarity(a.values, b.values);
}

std::vector<MatchRecord> match_all(const std::map<std::string, embed::EmbeddingVector>& embeddings, unsigned jobs)
{
    std::vector<const std::pair<const std::string, embed::EmbeddingVector>*> items;
    for (const auto& kv : embeddings)
        items.push_back(&kv);
    for (std::size_t i = 1; i < items.size(); ++i)
        if (items[i]->second.dim() != items[0]->second.dim())
            throw MatchError("dim mismatch: '" + items[0]->first + "' has " +
                             std::to_string(items[0]->second.dim()) + ", '" + items[i]->first + "' has " +
                             std::to_string(items[i]->second.dim()));

    std::vector<MatchRecord> out;
    const std::size_t n = items.size();
    out.reserve(n * (n > 0 ? n - 1 : 0) / 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            out.push_back(MatchRecord{items[i]->first, items[j]->first, 0.0});

    // map keys are already sorted, so (file1, file2) order holds by construction
    auto work = [&](std::size_t from, std::size_t to) {
        for (std::size_t r = from; r < to; ++r)
            out[r].similarity = similarity(embeddings.at(out[r].file1), embeddings.at(out[r].file2));
    };
    jobs = std::max(1u, jobs);
    if (jobs == 1 || out.size() < 64) {
        work(0, out.size());
    } else {
        std::vector<std::thread> threads;
        std::size_t chunk = (out.size() + jobs - 1) / jobs;
        for (std::size_t from = 0; from < out.size(); from += chunk)
            threads.emplace_back(work, from, std::min(out.size(), from + chunk));
        for (auto& t : threads)
            t.join();
    }
    return out;
}

std::vector<std::pair<std::string, double>> rank_neighbors(const std::string& query,
                                                           const std::vector<MatchRecord>& records, std::size_t k)
{
    std::vector<std::pair<std::string, double>> out;
    bool seen = false;
    for (const auto& r : records) {
        if (r.file1 == query) {
            out.emplace_back(r.file2, r.similarity);
            seen = true;
        } else if (r.file2 == query) {
            out.emplace_back(r.file1, r.similarity);
            seen = true;
        }
    }
    if (!seen)
        throw MatchError("'" + query + "' does not appear in the match records");
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second > b.second;
        return a.first < b.first;
    });
    if (out.size() > k)
        out.resize(k);
    return out;
}

std::string matches_json(const std::vector<MatchRecord>& records)
{
    if (records.empty())
        return "[]\n";
    std::string out = "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        out += "  {\"file1\": " + quoted(r.file1) + ", \"file2\": " + quoted(r.file2) +
               ", \"similarity\": " + fixed6(r.similarity) + "}";
        out += i + 1 < records.size() ? ",\n" : "\n";
    }
    out += "]\n";
    return out;
}

std::vector<MatchRecord> parse_matches_json(std::string_view text)
{
    std::vector<MatchRecord> out;
    try {
        json doc = json::parse(text);
        if (!doc.is_array())
            throw MatchError("matches document is not an array");
        for (const auto& r : doc)
            out.push_back(MatchRecord{r.at("file1").get<std::string>(), r.at("file2").get<std::string>(),
                                      r.at("similarity").get<double>()});
    } catch (const json::exception& e) {
        throw MatchError(std::string("bad matches document: ") + e.what());
    }
    return out;
}

std::size_t bucket_of(double s)
{
    for (std::size_t b = 0; b + 1 < kBucketEdges.size() - 1; ++b)
        if (s < kBucketEdges[b + 1])
            return b;
    return 4;
}

DistributionSummary report_distribution(const std::vector<MatchRecord>& records)
{
    DistributionSummary s;
    s.total = records.size();
    if (records.empty())
        return s;
    double sum = 0.0;
    s.min = records.front().similarity;
    s.max = records.front().similarity;
    for (const auto& r : records) {
        ++s.counts[bucket_of(r.similarity)];
        sum += r.similarity;
        s.min = std::min(s.min, r.similarity);
        s.max = std::max(s.max, r.similarity);
    }
    s.mean = sum / static_cast<double>(records.size());
    for (std::size_t b = 0; b < s.counts.size(); ++b)
        s.fractions[b] = static_cast<double>(s.counts[b]) / static_cast<double>(records.size());

    std::vector<MatchRecord> sorted = records;
    std::sort(sorted.begin(), sorted.end(), by_similarity_desc);
    std::size_t n = std::min<std::size_t>(10, sorted.size());
    s.top.assign(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(n));
    std::vector<MatchRecord> asc = records;
    std::sort(asc.begin(), asc.end(), [](const MatchRecord& a, const MatchRecord& b) {
        if (a.similarity != b.similarity)
            return a.similarity < b.similarity;
        return std::tie(a.file1, a.file2) < std::tie(b.file1, b.file2);
    });
    s.bottom.assign(asc.begin(), asc.begin() + static_cast<std::ptrdiff_t>(n));
    return s;
}

std::string report_text(const DistributionSummary& s)
{
    static const std::array<std::string_view, 5> kNames{"[0.00, 0.35)", "[0.35, 0.60)", "[0.60, 0.80)",
                                                        "[0.80, 0.95)", "[0.95, 1.00]"};
    std::string out = "pairs: " + std::to_string(s.total) + "\n";
    for (std::size_t b = 0; b < kNames.size(); ++b) {
        char line[96];
        std::snprintf(line, sizeof line, "  %s  %6zu  %6.2f%%\n", std::string(kNames[b]).c_str(), s.counts[b],
                      s.fractions[b] * 100.0);
        out += line;
    }
    out += "min " + fixed6(s.min) + "  max " + fixed6(s.max) + "  mean " + fixed6(s.mean) + "\n";
    out += "most similar:\n";
    for (const auto& r : s.top)
        out += "  " + fixed6(r.similarity) + "  " + r.file1 + "  " + r.file2 + "\n";
    out += "least similar:\n";
    for (const auto& r : s.bottom)
        out += "  " + fixed6(r.similarity) + "  " + r.file1 + "  " + r.file2 + "\n";
    return out;
}

std::string report_json(const DistributionSummary& s)
{
    auto records = [](const std::vector<MatchRecord>& rs) {
        json arr = json::array();
        for (const auto& r : rs)
            arr.push_back({{"file1", r.file1}, {"file2", r.file2}, {"similarity", r.similarity}});
        return arr;
    };
    json buckets = json::array();
    for (std::size_t b = 0; b < s.counts.size(); ++b)
        buckets.push_back({{"lower", kBucketEdges[b]},
                           {"upper", kBucketEdges[b + 1]},
                           {"count", s.counts[b]},
                           {"fraction", s.fractions[b]}});
    json doc = {{"total", s.total}, {"buckets", buckets}, {"min", s.min},          {"max", s.max},
                {"mean", s.mean},   {"top", records(s.top)}, {"bottom", records(s.bottom)}};
    return doc.dump(2) + "\n";
}

std::string neighborhood_dot(const std::vector<MatchRecord>& records, std::size_t k)
{
    std::set<std::string> files;
    for (const auto& r : records) {
        files.insert(r.file1);
        files.insert(r.file2);
    }
    std::set<std::pair<std::string, std::string>> edges;
    std::map<std::pair<std::string, std::string>, double> weight;
    for (const auto& f : files) {
        for (const auto& [other, sim] : rank_neighbors(f, records, k)) {
            auto key = std::minmax(f, other);
            edges.insert({key.first, key.second});
            weight[{key.first, key.second}] = sim;
        }
    }
    std::string out = "graph neighbors {\n";
    for (const auto& f : files)
        out += "  " + quoted(f) + ";\n";
    for (const auto& e : edges)
        out += "  " + quoted(e.first) + " -- " + quoted(e.second) + " [label=\"" + fixed6(weight[e]).substr(0, 4) +
               "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace artgraph::match
