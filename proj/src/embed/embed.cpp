#include "artgraph/embed.hpp"

#include <cmath>

#include <json.hpp>

#include "artgraph/corpus.hpp"
#include "artgraph/simd.hpp"
#include "artgraph/text_util.hpp"

namespace artgraph::embed {

namespace {

constexpr double kNormTolerance = 1e-6;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::vector<std::string_view> tokens_of(std::string_view text)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])))
            ++j;
        if (j > i)
            out.push_back(text.substr(i, j - i));
        i = j;
    }
    return out;
}

bool blank(std::string_view text)
{
    return text::trim(text).empty();
}

}  // namespace

double EmbeddingVector::norm() const
{
    return std::sqrt(simd::active().squared_norm(values.data(), values.size()));
}

bool EmbeddingVector::is_zero() const
{
    for (double v : values)
        if (v != 0.0)
            return false;
    return true;
}

std::uint64_t token_hash(std::string_view token)
{
    return splitmix64(text::fnv1a64(token) ^ kHashSeed);
}

StructuralEmbedder::StructuralEmbedder(std::size_t dim, bool bigrams, bool kinds)
    : dim_(dim), bigrams_(bigrams), kinds_(kinds)
{
    if (dim_ == 0)
        throw EmbeddingError("embedding dimension must be positive");
}

std::string StructuralEmbedder::id() const
{
    std::string id = "structural";
    if (!bigrams_)
        id += "-unigram";
    if (!kinds_)
        id += "-lexical";
    return id + "-" + std::to_string(dim_);
}

std::vector<double> StructuralEmbedder::counts(std::string_view text) const
{
    std::vector<double> v(dim_, 0.0);
    auto toks = tokens_of(text);
    std::vector<std::string_view> kinds(toks.size());
    if (kinds_)
        for (std::size_t i = 0; i < toks.size(); ++i)
            if (auto colon = toks[i].find(':'); colon != std::string_view::npos)
                kinds[i] = toks[i].substr(0, colon);
    auto add = [&](std::string_view a, std::string_view b, bool kind) {
        std::string key;
        key.reserve(a.size() + b.size() + 2);
        if (kind)
            key += '\x1e';
        key.append(a);
        if (!b.empty()) {
            key += '\x1f';
            key.append(b);
        }
        v[token_hash(key) % dim_] += 1.0;
    };
    for (std::size_t i = 0; i < toks.size(); ++i) {
        bool pair = bigrams_ && i + 1 < toks.size();
        add(toks[i], {}, false);
        if (pair)
            add(toks[i], toks[i + 1], false);
        if (kinds[i].empty())
            continue;
        add(kinds[i], {}, true);
        if (pair && !kinds[i + 1].empty())
            add(kinds[i], kinds[i + 1], true);
    }
    return v;
}

std::vector<std::vector<double>> StructuralEmbedder::embed_batch(const std::vector<std::string>& texts) const
{
    std::vector<std::vector<double>> out;
    out.reserve(texts.size());
    for (const auto& t : texts)
        out.push_back(counts(t));
    return out;
}

void normalize(std::vector<double>& v)
{
    const auto& k = simd::active();
    double sq = k.squared_norm(v.data(), v.size());
    if (sq == 0.0)
        return;
    k.scale(v.data(), v.size(), 1.0 / std::sqrt(sq));
}

EmbeddingVector embed_text(const EmbeddingProvider& provider, std::string_view text, std::string origin)
{
    return embed_texts(provider, {std::string(text)}, {std::move(origin)}).front();
}

std::vector<EmbeddingVector> embed_texts(const EmbeddingProvider& provider, const std::vector<std::string>& texts,
                                         const std::vector<std::string>& origins)
{
    std::vector<EmbeddingVector> out(texts.size());
    std::vector<std::string> pending;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        out[i].provider_id = provider.id();
        out[i].origin = i < origins.size() ? origins[i] : std::string();
        if (blank(texts[i])) {
            out[i].values.assign(provider.dim(), 0.0);
        } else {
            pending.push_back(texts[i]);
            where.push_back(i);
        }
    }
    if (pending.empty())
        return out;
    auto raw = provider.embed_batch(pending);
    if (raw.size() != pending.size())
        throw CountMismatchError("provider returned " + std::to_string(raw.size()) + " vectors for " +
                                 std::to_string(pending.size()) + " texts");
    for (std::size_t j = 0; j < raw.size(); ++j) {
        if (raw[j].size() != provider.dim())
            throw DimMismatchError("provider returned dim " + std::to_string(raw[j].size()) + ", expected " +
                                   std::to_string(provider.dim()));
        for (double x : raw[j])
            if (!std::isfinite(x))
                throw NonFiniteError("provider returned a non-finite value");
        normalize(raw[j]);
        out[where[j]].values = std::move(raw[j]);
    }
    return out;
}

EmbeddingVector embed_graph(const EmbeddingProvider& provider, const graph::ArtifactGraph& graph)
{
    return embed_text(provider, graph::linearize(graph), graph.origin);
}

std::string EmbeddingStore::to_json() const
{
    nlohmann::ordered_json vecs = nlohmann::ordered_json::object();
    for (const auto& [path, v] : vectors)
        vecs[path] = v.values;
    nlohmann::ordered_json doc;
    doc["provider"] = provider;
    doc["dim"] = dim;
    doc["vectors"] = std::move(vecs);
    return doc.dump(1) + "\n";
}

EmbeddingStore EmbeddingStore::from_json(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw EmbeddingError(std::string("embeddings file is not JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("provider") || !doc.contains("dim") || !doc.contains("vectors"))
        throw EmbeddingError("embeddings file needs provider, dim and vectors");
    EmbeddingStore s;
    try {
        s.provider = doc.at("provider").get<std::string>();
        s.dim = doc.at("dim").get<std::size_t>();
        for (const auto& [path, arr] : doc.at("vectors").items()) {
            EmbeddingVector v;
            v.provider_id = s.provider;
            v.origin = path;
            v.values = arr.get<std::vector<double>>();
            if (v.values.size() != s.dim)
                throw DimMismatchError("vector for '" + path + "' has dim " + std::to_string(v.values.size()) +
                                       ", expected " + std::to_string(s.dim));
            for (double x : v.values)
                if (!std::isfinite(x))
                    throw NonFiniteError("vector for '" + path + "' has a non-finite value");
            double n = v.norm();
            if (!v.is_zero() && std::abs(n - 1.0) > kNormTolerance)
                throw EmbeddingError("vector for '" + path + "' is not unit length");
            s.vectors.emplace(path, std::move(v));
        }
    } catch (const nlohmann::json::exception& e) {
        throw EmbeddingError(std::string("embeddings file has wrong types: ") + e.what());
    }
    return s;
}

void EmbeddingStore::save(const std::filesystem::path& path) const
{
    corpus::write_file(path, to_json());
}

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path)
{
    try {
        return from_json(corpus::read_file(path));
    } catch (const corpus::CorpusError& e) {
        throw EmbeddingError(e.what());
    }
}

}  // namespace artgraph::embed
