#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "artgraph/graph.hpp"

namespace artgraph::embed {

struct EmbeddingVector {
    std::vector<double> values;
    std::string provider_id;
    std::string origin;

    std::size_t dim() const { return values.size(); }
    double norm() const;
    bool is_zero() const;

    bool operator==(const EmbeddingVector&) const = default;
};

class EmbeddingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Connection refused, timeout and similar; worth retrying.
class TransportError : public EmbeddingError {
public:
    using EmbeddingError::EmbeddingError;
};

class StatusError : public EmbeddingError {
public:
    StatusError(int status, const std::string& body)
        : EmbeddingError("service answered HTTP " + std::to_string(status) + ": " + body), status_(status)
    {}
    int status() const { return status_; }
    bool retriable() const { return status_ >= 500 || status_ == 429; }

private:
    int status_;
};

class CountMismatchError : public EmbeddingError {
public:
    using EmbeddingError::EmbeddingError;
};

class DimMismatchError : public EmbeddingError {
public:
    using EmbeddingError::EmbeddingError;
};

class NonFiniteError : public EmbeddingError {
public:
    using EmbeddingError::EmbeddingError;
};

class ProtocolError : public EmbeddingError {
public:
    using EmbeddingError::EmbeddingError;
};

/// Source of raw (unnormalized) vectors. Implementations must return the same
/// vector for the same text and be safe to call from several threads.
class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual std::string id() const = 0;
    virtual std::size_t dim() const = 0;
    virtual std::vector<std::vector<double>> embed_batch(const std::vector<std::string>& texts) const = 0;
};

/// Token hash: FNV-1a 64 of the bytes, xor kHashSeed, then the SplitMix64
/// finalizer.
inline constexpr std::uint64_t kHashSeed = 0x9E3779B97F4A7C15ULL;
std::uint64_t token_hash(std::string_view token);

/// Feature hashing over whitespace tokens and adjacent token pairs. A pair is
/// hashed as "<first>\x1f<second>". Every occurrence adds 1 to bucket
/// hash % dim.
///
/// With `kinds` set, tokens of the form "<kind>:<label>" also contribute their
/// kind alone, hashed as "\x1e<kind>", and adjacent kinds as
/// "\x1e<first>\x1f<second>", so renamed identifiers keep most of the vector.
class StructuralEmbedder : public EmbeddingProvider {
public:
    explicit StructuralEmbedder(std::size_t dim = 256, bool bigrams = true, bool kinds = true);

    std::string id() const override;
    std::size_t dim() const override { return dim_; }
    std::vector<std::vector<double>> embed_batch(const std::vector<std::string>& texts) const override;

    std::vector<double> counts(std::string_view text) const;

private:
    std::size_t dim_;
    bool bigrams_;
    bool kinds_;
};

struct ServiceConfig {
    std::string endpoint;  ///< e.g. "http://127.0.0.1:8000" with an optional path prefix
    int max_retries = 3;
    std::chrono::milliseconds initial_backoff{100};
    std::chrono::milliseconds max_backoff{2000};
    std::chrono::seconds timeout{60};
    std::size_t batch_size = 32;
};

struct ServiceHealth {
    std::string status;
    std::size_t dim = 0;
    std::string model;
};

/// Client for the embedding service: GET /health, POST /embed. Responses are
/// checked for count, dimension and finiteness; transport failures and 5xx
/// answers are retried with exponential backoff.
class ServiceClient : public EmbeddingProvider {
public:
    /// Performs the health handshake; throws EmbeddingError on failure.
    explicit ServiceClient(ServiceConfig config);

    std::string id() const override { return "service:" + health_.model; }
    std::size_t dim() const override { return health_.dim; }
    std::vector<std::vector<double>> embed_batch(const std::vector<std::string>& texts) const override;

    const ServiceHealth& health() const { return health_; }

private:
    ServiceHealth fetch_health() const;
    std::vector<std::vector<double>> post_once(const std::vector<std::string>& texts) const;

    ServiceConfig config_;
    std::string base_;
    std::string prefix_;
    ServiceHealth health_;
};

/// Scales to unit L2 norm; zero vectors stay zero.
void normalize(std::vector<double>& v);

/// Zero vector for blank text; otherwise the provider's vector, normalized.
EmbeddingVector embed_text(const EmbeddingProvider& provider, std::string_view text, std::string origin = {});

/// Batched embed_text. Blank texts never reach the provider.
std::vector<EmbeddingVector> embed_texts(const EmbeddingProvider& provider, const std::vector<std::string>& texts,
                                         const std::vector<std::string>& origins);

EmbeddingVector embed_graph(const EmbeddingProvider& provider, const graph::ArtifactGraph& graph);

/// Persisted form: {"provider": id, "dim": D, "vectors": {"<path>": [...]}}.
struct EmbeddingStore {
    std::string provider;
    std::size_t dim = 0;
    std::map<std::string, EmbeddingVector> vectors;

    std::string to_json() const;
    /// Throws EmbeddingError when a vector breaks the dim, finiteness or norm rules.
    static EmbeddingStore from_json(std::string_view text);

    void save(const std::filesystem::path& path) const;
    static EmbeddingStore load(const std::filesystem::path& path);
};

}  // namespace artgraph::embed
