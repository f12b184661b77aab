#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artgraph/embed.hpp"

namespace artgraph::match {

class MatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct MatchRecord {
    std::string file1;  ///< file1 < file2
    std::string file2;
    double similarity = 0.0;

    bool operator==(const MatchRecord&) const = default;
};

/// dot / (|a| |b|); 0 when either norm is 0. Throws MatchError on a dim mismatch.
double cosine(const std::vector<double>& a, const std::vector<double>& b);
double cosine(const embed::EmbeddingVector& a, const embed::EmbeddingVector& b);

/// max(0, cosine).
double similarity(const std::vector<double>& a, const std::vector<double>& b);
double similarity(const embed::EmbeddingVector& a, const embed::EmbeddingVector& b);

/// One record per unordered pair, sorted by (file1, file2). Work is spread
/// over `jobs` threads; the result does not depend on it.
std::vector<MatchRecord> match_all(const std::map<std::string, embed::EmbeddingVector>& embeddings,
                                   unsigned jobs = 1);

/// The k most similar counterparts of `query`, descending, ties by path.
std::vector<std::pair<std::string, double>> rank_neighbors(const std::string& query,
                                                           const std::vector<MatchRecord>& records, std::size_t k);

/// JSON array of {"file1","file2","similarity"}, similarity with 6 decimals.
std::string matches_json(const std::vector<MatchRecord>& records);
std::vector<MatchRecord> parse_matches_json(std::string_view text);

inline constexpr std::array<double, 6> kBucketEdges{0.0, 0.35, 0.60, 0.80, 0.95, 1.0};

struct DistributionSummary {
    std::size_t total = 0;
    std::array<std::size_t, 5> counts{};
    std::array<double, 5> fractions{};
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    std::vector<MatchRecord> top;     ///< up to 10, most similar first
    std::vector<MatchRecord> bottom;  ///< up to 10, least similar first
};

/// Bucket index for a similarity: [0,.35) [.35,.60) [.60,.80) [.80,.95) [.95,1].
std::size_t bucket_of(double similarity);

DistributionSummary report_distribution(const std::vector<MatchRecord>& records);
std::string report_text(const DistributionSummary& summary);
std::string report_json(const DistributionSummary& summary);

/// Undirected DOT graph linking every file to its k nearest neighbours.
std::string neighborhood_dot(const std::vector<MatchRecord>& records, std::size_t k);

}  // namespace artgraph::match
