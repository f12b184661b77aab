#include <algorithm>
#include <cmath>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "artgraph/embed.hpp"

namespace artgraph::embed {

namespace {

using json = nlohmann::json;

/// Splits "http://host:port/prefix" into the scheme-host-port part and the path prefix.
std::pair<std::string, std::string> split_endpoint(const std::string& endpoint)
{
    std::size_t scheme = endpoint.find("://");
    std::size_t from = scheme == std::string::npos ? 0 : scheme + 3;
    std::size_t slash = endpoint.find('/', from);
    std::string base = slash == std::string::npos ? endpoint : endpoint.substr(0, slash);
    std::string prefix = slash == std::string::npos ? "" : endpoint.substr(slash);
    while (!prefix.empty() && prefix.back() == '/')
        prefix.pop_back();
    if (scheme == std::string::npos)
        base = "http://" + base;
    return {base, prefix};
}

httplib::Client make_client(const std::string& base, std::chrono::seconds timeout)
{
    httplib::Client cli(base);
    cli.set_connection_timeout(timeout);
    cli.set_read_timeout(timeout);
    cli.set_write_timeout(timeout);
    return cli;
}

}  // namespace

ServiceClient::ServiceClient(ServiceConfig config) : config_(std::move(config))
{
    if (config_.endpoint.empty())
        throw EmbeddingError("service endpoint is empty");
    if (config_.batch_size == 0)
        config_.batch_size = 1;
    std::tie(base_, prefix_) = split_endpoint(config_.endpoint);

    std::chrono::milliseconds backoff = config_.initial_backoff;
    for (int attempt = 0;; ++attempt) {
        try {
            health_ = fetch_health();
            break;
        } catch (const TransportError&) {
            if (attempt >= config_.max_retries)
                throw;
        } catch (const StatusError& e) {
            if (!e.retriable() || attempt >= config_.max_retries)
                throw;
        }
        std::this_thread::sleep_for(backoff);
        backoff = std::min(backoff * 2, config_.max_backoff);
    }
    if (health_.status != "ok")
        throw ProtocolError("service health status is '" + health_.status + "'");
    if (health_.dim == 0)
        throw ProtocolError("service reported dim 0");
}

ServiceHealth ServiceClient::fetch_health() const
{
    auto cli = make_client(base_, config_.timeout);
    auto res = cli.Get(prefix_ + "/health");
    if (!res)
        throw TransportError("GET /health failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw StatusError(res->status, res->body);
    try {
        json doc = json::parse(res->body);
        ServiceHealth h;
        h.status = doc.at("status").get<std::string>();
        h.dim = doc.at("dim").get<std::size_t>();
        h.model = doc.value("model", std::string());
        return h;
    } catch (const json::exception& e) {
        throw ProtocolError(std::string("bad /health body: ") + e.what());
    }
}

std::vector<std::vector<double>> ServiceClient::post_once(const std::vector<std::string>& texts) const
{
    auto cli = make_client(base_, config_.timeout);
    json req = {{"texts", texts}};
    auto res = cli.Post(prefix_ + "/embed", req.dump(), "application/json");
    if (!res)
        throw TransportError("POST /embed failed: " + httplib::to_string(res.error()));
    if (res->status != 200)
        throw StatusError(res->status, res->body);

    json doc;
    try {
        doc = json::parse(res->body);
    } catch (const json::exception& e) {
        throw ProtocolError(std::string("bad /embed body: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vectors") || !doc["vectors"].is_array())
        throw ProtocolError("/embed body has no vectors array");
    if (doc.contains("dim") && doc["dim"].is_number_unsigned() && doc["dim"].get<std::size_t>() != health_.dim)
        throw DimMismatchError("/embed reports dim " + std::to_string(doc["dim"].get<std::size_t>()) +
                               ", handshake said " + std::to_string(health_.dim));
    const json& vecs = doc["vectors"];
    if (vecs.size() != texts.size())
        throw CountMismatchError("/embed returned " + std::to_string(vecs.size()) + " vectors for " +
                                 std::to_string(texts.size()) + " texts");
    std::vector<std::vector<double>> out;
    out.reserve(vecs.size());
    for (const auto& v : vecs) {
        if (!v.is_array())
            throw ProtocolError("/embed vector is not an array");
        if (v.size() != health_.dim)
            throw DimMismatchError("/embed vector has dim " + std::to_string(v.size()) + ", expected " +
                                   std::to_string(health_.dim));
        std::vector<double> row;
        row.reserve(v.size());
        for (const auto& x : v) {
            if (!x.is_number())
                throw NonFiniteError("/embed vector holds a non-number");
            double d = x.get<double>();
            if (!std::isfinite(d))
                throw NonFiniteError("/embed vector holds a non-finite value");
            row.push_back(d);
        }
        normalize(row);
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<std::vector<double>> ServiceClient::embed_batch(const std::vector<std::string>& texts) const
{
    std::vector<std::vector<double>> out;
    out.reserve(texts.size());
    for (std::size_t start = 0; start < texts.size(); start += config_.batch_size) {
        std::size_t stop = std::min(texts.size(), start + config_.batch_size);
        std::vector<std::string> batch(texts.begin() + static_cast<std::ptrdiff_t>(start),
                                       texts.begin() + static_cast<std::ptrdiff_t>(stop));
        std::chrono::milliseconds backoff = config_.initial_backoff;
        for (int attempt = 0;; ++attempt) {
            try {
                auto part = post_once(batch);
                for (auto& v : part)
                    out.push_back(std::move(v));
                break;
            } catch (const TransportError&) {
                if (attempt >= config_.max_retries)
                    throw;
            } catch (const StatusError& e) {
                if (!e.retriable() || attempt >= config_.max_retries)
                    throw;
            }
            std::this_thread::sleep_for(backoff);
            backoff = std::min(backoff * 2, config_.max_backoff);
        }
    }
    return out;
}

}  // namespace artgraph::embed
