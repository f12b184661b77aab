#include <atomic>
#include <functional>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>
#include <json.hpp>

#include "artgraph/embed.hpp"

using namespace artgraph;
using json = nlohmann::json;
using namespace std::chrono_literals;

namespace {

/// In-process stand-in for the embedding service. `embed_handler` decides the
/// /embed answer; the default embeds text t as (len(t), 1, 0).
class MockService {
public:
    explicit MockService(std::string prefix = "") : prefix_(std::move(prefix))
    {
        server_.Get(prefix_ + "/health", [this](const httplib::Request&, httplib::Response& res) {
            res.set_content(health_.dump(), "application/json");
        });
        server_.Post(prefix_ + "/embed", [this](const httplib::Request& req, httplib::Response& res) {
            ++requests;
            auto texts = json::parse(req.body).at("texts").get<std::vector<std::string>>();
            embed_handler(texts, res);
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }

    ~MockService()
    {
        server_.stop();
        thread_.join();
    }

    std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_) + prefix_; }

    static void ok(const std::vector<std::string>& texts, httplib::Response& res)
    {
        json vecs = json::array();
        for (const auto& t : texts)
            vecs.push_back({static_cast<double>(t.size()), 1.0, 0.0});
        res.set_content(json({{"dim", 3}, {"vectors", vecs}}).dump(), "application/json");
    }

    json health_ = {{"status", "ok"}, {"dim", 3}, {"model", "mock-encoder"}};
    std::function<void(const std::vector<std::string>&, httplib::Response&)> embed_handler = ok;
    std::atomic<int> requests{0};

private:
    httplib::Server server_;
    std::string prefix_;
    int port_ = 0;
    std::thread thread_;
};

embed::ServiceConfig fast(const std::string& endpoint)
{
    embed::ServiceConfig c;
    c.endpoint = endpoint;
    c.initial_backoff = 1ms;
    c.max_backoff = 4ms;
    c.timeout = 5s;
    return c;
}

}  // namespace

TEST(ServiceClient, HandshakeReportsModelAndDim)
{
    MockService svc;
    embed::ServiceClient client(fast(svc.endpoint()));
    EXPECT_EQ(client.dim(), 3u);
    EXPECT_EQ(client.id(), "service:mock-encoder");
    EXPECT_EQ(client.health().status, "ok");
}

TEST(ServiceClient, VectorsInRequestOrder)
{
    MockService svc;
    embed::ServiceClient client(fast(svc.endpoint()));
    auto out = client.embed_batch({"a", "abc"});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_NEAR(out[0][0], 1.0 / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(out[1][0], 3.0 / std::sqrt(10.0), 1e-12);
}

TEST(ServiceClient, IdenticalTextsIdenticalVectors)
{
    MockService svc;
    embed::ServiceClient client(fast(svc.endpoint()));
    auto out = client.embed_batch({"same", "same"});
    EXPECT_EQ(out[0], out[1]);
}

TEST(ServiceClient, DimMismatchIsTyped)
{
    MockService svc;
    svc.embed_handler = [](const std::vector<std::string>& texts, httplib::Response& res) {
        json vecs = json::array();
        for (std::size_t i = 0; i < texts.size(); ++i)
            vecs.push_back({1.0, 0.0});
        res.set_content(json({{"vectors", vecs}}).dump(), "application/json");
    };
    embed::ServiceClient client(fast(svc.endpoint()));
    EXPECT_THROW(client.embed_batch({"x"}), embed::DimMismatchError);
}

TEST(ServiceClient, ReportedDimDisagreeingWithHandshake)
{
    MockService svc;
    svc.embed_handler = [](const std::vector<std::string>&, httplib::Response& res) {
        res.set_content(R"({"dim": 4, "vectors": [[1, 0, 0]]})", "application/json");
    };
    embed::ServiceClient client(fast(svc.endpoint()));
    EXPECT_THROW(client.embed_batch({"x"}), embed::DimMismatchError);
}

TEST(ServiceClient, CountMismatchIsTyped)
{
    MockService svc;
    svc.embed_handler = [](const std::vector<std::string>&, httplib::Response& res) {
        res.set_content(R"({"dim": 3, "vectors": [[1, 0, 0]]})", "application/json");
    };
    embed::ServiceClient client(fast(svc.endpoint()));
    EXPECT_THROW(client.embed_batch({"x", "y"}), embed::CountMismatchError);
}

TEST(ServiceClient, NonNumericValueIsTyped)
{
    MockService svc;
    svc.embed_handler = [](const std::vector<std::string>&, httplib::Response& res) {
        res.set_content(R"({"dim": 3, "vectors": [[1, "NaN", 0]]})", "application/json");
    };
    embed::ServiceClient client(fast(svc.endpoint()));
    EXPECT_THROW(client.embed_batch({"x"}), embed::NonFiniteError);
}

TEST(ServiceClient, MalformedBodyIsProtocolError)
{
    MockService svc;
    svc.embed_handler = [](const std::vector<std::string>&, httplib::Response& res) {
        res.set_content("{\"nope\": 1}", "application/json");
    };
    embed::ServiceClient client(fast(svc.endpoint()));
    EXPECT_THROW(client.embed_batch({"x"}), embed::ProtocolError);
}

TEST(ServiceClient, ServerErrorsAreRetried)
{
    MockService svc;
    std::atomic<int> failures{2};
    svc.embed_handler = [&](const std::vector<std::string>& texts, httplib::Response& res) {
        if (failures-- > 0) {
            res.status = 503;
            res.set_content("busy", "text/plain");
            return;
        }
        MockService::ok(texts, res);
    };
    embed::ServiceClient client(fast(svc.endpoint()));
    auto out = client.embed_batch({"x"});
    EXPECT_EQ(out.size(), 1u);
    EXPECT_EQ(svc.requests.load(), 3);
}

TEST(ServiceClient, RetriesAreCapped)
{
    MockService svc;
    svc.embed_handler = [](const std::vector<std::string>&, httplib::Response& res) { res.status = 500; };
    auto cfg = fast(svc.endpoint());
    cfg.max_retries = 2;
    embed::ServiceClient client(cfg);
    try {
        client.embed_batch({"x"});
        FAIL() << "expected StatusError";
    } catch (const embed::StatusError& e) {
        EXPECT_EQ(e.status(), 500);
        EXPECT_TRUE(e.retriable());
    }
    EXPECT_EQ(svc.requests.load(), 3);
}

TEST(ServiceClient, ClientErrorsAreNotRetried)
{
    MockService svc;
    svc.embed_handler = [](const std::vector<std::string>&, httplib::Response& res) { res.status = 400; };
    embed::ServiceClient client(fast(svc.endpoint()));
    EXPECT_THROW(client.embed_batch({"x"}), embed::StatusError);
    EXPECT_EQ(svc.requests.load(), 1);
}

TEST(ServiceClient, UnreachableServiceIsTransportError)
{
    int port = 0;
    {
        httplib::Server probe;
        port = probe.bind_to_any_port("127.0.0.1");
    }
    auto cfg = fast("http://127.0.0.1:" + std::to_string(port));
    cfg.max_retries = 1;
    EXPECT_THROW(embed::ServiceClient client(cfg), embed::TransportError);
}

TEST(ServiceClient, UnhealthyServiceRefused)
{
    MockService svc;
    svc.health_ = {{"status", "loading"}, {"dim", 3}};
    EXPECT_THROW(embed::ServiceClient client(fast(svc.endpoint())), embed::ProtocolError);
}

TEST(ServiceClient, PathPrefixAndBatching)
{
    MockService svc("/v1");
    auto cfg = fast(svc.endpoint());
    cfg.batch_size = 2;
    embed::ServiceClient client(cfg);
    auto out = client.embed_batch({"a", "bb", "ccc", "dddd", "eeeee"});
    ASSERT_EQ(out.size(), 5u);
    EXPECT_EQ(svc.requests.load(), 3);
    EXPECT_NEAR(out[4][0], 5.0 / std::sqrt(26.0), 1e-12);
}

TEST(ServiceClient, BlankTextsNeverReachTheService)
{
    MockService svc;
    embed::ServiceClient client(fast(svc.endpoint()));
    auto out = embed::embed_texts(client, {"", "a"}, {"e", "a"});
    EXPECT_TRUE(out[0].is_zero());
    EXPECT_EQ(out[0].dim(), 3u);
    EXPECT_FALSE(out[1].is_zero());
    EXPECT_EQ(svc.requests.load(), 1);
}
