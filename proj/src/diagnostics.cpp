#include "artgraph/diagnostics.hpp"

#include <algorithm>

#include <json.hpp>

namespace artgraph {

void Diagnostics::warn(std::string code, std::string message, int line, std::string file)
{
    warnings_.push_back(Warning{std::move(code), std::move(file), line, std::move(message)});
}

void Diagnostics::merge(const Diagnostics& other, const std::string& file)
{
    for (Warning w : other.warnings_) {
        if (w.file.empty())
            w.file = file;
        warnings_.push_back(std::move(w));
    }
}

std::size_t Diagnostics::count(const std::string& code) const
{
    return static_cast<std::size_t>(
        std::count_if(warnings_.begin(), warnings_.end(),
                      [&](const Warning& w) { return w.code == code; }));
}

std::string Diagnostics::to_jsonl() const
{
    std::string out;
    for (const auto& w : warnings_) {
        nlohmann::ordered_json j;
        j["code"] = w.code;
        j["file"] = w.file;
        j["line"] = w.line;
        j["message"] = w.message;
        out += j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
        out += '\n';
    }
    return out;
}

}  // namespace artgraph
