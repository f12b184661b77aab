#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace artgraph {

/// One structured warning. Rule-driven extraction is brittle by nature, so
/// every degradation is recorded here instead of being silently dropped.
struct Warning {
    std::string code;
    std::string file;
    int line = 0;
    std::string message;

    bool operator==(const Warning&) const = default;
};

class Diagnostics {
public:
    void warn(std::string code, std::string message, int line = 0, std::string file = {});

    /// Appends all warnings of `other`, stamping `file` where it is empty.
    void merge(const Diagnostics& other, const std::string& file = {});

    const std::vector<Warning>& warnings() const { return warnings_; }
    std::size_t size() const { return warnings_.size(); }
    bool empty() const { return warnings_.empty(); }
    std::size_t count(const std::string& code) const;

    /// One JSON object per line, in insertion order.
    std::string to_jsonl() const;

private:
    std::vector<Warning> warnings_;
};

}  // namespace artgraph
