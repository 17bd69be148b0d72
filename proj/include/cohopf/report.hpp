#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "cohopf/linmap.hpp"

namespace cohopf {

/// Deterministic report: a human-readable section followed by a
/// machine-readable key/value block that round-trips through parse_machine.
class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void line(const std::string& s) { human_.push_back(s); }

    void kv(const std::string& key, const std::string& value) { machine_.emplace_back(key, value); }
    void kv(const std::string& key, bool v) { kv(key, std::string(v ? "true" : "false")); }
    void kv(const std::string& key, std::size_t v) { kv(key, std::to_string(v)); }
    void kv(const std::string& key, long v) { kv(key, std::to_string(v)); }
    void kv(const std::string& key, const std::vector<std::size_t>& v);
    void kv(const std::string& key, const Scalar& s) { kv(key, s.str()); }
    void kv(const std::string& key, const Mat& m);

    std::string render() const;

    static std::vector<std::pair<std::string, std::string>> parse_machine(const std::string& report_text);

private:
    std::string command_;
    std::vector<std::string> human_;
    std::vector<std::pair<std::string, std::string>> machine_;
};

}  // namespace cohopf
