#include "cohopf/report.hpp"

#include <stdexcept>

namespace cohopf {

void Report::kv(const std::string& key, const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    kv(key, os.str());
}

void Report::kv(const std::string& key, const Mat& m) { kv(key, m.str()); }

std::string Report::render() const {
    std::ostringstream os;
    os << "cohopf report v1\n";
    os << "command: " << command_ << "\n";
    for (const auto& h : human_) os << h << "\n";
    os << "--- machine ---\n";
    for (const auto& [k, v] : machine_) os << k << " = " << v << "\n";
    os << "--- end ---\n";
    return os.str();
}

std::vector<std::pair<std::string, std::string>> Report::parse_machine(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    bool in_machine = false;
    std::vector<std::pair<std::string, std::string>> out;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (!header_seen) {
            if (line != "cohopf report v1") throw std::runtime_error("report: missing version header");
            header_seen = true;
            continue;
        }
        if (line == "--- machine ---") {
            in_machine = true;
            continue;
        }
        if (line == "--- end ---") {
            in_machine = false;
            continue;
        }
        if (!in_machine) continue;
        std::size_t eq = line.find(" = ");
        if (eq == std::string::npos) throw std::runtime_error("report: malformed machine line '" + line + "'");
        out.emplace_back(line.substr(0, eq), line.substr(eq + 3));
    }
    return out;
}

}  // namespace cohopf
