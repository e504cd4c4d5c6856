#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace brachy {

/// Line-oriented key/value report, teed to an optional file. Stat lines are
/// prefixed with '#' so byte comparisons can skip the nondeterministic part.
class Report {
public:
    explicit Report(const std::string& path = "") {
        if (!path.empty()) file_.open(path);
    }

    void kv(const std::string& key, const std::string& value) {
        line(key + " " + value);
    }
    template <typename T>
    void kv(const std::string& key, const T& value) {
        std::ostringstream os;
        os << value;
        kv(key, os.str());
    }
    void stat(const std::string& key, long long value) {
        line("# " + key + " " + std::to_string(value));
    }
    void line(const std::string& s) {
        std::cout << s << "\n";
        if (file_.is_open()) file_ << s << "\n";
    }

private:
    std::ofstream file_;
};

} // namespace brachy
