#pragma once

#include <string>
#include <vector>

namespace dinv {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // exact residual / certificate, empty when clean
};

// Verdict is the conjunction of checks; warnings never flip it.
struct Report {
    std::vector<Check> checks;
    std::vector<std::string> warnings;

    void add(const std::string& name, bool pass, const std::string& detail = "")
    {
        checks.push_back({name, pass, detail});
    }
    void warn(const std::string& w) { warnings.push_back(w); }

    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    std::string to_text() const;
};

} // namespace dinv
