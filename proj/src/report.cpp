#include "dinv/report.hpp"

#include <sstream>

namespace dinv {

std::string Report::to_text() const
{
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty())
            os << "  [" << c.detail << "]";
        os << "\n";
    }
    for (const auto& w : warnings)
        os << "WARN  " << w << "\n";
    os << (ok() ? "OVERALL PASS" : "OVERALL FAIL") << "\n";
    return os.str();
}

} // namespace dinv
