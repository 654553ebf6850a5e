#include "hoch/report.hpp"

#include <sstream>

namespace hoch {

std::string Report::text() const {
    std::ostringstream os;
    if (!title.empty()) os << "== " << title << " ==\n";
    for (const auto& c : checks) {
        if (c.skipped) os << "[skip] " << c.name << (c.witness.empty() ? "" : "  (" + c.witness + ")") << "\n";
        else if (c.pass) os << "[pass] " << c.name << "\n";
        else os << "[FAIL] " << c.name << (c.witness.empty() ? "" : "  witness: " + c.witness) << "\n";
    }
    return os.str();
}

}  // namespace hoch
