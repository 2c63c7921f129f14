#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skelrec {

// Raised when input data defeats a reconstruction or violates the structural
// hypotheses a routine depends on.  `code` is a stable machine-readable tag;
// `detail` carries key/value context for diagnostics (offending ids, counts).
class ReconstructionError : public std::runtime_error {
public:
    ReconstructionError(std::string code, const std::string& message,
                        std::vector<std::pair<std::string, std::string>> detail = {})
        : std::runtime_error(message), code_(std::move(code)), detail_(std::move(detail)) {}

    const std::string& code() const { return code_; }
    const std::vector<std::pair<std::string, std::string>>& detail() const { return detail_; }

private:
    std::string code_;
    std::vector<std::pair<std::string, std::string>> detail_;
};

}  // namespace skelrec
