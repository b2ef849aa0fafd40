#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace schwarz::cli {

using Json = nlohmann::ordered_json;

// %.17g, the round-trippable float form used in every report.
std::string num17(double v);

// Serialize with insertion-ordered keys and 17-significant-digit floats.
// No locale, no timestamps: byte-identical for identical inputs.
std::string dump_json(const Json& j);

// RFC 4180 field quoting (quotes doubled, fields with separators quoted).
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}
    void row(const std::vector<std::string>& fields);

private:
    std::ostream& os_;
};

// Write to the --out path, or stdout when absent.
void emit(const std::string& payload, const std::optional<std::string>& out_path);

} // namespace schwarz::cli
