#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chowfactor/catalecticant.hpp"
#include "chowfactor/chowdeg.hpp"
#include "chowfactor/factorization.hpp"

namespace chowfactor {

enum class OutputFormat { text, json, csv };

OutputFormat output_format_from_string(const std::string& name);

/// Parts joined by commas, descending: "4,2,2".
std::string partition_to_string(const Partition& p);
/// Accepts any comma-separated positive integers; parts are sorted into
/// canonical descending order.
Partition partition_from_string(const std::string& text);

std::string bigrat_to_string(const BigRat& v);
BigRat bigrat_from_string(const std::string& text);

/// Integers are emitted as JSON numbers while they fit in int64 and as
/// decimal strings beyond that (degrees overflow 64 bits already for
/// moderate inputs); the parser accepts both encodings.
nlohmann::json bigint_to_json(const BigInt& v);
BigInt bigint_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FactorReport& r);
FactorReport factor_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DegreeTable& t);
DegreeTable degree_table_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RefinementMatrix& m);
RefinementMatrix refinement_matrix_from_json(const nlohmann::json& j);

/// Hypersurface classification listing (no degrees solved).
struct ClassifyReport {
    int d = 0;
    int n = 0;
    std::vector<std::pair<Partition, bool>> rows;

    bool operator==(const ClassifyReport&) const = default;
};

nlohmann::json to_json(const ClassifyReport& r);
ClassifyReport classify_report_from_json(const nlohmann::json& j);

std::string render(const FactorReport& r, OutputFormat f);
std::string render(const DegreeTable& t, OutputFormat f);
std::string render(const RefinementMatrix& m, OutputFormat f, const char* agreement_note = nullptr);
std::string render(const ClassifyReport& r, OutputFormat f);

}  // namespace chowfactor
