#include "chowfactor/serialize.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace chowfactor {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& token) {
    std::size_t used = 0;
    int v;
    try {
        v = std::stoi(token, &used);
    } catch (const std::exception&) {
        throw std::domain_error("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw std::domain_error("not an integer: '" + token + "'");
    return v;
}

// Minimal CSV quoting: fields with commas (partition lists) are quoted.
std::string csv_field(const std::string& s) {
    if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out += "\"";
    return out;
}

std::string pad(const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 1, ' ');
}

std::string table_text(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out += i + 1 == row.size() ? row[i] : pad(row[i], widths[i] + 2);
        out += '\n';
    }
    return out;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace

OutputFormat output_format_from_string(const std::string& name) {
    if (name == "text") return OutputFormat::text;
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    throw std::domain_error("unknown format '" + name + "' (expected text, json or csv)");
}

std::string partition_to_string(const Partition& p) {
    std::string out;
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

Partition partition_from_string(const std::string& text) {
    if (text.empty()) throw std::domain_error("empty partition");
    std::vector<int> parts;
    for (const std::string& tok : split(text, ',')) parts.push_back(parse_int(tok));
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(parts);
}

std::string bigrat_to_string(const BigRat& v) {
    if (boost::multiprecision::denominator(v) == 1)
        return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" +
           boost::multiprecision::denominator(v).str();
}

BigRat bigrat_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(text));
        return BigRat(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::domain_error("not a rational number: '" + text + "'");
    }
}

nlohmann::json bigint_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            throw std::domain_error("not an integer: '" + j.get<std::string>() + "'");
        }
    }
    throw std::domain_error("expected an integer (number or decimal string)");
}

nlohmann::json to_json(const Partition& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (int part : p.parts()) arr.push_back(part);
    return arr;
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::domain_error("partition must be a JSON array");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    return Partition(parts);
}

nlohmann::json to_json(const FactorReport& r) {
    nlohmann::json j;
    j["mu"] = to_json(r.mu);
    j["n"] = r.n;
    j["factors"] = nlohmann::json::array();
    for (const Factor& f : r.factors) {
        j["factors"].push_back({{"lambda", to_json(f.lambda)},
                                {"degree", bigint_to_json(f.degree)},
                                {"multiplicity", bigint_to_json(f.multiplicity)}});
    }
    j["total_degree"] = bigint_to_json(r.total_degree);
    return j;
}

FactorReport factor_report_from_json(const nlohmann::json& j) {
    FactorReport r;
    r.mu = partition_from_json(j.at("mu"));
    r.n = j.at("n").get<int>();
    for (const auto& f : j.at("factors")) {
        r.factors.push_back(Factor{partition_from_json(f.at("lambda")),
                                   bigint_from_json(f.at("degree")),
                                   bigint_from_json(f.at("multiplicity"))});
    }
    r.total_degree = bigint_from_json(j.at("total_degree"));
    return r;
}

nlohmann::json to_json(const DegreeTable& t) {
    nlohmann::json j;
    j["d"] = t.d;
    j["n"] = t.n;
    j["rows"] = nlohmann::json::array();
    for (const DegreeRow& row : t.rows) {
        j["rows"].push_back({{"lambda", to_json(row.lambda)},
                             {"disc_degree", bigint_to_json(row.disc_degree)},
                             {"chow_degree", bigint_to_json(row.chow_degree)},
                             {"hypersurface", row.hypersurface}});
    }
    return j;
}

DegreeTable degree_table_from_json(const nlohmann::json& j) {
    DegreeTable t;
    t.d = j.at("d").get<int>();
    t.n = j.at("n").get<int>();
    for (const auto& row : j.at("rows")) {
        t.rows.push_back(DegreeRow{partition_from_json(row.at("lambda")),
                                   bigint_from_json(row.at("disc_degree")),
                                   bigint_from_json(row.at("chow_degree")),
                                   row.at("hypersurface").get<bool>()});
    }
    return t;
}

nlohmann::json to_json(const RefinementMatrix& m) {
    nlohmann::json j;
    j["d"] = m.order.empty() ? 0 : m.order.front().weight();
    j["order"] = nlohmann::json::array();
    for (const Partition& p : m.order) j["order"].push_back(to_json(p));
    j["entries"] = nlohmann::json::array();
    for (const auto& row : m.entries) {
        nlohmann::json jr = nlohmann::json::array();
        for (const BigInt& v : row) jr.push_back(bigint_to_json(v));
        j["entries"].push_back(jr);
    }
    return j;
}

RefinementMatrix refinement_matrix_from_json(const nlohmann::json& j) {
    RefinementMatrix m;
    for (const auto& p : j.at("order")) m.order.push_back(partition_from_json(p));
    for (const auto& row : j.at("entries")) {
        std::vector<BigInt> r;
        for (const auto& v : row) r.push_back(bigint_from_json(v));
        m.entries.push_back(std::move(r));
    }
    return m;
}

nlohmann::json to_json(const ClassifyReport& r) {
    nlohmann::json j;
    j["d"] = r.d;
    j["n"] = r.n;
    j["rows"] = nlohmann::json::array();
    for (const auto& [lambda, flag] : r.rows)
        j["rows"].push_back({{"lambda", to_json(lambda)}, {"hypersurface", flag}});
    return j;
}

ClassifyReport classify_report_from_json(const nlohmann::json& j) {
    ClassifyReport r;
    r.d = j.at("d").get<int>();
    r.n = j.at("n").get<int>();
    for (const auto& row : j.at("rows"))
        r.rows.emplace_back(partition_from_json(row.at("lambda")),
                            row.at("hypersurface").get<bool>());
    return r;
}

std::string render(const FactorReport& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::json:
            return dump(to_json(r));
        case OutputFormat::csv: {
            std::string out = "mu,n,lambda,degree,multiplicity,total_degree\n";
            for (const Factor& fac : r.factors) {
                out += csv_field(partition_to_string(r.mu)) + "," + std::to_string(r.n) + "," +
                       csv_field(partition_to_string(fac.lambda)) + "," + fac.degree.str() + "," +
                       fac.multiplicity.str() + "," + r.total_degree.str() + "\n";
            }
            return out;
        }
        case OutputFormat::text: {
            std::string out = "mu: " + partition_to_string(r.mu) + "\n";
            out += "n: " + std::to_string(r.n) + "\n";
            std::vector<std::vector<std::string>> rows = {{"lambda", "degree", "multiplicity"}};
            for (const Factor& fac : r.factors)
                rows.push_back(
                    {partition_to_string(fac.lambda), fac.degree.str(), fac.multiplicity.str()});
            out += table_text(rows);
            out += "total_degree: " + r.total_degree.str() + "\n";
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::string render(const DegreeTable& t, OutputFormat f) {
    switch (f) {
        case OutputFormat::json:
            return dump(to_json(t));
        case OutputFormat::csv: {
            std::string out = "d,n,lambda,disc_degree,chow_degree,hypersurface\n";
            for (const DegreeRow& row : t.rows) {
                out += std::to_string(t.d) + "," + std::to_string(t.n) + "," +
                       csv_field(partition_to_string(row.lambda)) + "," + row.disc_degree.str() +
                       "," + row.chow_degree.str() + "," + (row.hypersurface ? "true" : "false") +
                       "\n";
            }
            return out;
        }
        case OutputFormat::text: {
            std::string out = "d: " + std::to_string(t.d) + "\n";
            out += "n: " + std::to_string(t.n) + "\n";
            std::vector<std::vector<std::string>> rows = {
                {"lambda", "disc_degree", "chow_degree", "hypersurface"}};
            for (const DegreeRow& row : t.rows)
                rows.push_back({partition_to_string(row.lambda), row.disc_degree.str(),
                                row.chow_degree.str(), row.hypersurface ? "yes" : "no"});
            out += table_text(rows);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::string render(const RefinementMatrix& m, OutputFormat f, const char* agreement_note) {
    switch (f) {
        case OutputFormat::json: {
            nlohmann::json j = to_json(m);
            if (agreement_note) j["methods_agree"] = std::string(agreement_note) == "yes";
            return dump(j);
        }
        case OutputFormat::csv: {
            std::string out = "lambda\\mu";
            for (const Partition& p : m.order) out += "," + csv_field(partition_to_string(p));
            out += "\n";
            for (std::size_t i = 0; i < m.order.size(); ++i) {
                out += csv_field(partition_to_string(m.order[i]));
                for (const BigInt& v : m.entries[i]) out += "," + v.str();
                out += "\n";
            }
            return out;
        }
        case OutputFormat::text: {
            std::string out;
            if (!m.order.empty())
                out += "d: " + std::to_string(m.order.front().weight()) + "\n";
            if (agreement_note) out += std::string("methods_agree: ") + agreement_note + "\n";
            std::vector<std::vector<std::string>> rows;
            std::vector<std::string> header = {"lambda\\mu"};
            for (const Partition& p : m.order) header.push_back(partition_to_string(p));
            rows.push_back(header);
            for (std::size_t i = 0; i < m.order.size(); ++i) {
                std::vector<std::string> row = {partition_to_string(m.order[i])};
                for (const BigInt& v : m.entries[i]) row.push_back(v.str());
                rows.push_back(row);
            }
            out += table_text(rows);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::string render(const ClassifyReport& r, OutputFormat f) {
    switch (f) {
        case OutputFormat::json:
            return dump(to_json(r));
        case OutputFormat::csv: {
            std::string out = "d,n,lambda,hypersurface\n";
            for (const auto& [lambda, flag] : r.rows)
                out += std::to_string(r.d) + "," + std::to_string(r.n) + "," +
                       csv_field(partition_to_string(lambda)) + "," + (flag ? "true" : "false") +
                       "\n";
            return out;
        }
        case OutputFormat::text: {
            std::string out = "d: " + std::to_string(r.d) + "\n";
            out += "n: " + std::to_string(r.n) + "\n";
            std::vector<std::vector<std::string>> rows = {{"lambda", "hypersurface"}};
            for (const auto& [lambda, flag] : r.rows)
                rows.push_back({partition_to_string(lambda), flag ? "yes" : "no"});
            out += table_text(rows);
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace chowfactor
