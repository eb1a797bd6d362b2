#include "dglpp/emit.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dglpp {

EmitFormat parse_format(const std::string& text) {
    if (text == "json") return EmitFormat::Json;
    if (text == "csv") return EmitFormat::Csv;
    throw std::invalid_argument("format must be 'json' or 'csv'");
}

std::string render_distribution(const JointDistribution& dist, EmitFormat format) {
    if (format == EmitFormat::Json) {
        nlohmann::ordered_json out;
        out["m"] = dist.m;
        out["n"] = dist.n;
        auto qs = nlohmann::ordered_json::array();
        for (const Rational& qi : dist.q) qs.push_back(qi.str());
        out["q"] = qs;
        out["provenance"] = dist.provenance_str();
        out["tail_bound"] = dist.provenance == JointDistribution::Provenance::Oracle
                                ? dist.tail_bound.str()
                                : "0";
        auto entries = nlohmann::ordered_json::array();
        if (dist.exact()) {
            for (const auto& [lam, p] : dist.mass) {
                nlohmann::ordered_json e;
                e["lambda"] = lam.parts();
                e["p"] = p.str();
                entries.push_back(e);
            }
        } else {
            for (const auto& [lam, p] : dist.freq) {
                nlohmann::ordered_json e;
                e["lambda"] = lam.parts();
                e["p"] = p;
                entries.push_back(e);
            }
        }
        out["entries"] = entries;
        return out.dump();
    }
    std::ostringstream os;
    os << "lambda,p\n";
    os.precision(17);
    if (dist.exact()) {
        for (const auto& [lam, p] : dist.mass) os << '"' << lam.str() << "\"," << p.str() << '\n';
    } else {
        for (const auto& [lam, p] : dist.freq) os << '"' << lam.str() << "\"," << p << '\n';
    }
    return os.str();
}

std::string render_convergence(const ConvergenceTable& table, EmitFormat format) {
    if (format == EmitFormat::Csv) return table.csv();
    nlohmann::ordered_json out;
    out["m"] = table.m;
    out["shape"] = table.shape.parts();
    out["gamma"] = table.gamma.str();
    out["truncation"] = table.truncation;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["lhs"] = r.lhs;
        row["rhs"] = r.rhs;
        row["abs_diff"] = r.abs_diff;
        rows.push_back(row);
    }
    out["rows"] = rows;
    return out.dump();
}

void emit_output(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("emit: cannot open output file '" + path + "'");
    file << payload;
    if (payload.empty() || payload.back() != '\n') file << '\n';
}

}  // namespace dglpp
