#include "qlt/report_io.hpp"

#include <sstream>

#include <json.hpp>

namespace qlt {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const VerificationReport& r) {
    ordered_json j;
    j["params"] = {{"q", r.q},         {"a", r.a},     {"b", r.b},      {"c", r.c},
                   {"d", r.d},         {"field", r.field}, {"basis", r.basis}};
    j["checks"] = ordered_json::array();
    for (const CheckOutcome& c : r.checks) {
        j["checks"].push_back({{"id", c.id},
                               {"paper_ref", c.paper_ref},
                               {"status", to_string(c.status)},
                               {"detail", c.detail}});
    }
    j["summary"] = {{"pass", r.pass}, {"fail", r.fail}, {"skipped", r.skipped}};
    return j;
}

VerificationReport from_json(const ordered_json& j) {
    VerificationReport r;
    const auto& p = j.at("params");
    r.q = p.at("q").get<std::string>();
    r.a = p.at("a").get<std::string>();
    r.b = p.at("b").get<std::string>();
    r.c = p.at("c").get<std::string>();
    r.d = p.at("d").get<int>();
    r.field = p.at("field").get<std::string>();
    r.basis = p.at("basis").get<std::string>();
    for (const auto& jc : j.at("checks")) {
        CheckOutcome c;
        c.id = jc.at("id").get<std::string>();
        c.paper_ref = jc.at("paper_ref").get<std::string>();
        c.status = check_status_from_string(jc.at("status").get<std::string>());
        c.detail = jc.at("detail").get<std::string>();
        r.checks.push_back(std::move(c));
    }
    const auto& s = j.at("summary");
    r.pass = s.at("pass").get<int>();
    r.fail = s.at("fail").get<int>();
    r.skipped = s.at("skipped").get<int>();
    if (r.pass + r.fail + r.skipped != static_cast<int>(r.checks.size()))
        throw error("report summary counts do not match the check list");
    return r;
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "field: " << r.field << "   basis: " << r.basis << "   d: " << r.d << '\n';
    out << "q = " << r.q << "   a = " << r.a << "   b = " << r.b << "   c = " << r.c << '\n';
    const int id_width = 18;
    out << std::string(72, '-') << '\n';
    for (const CheckOutcome& c : r.checks) {
        out << c.id << std::string(c.id.size() < id_width ? id_width - c.id.size() : 1, ' ');
        out << to_string(c.status);
        if (!c.detail.empty()) {
            for (std::size_t pad = std::string(to_string(c.status)).size(); pad < 8; ++pad) out << ' ';
            out << c.detail;
        }
        out << '\n';
    }
    out << std::string(72, '-') << '\n';
    out << "summary: pass=" << r.pass << " fail=" << r.fail << " skipped=" << r.skipped << '\n';
    return out.str();
}

} // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
    if (format == ReportFormat::text) return to_text(report);
    return to_json(report).dump(2) + "\n";
}

std::string emit_reports(const std::vector<VerificationReport>& reports, ReportFormat format) {
    if (format == ReportFormat::text) {
        std::string out;
        for (const auto& r : reports) {
            if (!out.empty()) out += "\n";
            out += to_text(r);
        }
        return out;
    }
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

VerificationReport parse_report(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("malformed report: ") + e.what());
    }
    try {
        return from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw error(std::string("malformed report: ") + e.what());
    }
}

} // namespace qlt
