#include "minstab/analysis.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>

#include "minstab/routing.hpp"

namespace minstab {

std::string to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::HighlyStable: return "Highly Stable";
        case StabilityClass::IntermediateStable: return "Intermediate Stable";
        case StabilityClass::LowStable: return "Low Stable";
    }
    return "Highly Stable";
}

StabilityClass classify(int neglected) {
    if (neglected <= 0) return StabilityClass::HighlyStable;
    if (neglected <= 2) return StabilityClass::IntermediateStable;
    return StabilityClass::LowStable;
}

namespace {

StabilityClass class_from_string(const std::string& s) {
    if (s == "Highly Stable") return StabilityClass::HighlyStable;
    if (s == "Intermediate Stable") return StabilityClass::IntermediateStable;
    if (s == "Low Stable") return StabilityClass::LowStable;
    throw std::domain_error("unknown stability class: " + s);
}

int longest_route(const Network& net) {
    int best = 0;
    bool alt = net.has_alternates();
    for (int s = 0; s < net.terminal_count; ++s)
        for (int d = 0; d < net.terminal_count; ++d)
            for (const auto& p : enumerate_paths(net, s, d, alt))
                best = std::max(best, p.hop_count);
    return best;
}

}  // namespace

StabilityReport stability_report(const Network& net, const PreferenceTable& table,
                                 const std::string& name) {
    StabilityReport report;
    report.name = name;
    report.total_ses = static_cast<int>(net.switches.size());
    report.proposer_count = static_cast<int>(table.entries.size());
    report.ties = static_cast<int>(detect_ties(table).size());

    PreferenceTable resolved = table;
    resolve_ties(resolved);
    Matching matching = select_stable_pairs(resolved);
    report.optimal_pairs = static_cast<int>(matching.pairs.size());

    auto any_role = neglected_pairs(resolved, matching, NeglectPolicy::AnyRole);
    auto reported = neglected_pairs(resolved, matching, NeglectPolicy::Reported);
    report.neglected = static_cast<int>(reported.size());
    report.status = classify(report.neglected);
    report.max_path_length = longest_route(net);

    if (report.ties > 0) {
        std::ostringstream note;
        note << "ambiguous first choices: " << report.ties
             << " tie(s) resolved before pairing";
        report.notes.push_back(note.str());
    }
    std::set<int> any_set(any_role.begin(), any_role.end());
    std::vector<int> extra;
    for (int id : reported)
        if (!any_set.count(id)) extra.push_back(id);
    if (!extra.empty()) {
        std::ostringstream note;
        note << "counted as neglected despite holding a pair:";
        for (int id : extra) note << " SE " << id;
        report.notes.push_back(note.str());
    }
    if (!matching.unmatched.empty()) {
        std::ostringstream note;
        note << "unmatched proposers:";
        for (int id : matching.unmatched) note << " SE " << id;
        report.notes.push_back(note.str());
    }
    return report;
}

ComparisonTable build_comparison(const std::vector<ComparisonRow>& external,
                                 const std::vector<StabilityReport>& computed) {
    ComparisonTable table;
    std::set<std::string> names;
    auto add = [&](ComparisonRow row) {
        if (!names.insert(row.name).second)
            throw std::domain_error("duplicate comparison row: " + row.name);
        row.status = classify(row.neglected);
        table.rows.push_back(row);
    };
    for (const auto& r : external) add(r);
    for (const auto& r : computed) {
        ComparisonRow row;
        row.name = r.name;
        row.ties = r.ties;
        row.optimal_pairs = r.optimal_pairs;
        row.total_ses = r.total_ses;
        row.max_path_length = r.max_path_length;
        row.neglected = r.neglected;
        row.regular = true;
        add(row);
    }

    int reg_total = 0, reg_high = 0, irr_total = 0, irr_high = 0;
    for (const auto& row : table.rows) {
        bool high = row.status == StabilityClass::HighlyStable;
        if (row.regular) {
            ++reg_total;
            if (high) ++reg_high;
        } else {
            ++irr_total;
            if (high) ++irr_high;
        }
    }
    std::ostringstream summary;
    summary << "regular: " << reg_high << "/" << reg_total
            << " highly stable; irregular: " << irr_high << "/" << irr_total
            << " highly stable";
    table.summary = summary.str();
    return table;
}

std::string comparison_to_csv(const ComparisonTable& table) {
    std::ostringstream out;
    out << "name,ties,optimal_pairs,total_ses,max_pl,neglected,status\n";
    for (const auto& row : table.rows) {
        out << row.name << "," << row.ties << "," << row.optimal_pairs << ","
            << row.total_ses << "," << row.max_path_length << "," << row.neglected
            << "," << to_string(row.status) << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

int to_int(const std::string& s, int line_no) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected integer, got '" + s + "'", line_no, 1);
    }
}

}  // namespace

ComparisonTable comparison_from_csv(const std::string& csv) {
    // Regularity is not part of the row schema; known irregular designs
    // are recognised by name.
    static const std::set<std::string> kIrregular = {"HZTN", "QTN"};

    std::istringstream in(csv);
    std::string line;
    int line_no = 0;
    std::vector<ComparisonRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (line_no == 1 && !fields.empty() && fields[0] == "name") continue;
        if (fields.size() != 7)
            throw ParseError("expected 7 fields", line_no, 1);
        ComparisonRow row;
        row.name = fields[0];
        row.ties = to_int(fields[1], line_no);
        row.optimal_pairs = to_int(fields[2], line_no);
        row.total_ses = to_int(fields[3], line_no);
        row.max_path_length = to_int(fields[4], line_no);
        row.neglected = to_int(fields[5], line_no);
        row.status = class_from_string(fields[6]);
        row.regular = !kIrregular.count(row.name);
        rows.push_back(row);
    }
    return build_comparison(rows, {});
}

std::string comparison_to_text(const ComparisonTable& table) {
    std::ostringstream out;
    out << std::left << std::setw(10) << "Name" << std::right << std::setw(6)
        << "Ties" << std::setw(14) << "Pairs" << std::setw(8) << "MaxPL"
        << std::setw(11) << "Neglected" << "  " << std::left << "Status" << "\n";
    for (const auto& row : table.rows) {
        std::ostringstream pairs;
        pairs << row.optimal_pairs << "/" << row.total_ses;
        out << std::left << std::setw(10) << row.name << std::right
            << std::setw(6) << row.ties << std::setw(14) << pairs.str()
            << std::setw(8) << row.max_path_length << std::setw(11)
            << row.neglected << "  " << std::left << to_string(row.status)
            << "\n";
    }
    out << table.summary << "\n";
    return out.str();
}

}  // namespace minstab
