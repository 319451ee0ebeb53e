#include "minstab/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "minstab/analysis.hpp"
#include "minstab/faultsim.hpp"
#include "minstab/fixtures.hpp"
#include "minstab/matching.hpp"
#include "minstab/preference.hpp"
#include "minstab/routing.hpp"
#include "minstab/serialize.hpp"
#include "minstab/topology.hpp"

namespace minstab {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NetSpec {
    std::string fixture;
    std::string family;
    int n = 3;
    int gamma = 0;
};

void add_net_options(CLI::App* cmd, NetSpec& spec) {
    cmd->add_option("--fixture", spec.fixture, "built-in fixture name");
    cmd->add_option("--network", spec.family,
                    "generated family: gmin, 3dgmin, 3dcgmin");
    cmd->add_option("--n", spec.n, "stage exponent (2^n terminals)");
    cmd->add_option("--gamma", spec.gamma, "cyclic start exponent (3dcgmin)");
}

struct Resolved {
    Network net;
    PreferenceTable prefs;  // unresolved ties
    std::string display_name;
    std::vector<Pairing> expected_pairs;  // catalogued pairs, when known
};

Network net_from_params(Family family, int n, int gamma) {
    NetworkParams params;
    params.family = family;
    params.n = n;
    params.gamma = gamma;
    return build_network(params);
}

Resolved resolve_spec(const NetSpec& spec, const PreferenceOptions& opts = {},
                      bool force_generated = false) {
    if (!spec.fixture.empty() && !spec.family.empty())
        throw UsageError("--fixture and --network are mutually exclusive");
    Resolved r;
    if (!spec.fixture.empty()) {
        if (auto pf = fixture_preferences(spec.fixture)) {
            r.net = *fixture_topology(pf->topology);
            if (force_generated) {
                r.prefs = build_preference_lists(r.net, opts);
            } else {
                r.prefs = parse_preferences(pf->text);
                r.prefs.network_name = pf->topology;
                r.prefs.total_ses = pf->total_ses;
            }
            r.display_name = pf->display_name;
            r.expected_pairs = pf->expected_pairs;
            return r;
        }
        if (auto topo = fixture_topology(spec.fixture)) {
            r.net = *topo;
            r.prefs = build_preference_lists(r.net, opts);
            r.display_name = r.net.name;
            return r;
        }
        throw std::domain_error("unknown fixture '" + spec.fixture + "'");
    }
    if (spec.family.empty())
        throw UsageError("one of --fixture or --network is required");
    auto fam = family_from_string(spec.family);
    if (!fam) throw std::domain_error("unknown network family '" + spec.family + "'");
    r.net = net_from_params(*fam, spec.n, spec.gamma);
    r.prefs = build_preference_lists(r.net, opts);
    r.display_name = r.net.name;
    return r;
}

void check_format(const std::string& format,
                  const std::vector<std::string>& allowed) {
    for (const auto& a : allowed)
        if (format == a) return;
    std::string msg = "--format " + format + " not supported here (use";
    for (const auto& a : allowed) msg += " " + a;
    throw UsageError(msg + ")");
}

void emit(const std::string& text, const std::string& out_path,
          std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::domain_error("cannot write '" + out_path + "'");
    f << text;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::domain_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

std::string path_line(const Path& p) {
    return to_string(p) + "  Path-length " + std::to_string(p.hop_count);
}

ordered_json path_json(const Path& p) {
    ordered_json j;
    j["hops"] = p.hops;
    j["path_length"] = p.hop_count;
    j["visits"] = p.visits;
    j["used_alternate"] = p.used_alternate;
    return j;
}

ordered_json network_json(const Network& net) {
    ordered_json j;
    j["name"] = net.name;
    j["family"] = to_string(net.params.family);
    j["n"] = net.params.n;
    j["gamma"] = net.params.gamma;
    j["generated"] = net.generated;
    j["terminals"] = net.terminal_count;
    ordered_json sw = ordered_json::array();
    for (const auto& se : net.switches) {
        ordered_json s;
        s["id"] = se.id;
        s["stage"] = se.stage;
        s["index"] = se.index;
        s["in_ports"] = se.in_ports;
        s["out_ports"] = se.out_ports;
        sw.push_back(s);
    }
    j["switches"] = sw;
    ordered_json links = ordered_json::array();
    for (const auto& l : net.links) {
        ordered_json e;
        e["from"] = l.from;
        e["to"] = l.to;
        e["kind"] = to_string(l.kind);
        links.push_back(e);
    }
    j["links"] = links;
    j["sources"] = net.source_switch;
    j["sinks"] = net.sink_switch;
    return j;
}

ordered_json report_json(const StabilityReport& rep) {
    ordered_json j;
    j["name"] = rep.name;
    j["ties"] = rep.ties;
    j["optimal_pairs"] = rep.optimal_pairs;
    j["total_ses"] = rep.total_ses;
    j["max_path_length"] = rep.max_path_length;
    j["neglected"] = rep.neglected;
    j["status"] = to_string(rep.status);
    j["proposers"] = rep.proposer_count;
    j["notes"] = rep.notes;
    return j;
}

std::string report_text(const StabilityReport& rep, int terminals) {
    std::ostringstream out;
    out << "Network: " << rep.name << " (" << terminals << " x " << terminals
        << ")\n";
    out << "Ties: " << rep.ties << "\n";
    out << "Optimal pairs: " << rep.optimal_pairs << "/" << rep.total_ses << "\n";
    out << "Maximum path length: " << rep.max_path_length << "\n";
    out << "Neglected: " << rep.neglected << "\n";
    out << "Status: " << to_string(rep.status) << "\n";
    out << "Proposers: " << rep.proposer_count << "\n";
    for (const auto& note : rep.notes) out << "Note: " << note << "\n";
    return out.str();
}

std::string report_csv(const StabilityReport& rep) {
    std::ostringstream out;
    out << "name,ties,optimal_pairs,total_ses,max_pl,neglected,status\n";
    out << rep.name << "," << rep.ties << "," << rep.optimal_pairs << ","
        << rep.total_ses << "," << rep.max_path_length << "," << rep.neglected
        << "," << to_string(rep.status) << "\n";
    return out.str();
}

StabilityReport fixture_report(const Resolved& r) {
    StabilityReport rep = stability_report(r.net, r.prefs, r.display_name);
    if (!r.expected_pairs.empty() &&
        static_cast<int>(r.expected_pairs.size()) != rep.optimal_pairs) {
        std::ostringstream note;
        note << "catalogued pair fixture lists " << r.expected_pairs.size()
             << " pairs; the computed stable matching has " << rep.optimal_pairs;
        rep.notes.push_back(note.str());
    }
    return rep;
}

Matching matched(const Resolved& r) {
    PreferenceTable resolved = r.prefs;
    resolve_ties(resolved);
    return select_stable_pairs(resolved);
}

std::vector<StabilityReport> computed_reports() {
    std::vector<StabilityReport> reports;
    for (const auto& name : fixture_preference_names()) {
        NetSpec spec;
        spec.fixture = name;
        reports.push_back(fixture_report(resolve_spec(spec)));
    }
    return reports;
}

std::string ratio_str(double r) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(4) << r;
    return out.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "Gamma-family interconnection networks: topology, routing, preference "
        "lists, stable pairing, stability reports, fault rerouting"};
    app.name("minstab");
    app.require_subcommand(1);

    int rc = 0;

    // build
    NetSpec build_spec;
    std::string build_format = "text", build_out;
    auto* cmd_build = app.add_subcommand("build", "construct a network");
    add_net_options(cmd_build, build_spec);
    cmd_build->add_option("--format", build_format)
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_build->add_option("--out", build_out, "write to file instead of stdout");
    cmd_build->callback([&] {
        check_format(build_format, {"text", "json"});
        Resolved r = resolve_spec(build_spec);
        if (build_format == "text")
            emit(serialize_network(r.net), build_out, out);
        else
            emit(network_json(r.net).dump(2) + "\n", build_out, out);
    });

    // paths
    NetSpec paths_spec;
    int paths_src = 0, paths_dst = 0;
    bool paths_no_alt = false;
    std::string paths_format = "text";
    auto* cmd_paths = app.add_subcommand("paths", "enumerate routes");
    add_net_options(cmd_paths, paths_spec);
    cmd_paths->add_option("--src", paths_src, "source terminal")->required();
    cmd_paths->add_option("--dst", paths_dst, "destination terminal")->required();
    cmd_paths->add_flag("--no-alternate", paths_no_alt,
                        "ignore alternate links");
    cmd_paths->add_option("--format", paths_format)
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_paths->callback([&] {
        Resolved r = resolve_spec(paths_spec);
        bool alt = !paths_no_alt && r.net.has_alternates();
        auto paths = enumerate_paths(r.net, paths_src, paths_dst, alt);
        if (paths_format == "text") {
            for (const auto& p : paths) out << path_line(p) << "\n";
        } else if (paths_format == "csv") {
            out << "route,path_length,visits,alternate\n";
            for (const auto& p : paths) {
                std::ostringstream ids;
                for (size_t i = 0; i < p.hops.size(); ++i)
                    ids << (i ? " " : "") << p.hops[i];
                out << ids.str() << "," << p.hop_count << "," << p.visits << ","
                    << (p.used_alternate ? 1 : 0) << "\n";
            }
        } else {
            ordered_json j = ordered_json::array();
            for (const auto& p : paths) j.push_back(path_json(p));
            out << j.dump(2) << "\n";
        }
    });

    // tags
    int tags_n = 3, tags_src = 0, tags_dst = 0;
    std::string tags_format = "text";
    auto* cmd_tags = app.add_subcommand("tags", "routing tags for a distance");
    cmd_tags->add_option("--n", tags_n, "stage exponent")->required();
    cmd_tags->add_option("--src", tags_src, "source terminal")->required();
    cmd_tags->add_option("--dst", tags_dst, "destination terminal")->required();
    cmd_tags->add_option("--format", tags_format)
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_tags->callback([&] {
        auto tags = distance_tags(tags_src, tags_dst, tags_n);
        if (tags_format == "text") {
            for (const auto& t : tags) out << to_string(t) << "\n";
        } else if (tags_format == "csv") {
            for (const auto& t : tags) {
                for (size_t i = 0; i < t.size(); ++i)
                    out << (i ? "," : "") << static_cast<int>(t[i]);
                out << "\n";
            }
        } else {
            ordered_json j = ordered_json::array();
            for (const auto& t : tags) {
                std::vector<int> digits(t.begin(), t.end());
                j.push_back(digits);
            }
            out << j.dump(2) << "\n";
        }
    });

    // prefs
    NetSpec prefs_spec;
    bool prefs_resolve = false, prefs_keep_dup = false, prefs_excl_min = false,
         prefs_generated = false;
    std::string prefs_format = "text";
    auto* cmd_prefs = app.add_subcommand("prefs", "preference lists");
    add_net_options(cmd_prefs, prefs_spec);
    cmd_prefs->add_flag("--resolve", prefs_resolve, "resolve head ties first");
    cmd_prefs->add_flag("--keep-duplicates", prefs_keep_dup,
                        "keep repeated partners in generated lists");
    cmd_prefs->add_flag("--exclude-min-stage", prefs_excl_min,
                        "drop proposers from the first stage");
    cmd_prefs->add_flag("--generated", prefs_generated,
                        "derive lists from the topology even for list fixtures");
    cmd_prefs->add_option("--format", prefs_format)
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_prefs->callback([&] {
        check_format(prefs_format, {"text", "json"});
        PreferenceOptions opts;
        opts.keep_duplicates = prefs_keep_dup;
        opts.exclude_min_stage = prefs_excl_min;
        bool force = prefs_generated || prefs_keep_dup || prefs_excl_min;
        Resolved r = resolve_spec(prefs_spec, opts, force);
        if (prefs_resolve) resolve_ties(r.prefs);
        if (prefs_format == "text") {
            out << serialize_preferences(r.prefs);
        } else {
            ordered_json j;
            j["network"] = r.prefs.network_name;
            ordered_json entries = ordered_json::array();
            for (const auto& e : r.prefs.entries) {
                ordered_json row;
                row["owner"] = e.owner;
                row["partners"] = std::vector<int>(e.partners.begin() + e.cursor,
                                                   e.partners.end());
                entries.push_back(row);
            }
            j["entries"] = entries;
            j["ties"] = detect_ties(r.prefs).size();
            out << j.dump(2) << "\n";
        }
    });

    // match
    NetSpec match_spec;
    bool match_strict = false;
    std::string match_format = "text";
    auto* cmd_match = app.add_subcommand("match", "stable pairing");
    add_net_options(cmd_match, match_spec);
    cmd_match->add_flag("--strict", match_strict,
                        "fail instead of resolving head ties");
    cmd_match->add_option("--format", match_format)
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_match->callback([&] {
        check_format(match_format, {"text", "json"});
        Resolved r = resolve_spec(match_spec);
        PreferenceTable table = r.prefs;
        if (match_strict) {
            if (!detect_ties(table).empty())
                throw std::domain_error(
                    "preference lists contain head ties (run without --strict "
                    "to resolve them)");
        } else {
            resolve_ties(table);
        }
        Matching m = select_stable_pairs(table);
        if (match_format == "text") {
            out << to_string(m) << "\n";
            if (!m.unmatched.empty()) {
                out << "unmatched:";
                for (int id : m.unmatched) out << " SE " << id;
                out << "\n";
            }
        } else {
            ordered_json j;
            ordered_json pairs = ordered_json::array();
            for (const auto& p : m.pairs)
                pairs.push_back(std::vector<int>{p.proposer, p.acceptor});
            j["pairs"] = pairs;
            j["unmatched"] = m.unmatched;
            j["proposals"] = m.proposal_count;
            out << j.dump(2) << "\n";
        }
    });

    // report
    NetSpec report_spec;
    std::string report_format = "text";
    auto* cmd_report = app.add_subcommand("report", "stability report");
    add_net_options(cmd_report, report_spec);
    cmd_report->add_option("--format", report_format)
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_report->callback([&] {
        Resolved r = resolve_spec(report_spec);
        StabilityReport rep = fixture_report(r);
        if (report_format == "text")
            out << report_text(rep, r.net.terminal_count);
        else if (report_format == "csv")
            out << report_csv(rep);
        else
            out << report_json(rep).dump(2) << "\n";
    });

    // compare
    std::string compare_external = "table4_external_rows";
    std::string compare_format = "text";
    auto* cmd_compare =
        app.add_subcommand("compare", "stability comparison table");
    cmd_compare->add_option(
        "--external", compare_external,
        "external rows: built-in name 'table4_external_rows' or a CSV file");
    cmd_compare->add_option("--format", compare_format)
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_compare->callback([&] {
        std::vector<ComparisonRow> external;
        if (compare_external == "table4_external_rows")
            external = external_comparison_rows();
        else
            external = comparison_from_csv(slurp(compare_external)).rows;
        ComparisonTable table = build_comparison(external, computed_reports());
        if (compare_format == "text") {
            out << comparison_to_text(table);
        } else if (compare_format == "csv") {
            out << comparison_to_csv(table);
        } else {
            ordered_json j;
            ordered_json rows = ordered_json::array();
            for (const auto& row : table.rows) {
                ordered_json r;
                r["name"] = row.name;
                r["ties"] = row.ties;
                r["optimal_pairs"] = row.optimal_pairs;
                r["total_ses"] = row.total_ses;
                r["max_path_length"] = row.max_path_length;
                r["neglected"] = row.neglected;
                r["status"] = to_string(row.status);
                r["regular"] = row.regular;
                rows.push_back(r);
            }
            j["rows"] = rows;
            j["summary"] = table.summary;
            out << j.dump(2) << "\n";
        }
    });

    // fault
    NetSpec fault_spec;
    std::string fault_scenario_path;
    std::vector<int> fault_failed;
    int fault_src = 0, fault_dst = 0, fault_sweep = -1;
    bool fault_no_alt = false;
    std::string fault_format = "text";
    auto* cmd_fault = app.add_subcommand("fault", "fault rerouting");
    add_net_options(cmd_fault, fault_spec);
    cmd_fault->add_option("--scenario", fault_scenario_path,
                          "scenario file (overrides inline flags)");
    cmd_fault->add_option("--failed", fault_failed, "failed switch ids");
    cmd_fault->add_option("--src", fault_src, "source terminal");
    cmd_fault->add_option("--dst", fault_dst, "destination terminal");
    cmd_fault->add_flag("--no-alternate", fault_no_alt,
                        "ignore alternate links");
    cmd_fault->add_option("--sweep", fault_sweep,
                          "exhaustive survivability sweep up to this many "
                          "simultaneous failures");
    cmd_fault->add_option("--format", fault_format)
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd_fault->callback([&] {
        check_format(fault_format, {"text", "json"});
        Resolved r;
        FaultScenario scenario;
        if (!fault_scenario_path.empty()) {
            if (!fault_spec.fixture.empty() || !fault_spec.family.empty())
                throw UsageError("--scenario excludes --fixture/--network");
            ScenarioDoc doc = parse_scenario(slurp(fault_scenario_path));
            NetSpec spec;
            if (!doc.fixture.empty())
                spec.fixture = doc.fixture;
            else {
                spec.family = to_string(doc.params.family);
                spec.n = doc.params.n;
                spec.gamma = doc.params.gamma;
            }
            r = resolve_spec(spec);
            scenario = doc.scenario;
        } else {
            r = resolve_spec(fault_spec);
            scenario.failed.insert(fault_failed.begin(), fault_failed.end());
            scenario.src = fault_src;
            scenario.dst = fault_dst;
            scenario.allow_alternate = !fault_no_alt;
        }
        Matching m = matched(r);
        if (fault_sweep >= 0) {
            SurvivabilityReport rep =
                survivability(r.net, m, fault_sweep, scenario.allow_alternate);
            if (fault_format == "text") {
                for (const auto& cell : rep.cells)
                    out << "failures " << cell.failures << ": " << cell.routed
                        << "/" << cell.scenarios << " routed (ratio "
                        << ratio_str(cell.ratio) << ")\n";
                out << "fully survivable: " << (rep.fully_survivable ? "yes" : "no")
                    << "\n";
            } else {
                ordered_json j;
                ordered_json cells = ordered_json::array();
                for (const auto& cell : rep.cells) {
                    ordered_json c;
                    c["failures"] = cell.failures;
                    c["scenarios"] = cell.scenarios;
                    c["routed"] = cell.routed;
                    c["ratio"] = ratio_str(cell.ratio);
                    cells.push_back(c);
                }
                j["cells"] = cells;
                j["fully_survivable"] = rep.fully_survivable;
                out << j.dump(2) << "\n";
            }
            if (!rep.fully_survivable) rc = 1;
            return;
        }
        RerouteResult result = reroute_on_failure(r.net, m, scenario);
        if (fault_format == "text") {
            if (result.routed) {
                out << "routed: " << path_line(result.path) << "\n";
                out << "alternatives: " << result.alternatives.size() << "\n";
                for (const auto& p : result.alternatives)
                    out << "  " << path_line(p) << "\n";
            } else {
                out << "unrouted: " << result.detail << "\n";
            }
        } else {
            ordered_json j;
            j["routed"] = result.routed;
            if (result.routed) j["path"] = path_json(result.path);
            ordered_json alts = ordered_json::array();
            for (const auto& p : result.alternatives) alts.push_back(path_json(p));
            j["alternatives"] = alts;
            j["detail"] = result.detail;
            out << j.dump(2) << "\n";
        }
        if (!result.routed) rc = 1;
    });

    // export-dot
    NetSpec dot_spec;
    std::string dot_out;
    auto* cmd_dot = app.add_subcommand("export-dot", "Graphviz DOT text");
    add_net_options(cmd_dot, dot_spec);
    cmd_dot->add_option("--out", dot_out, "write to file instead of stdout");
    cmd_dot->callback([&] {
        Resolved r = resolve_spec(dot_spec);
        emit(export_dot(r.net), dot_out, out);
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace minstab
