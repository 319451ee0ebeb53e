#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "minstab/analysis.hpp"
#include "minstab/cli.hpp"
#include "minstab/faultsim.hpp"
#include "minstab/fixtures.hpp"
#include "minstab/matching.hpp"
#include "minstab/preference.hpp"
#include "minstab/routing.hpp"
#include "minstab/serialize.hpp"
#include "minstab/topology.hpp"

namespace py = pybind11;
using namespace minstab;

namespace {

Network build_from_strings(const std::string& family, int n, int gamma) {
    auto fam = family_from_string(family);
    if (!fam) throw py::value_error("unknown network family '" + family + "'");
    NetworkParams params;
    params.family = *fam;
    params.n = n;
    params.gamma = gamma;
    return build_network(params);
}

py::dict report_dict(const StabilityReport& rep) {
    py::dict d;
    d["name"] = rep.name;
    d["ties"] = rep.ties;
    d["optimal_pairs"] = rep.optimal_pairs;
    d["total_ses"] = rep.total_ses;
    d["max_path_length"] = rep.max_path_length;
    d["neglected"] = rep.neglected;
    d["status"] = to_string(rep.status);
    d["proposers"] = rep.proposer_count;
    d["notes"] = rep.notes;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Gamma-family interconnection networks: topology, routing, "
              "preference lists, stable pairing, stability analysis";

    py::class_<Network>(m, "Network")
        .def_property_readonly("name", [](const Network& n) { return n.name; })
        .def_property_readonly(
            "family", [](const Network& n) { return to_string(n.params.family); })
        .def_property_readonly("n", [](const Network& n) { return n.params.n; })
        .def_property_readonly("gamma",
                               [](const Network& n) { return n.params.gamma; })
        .def_property_readonly("generated",
                               [](const Network& n) { return n.generated; })
        .def_property_readonly("terminals",
                               [](const Network& n) { return n.terminal_count; })
        .def_property_readonly(
            "switch_count",
            [](const Network& n) { return static_cast<int>(n.switches.size()); })
        .def_property_readonly("stages",
                               [](const Network& n) { return n.stage_count(); })
        .def_property_readonly(
            "has_alternates", [](const Network& n) { return n.has_alternates(); })
        .def("serialize", [](const Network& n) { return serialize_network(n); })
        .def("dot", [](const Network& n) { return export_dot(n); })
        .def("__repr__", [](const Network& n) {
            return "<Network " + n.name + " (" +
                   std::to_string(n.terminal_count) + " x " +
                   std::to_string(n.terminal_count) + ")>";
        });

    py::class_<Path>(m, "Path")
        .def_readonly("hops", &Path::hops)
        .def_readonly("hop_count", &Path::hop_count)
        .def_readonly("visits", &Path::visits)
        .def_readonly("used_alternate", &Path::used_alternate)
        .def("__str__", [](const Path& p) { return to_string(p); })
        .def("__repr__",
             [](const Path& p) { return "<Path " + to_string(p) + ">"; });

    py::class_<PreferenceList>(m, "PreferenceList")
        .def_readonly("owner", &PreferenceList::owner)
        .def_readonly("partners", &PreferenceList::partners)
        .def_readonly("cursor", &PreferenceList::cursor);

    py::class_<PreferenceTable>(m, "PreferenceTable")
        .def_readonly("entries", &PreferenceTable::entries)
        .def_readonly("network_name", &PreferenceTable::network_name)
        .def_readonly("total_ses", &PreferenceTable::total_ses)
        .def_readonly("disconnected", &PreferenceTable::disconnected)
        .def_readonly("excluded_proposers", &PreferenceTable::excluded_proposers)
        .def_readonly("comparison_count", &PreferenceTable::comparison_count)
        .def_readonly("tie_groups", &PreferenceTable::tie_groups)
        .def_readonly("resolution_steps", &PreferenceTable::resolution_steps)
        .def("serialize",
             [](const PreferenceTable& t) { return serialize_preferences(t); });

    py::class_<Matching>(m, "Matching")
        .def_property_readonly("pairs",
                               [](const Matching& m_) {
                                   std::vector<std::pair<int, int>> out;
                                   for (const auto& p : m_.pairs)
                                       out.emplace_back(p.proposer, p.acceptor);
                                   return out;
                               })
        .def_readonly("unmatched", &Matching::unmatched)
        .def_readonly("proposal_count", &Matching::proposal_count)
        .def("__str__", [](const Matching& m_) { return to_string(m_); });

    m.def("build", &build_from_strings, py::arg("family"), py::arg("n"),
          py::arg("gamma") = 0, "Construct a generated network");
    m.def(
        "fixture",
        [](const std::string& name) {
            auto t = fixture_topology(name);
            if (!t) throw py::value_error("unknown fixture '" + name + "'");
            return *t;
        },
        py::arg("name"), "Built-in fixture topology");
    m.def("fixture_names", &fixture_topology_names);
    m.def("preference_fixture_names", &fixture_preference_names);
    m.def(
        "preference_fixture",
        [](const std::string& name) {
            auto f = fixture_preferences(name);
            if (!f) throw py::value_error("unknown fixture '" + name + "'");
            py::dict d;
            d["name"] = f->name;
            d["display_name"] = f->display_name;
            d["topology"] = f->topology;
            d["text"] = f->text;
            d["total_ses"] = f->total_ses;
            std::vector<std::pair<int, int>> pairs;
            for (const auto& p : f->expected_pairs)
                pairs.emplace_back(p.proposer, p.acceptor);
            d["expected_pairs"] = pairs;
            return d;
        },
        py::arg("name"), "Built-in catalogued preference lists");
    m.def("parse_network", &parse_network, py::arg("text"));

    m.def("enumerate_paths", &enumerate_paths, py::arg("net"), py::arg("src"),
          py::arg("dst"), py::arg("use_alternate") = false);
    m.def(
        "distance_tags",
        [](int src, int dst, int n) {
            std::vector<std::vector<int>> out;
            for (const auto& t : distance_tags(src, dst, n))
                out.emplace_back(t.begin(), t.end());
            return out;
        },
        py::arg("src"), py::arg("dst"), py::arg("n"));
    m.def("count_disjoint_paths", &count_disjoint_paths, py::arg("net"),
          py::arg("src"), py::arg("dst"));

    m.def(
        "preference_lists",
        [](const Network& net, bool keep_duplicates, bool exclude_min_stage) {
            PreferenceOptions opts;
            opts.keep_duplicates = keep_duplicates;
            opts.exclude_min_stage = exclude_min_stage;
            return build_preference_lists(net, opts);
        },
        py::arg("net"), py::arg("keep_duplicates") = false,
        py::arg("exclude_min_stage") = false);
    m.def("parse_preferences", &parse_preferences, py::arg("text"));
    m.def(
        "detect_ties",
        [](const PreferenceTable& table) {
            std::vector<std::tuple<int, int, int>> out;
            for (const auto& t : detect_ties(table))
                out.emplace_back(t.keeper, t.loser, t.contested);
            return out;
        },
        py::arg("table"), "Head ties as (keeper, loser, contested) triples");
    m.def("resolve_ties", &resolve_ties, py::arg("table"));

    m.def("select_stable_pairs", &select_stable_pairs, py::arg("table"));
    m.def(
        "verify_stability",
        [](const PreferenceTable& table, const Matching& matching) {
            std::vector<std::pair<int, int>> out;
            for (const auto& b : verify_stability(table, matching))
                out.emplace_back(b.proposer, b.acceptor);
            return out;
        },
        py::arg("table"), py::arg("matching"));

    m.def(
        "stability_report",
        [](const Network& net, const PreferenceTable& table,
           const std::string& name) {
            return report_dict(
                stability_report(net, table, name.empty() ? net.name : name));
        },
        py::arg("net"), py::arg("table"), py::arg("name") = "");
    m.def("comparison_csv", [] {
        std::vector<StabilityReport> computed;
        for (const auto& name : fixture_preference_names()) {
            auto f = fixture_preferences(name);
            auto net = fixture_topology(f->topology);
            auto table = parse_preferences(f->text);
            table.network_name = f->topology;
            table.total_ses = f->total_ses;
            computed.push_back(stability_report(*net, table, f->display_name));
        }
        return comparison_to_csv(
            build_comparison(external_comparison_rows(), computed));
    });

    m.def(
        "reroute_on_failure",
        [](const Network& net, const Matching& matching,
           const std::set<int>& failed, int src, int dst, bool allow_alternate) {
            FaultScenario scenario;
            scenario.failed = failed;
            scenario.src = src;
            scenario.dst = dst;
            scenario.allow_alternate = allow_alternate;
            RerouteResult r = reroute_on_failure(net, matching, scenario);
            py::dict d;
            d["routed"] = r.routed;
            d["path"] = r.routed ? py::cast(r.path) : py::none();
            d["alternatives"] = r.alternatives;
            d["detail"] = r.detail;
            return d;
        },
        py::arg("net"), py::arg("matching"), py::arg("failed"), py::arg("src"),
        py::arg("dst"), py::arg("allow_alternate") = true);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "In-process CLI: returns (exit_code, stdout, stderr)");
}
