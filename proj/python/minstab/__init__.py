"""Gamma-family interconnection networks: topology, routing, stable pairing."""

from ._core import (
    Matching,
    Network,
    Path,
    PreferenceList,
    PreferenceTable,
    build,
    comparison_csv,
    count_disjoint_paths,
    detect_ties,
    distance_tags,
    enumerate_paths,
    fixture,
    fixture_names,
    parse_network,
    parse_preferences,
    preference_fixture,
    preference_fixture_names,
    preference_lists,
    reroute_on_failure,
    resolve_ties,
    run_cli,
    select_stable_pairs,
    stability_report,
    verify_stability,
)

__all__ = [
    "Matching",
    "Network",
    "Path",
    "PreferenceList",
    "PreferenceTable",
    "build",
    "comparison_csv",
    "count_disjoint_paths",
    "detect_ties",
    "distance_tags",
    "enumerate_paths",
    "fixture",
    "fixture_names",
    "parse_network",
    "parse_preferences",
    "preference_fixture",
    "preference_fixture_names",
    "preference_lists",
    "reroute_on_failure",
    "resolve_ties",
    "run_cli",
    "select_stable_pairs",
    "stability_report",
    "verify_stability",
]
