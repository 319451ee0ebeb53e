import minstab


def test_build_and_enumerate():
    net = minstab.build("gmin", 3)
    assert net.terminals == 8
    assert net.switch_count == 32
    paths = minstab.enumerate_paths(net, 0, 0)
    assert all(p.hop_count == 3 for p in paths)
    assert minstab.count_disjoint_paths(net, 0, 0) == 1


def test_fixture_routes():
    net = minstab.fixture("3dcgmin_fig15")
    paths = minstab.enumerate_paths(net, 0, 0, use_alternate=True)
    assert [p.hops for p in paths] == [
        [1, 9, 17, 25],
        [1, 10, 18, 25],
        [1, 5, 12, 18, 25],
    ]
    assert str(paths[0]) == "SE 1 – SE 9 – SE 17 – SE 25"


def test_tags():
    tags = minstab.distance_tags(0, 0, 3)
    assert tags == [[0, 0, 0]]
    for tag in minstab.distance_tags(0, 5, 3):
        assert sum(d << k for k, d in enumerate(tag)) % 8 == 5


def test_match_pipeline():
    fx = minstab.preference_fixture("3dgmin_fig9")
    table = minstab.parse_preferences(fx["text"])
    assert len(minstab.detect_ties(table)) == 3
    minstab.resolve_ties(table)
    m = minstab.select_stable_pairs(table)
    assert m.pairs == fx["expected_pairs"]
    assert minstab.verify_stability(table, m) == []
    report = minstab.stability_report(
        minstab.fixture(fx["topology"]), minstab.parse_preferences(fx["text"])
    )
    assert report["ties"] == 3
    assert report["neglected"] == 2


def test_reroute():
    net = minstab.fixture("3dcgmin_fig12")
    fx = minstab.preference_fixture("3dcgmin_fig13")
    table = minstab.parse_preferences(fx["text"])
    minstab.resolve_ties(table)
    m = minstab.select_stable_pairs(table)
    result = minstab.reroute_on_failure(net, m, {9}, 0, 0)
    assert result["routed"]
    assert result["path"].hops == [1, 10, 18, 25]


def test_cli_passthrough():
    code, out, err = minstab.run_cli(["tags", "--n", "3", "--src", "0", "--dst", "0"])
    assert code == 0
    assert "(0, 0, 0)" in out
    assert err == ""


def test_comparison_csv():
    lines = minstab.comparison_csv().strip().splitlines()
    assert len(lines) == 9
    assert lines[0].startswith("name,")
    assert any(line.startswith("GMIN,0,20,28,3,0,") for line in lines)
