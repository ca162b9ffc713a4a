import json
import os

import metanil

TREFOIL = [[-1, 1], [0, -1]]
SEVEN4 = [[2, 1], [0, 2]]
NINE2 = [[4, 1], [0, 1]]


def test_dimensions():
    assert [metanil.hall_dimension(2, k) for k in (1, 2, 3)] == [2, 1, 2]
    assert metanil.hall_dimension(4, 2) == 6
    assert [metanil.dim_t(g) for g in (1, 2, 3)] == [2, 20, 70]


def test_alexander():
    assert metanil.alexander(TREFOIL) == ["1", "-1", "1"]
    assert metanil.alexander(SEVEN4) == ["4", "-7", "4"]


def test_monodromy_is_symplectic_with_matching_char_poly():
    tau = metanil.level1_monodromy(TREFOIL)
    assert metanil.char_poly(tau) == ["1", "-1", "1"]


def test_sgn_distinguishes_7_4_from_9_2():
    s74 = metanil.sgn(metanil.level1_monodromy(SEVEN4))
    s92 = metanil.sgn(metanil.level1_monodromy(NINE2))
    assert s74["kind"] == s92["kind"] == "class"
    assert s74["d"] == s92["d"] == "-15"
    assert not metanil.sgn_equal(s74, s92)
    paper74 = metanil.sgn([["1", "1/2"], ["-1/2", "3/4"]])
    assert metanil.sgn_equal(s74, paper74)


def test_hilbert_symbol():
    assert metanil.hilbert_symbol("-1", "-1", "0") == -1
    assert metanil.hilbert_symbol("-1", "-1", "2") == -1
    assert metanil.hilbert_symbol("2", "-15", "3") == -1
    assert metanil.hilbert_symbol("1", "7", "7") == 1


def test_smith_normal_form():
    assert metanil.smith_normal_form([[2, 0], [0, 3]]) == ["1", "6"]


def test_spectral_genericity():
    assert not metanil.spectral_genericity([["0", "-1"], ["1", "0"]])
    assert metanil.spectral_genericity([["2", "0"], ["0", "1/2"]])


def test_report_pipeline():
    data_dir = os.environ.get("METANIL_DATA")
    if data_dir:
        with open(os.path.join(data_dir, "knots.json")) as f:
            text = f.read()
    else:
        text = json.dumps(
            {"locality": 0, "knots": [{"name": "3_1", "seifert": TREFOIL}]}
        )
    reports = json.loads(metanil.report_json(text))
    assert reports
    by_name = {r["name"]: r for r in reports}
    for r in reports:
        assert r["schema_version"] == 1
        assert r["symmetric"]
    if "3_1" in by_name:
        assert by_name["3_1"]["h1_dims"] == [0, 1]
        assert by_name["3_1"]["alexander"] == ["1", "-1", "1"]
    if "3_1-fibered" in by_name:
        assert by_name["3_1-fibered"]["fixes_boundary"] is True
