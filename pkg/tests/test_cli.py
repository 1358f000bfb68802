import io
import json
import logging

import numpy as np
import pytest

from permq import PatternSet, enumerate_partition
from permq.cache import cache_path, load_partition, save_partition
from permq.cli import main


def run(*argv, cache_dir=None):
    out = io.StringIO()
    args = list(argv)
    if cache_dir is not None:
        args += ["--cache", str(cache_dir)]
    code = main(args, out=out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def _no_env_cache(monkeypatch):
    monkeypatch.delenv("PERMQ_CACHE", raising=False)


class TestCache:
    def test_round_trip(self, tmp_path):
        pats = PatternSet.of("3412", "1234")
        part = enumerate_partition(6, pats)
        path = save_partition(tmp_path, part)
        assert path == cache_path(tmp_path, 6, PatternSet.of("1234", "3412"))
        again = load_partition(tmp_path, 6, PatternSet.of("1234", "3412"))
        assert np.array_equal(again.labels, part.labels)

    def test_missing_and_corrupt(self, tmp_path):
        pats = PatternSet.of("1234", "3412")
        assert load_partition(tmp_path, 5, pats) is None
        save_partition(tmp_path, enumerate_partition(5, pats))
        path = cache_path(tmp_path, 5, pats)
        path.write_bytes(path.read_bytes()[:-8])
        assert load_partition(tmp_path, 5, pats) is None
        path.write_bytes(b"garbage\n")
        assert load_partition(tmp_path, 5, pats) is None

    def test_no_temp_files_left(self, tmp_path):
        save_partition(tmp_path, enumerate_partition(5, PatternSet.of("1234", "3412")))
        assert [p.name for p in tmp_path.iterdir()] == ["partition-v1-n5-1234_3412.bin"]


class TestEnumerate:
    def test_records(self, tmp_path):
        code, out = run("enumerate", "--n", "4..6", cache_dir=tmp_path)
        assert code == 0
        recs = [json.loads(line) for line in out.splitlines()]
        assert [r["n"] for r in recs] == [4, 5, 6]
        assert recs[0]["nontrivial_classes"] == 1
        assert [r["nontrivial_classes"] for r in recs[1:]] == [9, 26]
        assert all(r["workers"] >= 1 for r in recs)
        assert set(recs[0]) >= {"n", "patterns", "total_classes", "nontrivial_classes",
                                "b_count", "size_histogram"}

    def test_n7(self, tmp_path):
        _, out = run("enumerate", "--n", "7", cache_dir=tmp_path)
        assert json.loads(out)["nontrivial_classes"] == 51

    def test_cache_round_trip_is_byte_identical(self, tmp_path, caplog):
        with caplog.at_level(logging.INFO, logger="permq"):
            first = run("enumerate", "--n", "5..8", "-v", cache_dir=tmp_path)
            caplog.clear()
            second = run("enumerate", "--n", "5..8", "-v", cache_dir=tmp_path)
        assert first == second
        assert sum("cache hit" in r.message for r in caplog.records) == 4
        assert not any("cache miss" in r.message for r in caplog.records)

    def test_pattern_order_shares_cache(self, tmp_path):
        run("enumerate", "--n", "6", "--patterns", "3412,1234", cache_dir=tmp_path)
        assert cache_path(tmp_path, 6, PatternSet.of("1234", "3412")).exists()

    def test_env_overrides_flag(self, tmp_path, monkeypatch):
        env_dir = tmp_path / "env"
        monkeypatch.setenv("PERMQ_CACHE", str(env_dir))
        run("enumerate", "--n", "5", cache_dir=tmp_path / "flag")
        assert (env_dir / "partition-v1-n5-1234_3412.bin").exists()
        assert not (tmp_path / "flag").exists()

    @pytest.mark.parametrize("fmt", ["csv", "plain"])
    def test_formats(self, tmp_path, fmt):
        code, out = run("enumerate", "--n", "4..5", "--format", fmt, cache_dir=tmp_path)
        assert code == 0 and "1234,3412" in out

    def test_exit_codes(self, tmp_path):
        assert run("enumerate", "--n", "13", cache_dir=tmp_path)[0] == 2
        assert run("enumerate", "--n", "1", cache_dir=tmp_path)[0] == 2
        assert run("enumerate", "--n", "x..y", cache_dir=tmp_path)[0] == 2
        assert run("enumerate", "--n", "5", "--patterns", "12a", cache_dir=tmp_path)[0] == 2
        assert run("enumerate", "--n", "5", "--patterns", "123,1234", cache_dir=tmp_path)[0] == 2
        assert run("enumerate", "--n", "12", cache_dir=tmp_path)[0] == 3
        assert run("frobnicate")[0] == 2


class TestSequence:
    def test_bfile(self, tmp_path):
        assert run("sequence", "--n", "7..9", cache_dir=tmp_path) == (0, "7 51\n8 85\n9 129\n")
        assert run("sequence", "--n", "4", cache_dir=tmp_path) == (0, "4 1\n")
        assert run("sequence", "--n", "9..7", cache_dir=tmp_path) == (0, "")


class TestClass:
    def test_small(self):
        code, out = run("class", "--perm", "1234", "--no-cache")
        rec = json.loads(out)
        assert code == 0 and rec["size"] == 2 and rec["parity"] == "even"

    def test_paper_example(self):
        _, out = run("class", "--perm", "7162435", "--no-cache")
        rec = json.loads(out)
        assert "7,3,6,5,4,1,2" in rec["members"]
        assert rec["tags"] == ["LIFTED_FRONT"]

    def test_singleton(self):
        _, out = run("class", "--perm", "2143", "--no-cache")
        rec = json.loads(out)
        assert rec["size"] == 1 and rec["tags"] == ["SINGLETON"]

    def test_errors(self):
        assert run("class", "--perm", "1134", "--no-cache")[0] == 2
        assert run("class", "--perm", "1234567", "--max-class-size", "50", "--no-cache")[0] == 3

    def test_plain(self):
        code, out = run("class", "--perm", "1765432", "--format", "plain", "--no-cache")
        assert code == 0 and out.startswith("class of 1,7,6,5,4,3,2: size=1")


class TestVerify:
    def test_closed_form(self, tmp_path):
        code, out = run("verify", "--n", "7", "--checks", "closed-form", cache_dir=tmp_path)
        assert code == 0
        (rec,) = [json.loads(line) for line in out.splitlines()]
        assert rec["check"] == "closed-form" and rec["passed"]

    def test_guards(self, tmp_path):
        assert run("verify", "--n", "5", "--checks", "closed-form", cache_dir=tmp_path)[0] == 2
        assert run("verify", "--n", "7", "--checks", "nope", cache_dir=tmp_path)[0] == 2
        assert run("verify", "--n", "7", "--checks", "leader-classes",
                   "--patterns", "1234,4321", cache_dir=tmp_path)[0] == 2

    def test_all(self, tmp_path):
        code, out = run("verify", "--n", "7..9", "--checks", "all", "--samples", "20000",
                        cache_dir=tmp_path)
        recs = [json.loads(line) for line in out.splitlines()]
        failing = {(r["check"], r["n_range"][0]) for r in recs if not r["passed"]}
        # only the literal second-letter removal claim has counterexamples
        assert failing == {("creating-primary", 7), ("creating-primary", 8), ("creating-primary", 9)}
        assert code == 1
        assert len(recs) == 3 * 10

    def test_nonstandard_patterns_run_generic_checks(self, tmp_path):
        code, out = run("verify", "--n", "6", "--patterns", "1234,4321", "--samples", "2000",
                        cache_dir=tmp_path)
        assert code == 0
        assert {json.loads(line)["check"] for line in out.splitlines()} == {"parity", "parity-moves"}
