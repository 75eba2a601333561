"""
公共模块测试：colex 排名、随机流、响应序列化、运行清单、配置与异常映射
"""
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from ramsey3.common.combinatorics import (
    colex_triples,
    comb2,
    comb3,
    iter_triple_blocks,
    pair_arrays,
    pair_rank,
    triple_rank,
    unrank_pairs,
    unrank_triples,
)
from ramsey3.common.config import Settings
from ramsey3.common.exception_handlers import handle_exception
from ramsey3.common.exceptions import (
    FormatParseError,
    InvalidParameterError,
    PreconditionViolatedError,
    ResourceGuardError,
)
from ramsey3.common.manifest import RunManifest, content_digest, manifest_path_for
from ramsey3.common.random_streams import STREAM_FAMILY, make_generator, substream_seed
from ramsey3.common.response import ResponseCode, SuccessResponse, dump_csv, dump_json
from ramsey3.common.router import CommandOutcome, CommandRouter, arg, build_parser


class TestColexRanking:

    def test_small_values(self):
        assert comb2(0) == comb2(1) == 0
        assert comb3(2) == 0
        assert comb3(5) == 10
        assert [pair_rank(0, 1), pair_rank(0, 2), pair_rank(1, 2), pair_rank(0, 3)] == [0, 1, 2, 3]
        assert pair_rank(3, 0) == pair_rank(0, 3)
        assert [triple_rank(0, 1, 2), triple_rank(0, 1, 3), triple_rank(0, 2, 3), triple_rank(1, 2, 3)] == [0, 1, 2, 3]
        assert triple_rank(4, 0, 1) == 4

    def test_pair_arrays_follow_rank_order(self):
        a, b = pair_arrays(7)
        assert len(a) == comb2(7)
        for rank, (x, y) in enumerate(zip(a.tolist(), b.tolist())):
            assert x < y
            assert pair_rank(x, y) == rank

    def test_unrank_inverts_rank(self):
        n = 12
        a, b = unrank_pairs(np.arange(comb2(n)))
        assert [pair_rank(x, y) for x, y in zip(a.tolist(), b.tolist())] == list(range(comb2(n)))

        rows = unrank_triples(np.arange(comb3(n)), n).tolist()
        assert [triple_rank(*row) for row in rows] == list(range(comb3(n)))
        assert unrank_triples(np.array([], dtype=np.int64), n).shape == (0, 3)

    def test_colex_triples_matches_rank(self):
        triples = list(colex_triples(range(6)))
        assert [triple_rank(*t) for t in triples] == list(range(comb3(6)))
        assert sorted(triples) == list(combinations(range(6), 3))

    def test_colex_triples_on_subset(self):
        triples = list(colex_triples([9, 2, 5, 7]))
        assert triples == [(2, 5, 7), (2, 5, 9), (2, 7, 9), (5, 7, 9)]

    def test_triple_blocks_cover_every_triple_once(self):
        n = 8
        seen = []
        for block in iter_triple_blocks(n):
            for a, b, ab, ac, bc in zip(block.a, block.b, block.ab, block.ac, block.bc):
                assert ab == pair_rank(a, b)
                assert ac == pair_rank(a, block.c)
                assert bc == pair_rank(b, block.c)
                seen.append(triple_rank(int(a), int(b), block.c))
            assert block.start == comb3(block.c)
        assert seen == list(range(comb3(n)))


class TestRandomStreams:

    def test_same_seed_and_label_reproduce(self):
        first = make_generator(7, "colorings.tight").integers(0, 1000, size=20)
        second = make_generator(7, "colorings.tight").integers(0, 1000, size=20)
        assert first.tolist() == second.tolist()

    def test_labels_are_independent(self):
        first = make_generator(7, "colorings.tight").integers(0, 2**32, size=8)
        second = make_generator(7, "colorings.rainbow").integers(0, 2**32, size=8)
        assert first.tolist() != second.tolist()

    def test_negative_seed_rejected(self):
        with pytest.raises(InvalidParameterError):
            make_generator(-1, "tree.random")

    def test_substream_seed_is_stable(self):
        assert substream_seed(3, "verification.rainbow-sample", 0) == substream_seed(3, "verification.rainbow-sample", 0)
        assert substream_seed(3, "verification.rainbow-sample", 0) != substream_seed(3, "verification.rainbow-sample", 1)
        assert STREAM_FAMILY == "pcg64-v1"


class TestSerialization:

    def test_dump_json_sorts_keys(self):
        assert dump_json({"b": 1, "a": 2}) == b'{\n  "a": 2,\n  "b": 1\n}\n'

    def test_dump_json_normalizes_values(self):
        payload = dump_json({"f": Fraction(1, 3), "x": 0.1 + 0.2, "s": {3, 1}, "arr": np.arange(3)})
        assert b'"f": "1/3"' in payload
        assert b'"x": 0.3' in payload
        assert b'"s": [\n    1,\n    3\n  ]' in payload
        assert payload.endswith(b"\n")

    def test_dump_json_of_response(self):
        payload = dump_json(SuccessResponse.create(data={"k": 1}))
        assert b'"code": 0' in payload
        assert b'"success": true' in payload

    def test_dump_csv(self):
        assert dump_csv(["a", "b"], [[1, Fraction(1, 2)], [2, 0.25]]) == b"a,b\n1,1/2\n2,0.25\n"


class TestManifest:

    def test_content_digest_ignores_timings(self):
        assert content_digest(b'{"x": 1, "timings": {"total": 0.5}}') == content_digest(b'{"x":1}')
        assert content_digest(b'{"x": 1}') != content_digest(b'{"x": 2}')
        assert content_digest(b"a,b\n") != content_digest(b"a,b\n\n")

    def test_content_hash_ignores_timings(self):
        first = RunManifest(command="gen tight", argv=["gen", "tight"], seed=1, timings={"total": 1.0})
        second = RunManifest(command="gen tight", argv=["gen", "tight"], seed=1, timings={"total": 9.0})
        assert first.content_hash() == second.content_hash()
        assert first.stream_family == STREAM_FAMILY

    def test_round_trip_through_file(self, tmp_path):
        manifest = RunManifest(command="t-table", argv=["t-table"], outputs={"<stdout>": "ab"}, exit_code=0)
        path = tmp_path / "run.manifest.json"
        path.write_bytes(manifest.to_bytes())
        loaded = RunManifest.load(str(path))
        assert loaded.content_hash() == manifest.content_hash()

    def test_manifest_path_for(self):
        assert manifest_path_for("out/chi.tripcol", ".manifest.json") == "out/chi.manifest.json"


class TestSettings:

    def test_defaults(self):
        config = Settings(_env_file=None)
        assert config.code_ell == 120
        assert config.code_r == 5
        assert config.recognition_vertex_limit == 15
        assert config.exact_clique_vertex_limit == 64

    def test_environment_override(self, monkeypatch):
        monkeypatch.setenv("RAMSEY3_THREADS", "4")
        monkeypatch.setenv("RAMSEY3_LOG_LEVEL", "DEBUG")
        config = Settings(_env_file=None)
        assert config.threads == 4
        assert config.log_level == "DEBUG"


class TestExceptionMapping:

    @pytest.mark.parametrize(
        "exc, code",
        [
            (ResourceGuardError(size=20, limit=15), ResponseCode.RESOURCE_GUARD),
            (FormatParseError("坏行", line=3), ResponseCode.USAGE_ERROR),
            (PreconditionViolatedError(witness=[0, 1, 2]), ResponseCode.VIOLATION),
            (ValueError("bad"), ResponseCode.USAGE_ERROR),
            (FileNotFoundError("missing"), ResponseCode.USAGE_ERROR),
            (RuntimeError("boom"), ResponseCode.VIOLATION),
        ],
    )
    def test_exit_codes(self, exc, code):
        response, exit_code = handle_exception(exc)
        assert exit_code == code
        assert response.code == code
        assert response.success is False

    def test_business_error_keeps_data(self):
        response, _ = handle_exception(PreconditionViolatedError(witness=[0, 1, 2]))
        assert response.data == {"witness": [0, 1, 2]}
        response, _ = handle_exception(ResourceGuardError(size=20, limit=15, details={"undecided": [[0, 1]]}))
        assert response.data == {"size": 20, "limit": 15, "undecided": [[0, 1]]}
        response, _ = handle_exception(ValueError("bad"))
        assert response.data is None

    def test_format_error_mentions_line(self):
        assert "第 3 行" in FormatParseError("坏行", line=3).message


class TestCommandRouter:

    def test_build_parser_registers_groups_and_top_level(self):
        router = CommandRouter(prefix="gen", tags=["构造"])
        top = CommandRouter()

        @router.command("demo", arguments=[arg("--n", type=int, required=True)])
        def demo(args):
            return CommandOutcome(response=SuccessResponse.create(data=args.n))

        @top.command("hello")
        def hello(args):
            return CommandOutcome(response=SuccessResponse.create())

        parser, table = build_parser([router, top])
        assert set(table) == {"gen demo", "hello"}
        args = parser.parse_args(["gen", "demo", "--n", "5"])
        outcome = table[args.command_name].handler(args)
        assert outcome.exit_code == 0
        assert outcome.response.data == 5
