import pytest

from oracles import brute_coloring_count, brute_coloring_table

from csfkit.chromatic import (
    chromatic_qsym,
    coloring_count,
    euler_char,
    formula_at_one,
    graded_multiplicities,
    oracle_at_one,
    oracle_content_table,
    verify_laws,
)
from csfkit.hessenberg import Hessenberg, enumerate_hessenberg
from csfkit.laurent import LaurentT, t_factorial
from csfkit.symfunc import SymFunc, convert, multiply

T = LaurentT.t_power(1)


class TestOracle:
    def test_three_path(self):
        x = chromatic_qsym(Hessenberg((2, 3, 3)), "s")
        assert x.coeffs == {
            (2, 1): T,
            (1, 1, 1): LaurentT({0: 1, 2: 2, 4: 1}),
        }

    def test_complete_graph(self):
        x = chromatic_qsym(Hessenberg((3, 3, 3)), "s")
        assert x.coeffs == {(1, 1, 1): t_factorial(3)}

    def test_empty_graph(self):
        x = chromatic_qsym(Hessenberg((1, 2, 3)), "m")
        assert x.coeffs == {
            (3,): LaurentT.one(),
            (2, 1): LaurentT.const(3),
            (1, 1, 1): LaurentT.const(6),
        }

    @pytest.mark.parametrize("n", range(1, 5))
    def test_full_tally_against_brute_force(self, n):
        for h in enumerate_hessenberg(n):
            brute = brute_coloring_table(h.values, n)
            table = oracle_content_table(h)
            flat = {
                (content, asc): cnt
                for content, row in table.items()
                for asc, cnt in row.items()
            }
            assert flat == brute, h

    @pytest.mark.parametrize("n", range(1, 6))
    def test_homogeneous_and_symmetric(self, n):
        for h in enumerate_hessenberg(n):
            x = chromatic_qsym(h, "m")
            assert x.degree == n
            assert all(sum(lam) == n for lam in x.coeffs)

    @pytest.mark.parametrize("n", range(1, 5))
    def test_tally_invariant_under_color_relabelling(self, n):
        import itertools

        for h in enumerate_hessenberg(n):
            table = oracle_content_table(h)
            for content, row in table.items():
                for perm in itertools.permutations(content):
                    assert table.get(perm) == row, (h, content, perm)


class TestGradedMultiplicities:
    def test_three_path(self):
        gm = graded_multiplicities(Hessenberg((2, 3, 3)))
        assert gm.shift == 1
        assert gm.entries == {
            (2, 1): LaurentT({4: 1}),
            (1, 1, 1): LaurentT({2: 1, 4: 2, 6: 1}),
        }

    @pytest.mark.parametrize("n", range(1, 6))
    def test_complete_graph_is_t_factorial(self, n):
        gm = graded_multiplicities(Hessenberg((n,) * n))
        assert gm.shift == 0
        assert gm.entries == {(1,) * n: t_factorial(n)}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_whole_nonnegative_exponents(self, n):
        for h in enumerate_hessenberg(n):
            for lam, c in graded_multiplicities(h).entries.items():
                assert c.exponents_are_whole()
                assert c.min_halfsteps() >= 0
                assert c.is_nonnegative()


class TestCounting:
    def test_euler_examples(self):
        assert euler_char(Hessenberg((2, 3, 3))) == 12
        assert euler_char(Hessenberg((3, 3, 3))) == 6
        assert euler_char(Hessenberg((1, 2, 3))) == 27

    @pytest.mark.parametrize("n", range(1, 5))
    def test_counts_against_brute_force(self, n):
        for h in enumerate_hessenberg(n):
            for k in (1, 2, n, n + 1):
                assert coloring_count(h, k) == brute_coloring_count(h.values, k)
            assert euler_char(h) == coloring_count(h, n)

    def test_bad_color_count(self):
        with pytest.raises(ValueError):
            coloring_count(Hessenberg((1,)), 0)

    @pytest.mark.parametrize("n", range(1, 7))
    def test_all_variables_at_one_equals_euler(self, n):
        from csfkit.symfunc import evaluate_at_ones

        for h in enumerate_hessenberg(n):
            x = chromatic_qsym(h, "m")
            assert evaluate_at_ones(x, n) == euler_char(h)


class TestLaws:
    def test_modular_witness_identity(self):
        one_plus_t = LaurentT({0: 1, 2: 1})
        lhs = chromatic_qsym(Hessenberg((2, 3, 4, 4)), "m").scaled(one_plus_t)
        rhs = chromatic_qsym(Hessenberg((3, 3, 4, 4)), "m") + chromatic_qsym(
            Hessenberg((2, 2, 4, 4)), "m"
        ).scaled(T)
        assert lhs == rhs

    def test_factorization_example(self):
        # single edge plus isolated vertex: (1+t) e_2 * e_1
        x = chromatic_qsym(Hessenberg((2, 2, 3)), "m")
        e2 = SymFunc("e", 2, {(2,): LaurentT({0: 1, 2: 1})})
        e1 = SymFunc("e", 1, {(1,): 1})
        assert x == multiply(convert(e2, "m"), convert(e1, "m"))

    def test_formula_equals_oracle_at_one_small(self):
        for n in range(1, 6):
            for h in enumerate_hessenberg(n):
                assert formula_at_one(h) == oracle_at_one(h)

    def test_verify_n3_all_pass_modular_vacuous(self):
        report = verify_laws(3)
        assert report.ok()
        assert not report.findings()
        assert not [r for r in report.records if r.suite == "modular"]
        suites = {row["suite"] for row in report.summary_rows()}
        assert "formula" in suites and "euler" in suites

    def test_verify_n4_modular_present(self):
        report = verify_laws(4)
        assert report.ok()
        modular = [r for r in report.records if r.suite == "modular"]
        assert len(modular) == 2
        assert all(r.status == "pass" for r in modular)

    def test_verify_selected_suite(self):
        report = verify_laws(4, suites="euler")
        assert {r.suite for r in report.records} == {"euler"}
        assert report.ok()
        with pytest.raises(ValueError):
            verify_laws(3, suites="nonsense")

    def test_verify_workers_match_serial(self):
        serial = verify_laws(4)
        parallel = verify_laws(4, workers=2)
        key = lambda r: (r.suite, r.h, r.status, r.lhs, r.rhs)
        assert [key(r) for r in serial.records] == [key(r) for r in parallel.records]

    def test_report_json_shape(self):
        report = verify_laws(3)
        data = report.to_json_dict()
        assert data["version"] == "verify-v1"
        assert data["n"] == 3
        assert all(
            rec["status"] == "pass" and "suite" in rec and "h" in rec
            for rec in data["results"]
        )
